#include "gs/finite_group.hpp"

#include "gs/errors.hpp"

namespace gs {

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(Err::TableNotAGroup, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(Err::TableNotAGroup, "table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw Error(Err::TableNotAGroup, "entry out of range at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (table[e][x] != x || table[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(Err::TableNotAGroup, "identity law fails: no identity element");

  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == identity && table[y][x] == identity) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0)
      throw Error(Err::TableNotAGroup, "inverse law fails for element " + std::to_string(x));
  }

  // Full O(n^3) check; desk-scale n keeps this cheap.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(Err::TableNotAGroup,
                      "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");

  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  } else if (static_cast<int>(labels.size()) != n) {
    throw Error(Err::TableNotAGroup, "label count does not match order");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  g->inverse_ = std::move(inverse);
  g->identity_ = identity;
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(Err::TableNotAGroup, "cyclic order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return from_table(std::move(table));
}

}  // namespace gs
