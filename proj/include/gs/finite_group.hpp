#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gs {

/// Cayley-table group with labeled elements. The table is validated at
/// construction: identity, inverses, and the full associativity check.
class FiniteGroup {
 public:
  /// Throws TableNotAGroup with the first violated axiom and a witness.
  static std::shared_ptr<const FiniteGroup> from_table(
      std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  /// Z_n with elements labeled 0..n-1 and addition mod n.
  static std::shared_ptr<const FiniteGroup> cyclic(int n);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const std::string& label(int a) const { return labels_[a]; }

 private:
  FiniteGroup() = default;

  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

}  // namespace gs
