#include "gs/cayley.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "gs/errors.hpp"

namespace gs {

std::vector<int> TreeContext::generators() const {
  std::vector<int> gens(k + 1);
  for (int i = 0; i < k + 1; ++i) gens[i] = i + 1;
  return gens;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

Ball ball(const TreeContext& ctx, const Word& center, int r) {
  if (ctx.k < 2) throw Error(Err::TooLarge, "tree order must be >= 2");
  if (r < 1) throw Error(Err::TooLarge, "radius must be >= 1");
  if (center.mode() != WordMode::Involutive)
    throw Error(Err::ModeMismatch, "tree vertices are involutive words");

  std::set<Word> seen{center};
  std::deque<std::pair<Word, int>> frontier{{center, 0}};
  while (!frontier.empty()) {
    auto [v, dist] = frontier.front();
    frontier.pop_front();
    if (dist == r) continue;
    for (int gen : ctx.generators()) {
      Word next = word_mul(reduce({{gen, 1}}, WordMode::Involutive), v);
      if (seen.insert(next).second) frontier.emplace_back(next, dist + 1);
    }
  }
  std::vector<Word> members(seen.begin(), seen.end());
  std::sort(members.begin(), members.end(), shortlex_less);
  return Ball{center, r, std::move(members)};
}

std::uint64_t ball_size(int k, int r) {
  if (k < 2 || r < 1) throw Error(Err::TooLarge, "ball_size requires k >= 2, r >= 1");
  std::uint64_t kr = 1;
  for (int i = 0; i < r; ++i) kr *= static_cast<std::uint64_t>(k);
  return 1 + static_cast<std::uint64_t>(k + 1) * (kr - 1) / static_cast<std::uint64_t>(k - 1);
}

int energy_U(const std::vector<int>& colors, int q) {
  if (colors.empty()) throw Error(Err::EmptySet, "energy_U: empty color multiset");
  std::set<int> distinct;
  for (int c : colors) {
    if (c < 1 || c > q) throw Error(Err::ColorOutOfRange, "color out of 1..q");
    distinct.insert(c);
  }
  return static_cast<int>(colors.size() - distinct.size());
}

int Truncation::vertex_index(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w, shortlex_less);
  if (it == vertices.end() || *it != w) return -1;
  return static_cast<int>(it - vertices.begin());
}

Truncation make_truncation(const TreeContext& ctx, int r, int R) {
  if (R < r) throw Error(Err::TooLarge, "truncation requires R >= r");
  const Word e = Word::identity(WordMode::Involutive);
  Truncation t{ctx.k, r, R, ball(ctx, e, R).members, {}, {}};
  if (R == r) {
    t.centers = {e};
  } else {
    t.centers = ball(ctx, e, R - r).members;
  }
  for (const Word& c : t.centers) {
    std::vector<int> idx;
    for (const Word& m : ball(ctx, c, r).members) {
      int i = t.vertex_index(m);
      if (i < 0) throw Error(Err::AmbientMismatch, "ball member outside truncation");
      idx.push_back(i);
    }
    t.balls.push_back(std::move(idx));
  }
  return t;
}

namespace {

long long sum_u(const std::vector<int>& colors, const Truncation& trunc) {
  long long total = 0;
  for (const auto& members : trunc.balls) {
    std::uint64_t mask = 0;
    for (int i : members) mask |= 1ull << (colors[i] - 1);
    total += static_cast<long long>(members.size()) -
             static_cast<long long>(__builtin_popcountll(mask));
  }
  return total;
}

}  // namespace

Rational hamiltonian(const Configuration& config, const Truncation& trunc, Rational j) {
  if (j == Rational(0)) throw Error(Err::ParseError, "J must be nonzero");
  if (config.colors.size() != trunc.vertices.size())
    throw Error(Err::PartialConfiguration, "configuration is not total on the truncation");
  for (int c : config.colors)
    if (c < 1 || c > config.q) throw Error(Err::ColorOutOfRange, "color out of 1..q");
  if (config.q > 64) throw Error(Err::TooLarge, "q > 64 not supported");
  return -j * Rational(sum_u(config.colors, trunc));
}

HaResult build_ball_ground_subgroup(const TreeContext& ctx, int r) {
  Ball b = ball(ctx, Word::identity(WordMode::Involutive), r);
  return build_HA(b.members, ctx.generators());
}

namespace {

void involutions_rec(std::vector<Point>& img, std::vector<bool>& used, std::size_t next,
                     std::vector<Permutation>& out) {
  while (next < img.size() && used[next]) ++next;
  if (next == img.size()) {
    out.emplace_back(img);
    return;
  }
  // Fix `next`.
  used[next] = true;
  img[next] = static_cast<Point>(next);
  involutions_rec(img, used, next + 1, out);
  used[next] = false;
  // Or swap it with a later point.
  for (std::size_t j = next + 1; j < img.size(); ++j) {
    if (used[j]) continue;
    used[next] = used[j] = true;
    img[next] = static_cast<Point>(j);
    img[j] = static_cast<Point>(next);
    involutions_rec(img, used, next + 1, out);
    img[j] = static_cast<Point>(j);
    used[next] = used[j] = false;
  }
}

std::vector<Permutation> all_involutions(int d) {
  std::vector<Point> img(d);
  for (int i = 0; i < d; ++i) img[i] = static_cast<Point>(i);
  std::vector<bool> used(d, false);
  std::vector<Permutation> out;
  involutions_rec(img, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<SubgroupHandle> stabilizer_ground_search(const TreeContext& ctx, int r, int d,
                                                       std::uint64_t cap) {
  Ball b = ball(ctx, Word::identity(WordMode::Involutive), r);
  if (static_cast<std::uint64_t>(d) < b.members.size()) return std::nullopt;  // pigeonhole

  const std::vector<Permutation> invs = all_involutions(d);
  const std::vector<int> gens = ctx.generators();
  std::vector<std::size_t> choice(gens.size(), 0);
  std::uint64_t nodes = 0;

  // Odometer over full assignments in lexicographic order of image vectors.
  while (true) {
    if (++nodes > cap)
      throw Error(Err::SearchCapExceeded, "stabilizer search exceeded node cap");

    std::map<int, Permutation> images;
    for (std::size_t i = 0; i < gens.size(); ++i) images.emplace(gens[i], invs[choice[i]]);
    PermRep rep(static_cast<std::size_t>(d), images, WordMode::Involutive);

    std::set<Point> image_points;
    bool distinct = true;
    for (const Word& m : b.members)
      if (!image_points.insert(rep_eval(rep, m).apply(0)).second) {
        distinct = false;
        break;
      }
    if (distinct && orbit(rep.generator_images(), 0).size() == static_cast<std::size_t>(d))
      return SubgroupHandle::stabilizer(std::move(rep), 0);

    std::size_t i = choice.size();
    while (i > 0 && choice[i - 1] + 1 == invs.size()) choice[--i] = 0;
    if (i == 0) return std::nullopt;
    ++choice[i - 1];
  }
}

Configuration periodic_configuration(const SubgroupHandle& h,
                                     const std::map<CosetId, int>& coloring,
                                     const Truncation& trunc, int q) {
  Configuration config{std::vector<int>(trunc.vertices.size()), q};
  for (std::size_t i = 0; i < trunc.vertices.size(); ++i) {
    auto it = coloring.find(h.coset_id(Element{trunc.vertices[i]}));
    if (it == coloring.end())
      throw Error(Err::MissingCosetColor,
                  "no color for the coset of " + to_string(trunc.vertices[i]));
    if (it->second < 1 || it->second > q)
      throw Error(Err::ColorOutOfRange, "coset color out of 1..q");
    config.colors[i] = it->second;
  }
  return config;
}

BigInt count_periodic_ground_states(int q, int K) {
  if (K < 1) throw Error(Err::TooLarge, "K must be >= 1");
  if (q < K) throw Error(Err::QTooSmall, "q < K: no injective ball coloring exists");
  BigInt acc = 1;
  for (int i = q - K + 1; i <= q; ++i) acc *= i;
  return acc;
}

BruteForceResult brute_force_ground_states(const TreeContext& ctx, int r, int R, int q,
                                           Rational j, std::uint64_t cap) {
  if (j == Rational(0)) throw Error(Err::ParseError, "J must be nonzero");
  if (q < 1 || q > 64) throw Error(Err::TooLarge, "q must be in 1..64");
  Truncation trunc = make_truncation(ctx, r, R);
  const std::size_t nv = trunc.vertices.size();

  std::uint64_t states = 1;
  for (std::size_t i = 0; i < nv; ++i) {
    if (states > cap / static_cast<std::uint64_t>(q))
      throw Error(Err::StateSpaceTooLarge, "q^|V_R| exceeds the state cap");
    states *= static_cast<std::uint64_t>(q);
  }

  const bool maximize = j > Rational(0);  // -J*U: J>0 favors large U
  long long best = maximize ? -1 : static_cast<long long>(trunc.vertices.size()) *
                                       static_cast<long long>(trunc.balls.size() + 1);
  std::uint64_t count = 0;
  std::vector<Configuration> minimizers;

  std::vector<int> colors(nv, 1);
  while (true) {
    long long u = sum_u(colors, trunc);
    bool better = maximize ? u > best : u < best;
    if (better) {
      best = u;
      count = 0;
      minimizers.clear();
    }
    if (u == best) {
      ++count;
      if (count <= kMinimizerListLimit) minimizers.push_back(Configuration{colors, q});
    }
    std::size_t i = 0;
    while (i < nv && colors[i] == q) colors[i++] = 1;
    if (i == nv) break;
    ++colors[i];
  }

  BruteForceResult out{-j * Rational(best), count, std::nullopt, best};
  if (count <= kMinimizerListLimit) out.minimizers = std::move(minimizers);
  return out;
}

namespace {

void injective_colorings_rec(const std::vector<CosetId>& ids, std::size_t pos, int q,
                             std::vector<bool>& used, std::map<CosetId, int>& acc,
                             const std::function<void(const std::map<CosetId, int>&)>& emit) {
  if (pos == ids.size()) {
    emit(acc);
    return;
  }
  for (int c = 1; c <= q; ++c) {
    if (used[c]) continue;
    used[c] = true;
    acc[ids[pos]] = c;
    injective_colorings_rec(ids, pos + 1, q, used, acc, emit);
    acc.erase(ids[pos]);
    used[c] = false;
  }
}

}  // namespace

Theorem3Report verify_theorem3(const TreeContext& ctx, int r, int R, int q, Rational j,
                               std::uint64_t state_cap, std::uint64_t search_cap) {
  BruteForceResult brute = brute_force_ground_states(ctx, r, R, q, j, state_cap);
  Theorem3Report report{brute.min_energy, brute.minimizer_count, 0, 0, false, {}, std::nullopt};
  const std::uint64_t K = ball_size(ctx.k, r);
  Truncation trunc = make_truncation(ctx, r, R);

  if (j > Rational(0)) {
    // Minimizers must be exactly the q constants.
    bool ok = brute.minimizer_count == static_cast<std::uint64_t>(q) && brute.minimizers;
    if (ok)
      for (const Configuration& m : *brute.minimizers) {
        bool constant = std::all_of(m.colors.begin(), m.colors.end(),
                                    [&](int c) { return c == m.colors[0]; });
        if (!constant) {
          ok = false;
          report.counterexample = m;
          break;
        }
      }
    report.pass = ok;
    report.notes.push_back("J>0: minimizer set compared against the constant configurations");
    return report;
  }

  if (static_cast<std::uint64_t>(q) < K) {
    report.notes.push_back("q < K: no rainbow configuration exists on a ball");
    report.pass = true;
    return report;
  }
  report.formula_count = count_periodic_ground_states(q, static_cast<int>(K));

  std::optional<SubgroupHandle> h =
      stabilizer_ground_search(ctx, r, static_cast<int>(K), search_cap);
  std::uint64_t index;
  if (h) {
    index = h->index();
    report.notes.push_back("ground subgroup: stabilizer, index " + std::to_string(index));
  } else {
    HaResult ha = build_ball_ground_subgroup(ctx, r);
    h = std::move(ha.handle);
    index = 0;  // kernel index not needed for containment checks
    report.notes.push_back("ground subgroup: kernel fallback");
  }

  // Cosets meeting the window, in first-seen vertex order.
  std::vector<CosetId> ids;
  for (const Word& v : trunc.vertices) {
    CosetId id = h->coset_id(Element{v});
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  if (ids.size() > static_cast<std::size_t>(q)) {
    report.notes.push_back("more cosets meet the window than available colors");
    report.pass = false;
    return report;
  }

  std::set<Configuration> constructed;
  bool all_attain = true;
  std::vector<bool> used(q + 1, false);
  std::map<CosetId, int> acc;
  injective_colorings_rec(ids, 0, q, used, acc,
                          [&](const std::map<CosetId, int>& coloring) {
                            Configuration c = periodic_configuration(*h, coloring, trunc, q);
                            if (hamiltonian(c, trunc, j) != brute.min_energy) {
                              all_attain = false;
                              if (!report.counterexample) report.counterexample = c;
                            }
                            constructed.insert(std::move(c));
                          });
  report.constructed_count = constructed.size();

  bool count_ok = index != K || BigInt(report.constructed_count) >= report.formula_count;
  bool exact_ok = true;
  if (R == r && brute.minimizers) {
    std::set<Configuration> mins(brute.minimizers->begin(), brute.minimizers->end());
    exact_ok = mins == constructed;
    report.notes.push_back("R = r: exact minimizer-set equality checked");
  }
  report.pass = all_attain && count_ok && exact_ok;
  return report;
}

}  // namespace gs
