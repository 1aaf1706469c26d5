#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gs/freegrp.hpp"
#include "gs/partition.hpp"
#include "gs/word.hpp"

namespace gs {

using Rational = boost::rational<long long>;

/// Vertices of the order-k Cayley tree as reduced involutive words over
/// the k+1 self-inverse generators a_1..a_{k+1}.
struct TreeContext {
  int k;  // tree order, >= 2

  int generator_count() const { return k + 1; }
  std::vector<int> generators() const;
};

/// Shortlex: length first, then lexicographic on letters.
bool shortlex_less(const Word& a, const Word& b);

struct Ball {
  Word center;
  int radius;
  std::vector<Word> members;  // shortlex sorted
};

/// Metric ball {w*center : |w| <= r}, by breadth-first expansion applying
/// generators on the left.
Ball ball(const TreeContext& ctx, const Word& center, int r);

/// K(k,r) = 1 + (k+1)(k^r - 1)/(k-1).
std::uint64_t ball_size(int k, int r);

/// U = |A| - number of distinct colors present.
int energy_U(const std::vector<int>& colors, int q);

/// Finite window of the tree: all vertices with |w| <= R, and the balls of
/// radius r wholly inside (centers with |c| <= R-r).
struct Truncation {
  int k, r, R;
  std::vector<Word> vertices;            // shortlex sorted
  std::vector<Word> centers;             // shortlex sorted
  std::vector<std::vector<int>> balls;   // per center, member indices into vertices

  int vertex_index(const Word& w) const;  // -1 if absent
};

Truncation make_truncation(const TreeContext& ctx, int r, int R);

/// Color assignment aligned with a truncation's vertex order; colors 1..q.
struct Configuration {
  std::vector<int> colors;
  int q;

  auto operator<=>(const Configuration&) const = default;
};

/// -J * sum of U over the truncation's listed balls. Exact rational.
Rational hamiltonian(const Configuration& config, const Truncation& trunc, Rational j);

/// H_A construction (freegrp) applied to the ball b_r(e), with images for
/// every tree generator. The kernel is a (b,1)-ground subgroup.
HaResult build_ball_ground_subgroup(const TreeContext& ctx, int r);

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

/// Backtracking search for involutions on {0..d-1} assigned to the k+1
/// generators giving a transitive action in which the basepoint 0 has
/// pairwise-distinct images under all members of b_r(e). Deterministic
/// lexicographic order on involution image vectors; the found handle has
/// index d. Returns nullopt when no assignment exists.
std::optional<SubgroupHandle> stabilizer_ground_search(const TreeContext& ctx, int r, int d,
                                                       std::uint64_t cap = kDefaultSearchCap);

/// Colors each vertex by the color of its right coset under H.
Configuration periodic_configuration(const SubgroupHandle& h,
                                     const std::map<CosetId, int>& coloring,
                                     const Truncation& trunc, int q);

/// q!/(q-K)! as a big integer. Throws QTooSmall when q < K.
BigInt count_periodic_ground_states(int q, int K);

inline constexpr std::uint64_t kDefaultStateCap = 1u << 24;
inline constexpr std::uint64_t kMinimizerListLimit = 10'000;

struct BruteForceResult {
  Rational min_energy;
  std::uint64_t minimizer_count;
  /// Present when minimizer_count <= kMinimizerListLimit.
  std::optional<std::vector<Configuration>> minimizers;
  long long optimal_sum_u;
};

/// Exhaustive scan of all q^{|V_R|} configurations; deterministic
/// enumeration order (vertex 0 least significant).
BruteForceResult brute_force_ground_states(const TreeContext& ctx, int r, int R, int q,
                                           Rational j,
                                           std::uint64_t cap = kDefaultStateCap);

struct Theorem3Report {
  Rational min_energy;
  std::uint64_t minimizer_count;
  std::uint64_t constructed_count;
  BigInt formula_count;
  bool pass;
  std::vector<std::string> notes;
  std::optional<Configuration> counterexample;
};

/// J>0: asserts the minimizer set is exactly the q constants. J<0 with
/// q >= K: builds the ground subgroup (stabilizer search at degree K,
/// kernel fallback), generates all injective coset colorings, and asserts
/// each attains the brute-force minimum; when R = r the constructed set
/// must equal the minimizer set exactly.
Theorem3Report verify_theorem3(const TreeContext& ctx, int r, int R, int q, Rational j,
                               std::uint64_t state_cap = kDefaultStateCap,
                               std::uint64_t search_cap = kDefaultSearchCap);

}  // namespace gs
