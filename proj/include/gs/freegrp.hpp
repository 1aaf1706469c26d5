#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "gs/partition.hpp"
#include "gs/word.hpp"

namespace gs {

using BigInt = boost::multiprecision::cpp_int;

/// A together with its difference set A* = {x y^{-1} : x, y in A}.
struct DifferenceSet {
  std::vector<Word> base;  // sorted, deduplicated
  std::vector<Word> star;  // sorted, always contains the identity
};

DifferenceSet difference_set(const std::vector<Word>& a);

/// The checkable facts about A and A*: identity membership, A = A*,
/// A ∩ A* = ∅ (with the basis-subset witness when a basis is supplied),
/// and A ⊆ A* ⟺ 1 ∈ A.
struct DifferenceSetReport {
  bool identity_in_star;
  bool star_is_trivial;   // A* = {1}
  bool singleton;         // |A| = 1
  bool a_equals_star;
  bool a_star_disjoint;
  std::optional<bool> a_subset_of_basis;  // present when a basis was given
  bool a_subset_star;
  bool identity_in_a;
};

DifferenceSetReport lemma_report(const std::vector<Word>& a,
                                 const std::vector<int>& basis = {});

/// Finite-index normal subgroup excluding a nonidentity word x, as the
/// kernel of a degree-(|x|+1) permutation representation: walking the
/// letters of x moves point 0 to point |x|, so x is outside the kernel.
///
/// Free mode: position p with letter g+ contributes the arc p -> p+1 for
/// g, letter g- the arc p+1 -> p; reducedness makes the arc set a partial
/// injection, and each maximal path is closed into a cycle. Involutive
/// mode: each position contributes the transposition (p, p+1).
SubgroupHandle build_Hx(const Word& x);

/// The representation behind build_Hx, with identity images added for any
/// generators in `ensure_gens` that do not occur in x.
PermRep hx_rep(const Word& x, const std::vector<int>& ensure_gens = {});

struct BoundPair {
  BigInt lower;
  BigInt upper;
};

struct HaResult {
  SubgroupHandle handle;
  BoundPair bounds;
  std::size_t degree;
  std::vector<Word> star_nonidentity;  // the blocks, in order
};

/// H_A: the kernel of the block-diagonal representation with one build_Hx
/// block per element of A* \ {1}; equals the intersection of the H_z.
HaResult build_HA(const std::vector<Word>& a, const std::vector<int>& ensure_gens = {});

/// True iff every coset of H meets A at most once (the (A,1)-ground test).
bool verify_ones_ground(const SubgroupHandle& h, const std::vector<Word>& a);

/// (alpha(x)+1, (|x|+1)!) for a single word.
BoundPair index_bounds(const Word& x);

/// Product bounds over A* \ {1}.
BoundPair index_bounds(const std::vector<Word>& a);

/// Kernel of the block rep over all x in B; guarantees B ∩ H = ∅.
/// Requires 1 ∉ B.
SubgroupHandle avoid_set(const std::vector<Word>& b, const std::vector<int>& ensure_gens = {});

}  // namespace gs
