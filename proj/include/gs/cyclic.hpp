#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gs/partition.hpp"

namespace gs {

/// Class counts |A_{p,i}| of a finite integer set modulo p, i = 0..p-1.
/// Negative integers use mathematical (non-negative) residues.
struct ResidueHistogram {
  int modulus;
  std::vector<std::int64_t> counts;
};

/// Divisors n_i of n with m <= n_i and n_i * ||k|| <= n, ascending. These
/// index the only subgroups H^{(n_i)} of Z_n that can be (A,k)-ground.
std::vector<int> theorem1_candidates(int n, const std::vector<int>& a,
                                     const PartitionVector& k);

/// The unique subgroup of Z_n with index d (d | n), as an explicit handle.
SubgroupHandle cyclic_subgroup_of_index(const std::shared_ptr<const FiniteGroup>& zn, int d);

ResidueHistogram residue_histogram(const std::vector<std::int64_t>& a, int p);

/// pZ is (A,k)-ground iff the ascending nonzero residue counts equal k.
bool pZ_is_ground(const std::vector<std::int64_t>& a, const PartitionVector& k, int p);

/// All p in 1..p_max with pZ_is_ground true.
std::vector<int> ground_moduli(const std::vector<std::int64_t>& a, const PartitionVector& k,
                               int p_max);

inline constexpr std::uint64_t kDefaultSubsetCap = 1'000'000;

/// True iff every q-subset of A contains a pair x,y with |x-y| = 1.
/// Exhaustive over subsets; throws SubsetCountCapExceeded when C(|A|,q)
/// exceeds the cap.
bool nn_hypothesis_holds(const std::vector<std::int64_t>& a, int q,
                         std::uint64_t cap = kDefaultSubsetCap);

struct NnObstructionReport {
  bool passed;
  bool vacuous;  // no partition of |A| has m > 1 and a part equal to q
  // Counterexample when failed: a modulus p and partition with pZ ground.
  std::optional<int> counterexample_p;
  std::optional<std::vector<int>> counterexample_k;
};

/// Checks that no pZ is (A,k)-ground for any k with m > 1 and some part
/// equal to q. Moduli are swept over 1..diam(A)+1; a class can hold two
/// elements of A only if p <= diam(A), so larger p cannot produce a part
/// >= 2. Requires nn_hypothesis_holds(A, q); throws HypothesisFails
/// otherwise.
NnObstructionReport prop4_verify(const std::vector<std::int64_t>& a, int q,
                                 std::uint64_t subset_cap = kDefaultSubsetCap);

}  // namespace gs
