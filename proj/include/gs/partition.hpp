#pragma once

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "gs/finite_group.hpp"
#include "gs/perm_rep.hpp"

namespace gs {

/// Group element, either a FiniteGroup element index or a Word.
using Element = std::variant<int, Word>;

/// Canonical right-coset identifier: constant on Hg and distinct across
/// cosets. Integer for explicit-set (minimal element of Hg) and stabilizer
/// (image point of the basepoint) handles; a permutation for kernels.
using CosetId = std::variant<long long, Permutation>;

/// Ascending positive parts k_1 <= ... <= k_m; when bound to a set A the
/// parts sum to |A|.
class PartitionVector {
 public:
  explicit PartitionVector(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int m() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  int max_part() const;  // ||k||
  bool all_ones() const;

  auto operator<=>(const PartitionVector&) const = default;

 private:
  std::vector<int> parts_;
};

/// Uniform subgroup representation: an explicit element set of a finite
/// group, the kernel of a permutation representation, or the stabilizer of
/// a basepoint.
class SubgroupHandle {
 public:
  static SubgroupHandle explicit_set(std::shared_ptr<const FiniteGroup> group,
                                     std::vector<int> elements);
  static SubgroupHandle kernel(PermRep rep);
  static SubgroupHandle stabilizer(PermRep rep, Point basepoint);

  enum class Variant { ExplicitSet, Kernel, Stabilizer };
  Variant variant() const;

  const std::shared_ptr<const FiniteGroup>& group() const;  // ExplicitSet only
  const std::vector<int>& elements() const;                 // ExplicitSet only
  const PermRep& rep() const;                               // Kernel/Stabilizer
  Point basepoint() const;                                  // Stabilizer only

  CosetId coset_id(const Element& g) const;
  std::uint64_t index(std::size_t order_cap = kDefaultOrderCap) const;

 private:
  struct ExplicitSetData {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<int> elements;  // sorted
  };
  struct KernelData {
    PermRep rep;
  };
  struct StabilizerData {
    PermRep rep;
    Point basepoint;
  };

  explicit SubgroupHandle(std::variant<ExplicitSetData, KernelData, StabilizerData> data)
      : data_(std::move(data)) {}

  std::variant<ExplicitSetData, KernelData, StabilizerData> data_;
};

/// Counts |A ∩ H_i| per coset meeting A; counts sum to |A|.
using CosetProfile = std::map<CosetId, int>;

CosetProfile coset_profile(const SubgroupHandle& h, const std::vector<Element>& a);

/// Ascending multiset of the nonzero profile counts.
std::vector<int> profile_counts(const CosetProfile& profile);

/// True iff the ascending nonzero coset counts of A under H equal k.
/// Throws InvalidPartition if k does not sum to |A|.
bool is_ground(const SubgroupHandle& h, const std::vector<Element>& a, const PartitionVector& k);

inline constexpr int kDefaultGroupCap = 512;

/// Complete subgroup list of G as sorted element sets, ordered by
/// (size, lexicographic elements). Seeds with cyclic subgroups and closes
/// subgroup-element joins to a fixed point.
std::vector<SubgroupHandle> enumerate_subgroups(const std::shared_ptr<const FiniteGroup>& g,
                                                int cap = kDefaultGroupCap);

/// The set H(A,k): all (A,k)-ground subgroups of G, in enumeration order.
std::vector<SubgroupHandle> ground_set(const std::shared_ptr<const FiniteGroup>& g,
                                       const std::vector<int>& a, const PartitionVector& k);

/// Minimal index over ground_set, or nullopt when the set is empty.
std::optional<std::uint64_t> r0(const std::shared_ptr<const FiniteGroup>& g,
                                const std::vector<int>& a, const PartitionVector& k);

inline constexpr int kPartitionCap = 40;

/// All ascending integer partitions of n, lexicographic.
std::vector<PartitionVector> partition_vectors(int n);

}  // namespace gs
