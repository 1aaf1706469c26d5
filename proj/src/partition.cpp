#include "gs/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gs/errors.hpp"

namespace gs {

PartitionVector::PartitionVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Err::InvalidPartition, "partition vector is empty");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error(Err::InvalidPartition, "partition parts must be >= 1");
    if (i > 0 && parts_[i - 1] > parts_[i])
      throw Error(Err::InvalidPartition, "partition parts must be ascending");
  }
}

int PartitionVector::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int PartitionVector::max_part() const { return parts_.back(); }

bool PartitionVector::all_ones() const { return parts_.front() == 1 && parts_.back() == 1; }

SubgroupHandle SubgroupHandle::explicit_set(std::shared_ptr<const FiniteGroup> group,
                                            std::vector<int> elements) {
  if (!group) throw Error(Err::AmbientMismatch, "null group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements)
    if (e < 0 || e >= group->order())
      throw Error(Err::AmbientMismatch, "element out of range: " + std::to_string(e));
  if (!std::binary_search(elements.begin(), elements.end(), group->identity()))
    throw Error(Err::AmbientMismatch, "subgroup set misses the identity");
  for (int x : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), group->inv(x)))
      throw Error(Err::AmbientMismatch, "subgroup set not closed under inverse");
    for (int y : elements)
      if (!std::binary_search(elements.begin(), elements.end(), group->mul(x, y)))
        throw Error(Err::AmbientMismatch, "subgroup set not closed under multiplication");
  }
  return SubgroupHandle(ExplicitSetData{std::move(group), std::move(elements)});
}

SubgroupHandle SubgroupHandle::kernel(PermRep rep) {
  return SubgroupHandle(KernelData{std::move(rep)});
}

SubgroupHandle SubgroupHandle::stabilizer(PermRep rep, Point basepoint) {
  if (basepoint >= rep.degree()) throw Error(Err::AmbientMismatch, "basepoint out of range");
  return SubgroupHandle(StabilizerData{std::move(rep), basepoint});
}

SubgroupHandle::Variant SubgroupHandle::variant() const {
  if (std::holds_alternative<ExplicitSetData>(data_)) return Variant::ExplicitSet;
  if (std::holds_alternative<KernelData>(data_)) return Variant::Kernel;
  return Variant::Stabilizer;
}

const std::shared_ptr<const FiniteGroup>& SubgroupHandle::group() const {
  return std::get<ExplicitSetData>(data_).group;
}

const std::vector<int>& SubgroupHandle::elements() const {
  return std::get<ExplicitSetData>(data_).elements;
}

const PermRep& SubgroupHandle::rep() const {
  if (const auto* k = std::get_if<KernelData>(&data_)) return k->rep;
  return std::get<StabilizerData>(data_).rep;
}

Point SubgroupHandle::basepoint() const { return std::get<StabilizerData>(data_).basepoint; }

CosetId SubgroupHandle::coset_id(const Element& g) const {
  if (const auto* es = std::get_if<ExplicitSetData>(&data_)) {
    const int* idx = std::get_if<int>(&g);
    if (!idx) throw Error(Err::AmbientMismatch, "explicit-set handle expects an element index");
    if (*idx < 0 || *idx >= es->group->order())
      throw Error(Err::AmbientMismatch, "element out of range");
    int min_elem = es->group->order();
    for (int h : es->elements) min_elem = std::min(min_elem, es->group->mul(h, *idx));
    return CosetId{static_cast<long long>(min_elem)};
  }
  const Word* w = std::get_if<Word>(&g);
  if (!w) throw Error(Err::AmbientMismatch, "rep-backed handle expects a word");
  if (const auto* k = std::get_if<KernelData>(&data_)) return CosetId{rep_eval(k->rep, *w)};
  const auto& st = std::get<StabilizerData>(data_);
  return CosetId{static_cast<long long>(rep_eval(st.rep, *w).apply(st.basepoint))};
}

std::uint64_t SubgroupHandle::index(std::size_t order_cap) const {
  if (const auto* es = std::get_if<ExplicitSetData>(&data_))
    return static_cast<std::uint64_t>(es->group->order()) / es->elements.size();
  if (const auto* k = std::get_if<KernelData>(&data_))
    return perm_group_order(k->rep.generator_images(), order_cap);
  const auto& st = std::get<StabilizerData>(data_);
  return orbit(st.rep.generator_images(), st.basepoint).size();
}

CosetProfile coset_profile(const SubgroupHandle& h, const std::vector<Element>& a) {
  if (a.empty()) throw Error(Err::EmptySet, "coset_profile: empty set");
  CosetProfile profile;
  for (const Element& g : a) profile[h.coset_id(g)] += 1;
  return profile;
}

std::vector<int> profile_counts(const CosetProfile& profile) {
  std::vector<int> counts;
  counts.reserve(profile.size());
  for (const auto& [id, c] : profile) counts.push_back(c);
  std::sort(counts.begin(), counts.end());
  return counts;
}

bool is_ground(const SubgroupHandle& h, const std::vector<Element>& a, const PartitionVector& k) {
  if (k.sum() != static_cast<int>(a.size()))
    throw Error(Err::InvalidPartition, "partition parts must sum to |A|");
  return profile_counts(coset_profile(h, a)) == k.parts();
}

namespace {

// <S ∪ {g}> as a sorted element set.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed) {
  std::set<int> members(seed.begin(), seed.end());
  members.insert(g.identity());
  std::vector<int> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      if (members.insert(g.inv(x)).second) next.push_back(g.inv(x));
      for (int y : std::vector<int>(members.begin(), members.end())) {
        int xy = g.mul(x, y);
        if (members.insert(xy).second) next.push_back(xy);
        int yx = g.mul(y, x);
        if (members.insert(yx).second) next.push_back(yx);
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

std::vector<SubgroupHandle> enumerate_subgroups(const std::shared_ptr<const FiniteGroup>& g,
                                                int cap) {
  if (g->order() > cap)
    throw Error(Err::GroupTooLarge, "group order " + std::to_string(g->order()) +
                                        " exceeds cap " + std::to_string(cap));
  std::set<std::vector<int>> known;
  for (int x = 0; x < g->order(); ++x) known.insert(generated_subgroup(*g, {x}));

  // Close subgroup-element joins to a fixed point.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(known.begin(), known.end());
    for (const auto& sub : current)
      for (int x = 0; x < g->order(); ++x) {
        if (std::binary_search(sub.begin(), sub.end(), x)) continue;
        std::vector<int> seed = sub;
        seed.push_back(x);
        if (known.insert(generated_subgroup(*g, seed)).second) grew = true;
      }
  }

  std::vector<std::vector<int>> sets(known.begin(), known.end());
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupHandle> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(SubgroupHandle::explicit_set(g, std::move(s)));
  return out;
}

std::vector<SubgroupHandle> ground_set(const std::shared_ptr<const FiniteGroup>& g,
                                       const std::vector<int>& a, const PartitionVector& k) {
  std::vector<Element> elems;
  elems.reserve(a.size());
  for (int x : a) elems.emplace_back(x);
  std::vector<SubgroupHandle> out;
  for (auto& h : enumerate_subgroups(g))
    if (is_ground(h, elems, k)) out.push_back(std::move(h));
  return out;
}

std::optional<std::uint64_t> r0(const std::shared_ptr<const FiniteGroup>& g,
                                const std::vector<int>& a, const PartitionVector& k) {
  std::optional<std::uint64_t> best;
  for (const auto& h : ground_set(g, a, k)) {
    std::uint64_t idx = h.index();
    if (!best || idx < *best) best = idx;
  }
  return best;
}

namespace {

void partitions_rec(int n, int min_part, std::vector<int>& acc,
                    std::vector<PartitionVector>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = min_part; p <= n; ++p) {
    acc.push_back(p);
    partitions_rec(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PartitionVector> partition_vectors(int n) {
  if (n < 1) throw Error(Err::TooLarge, "n must be >= 1");
  if (n > kPartitionCap) throw Error(Err::TooLarge, "n exceeds partition cap");
  std::vector<PartitionVector> out;
  std::vector<int> acc;
  partitions_rec(n, 1, acc, out);
  return out;
}

}  // namespace gs
