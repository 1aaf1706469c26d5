#include "gs/cyclic.hpp"

#include <algorithm>

#include "gs/errors.hpp"

namespace gs {

std::vector<int> theorem1_candidates(int n, const std::vector<int>& a,
                                     const PartitionVector& k) {
  if (k.sum() != static_cast<int>(a.size()))
    throw Error(Err::InvalidPartition, "partition parts must sum to |A|");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (d >= k.m() && static_cast<long long>(d) * k.max_part() <= n) out.push_back(d);
  }
  return out;
}

SubgroupHandle cyclic_subgroup_of_index(const std::shared_ptr<const FiniteGroup>& zn, int d) {
  const int n = zn->order();
  if (d < 1 || n % d != 0)
    throw Error(Err::AmbientMismatch, "index " + std::to_string(d) + " does not divide " +
                                          std::to_string(n));
  std::vector<int> elems;
  for (int x = 0; x < n; x += d) elems.push_back(x);
  return SubgroupHandle::explicit_set(zn, std::move(elems));
}

ResidueHistogram residue_histogram(const std::vector<std::int64_t>& a, int p) {
  if (p < 1) throw Error(Err::InvalidPartition, "modulus must be >= 1");
  if (a.empty()) throw Error(Err::EmptySet, "residue_histogram: empty set");
  ResidueHistogram h{p, std::vector<std::int64_t>(p, 0)};
  for (std::int64_t x : a) {
    std::int64_t r = x % p;
    if (r < 0) r += p;
    h.counts[r] += 1;
  }
  return h;
}

bool pZ_is_ground(const std::vector<std::int64_t>& a, const PartitionVector& k, int p) {
  if (k.sum() != static_cast<int>(a.size()))
    throw Error(Err::InvalidPartition, "partition parts must sum to |A|");
  ResidueHistogram h = residue_histogram(a, p);
  std::vector<int> counts;
  for (std::int64_t c : h.counts)
    if (c > 0) counts.push_back(static_cast<int>(c));
  std::sort(counts.begin(), counts.end());
  return counts == k.parts();
}

std::vector<int> ground_moduli(const std::vector<std::int64_t>& a, const PartitionVector& k,
                               int p_max) {
  std::vector<int> out;
  for (int p = 1; p <= p_max; ++p)
    if (pZ_is_ground(a, k, p)) out.push_back(p);
  return out;
}

namespace {

std::uint64_t binomial_capped(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return 0;
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<std::uint64_t>(n - r + i) / i;
    if (acc > cap) return cap + 1;
  }
  return acc;
}

}  // namespace

bool nn_hypothesis_holds(const std::vector<std::int64_t>& a, int q, std::uint64_t cap) {
  const int n = static_cast<int>(a.size());
  if (q < 2 || q > n) throw Error(Err::HypothesisFails, "q must satisfy 2 <= q <= |A|");
  if (binomial_capped(n, q, cap) > cap)
    throw Error(Err::SubsetCountCapExceeded, "C(|A|,q) exceeds subset cap");

  std::vector<std::int64_t> sorted = a;
  std::sort(sorted.begin(), sorted.end());

  // Lexicographic combination walk over index vectors.
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    bool has_pair = false;
    for (int i = 0; i + 1 < q && !has_pair; ++i)
      if (sorted[idx[i + 1]] - sorted[idx[i]] == 1) has_pair = true;
    if (!has_pair) return false;

    int i = q - 1;
    while (i >= 0 && idx[i] == n - q + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

NnObstructionReport prop4_verify(const std::vector<std::int64_t>& a, int q,
                                 std::uint64_t subset_cap) {
  if (!nn_hypothesis_holds(a, q, subset_cap))
    throw Error(Err::HypothesisFails, "some q-subset of A has no nearest-neighbor pair");

  NnObstructionReport report{true, true, std::nullopt, std::nullopt};
  const auto [min_it, max_it] = std::minmax_element(a.begin(), a.end());
  const int p_limit = static_cast<int>(*max_it - *min_it) + 1;

  for (const PartitionVector& k : partition_vectors(static_cast<int>(a.size()))) {
    if (k.m() <= 1) continue;
    if (std::find(k.parts().begin(), k.parts().end(), q) == k.parts().end()) continue;
    report.vacuous = false;
    for (int p = 1; p <= p_limit; ++p) {
      if (pZ_is_ground(a, k, p)) {
        report.passed = false;
        report.counterexample_p = p;
        report.counterexample_k = k.parts();
        return report;
      }
    }
  }
  return report;
}

}  // namespace gs
