#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gs/cyclic.hpp"
#include "gs/errors.hpp"

using namespace gs;

TEST_CASE("theorem1_candidates on Example 1") {
  CHECK(theorem1_candidates(6, {0, 1, 2, 4}, PartitionVector({2, 2})) ==
        std::vector<int>{2, 3});
  CHECK(theorem1_candidates(6, {1, 2, 3}, PartitionVector({1, 1, 1})) ==
        std::vector<int>{3, 6});
}

TEST_CASE("theorem1_candidates boundary divisors") {
  // m = 3 = n/||k||: boundary divisor included
  CHECK(theorem1_candidates(6, {0, 1, 2, 3, 4, 5}, PartitionVector({2, 2, 2})) ==
        std::vector<int>{3});
  CHECK(theorem1_candidates(6, {0, 1, 2, 3, 4, 5}, PartitionVector({3, 3})) ==
        std::vector<int>{2});
  // m > n/||k||: empty candidate list
  CHECK(theorem1_candidates(4, {0, 1, 2, 3}, PartitionVector({1, 1, 2})).empty());
}

TEST_CASE("residue_histogram") {
  auto h = residue_histogram({1, 2, 3}, 3);
  CHECK(h.counts == std::vector<std::int64_t>{1, 1, 1});
  CHECK(residue_histogram({1, 2, 3}, 1).counts == std::vector<std::int64_t>{3});
  CHECK(residue_histogram({0, 1, 2, 4}, 2).counts == std::vector<std::int64_t>{3, 1});
  // mathematical residues for negatives
  CHECK(residue_histogram({-1}, 3).counts == std::vector<std::int64_t>{0, 0, 1});
}

TEST_CASE("residue_histogram mass") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> val(-30, 30);
  std::uniform_int_distribution<int> len(1, 12), mod(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> a;
    int n = len(rng);
    for (int i = 0; i < n; ++i) a.push_back(val(rng));
    auto h = residue_histogram(a, mod(rng));
    std::int64_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total == static_cast<std::int64_t>(a.size()));
  }
}

TEST_CASE("pZ_is_ground basic cases") {
  CHECK(pZ_is_ground({1, 2, 3}, PartitionVector({1, 1, 1}), 3));
  CHECK_FALSE(pZ_is_ground({1, 2, 3}, PartitionVector({1, 1, 1}), 2));
  CHECK(pZ_is_ground({7, -4, 12}, PartitionVector({3}), 1));
}

TEST_CASE("ground_moduli") {
  std::vector<int> expect;
  for (int p = 3; p <= 10; ++p) expect.push_back(p);
  CHECK(ground_moduli({1, 2, 3}, PartitionVector({1, 1, 1}), 10) == expect);
  CHECK(ground_moduli({0, 2}, PartitionVector({2}), 4) == std::vector<int>{1, 2});
  CHECK(ground_moduli({0, 1}, PartitionVector({1, 1}), 3) == std::vector<int>{2, 3});
}

TEST_CASE("pZ_is_ground agrees with the coset-representative oracle") {
  // Oracle: partition A into explicit cosets pZ+i via divisibility, then
  // apply the Def.-1 multiset test to the nonempty intersection sizes.
  auto oracle = [](const std::vector<std::int64_t>& a, const PartitionVector& k, int p) {
    std::vector<int> counts;
    for (int i = 0; i < p; ++i) {
      int c = 0;
      for (std::int64_t x : a) {
        std::int64_t diff = x - i;
        if (((diff % p) + p) % p == 0) ++c;
      }
      if (c > 0) counts.push_back(c);
    }
    std::sort(counts.begin(), counts.end());
    return counts == k.parts();
  };

  std::mt19937 rng(29);
  std::uniform_int_distribution<std::int64_t> val(-20, 20);
  std::uniform_int_distribution<int> len(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::int64_t> uniq;
    int n = len(rng);
    while (static_cast<int>(uniq.size()) < n) uniq.insert(val(rng));
    std::vector<std::int64_t> a(uniq.begin(), uniq.end());
    for (const auto& k : partition_vectors(n))
      for (int p = 1; p <= 12; ++p)
        CHECK(pZ_is_ground(a, k, p) == oracle(a, k, p));
  }
}

TEST_CASE("nn_hypothesis_holds") {
  CHECK_FALSE(nn_hypothesis_holds({1, 2, 3}, 2));  // {1,3} has no adjacent pair
  CHECK(nn_hypothesis_holds({1, 2}, 2));
  CHECK(nn_hypothesis_holds({1, 2, 3, 4}, 3));
  CHECK_THROWS_AS(nn_hypothesis_holds({1, 2, 3}, 2, 1), Error);  // cap
}

TEST_CASE("prop4_verify") {
  // |A|=2 with q=2: no partition has m>1 and a part of 2 -> vacuous pass
  auto r = prop4_verify({1, 2}, 2);
  CHECK(r.passed);
  CHECK(r.vacuous);

  auto r2 = prop4_verify({1, 2, 3, 4}, 3);
  CHECK(r2.passed);
  CHECK_FALSE(r2.vacuous);

  auto r3 = prop4_verify({2, 3, 5, 6}, 3);
  CHECK(r3.passed);

  CHECK_THROWS_AS(prop4_verify({1, 2, 3}, 2), Error);  // hypothesis fails
}

TEST_CASE("Theorem 1 containment as a property over random instances") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> n_dist(2, 60);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    int n = n_dist(rng);
    std::vector<int> a;
    for (int x = 0; x < n; ++x)
      if (coin(rng)) a.push_back(x);
    if (a.empty()) a.push_back(0);

    // One random ascending partition of |A|.
    std::vector<int> parts;
    int remaining = static_cast<int>(a.size());
    while (remaining > 0) {
      int part = std::uniform_int_distribution<int>(1, remaining)(rng);
      parts.push_back(part);
      remaining -= part;
    }
    std::sort(parts.begin(), parts.end());
    PartitionVector k(parts);

    auto g = FiniteGroup::cyclic(n);
    auto candidates = theorem1_candidates(n, a, k);
    for (const auto& h : ground_set(g, a, k)) {
      int idx = static_cast<int>(h.index());
      CHECK(std::find(candidates.begin(), candidates.end(), idx) != candidates.end());
      CHECK(h.elements() == cyclic_subgroup_of_index(g, idx).elements());
    }
    if (k.m() * static_cast<long long>(k.max_part()) > n)  // corollary
      CHECK(ground_set(g, a, k).empty());
  }
}
