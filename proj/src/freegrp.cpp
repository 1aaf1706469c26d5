#include "gs/freegrp.hpp"

#include <algorithm>
#include <set>

#include "gs/errors.hpp"

namespace gs {

DifferenceSet difference_set(const std::vector<Word>& a) {
  if (a.empty()) throw Error(Err::EmptySet, "difference_set: empty set");
  std::set<Word> base(a.begin(), a.end());
  std::set<Word> star;
  for (const Word& x : base)
    for (const Word& y : base) star.insert(word_mul(x, word_inv(y)));
  return DifferenceSet{{base.begin(), base.end()}, {star.begin(), star.end()}};
}

DifferenceSetReport lemma_report(const std::vector<Word>& a, const std::vector<int>& basis) {
  DifferenceSet ds = difference_set(a);
  const Word ident = Word::identity(a.front().mode());

  auto contains = [](const std::vector<Word>& v, const Word& w) {
    return std::binary_search(v.begin(), v.end(), w);
  };

  DifferenceSetReport r{};
  r.identity_in_star = contains(ds.star, ident);
  r.star_is_trivial = ds.star.size() == 1 && r.identity_in_star;
  r.singleton = ds.base.size() == 1;
  r.a_equals_star = ds.base == ds.star;
  r.a_star_disjoint = true;
  for (const Word& x : ds.base)
    if (contains(ds.star, x)) r.a_star_disjoint = false;
  if (!basis.empty()) {
    bool sub = true;
    for (const Word& x : ds.base) {
      bool is_basis_gen = x.length() == 1 && x.letters()[0].sign == 1 &&
                          std::find(basis.begin(), basis.end(), x.letters()[0].gen) != basis.end();
      if (!is_basis_gen) sub = false;
    }
    r.a_subset_of_basis = sub;
  }
  r.a_subset_star = true;
  for (const Word& x : ds.base)
    if (!contains(ds.star, x)) r.a_subset_star = false;
  r.identity_in_a = contains(ds.base, ident);
  return r;
}

namespace {

// Per-generator images for the word-walk representation of x on points
// 0..|x| (degree |x|+1).
std::map<int, Permutation> hx_images(const Word& x) {
  const std::size_t degree = x.length() + 1;
  std::set<int> gens;
  for (const Letter& l : x.letters()) gens.insert(l.gen);

  std::map<int, Permutation> images;
  for (int gen : gens) {
    if (x.mode() == WordMode::Involutive) {
      std::vector<Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
      for (std::size_t p = 0; p < x.length(); ++p)
        if (x.letters()[p].gen == gen) std::swap(img[p], img[p + 1]);
      images.emplace(gen, Permutation(std::move(img)));
      continue;
    }

    // Partial injection along the word.
    std::vector<int> next(degree, -1);
    std::vector<bool> is_target(degree, false);
    for (std::size_t p = 0; p < x.length(); ++p) {
      const Letter& l = x.letters()[p];
      if (l.gen != gen) continue;
      std::size_t from = l.sign == 1 ? p : p + 1;
      std::size_t to = l.sign == 1 ? p + 1 : p;
      next[from] = static_cast<int>(to);
      is_target[to] = true;
    }
    // Close each maximal path into a cycle; untouched points stay fixed.
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t s = 0; s < degree; ++s) {
      if (is_target[s]) continue;
      if (next[s] < 0) continue;  // isolated point
      std::size_t t = s;
      while (next[t] >= 0) {
        img[t] = static_cast<Point>(next[t]);
        t = static_cast<std::size_t>(next[t]);
      }
      img[t] = static_cast<Point>(s);
    }
    images.emplace(gen, Permutation(std::move(img)));
  }
  return images;
}

std::map<int, Permutation> block_diagonal(const std::vector<Word>& blocks,
                                          const std::vector<int>& ensure_gens,
                                          std::size_t& degree_out) {
  std::set<int> gens(ensure_gens.begin(), ensure_gens.end());
  std::size_t degree = 0;
  for (const Word& z : blocks) {
    degree += z.length() + 1;
    for (const Letter& l : z.letters()) gens.insert(l.gen);
  }
  degree_out = degree;
  if (degree > 65535) throw Error(Err::TooLarge, "block representation degree exceeds 65535");

  std::map<int, std::vector<Point>> assembled;
  for (int gen : gens) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    assembled.emplace(gen, std::move(img));
  }
  std::size_t offset = 0;
  for (const Word& z : blocks) {
    auto imgs = hx_images(z);
    for (auto& [gen, perm] : imgs) {
      auto& target = assembled.at(gen);
      for (std::size_t i = 0; i < perm.degree(); ++i)
        target[offset + i] = static_cast<Point>(offset + perm.apply(static_cast<Point>(i)));
    }
    offset += z.length() + 1;
  }

  std::map<int, Permutation> images;
  for (auto& [gen, img] : assembled) images.emplace(gen, Permutation(std::move(img)));
  return images;
}

BigInt factorial(std::size_t n) {
  BigInt acc = 1;
  for (std::size_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace

PermRep hx_rep(const Word& x, const std::vector<int>& ensure_gens) {
  if (x.is_identity()) throw Error(Err::IdentityWord, "build_Hx: x must not be the identity");
  std::size_t degree = 0;
  auto images = block_diagonal({x}, ensure_gens, degree);
  return PermRep(degree, std::move(images), x.mode());
}

SubgroupHandle build_Hx(const Word& x) { return SubgroupHandle::kernel(hx_rep(x)); }

HaResult build_HA(const std::vector<Word>& a, const std::vector<int>& ensure_gens) {
  if (a.size() < 2) throw Error(Err::EmptyStar, "build_HA requires |A| >= 2");
  DifferenceSet ds = difference_set(a);
  std::vector<Word> blocks;
  for (const Word& z : ds.star)
    if (!z.is_identity()) blocks.push_back(z);

  std::size_t degree = 0;
  auto images = block_diagonal(blocks, ensure_gens, degree);
  PermRep rep(degree, std::move(images), a.front().mode());
  return HaResult{SubgroupHandle::kernel(std::move(rep)), index_bounds(a), degree,
                  std::move(blocks)};
}

bool verify_ones_ground(const SubgroupHandle& h, const std::vector<Word>& a) {
  std::vector<Element> elems;
  elems.reserve(a.size());
  for (const Word& w : a) elems.emplace_back(w);
  for (const auto& [id, count] : coset_profile(h, elems))
    if (count != 1) return false;
  return true;
}

BoundPair index_bounds(const Word& x) {
  return BoundPair{BigInt(alpha(x) + 1), factorial(x.length() + 1)};
}

BoundPair index_bounds(const std::vector<Word>& a) {
  if (a.size() < 2) throw Error(Err::EmptyStar, "index_bounds requires |A| >= 2");
  DifferenceSet ds = difference_set(a);
  BoundPair out{1, 1};
  for (const Word& z : ds.star) {
    if (z.is_identity()) continue;
    BoundPair b = index_bounds(z);
    out.lower *= b.lower;
    out.upper *= b.upper;
  }
  return out;
}

SubgroupHandle avoid_set(const std::vector<Word>& b, const std::vector<int>& ensure_gens) {
  if (b.empty()) throw Error(Err::EmptySet, "avoid_set: empty set");
  std::set<Word> dedup(b.begin(), b.end());
  for (const Word& w : dedup)
    if (w.is_identity())
      throw Error(Err::ContainsIdentity, "avoid_set: B must not contain the identity");
  std::vector<Word> blocks(dedup.begin(), dedup.end());
  std::size_t degree = 0;
  auto images = block_diagonal(blocks, ensure_gens, degree);
  return SubgroupHandle::kernel(PermRep(degree, std::move(images), blocks.front().mode()));
}

}  // namespace gs
