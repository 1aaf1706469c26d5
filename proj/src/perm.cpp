#include "gs/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "gs/errors.hpp"

namespace gs {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(Err::ParseError, "images do not form a permutation");
    seen[p] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += "(";
    Point p = static_cast<Point>(i);
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += " ";
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw Error(Err::AmbientMismatch, "compose: degree mismatch");
  std::vector<Point> img(u.degree());
  for (std::size_t i = 0; i < u.degree(); ++i) img[i] = v.apply(u.apply(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Point p : v) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::uint64_t perm_group_order(const std::vector<Permutation>& generators, std::size_t cap) {
  if (cap < 1) throw Error(Err::OrderCapExceeded, "order cap must be >= 1");
  if (generators.empty()) return 1;
  const std::size_t d = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != d) throw Error(Err::AmbientMismatch, "generators of mixed degree");

  std::unordered_set<std::vector<Point>, VecHash> seen;
  std::deque<Permutation> frontier;
  seen.insert(Permutation::identity(d).images());
  frontier.push_back(Permutation::identity(d));
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(cur, g);
      if (seen.insert(next.images()).second) {
        if (seen.size() > cap)
          throw Error(Err::OrderCapExceeded,
                      "permutation group order exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<Point> orbit(const std::vector<Permutation>& generators, Point basepoint) {
  if (generators.empty()) return {basepoint};
  const std::size_t d = generators[0].degree();
  if (basepoint >= d) throw Error(Err::AmbientMismatch, "basepoint out of range");
  std::vector<bool> seen(d, false);
  std::deque<Point> frontier{basepoint};
  seen[basepoint] = true;
  std::vector<Point> out{basepoint};
  while (!frontier.empty()) {
    Point p = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Point q = g.apply(p);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
        frontier.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gs
