#include <doctest.h>

#include <random>

#include "gs/errors.hpp"
#include "gs/finite_group.hpp"
#include "gs/perm.hpp"
#include "gs/perm_rep.hpp"
#include "gs/word.hpp"

using namespace gs;

namespace {

Word w(const std::string& text, WordMode mode = WordMode::Free) {
  return parse_word(text, mode);
}

std::vector<Letter> random_letters(std::mt19937& rng, int max_len, int max_gen, WordMode mode) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(1, max_gen);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<Letter> out;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    out.push_back({gen_dist(rng), mode == WordMode::Free && sign_dist(rng) ? -1 : 1});
  return out;
}

Permutation transposition(std::size_t d, Point a, Point b) {
  std::vector<Point> img(d);
  for (std::size_t i = 0; i < d; ++i) img[i] = static_cast<Point>(i);
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("reduce cancels inverse pairs") {
  // a b b^-1 a^-1 -> e
  Word x = reduce({{1, 1}, {2, 1}, {2, -1}, {1, -1}}, WordMode::Free);
  CHECK(x.is_identity());
}

TEST_CASE("reduce involutive a a b -> b") {
  Word x = reduce({{1, 1}, {1, 1}, {2, 1}}, WordMode::Involutive);
  CHECK(x == w("b", WordMode::Involutive));
}

TEST_CASE("reduce keeps already reduced words") {
  Word x = reduce({{1, 1}, {2, -1}, {2, -1}}, WordMode::Free);
  CHECK(x.length() == 3);
  CHECK(x == w("a*b^-1*b^-1"));
}

TEST_CASE("word_inv reverses and flips") {
  CHECK(word_inv(w("a*b")) == w("b^-1*a^-1"));
  CHECK(word_inv(w("a*b*c", WordMode::Involutive)) == w("c*b*a", WordMode::Involutive));
}

TEST_CASE("word_mul cancels across the seam") {
  CHECK(word_mul(w("a*b"), w("b^-1*c")) == w("a*c"));
}

TEST_CASE("word_mul rejects mode mismatch") {
  CHECK_THROWS_AS(word_mul(w("a"), w("a", WordMode::Involutive)), Error);
}

TEST_CASE("alpha counts distinct generators") {
  CHECK(alpha(w("a*b^-1*a")) == 2);
  CHECK(alpha(Word::identity(WordMode::Free)) == 0);
  CHECK(alpha(w("a")) == 1);
}

TEST_CASE("word syntax round trip") {
  for (const char* s : {"e", "a", "a*b^-1*a", "a27*b", "c*b*a"}) {
    Word x = w(s);
    CHECK(parse_word(to_string(x), WordMode::Free) == x);
  }
  CHECK_THROWS_AS(w("a**b"), Error);
  CHECK_THROWS_AS(w("1a"), Error);
}

TEST_CASE("reduction is idempotent on random input") {
  std::mt19937 rng(7);
  for (WordMode mode : {WordMode::Free, WordMode::Involutive})
    for (int trial = 0; trial < 500; ++trial) {
      Word once = reduce(random_letters(rng, 12, 3, mode), mode);
      std::vector<Letter> again = once.letters();
      CHECK(reduce(again, mode) == once);
    }
}

TEST_CASE("group laws on random words") {
  std::mt19937 rng(11);
  for (WordMode mode : {WordMode::Free, WordMode::Involutive})
    for (int trial = 0; trial < 300; ++trial) {
      Word u = reduce(random_letters(rng, 8, 3, mode), mode);
      Word v = reduce(random_letters(rng, 8, 3, mode), mode);
      Word t = reduce(random_letters(rng, 8, 3, mode), mode);
      CHECK(word_mul(word_mul(u, v), t) == word_mul(u, word_mul(v, t)));
      CHECK(word_mul(u, word_inv(u)).is_identity());
    }
}

TEST_CASE("make_cyclic matches modular addition") {
  auto z6 = FiniteGroup::cyclic(6);
  CHECK(z6->order() == 6);
  CHECK(z6->mul(3, 5) == 2);
  CHECK(z6->identity() == 0);
  CHECK(z6->inv(2) == 4);
  CHECK(FiniteGroup::cyclic(1)->order() == 1);
}

TEST_CASE("from_table rejects non-groups") {
  // No identity row.
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 0}}), Error);
  // Z_5 table with two entries swapped: identity and inverses survive,
  // associativity does not.
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) t[i][j] = (i + j) % 5;
  std::swap(t[1][1], t[1][2]);
  try {
    FiniteGroup::from_table(t);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
}

TEST_CASE("rep_eval composes left to right") {
  PermRep rep(3, {{1, transposition(3, 0, 1)}, {2, transposition(3, 1, 2)}}, WordMode::Free);
  CHECK(rep_eval(rep, Word::identity(WordMode::Free)).is_identity());
  // point 0 -> 1 under a, then 1 -> 2 under b
  CHECK(rep_eval(rep, w("a*b")).apply(0) == 2);
}

TEST_CASE("involutive rep squares to identity") {
  PermRep rep(3, {{1, transposition(3, 0, 1)}}, WordMode::Involutive);
  CHECK(rep_eval(rep, w("a*a", WordMode::Involutive)).is_identity());
  // non-involution rejected
  CHECK_THROWS_AS(PermRep(3, {{1, compose(transposition(3, 0, 1), transposition(3, 1, 2))}},
                          WordMode::Involutive),
                  Error);
}

TEST_CASE("rep_eval rejects unknown generators") {
  PermRep rep(2, {{1, transposition(2, 0, 1)}}, WordMode::Free);
  CHECK_THROWS_AS(rep_eval(rep, w("b")), Error);
}

TEST_CASE("homomorphism law on random words") {
  std::mt19937 rng(23);
  PermRep rep(4,
              {{1, transposition(4, 0, 1)},
               {2, transposition(4, 1, 2)},
               {3, transposition(4, 2, 3)}},
              WordMode::Free);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = reduce(random_letters(rng, 6, 3, WordMode::Free), WordMode::Free);
    Word v = reduce(random_letters(rng, 6, 3, WordMode::Free), WordMode::Free);
    CHECK(rep_eval(rep, word_mul(u, v)) == compose(rep_eval(rep, u), rep_eval(rep, v)));
  }
}

TEST_CASE("perm_group_order on small groups") {
  CHECK(perm_group_order({transposition(2, 0, 1)}) == 2);
  CHECK(perm_group_order({transposition(3, 0, 1), transposition(3, 1, 2)}) == 6);
  CHECK_THROWS_AS(perm_group_order({transposition(2, 0, 1)}, 1), Error);
}

TEST_CASE("perm_group_order of a single k-cycle is k") {
  for (std::size_t k = 2; k <= 8; ++k) {
    std::vector<Point> img(k);
    for (std::size_t i = 0; i < k; ++i) img[i] = static_cast<Point>((i + 1) % k);
    CHECK(perm_group_order({Permutation(img)}) == k);
  }
}

TEST_CASE("orbit and cycle display") {
  Permutation a = transposition(4, 0, 1);
  Permutation b = transposition(4, 1, 2);
  auto orb = orbit({a, b}, 0);
  CHECK(orb == std::vector<Point>{0, 1, 2});
  CHECK(a.to_cycles() == "(1 2)");
}
