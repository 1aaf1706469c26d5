#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gs {

enum class WordMode { Free, Involutive };

/// One signed generator occurrence. Involutive words carry sign +1 only.
struct Letter {
  int gen;   // generator index, >= 1
  int sign;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

/// A group element as a reduced word over signed generators.
///
/// Free mode: no adjacent (g,+1)(g,-1) or (g,-1)(g,+1) pair.
/// Involutive mode: all signs +1, no two adjacent equal generator indices.
/// The empty word is the identity.
class Word {
 public:
  explicit Word(WordMode mode = WordMode::Free) : mode_(mode) {}

  static Word identity(WordMode mode) { return Word(mode); }

  WordMode mode() const { return mode_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  auto operator<=>(const Word&) const = default;

 private:
  friend Word reduce(std::vector<Letter> letters, WordMode mode);

  std::vector<Letter> letters_;
  WordMode mode_;
};

/// Cancels a raw letter sequence to the unique reduced word.
/// In Involutive mode any -1 signs are normalized to +1 first.
Word reduce(std::vector<Letter> letters, WordMode mode);

Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& u);

/// Number of distinct generator indices occurring in the reduced word.
int alpha(const Word& x);

/// Parses the textual syntax: generators `a1, a2, ...` (aliases `a`..`z`
/// for indices 1..26), inverse suffix `^-1` (Free mode), product `*`,
/// identity `e`. Example: `a*b^-1*a`.
Word parse_word(const std::string& text, WordMode mode);

std::string to_string(const Word& w);

}  // namespace gs
