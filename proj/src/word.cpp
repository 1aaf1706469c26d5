#include "gs/word.hpp"

#include <cctype>
#include <set>

#include "gs/errors.hpp"

namespace gs {

Word reduce(std::vector<Letter> letters, WordMode mode) {
  Word w(mode);
  auto& out = w.letters_;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l.gen < 1) throw Error(Err::ParseError, "generator index must be >= 1");
    if (mode == WordMode::Involutive) l.sign = 1;
    if (l.sign != 1 && l.sign != -1) throw Error(Err::ParseError, "sign must be +1 or -1");
    bool cancels = false;
    if (!out.empty()) {
      const Letter& top = out.back();
      if (mode == WordMode::Free)
        cancels = top.gen == l.gen && top.sign == -l.sign;
      else
        cancels = top.gen == l.gen;
    }
    if (cancels)
      out.pop_back();
    else
      out.push_back(l);
  }
  return w;
}

Word word_mul(const Word& u, const Word& v) {
  if (u.mode() != v.mode()) throw Error(Err::ModeMismatch, "word_mul: mode mismatch");
  std::vector<Letter> cat = u.letters();
  cat.insert(cat.end(), v.letters().begin(), v.letters().end());
  return reduce(std::move(cat), u.mode());
}

Word word_inv(const Word& u) {
  std::vector<Letter> rev(u.letters().rbegin(), u.letters().rend());
  if (u.mode() == WordMode::Free)
    for (Letter& l : rev) l.sign = -l.sign;
  return reduce(std::move(rev), u.mode());
}

int alpha(const Word& x) {
  std::set<int> gens;
  for (const Letter& l : x.letters()) gens.insert(l.gen);
  return static_cast<int>(gens.size());
}

namespace {

// One factor of the `*`-separated product: `e`, `a`, `a3`, `b^-1`, `a12^-1`.
Letter parse_factor(const std::string& tok, WordMode mode, bool& is_identity) {
  is_identity = false;
  std::size_t pos = 0;
  int sign = 1;
  std::string body = tok;
  if (body.size() >= 3 && body.substr(body.size() - 3) == "^-1") {
    sign = -1;
    body = body.substr(0, body.size() - 3);
  }
  if (body.empty()) throw Error(Err::ParseError, "empty factor in word: '" + tok + "'");
  if (body == "e" && sign == 1) {
    is_identity = true;
    return {0, 1};
  }
  char c = body[pos];
  if (!std::islower(static_cast<unsigned char>(c)))
    throw Error(Err::ParseError, "bad generator '" + tok + "'");
  ++pos;
  int gen;
  if (pos == body.size()) {
    gen = c - 'a' + 1;  // alias a..z -> 1..26
  } else {
    if (c != 'a') throw Error(Err::ParseError, "bad generator '" + tok + "'");
    gen = 0;
    for (; pos < body.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(body[pos])))
        throw Error(Err::ParseError, "bad generator '" + tok + "'");
      gen = gen * 10 + (body[pos] - '0');
      if (gen > 1000000) throw Error(Err::ParseError, "generator index too large");
    }
    if (gen < 1) throw Error(Err::ParseError, "generator index must be >= 1");
  }
  if (mode == WordMode::Involutive && sign == -1) sign = 1;  // a^-1 = a
  return {gen, sign};
}

}  // namespace

Word parse_word(const std::string& text, WordMode mode) {
  std::vector<Letter> letters;
  std::string tok;
  auto flush = [&](const std::string& t) {
    if (t.empty()) throw Error(Err::ParseError, "empty factor in word '" + text + "'");
    bool ident = false;
    Letter l = parse_factor(t, mode, ident);
    if (!ident) letters.push_back(l);
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '*') {
      flush(tok);
      tok.clear();
    } else {
      tok.push_back(c);
    }
  }
  flush(tok);
  return reduce(std::move(letters), mode);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += "*";
    if (l.gen <= 26)
      out += static_cast<char>('a' + l.gen - 1);
    else
      out += "a" + std::to_string(l.gen);
    if (l.sign == -1) out += "^-1";
  }
  return out;
}

}  // namespace gs
