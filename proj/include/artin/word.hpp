#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "artin/presentation.hpp"

namespace artin {

struct Letter {
  GeneratorId name;
  int sign = 1;  // +1 or -1

  static Letter pos(GeneratorId g) { return {g, 1}; }
  static Letter neg(GeneratorId g) { return {g, -1}; }

  Letter inverse() const { return {name, -sign}; }
  bool positive() const { return sign > 0; }
  bool operator==(const Letter&) const = default;
};

inline bool cancels(Letter a, Letter b) { return a.name == b.name && a.sign == -b.sign; }

class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters_(ls) {}
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
  template <class It>
  Word(It b, It e) : letters_(b, e) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::span<const Letter> view() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void clear() { letters_.clear(); }
  Word& append(const Word& w) {
    letters_.insert(letters_.end(), w.begin(), w.end());
    return *this;
  }
  Word& append(std::span<const Letter> w) {
    letters_.insert(letters_.end(), w.begin(), w.end());
    return *this;
  }

  // Letters [b, e).
  Word sub(std::size_t b, std::size_t e) const { return Word(letters_.begin() + b, letters_.begin() + e); }
  Word prefix(std::size_t n) const { return sub(0, n); }
  Word suffix_from(std::size_t b) const { return sub(b, size()); }

  Word inverse() const {
    Word r;
    r.letters_.reserve(size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
    return r;
  }
  Word reversed() const { return Word(letters_.rbegin(), letters_.rend()); }

  bool contains(Letter l) const { return std::find(begin(), end(), l) != end(); }

  bool operator==(const Word&) const = default;

  friend Word operator+(Word a, const Word& b) { return std::move(a.append(b)); }
  friend Word operator+(Word a, Letter l) {
    a.push_back(l);
    return a;
  }

 private:
  std::vector<Letter> letters_;
};

inline Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

inline bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (cancels(w[i - 1], w[i])) return false;
  return true;
}
inline bool is_freely_reduced(const Word& w) { return is_freely_reduced(w.view()); }

enum class Anchor { StartsWith, EndsWith };

// StartsWith: x y x y ... of length n. EndsWith: ... x y x y of length n.
inline Word alternating(Letter x, Letter y, std::size_t n, Anchor anchor) {
  if (x.name == y.name) throw std::invalid_argument("alternating word needs two distinct names");
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool first = anchor == Anchor::StartsWith ? i % 2 == 0 : (n - i) % 2 == 0;
    w.push_back(first ? x : y);
  }
  return w;
}

struct Syllable {
  GeneratorId name;
  int exponent;
  bool operator==(const Syllable&) const = default;
};

inline std::vector<Syllable> syllables(std::span<const Letter> w) {
  std::vector<Syllable> out;
  for (Letter l : w) {
    if (!out.empty() && out.back().name == l.name && (out.back().exponent > 0) == l.positive())
      out.back().exponent += l.sign;
    else
      out.push_back({l.name, l.sign});
  }
  return out;
}
inline std::vector<Syllable> syllables(const Word& w) { return syllables(w.view()); }

inline Word expand(const std::vector<Syllable>& ss) {
  Word w;
  for (auto s : ss)
    for (int i = 0; i < std::abs(s.exponent); ++i) w.push_back({s.name, s.exponent > 0 ? 1 : -1});
  return w;
}

struct PnStats {
  int p = 0;
  int n = 0;
  bool operator==(const PnStats&) const = default;
};

// p(v), n(v): longest positive / negative alternating subword, capped at m.
// v must be a word over exactly two names with finite label.
inline PnStats pn_stats(std::span<const Letter> v, const Presentation& pres) {
  if (v.empty()) throw std::invalid_argument("pn_stats of the empty word");
  GeneratorId x = v[0].name;
  std::optional<GeneratorId> y;
  for (Letter l : v) {
    if (l.name == x) continue;
    if (y && l.name != *y) throw std::invalid_argument("pn_stats: word uses more than two names");
    y = l.name;
  }
  if (!y) throw std::invalid_argument("pn_stats: word uses only one name");
  auto m = pres.m(x, *y);
  if (!m.is_finite()) throw std::invalid_argument("pn_stats: infinite label");
  PnStats s;
  int run = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && v[i].sign == v[i - 1].sign && v[i].name != v[i - 1].name)
      ++run;
    else
      run = 1;
    int& slot = v[i].positive() ? s.p : s.n;
    slot = std::max(slot, run);
  }
  s.p = std::min(s.p, m.value());
  s.n = std::min(s.n, m.value());
  return s;
}
inline PnStats pn_stats(const Word& v, const Presentation& pres) { return pn_stats(v.view(), pres); }

// Word text syntax: tokens `name`, `name^-1`, `name^k`; the empty word is `1`.
inline Word parse_word(std::string_view text, const Presentation& p) {
  Word w;
  std::size_t i = 0;
  bool saw_one = false, saw_letter = false;
  auto fail = [&](std::size_t at, const std::string& msg) -> void { throw ParseError(1, at + 1, msg); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    if (text[i] == '1' && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      saw_one = true;
      ++i;
      continue;
    }
    if (!detail::is_ident_start(text[i])) fail(i, "expected a generator name");
    while (i < text.size() && detail::is_ident_char(text[i])) ++i;
    std::string name(text.substr(b, i - b));
    auto g = p.find(name);
    if (!g) fail(b, "unknown generator '" + name + "'");
    long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t eb = i;
      if (i < text.size() && text[i] == '-') ++i;
      std::size_t db = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == db || i - db > 6) fail(eb, "expected a nonzero integer exponent");
      k = std::stol(std::string(text.substr(eb, i - eb)));
      if (k == 0) fail(eb, "exponent must be nonzero");
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) fail(i, "unexpected character");
    for (long j = 0; j < std::labs(k); ++j) w.push_back({*g, k > 0 ? 1 : -1});
    saw_letter = true;
  }
  if (saw_one && saw_letter) throw ParseError(1, 1, "'1' denotes the empty word and cannot be mixed with letters");
  return w;
}

// Runs of equal letters are written as powers.
inline std::string format_word(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::string out;
  for (auto s : syllables(w)) {
    if (!out.empty()) out += ' ';
    out += p.name(s.name);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace artin
