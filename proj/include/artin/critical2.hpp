#pragma once

#include <optional>
#include <span>
#include <tuple>

#include "artin/word.hpp"

namespace artin {

enum class Form { PositiveLeft, PositiveRight, NegativeLeft, NegativeRight, UnsignedPosNeg, UnsignedNegPos };

inline const char* to_string(Form f) {
  switch (f) {
    case Form::PositiveLeft: return "positive-left";
    case Form::PositiveRight: return "positive-right";
    case Form::NegativeLeft: return "negative-left";
    case Form::NegativeRight: return "negative-right";
    case Form::UnsignedPosNeg: return "unsigned-pos-neg";
    case Form::UnsignedNegPos: return "unsigned-neg-pos";
  }
  return "?";
}

struct Critical2Data {
  GeneratorId x;  // name of the first letter
  GeneratorId y;  // the other name
  Form form;
  PnStats pn;
  int m = 0;
  std::size_t lead = 0;   // length of the leading alternating block
  std::size_t trail = 0;  // length of the trailing alternating block
};

namespace detail {

// Names used by a word, if it uses exactly two.
inline std::optional<std::pair<GeneratorId, GeneratorId>> two_names(std::span<const Letter> u) {
  if (u.empty()) return std::nullopt;
  GeneratorId x = u[0].name;
  std::optional<GeneratorId> y;
  for (Letter l : u) {
    if (l.name == x) continue;
    if (y && *y != l.name) return std::nullopt;
    y = l.name;
  }
  if (!y) return std::nullopt;
  return std::pair{x, *y};
}

// Are u[b, b+len) all of sign `sign` and alternating?
inline bool alternating_block(std::span<const Letter> u, std::size_t b, std::size_t len, int sign) {
  if (b + len > u.size()) return false;
  for (std::size_t i = b; i < b + len; ++i) {
    if (u[i].sign != sign) return false;
    if (i > b && u[i].name == u[i - 1].name) return false;
  }
  return true;
}

// Number of alternating windows of length m of sign `sign`.
inline std::size_t count_windows(std::span<const Letter> u, int m, int sign) {
  std::size_t count = 0;
  int run = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].sign != sign)
      run = 0;
    else if (run > 0 && u[i].name != u[i - 1].name)
      ++run;
    else
      run = 1;
    if (run >= m) ++count;
  }
  return count;
}

inline GeneratorId other(GeneratorId g, GeneratorId x, GeneratorId y) { return g == x ? y : x; }

}  // namespace detail

inline std::optional<Critical2Data> classify_2gen_critical(std::span<const Letter> u, const Presentation& pres) {
  auto names = detail::two_names(u);
  if (!names) throw std::invalid_argument("classify_2gen_critical: word must use exactly two names");
  auto [x, y] = *names;
  auto label = pres.m(x, y);
  if (!label.is_finite() || label.value() < 3)
    throw std::invalid_argument("classify_2gen_critical: label must be finite and at least 3");
  if (!is_freely_reduced(u)) throw std::invalid_argument("classify_2gen_critical: word not freely reduced");
  const int m = label.value();
  if (u.size() < static_cast<std::size_t>(m)) return std::nullopt;

  PnStats s = pn_stats(u, pres);
  if (s.p + s.n != m) return std::nullopt;

  Critical2Data d{x, y, Form::PositiveLeft, s, m, 0, 0};
  const std::size_t len = u.size();
  if (s.n == 0 || s.p == 0) {
    int sign = s.n == 0 ? 1 : -1;
    if (detail::count_windows(u, m, sign) != 1) return std::nullopt;
    if (detail::alternating_block(u, 0, m, sign)) {
      d.form = sign > 0 ? Form::PositiveLeft : Form::NegativeLeft;
      d.lead = m;
      return d;
    }
    if (detail::alternating_block(u, len - m, m, sign)) {
      d.form = sign > 0 ? Form::PositiveRight : Form::NegativeRight;
      d.trail = m;
      return d;
    }
    return std::nullopt;
  }
  std::size_t lead = u[0].positive() ? s.p : s.n;
  std::size_t trail = u[0].positive() ? s.n : s.p;
  int sign = u[0].sign;
  if (lead + trail > len) return std::nullopt;
  if (!detail::alternating_block(u, 0, lead, sign)) return std::nullopt;
  if (!detail::alternating_block(u, len - trail, trail, -sign)) return std::nullopt;
  d.form = sign > 0 ? Form::UnsignedPosNeg : Form::UnsignedNegPos;
  d.lead = lead;
  d.trail = trail;
  return d;
}
inline std::optional<Critical2Data> classify_2gen_critical(const Word& u, const Presentation& pres) {
  return classify_2gen_critical(u.view(), pres);
}

// Conjugation by the Garside element of the pair {x,y}.
inline Word delta(std::span<const Letter> w, GeneratorId x, GeneratorId y, const Presentation& pres) {
  auto m = pres.m(x, y);
  if (!m.is_finite()) throw std::invalid_argument("delta: infinite label");
  Word out(w.begin(), w.end());
  if (m.value() % 2 == 1)
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].name == x)
        out[i].name = y;
      else if (out[i].name == y)
        out[i].name = x;
    }
  return out;
}
inline Word delta(const Word& w, GeneratorId x, GeneratorId y, const Presentation& pres) {
  return delta(w.view(), x, y, pres);
}

inline Word tau_2gen(std::span<const Letter> u, const Critical2Data& d, const Presentation& pres) {
  const std::size_t len = u.size();
  const std::size_t m = static_cast<std::size_t>(d.m);
  std::span<const Letter> xi = u.subspan(d.lead, len - d.lead - d.trail);
  auto lt = [](GeneratorId g, int sign) { return Letter{g, sign}; };
  Word out;
  out.reserve(len);
  switch (d.form) {
    case Form::PositiveLeft:
    case Form::NegativeLeft: {
      int e = d.form == Form::PositiveLeft ? 1 : -1;
      if (xi.empty()) return alternating(lt(d.y, e), lt(d.x, e), m, Anchor::StartsWith);
      GeneratorId z = xi.back().name, t = detail::other(z, d.x, d.y);
      out = delta(xi, d.x, d.y, pres);
      return out.append(alternating(lt(z, e), lt(t, e), m, Anchor::EndsWith));
    }
    case Form::PositiveRight:
    case Form::NegativeRight: {
      int e = d.form == Form::PositiveRight ? 1 : -1;
      GeneratorId z = xi.front().name, t = detail::other(z, d.x, d.y);
      out = alternating(lt(t, e), lt(z, e), m, Anchor::StartsWith);
      return out.append(delta(xi, d.x, d.y, pres));
    }
    case Form::UnsignedPosNeg:
    case Form::UnsignedNegPos: {
      // Leading block of sign e and length d.lead, trailing block of sign -e.
      int e = d.form == Form::UnsignedPosNeg ? 1 : -1;
      GeneratorId t = u.back().name, z = detail::other(t, d.x, d.y);
      out = alternating(lt(d.y, -e), lt(d.x, -e), d.trail, Anchor::StartsWith);
      out.append(delta(xi, d.x, d.y, pres));
      return out.append(alternating(lt(t, e), lt(z, e), d.lead, Anchor::EndsWith));
    }
  }
  return out;
}
inline Word tau_2gen(const Word& u, const Critical2Data& d, const Presentation& pres) {
  return tau_2gen(u.view(), d, pres);
}

struct AbcExponents {
  int I, J, K;
  bool operator==(const AbcExponents&) const = default;
};

// For v over {a,b} with m(a,b) = 3 and first and last letters named a, the
// closed forms for which v is critical and tau(v) = b^I a^J b^K.
inline std::optional<AbcExponents> abc_transform(std::span<const Letter> v, const Presentation& pres) {
  if (v.empty() || v.front().name != v.back().name)
    throw std::invalid_argument("abc_transform: first and last letters must share a name");
  auto names = detail::two_names(v);
  if (!names) return std::nullopt;
  GeneratorId a = v.front().name, b = detail::other(a, names->first, names->second);
  if (!pres.m(a, b).equals(3)) throw std::invalid_argument("abc_transform: m(a,b) must be 3");
  if (!is_freely_reduced(v)) return std::nullopt;

  auto ss = syllables(v);
  bool all_pos = std::all_of(v.begin(), v.end(), [](Letter l) { return l.positive(); });
  bool all_neg = std::all_of(v.begin(), v.end(), [](Letter l) { return !l.positive(); });
  if (all_pos || all_neg) {
    int e = all_pos ? 1 : -1;
    if (ss.size() != 3 || ss[1].exponent != e) return std::nullopt;
    if (ss[2].exponent == e) return AbcExponents{e, e, ss[0].exponent};
    if (ss[0].exponent == e) return AbcExponents{ss[2].exponent, e, e};
    return std::nullopt;
  }

  // mid = v[from, to) must be b^{bs*x} a^{as*y} (b block first) with x, y >= 0.
  auto split = [&](std::size_t from, std::size_t to, GeneratorId first, int first_sign, int second_sign)
      -> std::optional<std::pair<int, int>> {
    int x = 0, y = 0;
    std::size_t i = from;
    while (i < to && v[i].name == first && v[i].sign == first_sign) ++x, ++i;
    GeneratorId second = detail::other(first, a, b);
    while (i < to && v[i].name == second && v[i].sign == second_sign) ++y, ++i;
    if (i != to) return std::nullopt;
    return std::pair{x, y};
  };

  const std::size_t len = v.size();
  for (int e : {1, -1}) {
    if (v[0].sign != e) continue;
    // a^e b^{-e(j-1)} a^{e(k-1)} b^{-e} a^{-e}  ->  b^{-e} a^{-ej} b^{ek}
    if (len >= 3 && v[len - 1] == Letter{a, -e} && v[len - 2] == Letter{b, -e}) {
      if (auto xy = split(1, len - 2, b, -e, e)) return AbcExponents{-e, -e * (xy->first + 1), e * (xy->second + 1)};
    }
    // a^e b^e a^{-e(i-1)} b^{e(j-1)} a^{-e}  ->  b^{-ei} a^{ej} b^e
    if (len >= 3 && v[1] == Letter{b, e} && v[len - 1] == Letter{a, -e}) {
      if (auto xy = split(2, len - 1, a, -e, e)) return AbcExponents{-e * (xy->first + 1), e * (xy->second + 1), e};
    }
  }
  return std::nullopt;
}
inline std::optional<AbcExponents> abc_transform(const Word& v, const Presentation& pres) {
  return abc_transform(v.view(), pres);
}

}  // namespace artin
