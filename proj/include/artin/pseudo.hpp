#pragma once

#include <optional>
#include <span>
#include <variant>

#include "artin/critical2.hpp"

namespace artin {

struct P2GData {
  GeneratorId a, b;         // a is the name of the first letter
  std::size_t p_end = 0;    // u_p = u[0, p_end)
  std::size_t s_begin = 0;  // u_s = u[s_begin, |u|)
  Word hat;
  Word alpha, rho, beta;
  std::optional<Critical2Data> crit;  // set when hat is a critical 2-generator word

  bool critical() const { return crit.has_value(); }
  bool has_pseudo(GeneratorId g) const { return g == a || g == b; }
};

struct P3GData {
  GeneratorId a, b, c;
  std::size_t p_end = 0;  // u_p = u[0, p_end)
  std::size_t r_begin = 0;  // u_r = u[r_begin, |u|); u_q lies between
  P2GData ur;
  AbcExponents ijk{};
  Word sharp;
  P2GData sharp_data;
  int E = 1;
  Word alpha, rho, beta;
};

namespace detail {

inline bool commutes_with_all(const Presentation& p, GeneratorId g, std::initializer_list<GeneratorId> others) {
  for (auto o : others)
    if (!p.commutes(g, o)) return false;
  return true;
}

// Index of the first letter of u that does not commute with g, if any.
inline std::optional<std::size_t> first_noncommuting(std::span<const Letter> u, GeneratorId g, const Presentation& p) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!p.commutes(u[i].name, g)) return i;
  return std::nullopt;
}

}  // namespace detail

// Factorisation of u as a P2G word of type {a,b}. The first and last letters
// of u must be named a or b.
inline std::optional<P2GData> p2g_factor(std::span<const Letter> u, GeneratorId a, GeneratorId b,
                                         const Presentation& pres) {
  if (u.empty() || a == b) return std::nullopt;
  auto m = pres.m(a, b);
  if (!m.is_finite() || m.value() <= 2) return std::nullopt;
  auto in_p = [&](Letter l) { return l.name == a || l.name == b; };
  if (!in_p(u.front()) || !in_p(u.back())) return std::nullopt;

  P2GData d;
  d.a = u.front().name;
  d.b = d.a == a ? b : a;
  const GeneratorId fname = u.front().name, lname = u.back().name;
  const std::size_t len = u.size();

  std::size_t i = 0;
  while (i < len && !(in_p(u[i]) && u[i].name != fname)) {
    if (!pres.commutes(u[i].name, fname)) return std::nullopt;
    ++i;
  }
  if (i == len) return std::nullopt;
  d.p_end = i;

  std::size_t s = len;
  while (s > d.p_end && !(in_p(u[s - 1]) && u[s - 1].name != lname)) --s;
  d.s_begin = s;
  for (std::size_t k = d.p_end; k < d.s_begin; ++k)
    if (!in_p(u[k]) && !(pres.commutes(u[k].name, a) && pres.commutes(u[k].name, b))) return std::nullopt;
  for (std::size_t k = d.s_begin; k < len; ++k)
    if (!pres.commutes(u[k].name, lname)) return std::nullopt;

  // Internal letters after u_p that cannot reach the front of u by
  // commutations are those in the dependency cone of the first letter.
  std::vector<GeneratorId> cone{fname};
  auto in_cone = [&](GeneratorId g) {
    for (auto c : cone)
      if (!pres.commutes(c, g) || c == g) return true;
    return false;
  };
  for (std::size_t k = 0; k < len; ++k) {
    Letter l = u[k];
    if (in_p(l)) {
      d.hat.push_back(l);
      if (std::find(cone.begin(), cone.end(), l.name) == cone.end()) cone.push_back(l.name);
    } else if (k < d.p_end) {
      d.alpha.push_back(l);
    } else if (in_cone(l.name)) {
      d.beta.push_back(l);
      if (std::find(cone.begin(), cone.end(), l.name) == cone.end()) cone.push_back(l.name);
    } else {
      d.rho.push_back(l);
    }
  }

  if (is_freely_reduced(d.hat) && d.hat.size() >= static_cast<std::size_t>(m.value()))
    d.crit = classify_2gen_critical(d.hat, pres);
  return d;
}

// Type inferred from the word: {f,l} when the end names differ, otherwise
// {f,b} where b names the first letter not commuting with f.
inline std::optional<P2GData> p2g_factor(std::span<const Letter> u, const Presentation& pres) {
  if (u.empty()) return std::nullopt;
  GeneratorId f = u.front().name, l = u.back().name;
  if (f != l) return p2g_factor(u, f, l, pres);
  auto k = detail::first_noncommuting(u, f, pres);
  if (!k) return std::nullopt;
  return p2g_factor(u, f, u[*k].name, pres);
}
inline std::optional<P2GData> p2g_factor(const Word& u, const Presentation& pres) {
  return p2g_factor(u.view(), pres);
}

inline std::optional<P2GData> is_p2g_critical(std::span<const Letter> u, const Presentation& pres) {
  if (!is_freely_reduced(u)) return std::nullopt;
  auto d = p2g_factor(u, pres);
  if (!d || !d->critical()) return std::nullopt;
  return d;
}
inline std::optional<P2GData> is_p2g_critical(const Word& u, const Presentation& pres) {
  return is_p2g_critical(u.view(), pres);
}

inline Word tau_hat(const P2GData& d, const Presentation& pres) { return tau_2gen(d.hat, *d.crit, pres); }

inline Word tau_p2g(const P2GData& d, const Presentation& pres) {
  Word out = d.alpha;
  out.append(d.rho);
  out.append(tau_hat(d, pres));
  return out.append(d.beta);
}

inline std::optional<P3GData> p3g_factor_critical(std::span<const Letter> u, GeneratorId a, GeneratorId b,
                                                  GeneratorId c, const Presentation& pres) {
  if (!pres.m(a, b).equals(3) || !pres.m(a, c).equals(2) || !pres.m(b, c).is_finite() ||
      pres.m(b, c).value() < 5)
    throw std::invalid_argument("p3g_factor_critical: type must satisfy m(a,b)=3, m(a,c)=2, 5<=m(b,c)<inf");
  if (u.empty() || !is_freely_reduced(u)) return std::nullopt;
  GeneratorId f = u.front().name;
  if ((f != b && f != c) || u.back().name != a) return std::nullopt;

  P3GData d;
  d.a = a;
  d.b = b;
  d.c = c;
  auto k = detail::first_noncommuting(u, f, pres);
  if (!k) return std::nullopt;
  GeneratorId other = f == b ? c : b;
  if (u[*k].name != other) return std::nullopt;
  d.p_end = *k;
  std::size_t r = d.p_end;
  while (r < u.size() && u[r].name != a) ++r;
  if (r == u.size()) return std::nullopt;
  d.r_begin = r;
  for (std::size_t i = d.p_end; i < d.r_begin; ++i) {
    GeneratorId g = u[i].name;
    if (g != b && g != c && !(pres.commutes(g, b) && pres.commutes(g, c))) return std::nullopt;
  }

  auto ur = p2g_factor(u.subspan(d.r_begin), a, b, pres);
  if (!ur || !ur->critical()) return std::nullopt;
  auto ijk = abc_transform(ur->hat, pres);
  if (!ijk) return std::nullopt;
  d.ur = std::move(*ur);
  d.ijk = *ijk;

  d.sharp = Word(u.begin(), u.begin() + d.r_begin);
  d.sharp.append(d.ur.alpha).append(d.ur.rho);
  for (int i = 0; i < std::abs(d.ijk.I); ++i) d.sharp.push_back({b, d.ijk.I > 0 ? 1 : -1});
  if (!is_freely_reduced(d.sharp)) return std::nullopt;
  auto sh = p2g_factor(d.sharp.view(), b, c, pres);
  if (!sh || !sh->critical() || !sh->beta.empty()) return std::nullopt;
  Word th = tau_hat(*sh, pres);
  if (th.back().name != c) return std::nullopt;
  d.E = th.back().sign;
  d.alpha = sh->alpha;
  d.rho = sh->rho;
  d.beta = d.ur.beta;
  d.sharp_data = std::move(*sh);
  return d;
}
inline std::optional<P3GData> p3g_factor_critical(const Word& u, GeneratorId a, GeneratorId b, GeneratorId c,
                                                  const Presentation& pres) {
  return p3g_factor_critical(u.view(), a, b, c, pres);
}

inline Word tau_p3g(const P3GData& d, const Presentation& pres) {
  Word out = d.alpha;
  out.append(d.rho);
  Word th = tau_hat(d.sharp_data, pres);
  th.pop_back();
  out.append(th);
  auto power = [&](GeneratorId g, int e) {
    for (int i = 0; i < std::abs(e); ++i) out.push_back({g, e > 0 ? 1 : -1});
  };
  power(d.a, d.ijk.J);
  power(d.c, d.E);
  power(d.b, d.ijk.K);
  return out.append(d.beta);
}

enum class CriticalKind { TwoGen, P2G, P3G };

inline const char* to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::TwoGen: return "2gen";
    case CriticalKind::P2G: return "p2g";
    case CriticalKind::P3G: return "p3g";
  }
  return "?";
}

// The criticality type the procedure works with: P2G of type {a,b}, or P3G
// of type (a,b,c) whose primary pseudo-generators are {b,c}.
struct CriticalType {
  bool p3g = false;
  GeneratorId a, b, c;

  static CriticalType pair(GeneratorId x, GeneratorId y) { return {false, x, y, {}}; }
  static CriticalType triple(GeneratorId a, GeneratorId b, GeneratorId c) { return {true, a, b, c}; }

  // The pseudo-generators P of the type.
  std::pair<GeneratorId, GeneratorId> primary() const { return p3g ? std::pair{b, c} : std::pair{a, b}; }
  bool in_primary(GeneratorId g) const {
    auto [x, y] = primary();
    return g == x || g == y;
  }
  bool operator==(const CriticalType& o) const {
    if (p3g != o.p3g) return false;
    if (p3g) return a == o.a && b == o.b && c == o.c;
    return (a == o.a && b == o.b) || (a == o.b && b == o.a);
  }
};

struct CriticalWord {
  Word u;
  std::variant<P2GData, P3GData> data;

  bool is_p3g() const { return std::holds_alternative<P3GData>(data); }
  const P2GData& p2g() const { return std::get<P2GData>(data); }
  const P3GData& p3g() const { return std::get<P3GData>(data); }

  CriticalKind kind() const {
    if (is_p3g()) return CriticalKind::P3G;
    const auto& d = p2g();
    return d.alpha.empty() && d.rho.empty() && d.beta.empty() && d.hat.size() == u.size() ? CriticalKind::TwoGen
                                                                                             : CriticalKind::P2G;
  }
  CriticalType type() const {
    if (is_p3g()) return CriticalType::triple(p3g().a, p3g().b, p3g().c);
    return CriticalType::pair(p2g().a, p2g().b);
  }
  const Word& beta() const { return is_p3g() ? p3g().beta : p2g().beta; }

  Word tau(const Presentation& pres) const { return is_p3g() ? tau_p3g(p3g(), pres) : tau_p2g(p2g(), pres); }

  // The part of tau(u) passed on to the next word of an RRS:
  // l(tau(u-hat)) beta for P2G words, c^E b^K beta for P3G words.
  Word carry(const Presentation& pres) const {
    Word out;
    if (is_p3g()) {
      const auto& d = p3g();
      out.push_back({d.c, d.E});
      for (int i = 0; i < std::abs(d.ijk.K); ++i) out.push_back({d.b, d.ijk.K > 0 ? 1 : -1});
    } else {
      out.push_back(tau_hat(p2g(), pres).back());
    }
    return out.append(beta());
  }
};

inline std::optional<CriticalWord> classify_as(std::span<const Letter> u, const CriticalType& t,
                                               const Presentation& pres) {
  if (u.empty() || !is_freely_reduced(u)) return std::nullopt;
  if (t.p3g) {
    auto d = p3g_factor_critical(u, t.a, t.b, t.c, pres);
    if (!d) return std::nullopt;
    return CriticalWord{Word(u.begin(), u.end()), std::move(*d)};
  }
  auto d = p2g_factor(u, t.a, t.b, pres);
  if (!d || !d->critical()) return std::nullopt;
  return CriticalWord{Word(u.begin(), u.end()), std::move(*d)};
}
inline std::optional<CriticalWord> classify_as(const Word& u, const CriticalType& t, const Presentation& pres) {
  return classify_as(u.view(), t, pres);
}

// Determines the (unique) criticality type of u, if any.
inline std::optional<CriticalWord> classify_critical(std::span<const Letter> u, const Presentation& pres) {
  if (u.empty() || !is_freely_reduced(u)) return std::nullopt;
  if (auto d = is_p2g_critical(u, pres)) return CriticalWord{Word(u.begin(), u.end()), std::move(*d)};

  GeneratorId f = u.front().name, a = u.back().name;
  if (f == a) return std::nullopt;
  auto k = detail::first_noncommuting(u, f, pres);
  if (!k) return std::nullopt;
  GeneratorId y = u[*k].name;
  if (y == a) return std::nullopt;
  auto fit = [&](GeneratorId b, GeneratorId c) {
    return pres.m(a, b).equals(3) && pres.m(a, c).equals(2) && pres.m(b, c).is_finite() && pres.m(b, c).value() >= 5;
  };
  if (fit(f, y)) return classify_as(u, CriticalType::triple(a, f, y), pres);
  if (fit(y, f)) return classify_as(u, CriticalType::triple(a, y, f), pres);
  return std::nullopt;
}
inline std::optional<CriticalWord> classify_critical(const Word& u, const Presentation& pres) {
  return classify_critical(u.view(), pres);
}

}  // namespace artin
