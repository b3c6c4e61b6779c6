#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "artin/pseudo.hpp"

namespace artin {

// Cut points c_0 <= c_1 <= ... <= c_{m+1} of a host word w:
//   mu = w[0,c_0), w_i = w[c_{i-1},c_i), w_{m+1} = w[c_m,c_{m+1}), gamma = w[c_{m+1},|w|).
struct Decomposition {
  std::vector<std::size_t> cuts;
  std::size_t m() const { return cuts.size() - 2; }
  bool operator==(const Decomposition&) const = default;
};

struct Rrs {
  Decomposition decomposition;
  std::vector<CriticalWord> u;  // u_1 .. u_m
  Word tail;                    // u_{m+1}

  std::size_t m() const { return u.size(); }
  // P_i for 1 <= i <= m.
  std::pair<GeneratorId, GeneratorId> pseudo(std::size_t i) const { return u[i - 1].type().primary(); }
};

struct RrsCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
  static RrsCheck fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline bool same_critical(const CriticalWord& x, const CriticalWord& y, const Presentation& p) {
  return x.u == y.u && x.type() == y.type() && x.tau(p) == y.tau(p) && x.carry(p) == y.carry(p);
}

inline bool type_is_valid(const CriticalType& t, const Presentation& p) {
  auto [x, y] = t.primary();
  if (x == y || !p.m(x, y).is_finite() || p.m(x, y).value() < 3) return false;
  if (!t.p3g) return true;
  if (t.a == t.b || t.a == t.c) return false;
  return p.m(t.a, t.b).equals(3) && p.m(t.a, t.c).equals(2) && p.m(t.b, t.c).value() >= 5;
}

inline std::optional<CriticalWord> classify_checked(std::span<const Letter> u, const CriticalType& t,
                                                    const Presentation& p) {
  if (!type_is_valid(t, p)) return std::nullopt;
  return classify_as(u, t, p);
}

}  // namespace detail

inline RrsCheck validate_rrs(const Word& w, const Rrs& r, const Presentation& pres) {
  const auto& c = r.decomposition.cuts;
  if (c.size() < 2) return RrsCheck::fail("decomposition needs at least two cut points");
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] < c[i - 1]) return RrsCheck::fail("cut points are not monotone");
  if (c.back() >= w.size()) return RrsCheck::fail("gamma is empty or cut point out of range");
  const std::size_t m = r.decomposition.m();
  if (r.u.size() != m) return RrsCheck::fail("number of critical words differs from decomposition length");
  for (std::size_t i = 1; i <= m; ++i)
    if (c[i] == c[i - 1]) return RrsCheck::fail("w_" + std::to_string(i) + " is empty");

  Word carry;
  for (std::size_t i = 1; i <= m; ++i) {
    Word ui = carry;
    ui.append(w.view().subspan(c[i - 1], c[i] - c[i - 1]));
    const auto& stored = r.u[i - 1];
    if (stored.u != ui) return RrsCheck::fail("u_" + std::to_string(i) + " does not match its rebuilt value");
    auto cw = detail::classify_checked(ui.view(), stored.type(), pres);
    if (!cw) return RrsCheck::fail("u_" + std::to_string(i) + " is not critical of its recorded type");
    if (!detail::same_critical(*cw, stored, pres))
      return RrsCheck::fail("u_" + std::to_string(i) + " critical data differs from recomputation");
    carry = cw->carry(pres);
  }
  Word tail = carry;
  tail.append(w.view().subspan(c[m], c[m + 1] - c[m]));
  if (tail != r.tail) return RrsCheck::fail("u_{m+1} does not match its rebuilt value");
  if (tail.empty()) return RrsCheck::fail("u_{m+1} is empty");
  if (tail.front() != w[c[m + 1]].inverse()) return RrsCheck::fail("first letter of u_{m+1} is not f(gamma)^-1");
  for (std::size_t k = 1; k < tail.size(); ++k)
    if (!pres.commutes(tail[k].name, tail.front().name))
      return RrsCheck::fail("letter " + std::to_string(k) + " of u_{m+1} does not commute with its first letter");
  return {};
}

// The structural facts every RRS satisfies; asserted on engine output.
inline RrsCheck check_rrs_details(const Rrs& r) {
  const std::size_t m = r.m();
  if (m == 0) return {};
  if (r.u[m - 1].is_p3g()) return RrsCheck::fail("u_m is P3G-critical");
  if (!r.u[m - 1].beta().empty()) return RrsCheck::fail("beta_m is not empty");
  for (std::size_t i = 2; i <= m; ++i) {
    const auto& prev = r.u[i - 2];
    const auto& cur = r.u[i - 1];
    auto [x, y] = r.pseudo(i - 1);
    auto [z, t] = r.pseudo(i);
    int common = (x == z || x == t) + (y == z || y == t);
    std::string at = "i=" + std::to_string(i) + ": ";
    const Word& cur_alpha = cur.is_p3g() ? cur.p3g().alpha : cur.p2g().alpha;
    if (syllables(prev.beta()).size() > 2) return RrsCheck::fail(at + "beta_{i-1} has more than two syllables");
    if (!prev.is_p3g()) {
      if (common == 0) return RrsCheck::fail(at + "P_i and P_{i-1} are disjoint");
      if (!prev.beta().empty()) {
        if (!cur_alpha.empty()) return RrsCheck::fail(at + "beta_{i-1} nonempty but alpha_i nonempty");
        if (common != 1) return RrsCheck::fail(at + "beta_{i-1} nonempty but |P_i & P_{i-1}| != 1");
      }
    } else {
      if (!cur_alpha.empty()) return RrsCheck::fail(at + "alpha_i nonempty after a P3G word");
      if (common != 2) return RrsCheck::fail(at + "P_i differs from P_{i-1} after a P3G word");
    }
  }
  return {};
}

inline Word apply_rrs(const Word& w, const Rrs& r, const Presentation& pres) {
  if (auto ok = validate_rrs(w, r, pres); !ok) throw std::invalid_argument("apply_rrs: " + ok.diagnostic);
  const auto& c = r.decomposition.cuts;
  Word out = w.prefix(c[0]);
  out.reserve(w.size());
  for (const auto& cw : r.u) {
    Word t = cw.tau(pres);
    std::size_t keep = t.size() - cw.carry(pres).size();
    out.append(t.view().subspan(0, keep));
  }
  // u_{m+1} -> s[u_{m+1}] f[u_{m+1}], whose last letter cancels f(gamma).
  out.append(r.tail.view().subspan(1));
  out.append(w.view().subspan(c.back() + 1));
  return out;
}

inline RrsCheck optimality_clauses(const Word& w, const Rrs& r, const Presentation& pres) {
  const auto& c = r.decomposition.cuts;
  const std::size_t m = r.m();
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t b = c[i], e = c[i + 1];
    if (b < e && r.u[i - 1].tau(pres).back() == w[b].inverse())
      return RrsCheck::fail("condition (ii): l(tau(u_" + std::to_string(i) + ")) cancels f(w_" +
                            std::to_string(i + 1) + ")");
  }
  Letter g = w[c[m + 1]];
  for (std::size_t k = c[m]; k < c[m + 1]; ++k)
    if (w[k] == g) return RrsCheck::fail("condition (ii): f(gamma) occurs in w_{m+1}");
  for (std::size_t i = 2; i <= m; ++i) {
    const auto& prev = r.u[i - 2];
    if (prev.is_p3g()) continue;
    auto [x, y] = r.pseudo(i - 1);
    const auto& cur = r.u[i - 1];
    const Word& alpha = cur.is_p3g() ? cur.p3g().alpha : cur.p2g().alpha;
    bool commute = std::all_of(alpha.begin(), alpha.end(), [&](Letter l) {
      return pres.commutes(l.name, x) && pres.commutes(l.name, y);
    });
    if (!commute) continue;
    auto [z, t] = r.pseudo(i);
    int common = (x == z || x == t) + (y == z || y == t);
    if (common != 1) return RrsCheck::fail("condition (iii) fails at i=" + std::to_string(i));
  }
  return {};
}

// One step record of the search procedure.
struct TraceRecord {
  std::size_t step = 0;
  int case_no = 1;
  char subcase = '?';
  std::optional<std::size_t> d, dl, dr;
  CriticalType type;        // type decided by this step
  std::size_t word = 0;     // index i of the word u_i whose type was decided
};

struct Trace {
  std::vector<TraceRecord> steps;
  std::vector<std::pair<CriticalKind, CriticalType>> words;  // kind and type of u_1 .. u_m
  std::optional<Decomposition> result;
};

inline std::string format_type(const CriticalType& t, const Presentation& p) {
  if (t.p3g) return "(" + p.name(t.a) + "," + p.name(t.b) + "," + p.name(t.c) + ")";
  auto [x, y] = t.primary();
  return "{" + p.name(x) + "," + p.name(y) + "}";
}

// One line per procedure step, then one line per u_i of the result, then the
// cut points.
inline std::string format_trace(const Trace& t, const Presentation& p) {
  std::ostringstream out;
  auto idx = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const auto& r : t.steps) {
    out << "step=" << r.step << " case=" << r.case_no << " subcase=" << r.subcase << " d=" << idx(r.d)
        << " dl=" << idx(r.dl) << " dr=" << idx(r.dr) << " u=" << r.word << " type=" << format_type(r.type, p)
        << '\n';
  }
  for (std::size_t i = 0; i < t.words.size(); ++i)
    out << "u" << i + 1 << ' ' << to_string(t.words[i].first) << ' ' << format_type(t.words[i].second, p) << '\n';
  if (t.result) {
    out << "cuts=";
    for (std::size_t i = 0; i < t.result->cuts.size(); ++i) out << (i ? "," : "") << t.result->cuts[i];
    out << '\n';
  }
  return out.str();
}

enum class SuffixSearchMode { Reference, Memoized };

// Finds the shortest suffix of w[0,R) that is critical of a given type. The
// memoized mode remembers, per (R, type), how far down the scan has gone.
class SuffixSearch {
 public:
  explicit SuffixSearch(SuffixSearchMode mode = SuffixSearchMode::Reference) : mode_(mode) {}

  SuffixSearchMode mode() const { return mode_; }

  // Largest s in [min_start, R) with w[s,R) critical of type t.
  std::optional<std::size_t> find(const Word& w, std::size_t R, const CriticalType& t, std::size_t min_start,
                                  const Presentation& p) {
    if (R == 0 || min_start >= R) return std::nullopt;
    if (mode_ == SuffixSearchMode::Reference) return scan(w, R, t, R, min_start, p);
    auto& e = cache_.try_emplace(key(R, t), Entry{R, std::nullopt}).first->second;
    if (e.best) return *e.best >= min_start ? e.best : std::nullopt;
    if (e.low <= min_start) return std::nullopt;
    e.best = scan(w, R, t, e.low, min_start, p);
    e.low = e.best ? *e.best : min_start;
    return e.best;
  }

  // The host word changed at positions >= pos.
  void invalidate_from(std::size_t pos) {
    cache_.erase(cache_.lower_bound(std::tuple{pos + 1, false, 0, 0, 0}), cache_.end());
  }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  using Key = std::tuple<std::size_t, bool, int, int, int>;
  struct Entry {
    std::size_t low;  // starts in [low, R) have been tested
    std::optional<std::size_t> best;
  };

  static Key key(std::size_t R, const CriticalType& t) {
    if (t.p3g) return {R, true, t.a.index, t.b.index, t.c.index};
    return {R, false, std::min(t.a.index, t.b.index), std::max(t.a.index, t.b.index), 0};
  }

  // Tests starts from hi-1 down to lo.
  static std::optional<std::size_t> scan(const Word& w, std::size_t R, const CriticalType& t, std::size_t hi,
                                         std::size_t lo, const Presentation& p) {
    if (!detail::type_is_valid(t, p)) return std::nullopt;
    for (std::size_t s = hi; s-- > lo;) {
      if (!t.in_primary(w[s].name)) continue;
      if (classify_as(w.view().subspan(s, R - s), t, p)) return s;
    }
    return std::nullopt;
  }

  SuffixSearchMode mode_;
  std::map<Key, Entry> cache_;
};

namespace detail {

class OptimalSearch {
 public:
  OptimalSearch(const Word& w, Letter x, const Presentation& p, SuffixSearch& search, Trace* trace)
      : w_(w), x_(x), p_(p), search_(search), trace_(trace) {}

  std::optional<Rrs> run() {
    const std::size_t n = w_.size();
    std::size_t j = n;
    while (j > 0 && w_[j - 1] != x_.inverse() && p_.commutes(w_[j - 1].name, x_.name)) --j;
    for (std::size_t k = j; k < n; ++k)
      if (w_[k] == x_) return std::nullopt;
    if (j == 0) return std::nullopt;
    Word full = w_ + x_;
    if (w_[j - 1] == x_.inverse()) {
      Rrs r{{{j - 1, n}}, {}, w_.suffix_from(j - 1)};
      if (trace_) trace_->result = r.decomposition;
      return r;
    }

    struct Found {
      CriticalType type;
      std::size_t R;
    };
    std::vector<Found> found;
    Found cur{CriticalType::pair(x_.name, w_[j - 1].name), j};
    std::size_t left = 0;
    for (std::size_t step = 2;; ++step) {
      Outcome o = cur.type.p3g ? case2(cur.type, cur.R) : case1(cur.type, cur.R);
      o.rec.step = step;
      o.rec.case_no = cur.type.p3g ? 2 : 1;
      o.rec.type = o.type;
      records_.push_back(o.rec);
      if (o.kind == Outcome::Fail) return std::nullopt;
      found.push_back(cur);
      if (o.kind == Outcome::Done) {
        left = o.left;
        break;
      }
      if (o.R == 0 || o.R >= cur.R) return std::nullopt;
      cur = {o.type, o.R};
      if (o.kind == Outcome::NextThenDone) {
        found.push_back(cur);
        left = o.left;
        break;
      }
    }
    if (left >= found.back().R) return std::nullopt;

    // Checking: rebuild u_1 .. u_m left to right.
    const std::size_t m = found.size();
    Rrs r;
    r.decomposition.cuts.push_back(left);
    for (std::size_t i = m; i-- > 0;) r.decomposition.cuts.push_back(found[i].R);
    r.decomposition.cuts.push_back(n);
    const auto& c = r.decomposition.cuts;
    Word carry;
    for (std::size_t i = 1; i <= m; ++i) {
      Word ui = carry;
      ui.append(w_.view().subspan(c[i - 1], c[i] - c[i - 1]));
      auto cw = classify_checked(ui.view(), found[m - i].type, p_);
      if (!cw) return std::nullopt;
      carry = cw->carry(p_);
      r.u.push_back(std::move(*cw));
    }
    if (r.u.back().is_p3g() || carry.front() != x_.inverse()) return std::nullopt;
    r.tail = carry;
    r.tail.append(w_.view().subspan(c[m], n - c[m]));
    if (!validate_rrs(full, r, p_)) return std::nullopt;
    if (auto det = check_rrs_details(r); !det)
      throw std::logic_error("search produced an RRS violating structural facts: " + det.diagnostic);

    if (trace_) {
      for (std::size_t k = 0; k < records_.size(); ++k) {
        auto& rec = records_[k];
        std::size_t i = m + 2 - rec.step;
        rec.word = (rec.subcase == 'b' || rec.subcase == 'd') ? i : i - 1;
        trace_->steps.push_back(rec);
      }
      for (const auto& cw : r.u) trace_->words.emplace_back(cw.kind(), cw.type());
      trace_->result = r.decomposition;
    }
    return r;
  }

 private:
  struct Outcome {
    enum Kind { Fail, Next, Done, NextThenDone } kind = Fail;
    std::size_t R = 0;
    CriticalType type;
    std::size_t left = 0;
    TraceRecord rec;
  };

  Outcome fail(TraceRecord rec = {}) { return {Outcome::Fail, 0, {}, 0, rec}; }

  Outcome case1(const CriticalType& T, std::size_t R) {
    auto [g1, g2] = T.primary();
    TraceRecord rec;
    GeneratorId tn = w_[R - 1].name;
    if (tn != g1 && tn != g2) return fail(rec);
    GeneratorId sn = tn == g1 ? g2 : g1;
    bool seen1 = false, seen2 = false;
    std::optional<std::size_t> d;
    for (std::size_t k = R; k-- > 0;) {
      GeneratorId g = w_[k].name;
      if (g == g1 || g == g2) {
        (g == g1 ? seen1 : seen2) = true;
        continue;
      }
      if (!(seen1 && seen2)) {
        if (!p_.commutes(g, tn) && p_.commutes(g, sn)) {
          rec.subcase = 'a';
          rec.d = k;
          return {Outcome::Next, k + 1, CriticalType::pair(tn, g), 0, rec};
        }
        continue;
      }
      if (!(p_.commutes(g, g1) && p_.commutes(g, g2))) {
        d = k;
        break;
      }
    }
    if (!(seen1 && seen2)) return fail(rec);
    rec.d = d;
    if (auto s = search_.find(w_, R, T, d ? *d + 1 : 0, p_)) {
      rec.subcase = 'b';
      return {Outcome::Done, 0, T, *s, rec};
    }
    if (!d) return fail(rec);
    return after_d(T, R, *d, rec);
  }

  Outcome case2(const CriticalType& T, std::size_t R) {
    const GeneratorId b1 = T.b, c1 = T.c;
    TraceRecord rec;
    const GeneratorId want[3] = {b1, c1, b1};
    int phase = 0;
    std::size_t k = R;
    while (k > 0 && phase < 3) {
      --k;
      GeneratorId g = w_[k].name;
      if (g == want[phase]) {
        ++phase;
        continue;
      }
      if (g != b1 && g != c1 && p_.m(b1, g).equals(2) && p_.m(c1, g).equals(3)) {
        rec.subcase = 'a';
        rec.d = k;
        return {Outcome::Next, k + 1, CriticalType::triple(g, c1, b1), 0, rec};
      }
    }
    if (phase < 3) return fail(rec);
    std::optional<std::size_t> d;
    for (std::size_t q = k; q-- > 0;) {
      GeneratorId g = w_[q].name;
      if (g == b1 || g == c1) continue;
      if (!(p_.commutes(g, b1) && p_.commutes(g, c1))) {
        d = q;
        break;
      }
    }
    rec.d = d;
    if (auto s = search_.find(w_, R, T, d ? *d + 1 : 0, p_)) {
      rec.subcase = 'b';
      return {Outcome::Done, 0, T, *s, rec};
    }
    if (!d) return fail(rec);
    return after_d(T, R, *d, rec);
  }

  // Subcases (c) to (g), shared by both cases.
  Outcome after_d(const CriticalType& T, std::size_t R, std::size_t kd, TraceRecord rec) {
    auto [g1, g2] = T.primary();
    const GeneratorId A = w_[kd].name;
    std::size_t dr = kd + 1;
    while (dr < R && !T.in_primary(w_[dr].name)) ++dr;
    if (dr == R) return fail(rec);
    rec.dr = dr;
    const bool c1 = p_.commutes(A, g1), c2 = p_.commutes(A, g2);
    if (!c1 && !c2) {
      rec.subcase = 'c';
      GeneratorId keep = w_[dr].name == g1 ? g2 : g1;
      return {Outcome::Next, kd + 1, CriticalType::pair(A, keep), 0, rec};
    }
    const GeneratorId s = c1 ? g1 : g2, t = c1 ? g2 : g1;
    const GeneratorId a = A, b = t, c = s;

    auto fg = [&](TraceRecord r) -> Outcome {
      if (!p_.m(b, c).at_least(5) || !p_.m(a, b).equals(3)) {
        r.subcase = 'f';
        return {Outcome::Next, kd + 1, CriticalType::pair(a, b), 0, r};
      }
      auto u1 = search_.find(w_, kd + 1, CriticalType::pair(a, b), 0, p_);
      if (!u1) {
        r.subcase = 'f';
        return {Outcome::Next, kd + 1, CriticalType::pair(a, b), 0, r};
      }
      auto cw1 = classify_as(w_.view().subspan(*u1, kd + 1 - *u1), CriticalType::pair(a, b), p_);
      Word u2 = cw1->carry(p_);
      u2.append(w_.view().subspan(kd + 1, R - kd - 1));
      if (classify_checked(u2.view(), T, p_)) {
        r.subcase = 'f';
        return {Outcome::NextThenDone, kd + 1, CriticalType::pair(a, b), *u1, r};
      }
      r.subcase = 'g';
      return {Outcome::Next, kd + 1, CriticalType::triple(a, b, c), 0, r};
    };

    if (w_[dr].name == s) return fg(rec);

    std::optional<std::size_t> dl;
    for (std::size_t k = kd; k-- > 0;) {
      GeneratorId g = w_[k].name;
      if (g == s || !p_.commutes(g, s)) {
        dl = k;
        break;
      }
    }
    if (!dl) return fail(rec);
    rec.dl = dl;
    const GeneratorId dln = w_[*dl].name;
    if (dln == s) {
      if (classify_checked(w_.view().subspan(*dl, R - *dl), T, p_)) {
        rec.subcase = 'd';
        return {Outcome::Done, 0, T, *dl, rec};
      }
      return fg(rec);
    }
    auto subcase_e = [&]() -> Outcome {
      rec.subcase = 'e';
      return {Outcome::Next, *dl + 1, CriticalType::pair(dln, s), 0, rec};
    };
    if (dln != b || !p_.m(a, b).equals(3) || !p_.m(b, c).at_least(5)) return subcase_e();
    bool found_c = false;
    for (std::size_t k = *dl; k-- > 0;) {
      GeneratorId g = w_[k].name;
      if (g == a) {
        rec.subcase = 'g';
        return {Outcome::Next, kd + 1, CriticalType::triple(a, b, c), 0, rec};
      }
      if (!found_c && g == c)
        found_c = true;
      else if (found_c && g == b)
        return subcase_e();
    }
    return fail(rec);
  }

  const Word& w_;
  Letter x_;
  const Presentation& p_;
  SuffixSearch& search_;
  Trace* trace_;
  std::vector<TraceRecord> records_;
};

}  // namespace detail

// The unique optimal RRS of w x for w in W, or nothing when w x is in W.
inline std::optional<Rrs> find_optimal_rrs(const Word& w, Letter x, const Presentation& p, SuffixSearch& search,
                                           Trace* trace = nullptr) {
  return detail::OptimalSearch(w, x, p, search, trace).run();
}

inline std::optional<Rrs> find_optimal_rrs(const Word& w, Letter x, const Presentation& p, Trace* trace = nullptr) {
  require_a3b3_free(p);
  SuffixSearch search;
  return find_optimal_rrs(w, x, p, search, trace);
}

struct ReducerStats {
  std::size_t letters = 0;
  std::size_t rrs_applications = 0;
  std::size_t tau_moves = 0;
};

// Holds a word of W together with the search cache for its prefixes.
class ReducerState {
 public:
  explicit ReducerState(const Presentation& p, SuffixSearchMode mode = SuffixSearchMode::Reference)
      : pres_(&p), search_(mode) {
    require_a3b3_free(p);
  }

  const Word& current() const { return current_; }
  const ReducerStats& stats() const { return stats_; }
  const Presentation& presentation() const { return *pres_; }

  // Trace of the most recent append, if tracing is enabled.
  void enable_trace(bool on) { tracing_ = on; }
  const Trace& last_trace() const { return last_trace_; }

  void push(Letter x) {
    ++stats_.letters;
    last_trace_ = {};
    auto r = find_optimal_rrs(current_, x, *pres_, search_, tracing_ ? &last_trace_ : nullptr);
    if (!r) {
      current_.push_back(x);
      return;
    }
    ++stats_.rrs_applications;
    stats_.tau_moves += r->m();
    current_.push_back(x);
    current_ = apply_rrs(current_, *r, *pres_);
    search_.invalidate_from(r->decomposition.cuts.front());
  }

 private:
  const Presentation* pres_;
  Word current_;
  ReducerStats stats_;
  SuffixSearch search_;
  bool tracing_ = false;
  Trace last_trace_;
};

inline ReducerState append_reduce(ReducerState state, Letter x) {
  state.push(x);
  return state;
}

inline Word reduce(const Word& w, const Presentation& p, SuffixSearchMode mode = SuffixSearchMode::Reference) {
  ReducerState s(p, mode);
  for (Letter l : w) s.push(l);
  return s.current();
}

inline bool is_geodesic(const Word& w, const Presentation& p) { return reduce(w, p).size() == w.size(); }

inline bool equal(const Word& u, const Word& v, const Presentation& p) { return reduce(u + v.inverse(), p).empty(); }

}  // namespace artin
