// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "artin/oracle.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace artin;
using namespace artin::fixtures;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Letter pos(const Presentation& p, const char* n) { return Letter::pos(*p.find(n)); }

// 1. tau of the four example words.
Result golden_tau() {
  auto p = abc(3, 2, 4);
  W w{p};
  struct Case {
    const char* u;
    const char* tau;
  } cases[] = {{"a b^5 a^-1", "b^-1 a^5 b"},
               {"b c^2 b c b^-1 c^-1", "c^-1 b^-1 c b c^2 b"},
               {"a c b^5 c^-1 a^-1", "c b^-1 a^5 b c^-1"},
               {"b c^2 b c b^-1 a^2 c^-1", "c^-1 b^-1 c b c^2 b a^2"}};
  Result r;
  int ok = 0;
  for (const auto& c : cases) {
    auto cw = classify_critical(w(c.u), p);
    std::string got = cw ? format_word(cw->tau(p), p) : "not critical";
    if (cw && cw->tau(p) == w(c.tau)) {
      ++ok;
    } else {
      r.pass = false;
      r.detail += std::string(" [") + c.u + ": got " + got + ", want " + c.tau + "]";
    }
  }
  r.detail = std::to_string(ok) + "/4 match" + r.detail;
  return r;
}

Word bc_ending(const Presentation& p, std::size_t k) {
  return alternating(pos(p, "b"), pos(p, "c"), k, Anchor::EndsWith);
}

// 2. (b,c)_{n-1} aba is (a,b,c)-critical with I=J=K=1.
Result golden_p3g() {
  Result r;
  for (int n : {5, 6, 7}) {
    auto p = abc(3, 2, n);
    Word u = bc_ending(p, n - 1) + parse_word("a b a", p);
    Word want = alternating(pos(p, "c"), pos(p, "b"), n - 1, Anchor::EndsWith) + parse_word("a c b", p);
    auto cw = classify_critical(u, p);
    bool ok = cw && cw->is_p3g() && cw->p3g().ijk == AbcExponents{1, 1, 1} && cw->tau(p) == want;
    r.pass = r.pass && ok;
    r.detail += " n=" + std::to_string(n) + (ok ? " ok" : " mismatch (" + (cw ? format_word(cw->tau(p), p) : "not critical") + ")");
  }
  return r;
}

// 3. The example word reduces by two letters to the expected element.
Result golden_reduction() {
  Result r;
  for (int n : {5, 6}) {
    auto p = abc(3, 2, n);
    Word w = bc_ending(p, n - 1) + parse_word("a b a", p) +
             alternating(pos(p, "c"), pos(p, "b"), n - 2, Anchor::StartsWith);
    Word nbc = alternating(pos(p, "b"), pos(p, "c"), n, Anchor::StartsWith);
    w.push_back(nbc.back().inverse());
    Word got = reduce(w, p);
    Word want = alternating(pos(p, "c"), pos(p, "b"), n - 1, Anchor::EndsWith) + pos(p, "a") + nbc.prefix(n - 1);
    auto v = bfs_equal(got, want, p, std::max(got.size(), want.size()) + 4);
    bool ok = got.size() + 2 == w.size() && v.equal();
    r.pass = r.pass && ok;
    r.detail += " n=" + std::to_string(n) + " " + std::to_string(w.size()) + "->" + std::to_string(got.size()) +
                " oracle=" + to_string(v.outcome);
  }
  return r;
}

// 4. Under m(b,c)=4 (a B3 diagram) one word has the expected RRS and an equal
// word has none.
Result b3_necessity() {
  auto p = abc(3, 2, 4);
  W w{p};
  Word u = w("b a b c b c a b c b^-1"), v = w("b a c b c b a b c b^-1");
  auto ru = enumerate_rrs(u, p), rv = enumerate_rrs(v, p);
  Decomposition expected{{0, 3, 7, 9, 9}};
  bool found = std::any_of(ru.begin(), ru.end(), [&](const Rrs& r) {
    return r.decomposition == expected && r.m() == 3 && r.u[1].u == w("a c b c a") && r.u[2].u == w("b c b c");
  });
  auto eq = bfs_equal(u, v, p, u.size() + 4);
  Result r;
  r.pass = found && rv.empty() && eq.equal();
  r.detail = std::string("length-3 RRS ") + (found ? "found" : "missing") + ", second word has " +
             std::to_string(rv.size()) + " RRSs, oracle=" + to_string(eq.outcome);
  return r;
}

// 5. is_geodesic against brute force on every reduced word of length <= 7.
Result geodesics_exhaustive() {
  struct Named {
    std::string name;
    Presentation p;
  };
  std::vector<Named> pres = {{"(3,2,5)", abc(3, 2, 5)},   {"(3,2,6)", abc(3, 2, 6)}, {"(3,2,inf)", abc(3, 2, 0)},
                             {"I2(5)", dihedral(5)},      {"raag3", abc(2, 2, 2)}};
  const std::size_t radius = 7;
  Result r;
  for (auto& [name, p] : pres) {
    auto t0 = Clock::now();
    GeodesicTable table(p, radius);
    std::size_t words = 0, fallback = 0, wrong = 0, undecided = 0;
    Word cur;
    auto names = all_names(p);
    std::function<void()> rec = [&] {
      ++words;
      bool g = is_geodesic(cur, p);
      auto v = table.verdict(cur);
      std::optional<std::size_t> len;
      if (v.exact()) {
        len = v.lower;
      } else {
        ++fallback;
        auto b = bfs_geodesic_length(cur, p);
        if (b.stabilized && !b.exhausted) len = b.length;
      }
      if (!len)
        ++undecided;
      else if (g != (*len == cur.size()))
        ++wrong;
      if (cur.size() == radius) return;
      for (auto n : names)
        for (int s : {1, -1}) {
          Letter l{n, s};
          if (!cur.empty() && cancels(cur.back(), l)) continue;
          cur.push_back(l);
          rec();
          cur.pop_back();
        }
    };
    rec();
    bool ok = wrong == 0 && undecided == 0;
    r.pass = r.pass && ok;
    std::ostringstream d;
    d << ' ' << name << ": " << words << " words, " << wrong << " wrong, " << undecided << " undecided, " << fallback
      << " by bfs, " << std::fixed << std::setprecision(0) << seconds_since(t0) << "s;";
    r.detail += d.str();
  }
  return r;
}

// 6. Exhaustive RRS enumeration agrees with the search on every (w, x).
Result unique_optimal() {
  auto p = abc(3, 2, 5);
  const std::size_t max_len = 10;
  std::vector<Letter> alphabet;
  for (auto n : all_names(p)) alphabet.insert(alphabet.end(), {Letter::pos(n), Letter::neg(n)});
  RrsEnumerator e(p);
  std::size_t pairs = 0, with_rrs = 0, multiple = 0, mismatch = 0;
  std::string first_bad;
  std::function<void()> dfs = [&] {
    const Word& w = e.word();
    for (Letter x : alphabet) {
      if (!w.empty() && cancels(w.back(), x)) continue;
      ++pairs;
      auto all = e.with_last(x);
      auto opt = optimal_among(w + x, all, p);
      auto got = find_optimal_rrs(w, x, p);
      if (opt.size() > 1) ++multiple;
      bool same = opt.empty() ? !got
                              : got && got->decomposition == opt.front().decomposition && got->tail == opt.front().tail;
      if (!same) {
        ++mismatch;
        if (first_bad.empty()) first_bad = " first mismatch at " + format_word(w + x, p);
      }
      if (!opt.empty()) ++with_rrs;
      if (all.empty() && w.size() + 1 < max_len) {
        e.push(x);
        dfs();
        e.pop();
      }
    }
  };
  dfs();
  Result r;
  r.pass = multiple == 0 && mismatch == 0;
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(with_rrs) + " with an RRS, " +
             std::to_string(multiple) + " with several optimal, " + std::to_string(mismatch) + " mismatches" +
             first_bad;
  return r;
}

// 7. Commuting letters and braid relations appended to words of W.
Result exchange() {
  struct Named {
    std::string name;
    Presentation p;
  };
  std::vector<Named> pres = {{"(3,2,5)", abc(3, 2, 5)},   {"(3,2,6)", abc(3, 2, 6)}, {"(3,2,inf)", abc(3, 2, 0)},
                             {"I2(5)", dihedral(5)},      {"raag3", abc(2, 2, 2)}};
  std::mt19937_64 rng(7);
  Result r;
  for (auto& [name, p] : pres) {
    auto names = all_names(p);
    std::vector<std::pair<GeneratorId, GeneratorId>> commuting, braided;
    for (auto x : names)
      for (auto y : names) {
        if (x.index >= y.index) continue;
        if (p.m(x, y).equals(2)) commuting.push_back({x, y});
        if (p.m(x, y).is_finite()) braided.push_back({x, y});
      }
    std::size_t checks = 0, bad = 0;
    auto agree = [&](const Word& u, const Word& v) {
      ++checks;
      Word ru = reduce(u, p), rv = reduce(v, p);
      if (ru.size() != rv.size()) return false;
      return bfs_equal(ru, rv, p, ru.size() + 6).equal();
    };
    std::uniform_int_distribution<int> len(0, 10), sign(0, 1);
    for (int t = 0; t < 1000; ++t) {
      Word w = reduce(random_reduced(rng, names, static_cast<std::size_t>(len(rng))), p);
      if (!commuting.empty()) {
        auto [x, y] = commuting[std::uniform_int_distribution<std::size_t>(0, commuting.size() - 1)(rng)];
        Letter e{x, sign(rng) ? 1 : -1}, f{y, sign(rng) ? 1 : -1};
        if (!agree(w + e + f, w + f + e)) ++bad;
      }
      auto [s, u] = braided[std::uniform_int_distribution<std::size_t>(0, braided.size() - 1)(rng)];
      int e = sign(rng) ? 1 : -1;
      std::size_t n = static_cast<std::size_t>(p.m(s, u).value());
      if (!agree(w + alternating({s, e}, {u, e}, n, Anchor::StartsWith),
                 w + alternating({u, e}, {s, e}, n, Anchor::StartsWith)))
        ++bad;
    }
    r.pass = r.pass && bad == 0;
    r.detail += " " + name + ": " + std::to_string(checks) + " checks, " + std::to_string(bad) + " failed;";
  }
  return r;
}

// 8. Time per reduction against word length in memoized mode.
Result quadratic_scaling() {
  auto p = abc(3, 2, 5);
  auto names = all_names(p);
  const std::vector<std::size_t> lengths{64, 128, 256, 512};
  const int samples = 200, repeats = 3;
  std::vector<double> best(lengths.size(), 1e300);
  for (int rep = 0; rep < repeats; ++rep) {
    std::mt19937_64 rng(1000 + rep);
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      std::vector<Word> words;
      for (int s = 0; s < samples; ++s) words.push_back(random_reduced(rng, names, lengths[i]));
      auto t0 = Clock::now();
      for (const auto& w : words) reduce(w, p, SuffixSearchMode::Memoized);
      best[i] = std::min(best[i], seconds_since(t0) / samples);
    }
  }
  // Least-squares slope of log2(time) against log2(length).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    double x = std::log2(static_cast<double>(lengths[i])), y = std::log2(best[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  double factor = std::exp2(slope);
  std::ostringstream d;
  d << std::fixed << std::setprecision(2) << "fitted factor per doubling " << factor << " (band [2.5, 6]); ratios";
  for (std::size_t i = 1; i < lengths.size(); ++i) d << ' ' << best[i] / best[i - 1];
  d << "; mean ms";
  for (double b : best) d << ' ' << std::setprecision(3) << b * 1e3;
  return {factor >= 2.5 && factor <= 6.0, d.str()};
}

// 9. Properties of randomly generated critical words and engine RRSs.
Result involution_invariants() {
  std::size_t words = 0, failures = 0;
  std::map<std::string, std::size_t> failed;
  auto check = [&](bool ok, const char* what) {
    if (!ok) {
      ++failures;
      ++failed[what];
    }
  };
  auto commutes_all = [](const Presentation& p, const Word& w, std::initializer_list<GeneratorId> gs) {
    return std::all_of(w.begin(), w.end(), [&](Letter l) {
      return std::all_of(gs.begin(), gs.end(), [&](GeneratorId g) { return p.commutes(l.name, g); });
    });
  };
  auto p2g_contracts = [&](const Presentation& p, const CriticalWord& cw) {
    const auto& d = cw.p2g();
    Word t = cw.tau(p), th = tau_hat(d, p);
    check(t.size() == cw.u.size(), "length");
    check(cw.u.front() == d.hat.front() && cw.u.back() == d.hat.back(), "endpoints of u and u-hat");
    check(t.front().name != cw.u.front().name && t.back().name != cw.u.back().name, "endpoint flip");
    check(th.front().name != d.hat.front().name && th.back().name != d.hat.back().name, "endpoint flip of u-hat");
    check(commutation_equivalent(d.alpha + d.rho + d.hat + d.beta, cw.u, p), "alpha rho u-hat beta");
    check(commutes_all(p, d.alpha, {cw.u.front().name}), "alpha commutes with f(u)");
    check(commutes_all(p, d.rho, {d.a, d.b}), "rho commutes with P");
    check(commutes_all(p, d.beta, {cw.u.back().name}), "beta commutes with l(u)");
    check(d.beta.empty() || !commutes_all(p, Word{d.beta.front()}, {d.a, d.b}), "f(beta) not central in P");
    bool f_in = t.front().name == d.a || t.front().name == d.b;
    bool l_in = t.back().name == d.a || t.back().name == d.b;
    check(f_in == (d.alpha.empty() && d.rho.empty()), "f(tau) in P iff alpha, rho empty");
    check(l_in == d.beta.empty(), "l(tau) in P iff beta empty");
  };

  struct Setting {
    Presentation p;
    std::vector<std::pair<const char*, const char*>> pairs;
    std::vector<std::array<const char*, 3>> triples;
    bool internal = true;  // some generator outside each pair commutes with it
  };
  std::vector<Setting> settings = {{abc(3, 2, 5), {{"a", "b"}, {"b", "c"}}, {{"a", "b", "c"}}},
                                   {abc(4, 2, 6), {{"a", "b"}, {"b", "c"}}, {}},
                                   {abc(3, 2, 6), {{"b", "c"}}, {{"a", "b", "c"}}},
                                   {abc(3, 2, 7), {}, {{"a", "b", "c"}}},
                                   {abc(3, 3, 3), {{"a", "b"}}, {}, false}};
  std::uint64_t seed = 99;
  std::size_t missing = 0;
  for (auto& s : settings) {
    const auto& p = s.p;
    CriticalSampler gen(p, seed++);
    for (auto [xn, yn] : s.pairs) {
      GeneratorId x = *p.find(xn), y = *p.find(yn);
      for (int t = 0; t < 300; ++t) {
        if (auto cw = gen.two_gen(x, y, 12)) {
          ++words;
          p2g_contracts(p, *cw);
          Word tu = cw->tau(p);
          auto back = classify_critical(tu, p);
          check(back && back->kind() == CriticalKind::TwoGen && back->tau(p) == cw->u, "tau is an involution");
        } else {
          ++missing;
          ++failed["sampler found no 2-generator word"];
        }
        if (!s.internal) continue;
        if (auto cw = gen.p2g(x, y, 12)) {
          ++words;
          p2g_contracts(p, *cw);
        } else {
          ++missing;
          ++failed["sampler found no P2G word"];
        }
      }
    }
    for (auto [an, bn, cn] : s.triples) {
      GeneratorId a = *p.find(an), b = *p.find(bn), c = *p.find(cn);
      for (int t = 0; t < 300; ++t) {
        auto cw = gen.p3g(a, b, c, 12);
        if (!cw) {
          ++missing;
          ++failed["sampler found no P3G word"];
          continue;
        }
        ++words;
        const auto& d = cw->p3g();
        Word tu = cw->tau(p);
        check(tu.size() == cw->u.size(), "length");
        Word ts = tau_hat(d.sharp_data, p);
        check(ts.front().name != d.sharp_data.hat.front().name, "endpoint flip of u-sharp");
        check(tu.front().name != cw->u.front().name || !d.alpha.empty() || !d.rho.empty(), "first letter flip");
        check(tu[tu.size() - d.beta.size() - 1].name == b && cw->u[cw->u.size() - d.beta.size() - 1].name == a,
              "last letter before beta flips from a to b");
        check(commutes_all(p, d.alpha, {cw->u.front().name}), "alpha commutes with f(u)");
        check(commutes_all(p, d.rho, {b, c}), "rho commutes with b and c");
        check(commutes_all(p, d.beta, {a}), "beta commutes with a");
        check(d.ijk.I != 0 && d.ijk.J != 0 && d.ijk.K != 0, "nonzero I, J, K");
      }
    }
  }

  // Structural facts on every RRS the engine applies.
  std::size_t rrs_seen = 0;
  std::mt19937_64 rng(5);
  for (auto p : {abc(3, 2, 5), abc(3, 2, 6), abc(3, 3, 5), abc(4, 4, 4)}) {
    auto names = all_names(p);
    for (int t = 0; t < 2000; ++t) {
      Word w = random_reduced(rng, names, 24);
      Word cur;
      SuffixSearch search;
      for (Letter x : w) {
        auto r = find_optimal_rrs(cur, x, p, search);
        cur.push_back(x);
        if (!r) continue;
        ++rrs_seen;
        check(bool(validate_rrs(cur, *r, p)), "engine RRS validates");
        check(bool(check_rrs_details(*r)), "structural facts of the RRS");
        check(bool(optimality_clauses(cur, *r, p)), "optimality clauses");
        cur = apply_rrs(cur, *r, p);
        search.invalidate_from(r->decomposition.cuts.front());
      }
    }
  }

  Result res;
  res.pass = failures == 0 && missing == 0;
  res.detail = std::to_string(words) + " critical words, " + std::to_string(rrs_seen) + " engine RRSs, " +
               std::to_string(failures) + " violations, " + std::to_string(missing) + " sampler misses";
  for (auto& [what, n] : failed) res.detail += "; " + what + " x" + std::to_string(n);
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> all = {{"golden tau", golden_tau},
                                      {"golden P3G", golden_p3g},
                                      {"golden reduction", golden_reduction},
                                      {"B3 necessity", b3_necessity},
                                      {"geodesics, exhaustive", geodesics_exhaustive},
                                      {"uniqueness of optimal RRS", unique_optimal},
                                      {"exchange properties", exchange},
                                      {"quadratic scaling", quadratic_scaling},
                                      {"involution and endpoint invariants", involution_invariants}};
  bool all_pass = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    auto t0 = Clock::now();
    Result r;
    try {
      r = all[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream line;
    line << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << all[i].name << "): " << r.detail << " ["
         << std::fixed << std::setprecision(1) << seconds_since(t0) << "s]";
    std::cout << line.str() << std::endl;
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
