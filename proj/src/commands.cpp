#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "artin/oracle.hpp"

namespace artin::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Presentation load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  }
}

Word word_arg(const std::string& text, const Presentation& p) {
  try {
    return parse_word(text, p);
  } catch (const ParseError& e) {
    throw UsageError("word '" + text + "': " + e.what());
  }
}

std::string cuts_text(const Decomposition& d) {
  std::string s;
  for (std::size_t i = 0; i < d.cuts.size(); ++i) s += (i ? "," : "") + std::to_string(d.cuts[i]);
  return s;
}

void print_rrs(std::ostream& out, const Word& w, const Rrs& r, const Presentation& p) {
  out << "cuts=" << cuts_text(r.decomposition) << " m=" << r.m() << '\n';
  for (std::size_t i = 0; i < r.m(); ++i) {
    const auto& cw = r.u[i];
    out << "u" << i + 1 << ' ' << to_string(cw.kind()) << ' ' << format_type(cw.type(), p) << ' '
        << format_word(cw.u, p) << " -> " << format_word(cw.tau(p), p) << '\n';
  }
  out << "u" << r.m() + 1 << ' ' << format_word(r.tail, p) << '\n';
  out << "result " << format_word(apply_rrs(w, r, p), p) << '\n';
}

// Optimal RRSs of w whose gamma is the last letter, by exhaustive enumeration.
std::vector<Rrs> enumerated_optimal(const Word& w, const Presentation& p) {
  std::vector<Rrs> last;
  for (auto& r : enumerate_rrs(w, p))
    if (r.decomposition.cuts.back() + 1 == w.size()) last.push_back(std::move(r));
  return optimal_among(w, std::move(last), p);
}

int cmd_reduce(const Config& cfg, const Presentation& p, std::ostream& out, std::ostream& err) {
  auto mode = cfg.memoized ? SuffixSearchMode::Memoized : SuffixSearchMode::Reference;
  for (const auto& text : cfg.words) {
    Word w = word_arg(text, p);
    ReducerState s(p, mode);
    s.enable_trace(cfg.trace);
    for (Letter l : w) {
      s.push(l);
      if (cfg.trace && s.last_trace().result) err << format_trace(s.last_trace(), p);
    }
    out << format_word(s.current(), p) << '\n';
  }
  return kOk;
}

int cmd_trace(const Config& cfg, const Presentation& p, std::ostream& out) {
  Word w = word_arg(cfg.words.front(), p);
  ReducerState s(p, cfg.memoized ? SuffixSearchMode::Memoized : SuffixSearchMode::Reference);
  s.enable_trace(true);
  int rc = kOk;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word before = s.current();
    s.push(w[k]);
    const Trace& t = s.last_trace();
    if (!t.result) continue;
    out << "letter " << k << ' ' << format_word(Word{w[k]}, p) << '\n' << format_trace(t, p);
    if (!cfg.oracle_check) continue;
    Word host = before + w[k];
    if (host.size() > kEnumerationBound) {
      out << "oracle skipped (word longer than " << kEnumerationBound << ")\n";
      continue;
    }
    auto opt = enumerated_optimal(host, p);
    bool agree = opt.size() == 1 && opt.front().decomposition == *t.result;
    out << (agree ? "oracle agrees\n" : "oracle disagrees\n");
    if (!agree) rc = kUsage;
  }
  return rc;
}

int cmd_equal(const Config& cfg, const Presentation& p, std::ostream& out) {
  Word u = word_arg(cfg.words[0], p), v = word_arg(cfg.words[1], p);
  out << (equal(u, v, p) ? "true" : "false") << '\n';
  if (cfg.oracle_cap) {
    std::size_t cap = std::max({cfg.oracle_cap, u.size(), v.size()});
    auto verdict = bfs_equal(u, v, p, cap);
    out << "oracle " << to_string(verdict.outcome) << " cap=" << verdict.cap << " states=" << verdict.states << '\n';
  }
  return kOk;
}

int cmd_find(const Config& cfg, const Presentation& p, std::ostream& out) {
  Word w = word_arg(cfg.words.front(), p);
  if (w.empty()) throw UsageError("find-rrs needs a nonempty word");
  SuffixSearch search;
  auto r = find_optimal_rrs(w.prefix(w.size() - 1), w.back(), p, search);
  if (!r) {
    out << "none\n";
    return kOk;
  }
  print_rrs(out, w, *r, p);
  return kOk;
}

int cmd_enumerate(const Config& cfg, const Presentation& p, std::ostream& out) {
  Word w = word_arg(cfg.words.front(), p);
  if (w.size() > kEnumerationBound)
    throw UsageError("enumerate-rrs is limited to words of at most " + std::to_string(kEnumerationBound) + " letters");
  auto all = enumerate_rrs(w, p);
  for (const auto& r : all) {
    out << "gamma=" << r.decomposition.cuts.back() << ' ';
    print_rrs(out, w, r, p);
  }
  out << all.size() << " sequences\n";
  return kOk;
}

int cmd_bench(const Config& cfg, const Presentation& p, std::ostream& out) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * p.rank() - 1);
  auto random_word = [&](std::size_t n) {
    Word w;
    while (w.size() < n) {
      std::size_t c = pick(rng);
      Letter l{GeneratorId{static_cast<std::uint16_t>(c / 2)}, c % 2 ? -1 : 1};
      if (!w.empty() && cancels(w.back(), l)) continue;
      w.push_back(l);
    }
    return w;
  };
  out << "seed " << cfg.seed << " samples " << cfg.samples << '\n';
  out << std::left << std::setw(8) << "length" << std::setw(11) << "mode" << std::setw(12) << "mean_ms"
      << std::setw(10) << "ratio" << "tau_moves\n";
  double prev[2] = {0, 0};
  for (std::size_t n : cfg.lengths) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < cfg.samples; ++i) words.push_back(random_word(n));
    for (int mi = 0; mi < 2; ++mi) {
      auto mode = mi ? SuffixSearchMode::Memoized : SuffixSearchMode::Reference;
      double total = 0, moves = 0;
      for (const auto& w : words) {
        auto t0 = std::chrono::steady_clock::now();
        ReducerState s(p, mode);
        for (Letter l : w) s.push(l);
        total += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        moves += static_cast<double>(s.stats().tau_moves);
      }
      double mean = total / static_cast<double>(words.size());
      std::ostringstream ratio;
      if (prev[mi] > 0) ratio << std::fixed << std::setprecision(2) << mean / prev[mi];
      else ratio << "-";
      out << std::setw(8) << n << std::setw(11) << (mi ? "memoized" : "reference") << std::setw(12) << std::fixed
          << std::setprecision(3) << mean << std::setw(10) << ratio.str() << std::setprecision(1)
          << moves / static_cast<double>(words.size()) << '\n';
      prev[mi] = mean;
    }
  }
  return kOk;
}

}  // namespace

int run(const Config& cfg, std::ostream& out, std::ostream& err) {
  try {
    Presentation p = load(cfg.presentation);
    auto bad = validate_a3b3_free(p);
    if (cfg.command == "check-diagram") {
      for (const auto& t : bad)
        out << '{' << p.name(t.x) << ',' << p.name(t.y) << ',' << p.name(t.z) << "} " << (t.m_yz == 3 ? "A3" : "B3")
            << '\n';
      if (bad.empty()) out << "no A3 or B3 subdiagrams\n";
      return bad.empty() ? kOk : kHypothesis;
    }
    bool bypass = cfg.bypass_diagram_check && (cfg.command == "find-rrs" || cfg.command == "enumerate-rrs");
    if (!bad.empty() && !bypass) {
      err << HypothesisError::describe(p, bad) << '\n';
      return kHypothesis;
    }
    if (cfg.command == "reduce") return cmd_reduce(cfg, p, out, err);
    if (cfg.command == "trace") return cmd_trace(cfg, p, out);
    if (cfg.command == "equal") return cmd_equal(cfg, p, out);
    if (cfg.command == "geodesic") {
      out << (is_geodesic(word_arg(cfg.words.front(), p), p) ? "true" : "false") << '\n';
      return kOk;
    }
    if (cfg.command == "find-rrs") return cmd_find(cfg, p, out);
    if (cfg.command == "enumerate-rrs") return cmd_enumerate(cfg, p, out);
    if (cfg.command == "bench") return cmd_bench(cfg, p, out);
    err << "unknown command '" << cfg.command << "'\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisError& e) {
    err << e.what() << '\n';
    return kHypothesis;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace artin::cli
