#pragma once

// Brute-force ground truth. Nothing here calls the reduction engine.

#include <algorithm>
#include <array>
#include <deque>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "artin/rrs.hpp"

namespace artin {

// ---------------------------------------------------------------- moves

namespace detail {

inline char letter_code(Letter l) { return static_cast<char>(2 * l.name.index + (l.positive() ? 0 : 1)); }
inline Letter code_letter(char c) {
  return {GeneratorId{static_cast<std::uint16_t>(static_cast<unsigned char>(c) / 2)}, (c & 1) ? -1 : 1};
}
inline char inv_code(char c) { return static_cast<char>(c ^ 1); }

inline std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(letter_code(l));
  return s;
}
inline Word decode(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(code_letter(c));
  return w;
}

inline std::string inverse_code(const std::string& s) {
  std::string r(s.rbegin(), s.rend());
  for (char& c : r) c = inv_code(c);
  return r;
}

inline void reduce_into(std::string& out, const std::string& s) {
  for (char c : s) {
    if (!out.empty() && out.back() == inv_code(c))
      out.pop_back();
    else
      out.push_back(c);
  }
}

}  // namespace detail

// Relator pieces: for every cyclic conjugate A.B of every relator
// (s,t)_m ((t,s)_m)^-1 and its inverse, the move replaces A by B^-1. With A
// nonempty this is a relator swap performed after free insertions; with A
// empty it inserts a whole relator.
class RelatorMoves {
 public:
  explicit RelatorMoves(const Presentation& p) {
    for (std::uint16_t i = 0; i < p.rank(); ++i)
      for (std::uint16_t j = i + 1; j < p.rank(); ++j) {
        GeneratorId s{i}, t{j};
        auto m = p.m(s, t);
        if (!m.is_finite()) continue;
        Word r = alternating(Letter::pos(s), Letter::pos(t), m.value(), Anchor::StartsWith) +
                 alternating(Letter::pos(t), Letter::pos(s), m.value(), Anchor::StartsWith).inverse();
        for (const Word& rel : {r, r.inverse()}) {
          std::string code = detail::encode(rel);
          for (std::size_t rot = 0; rot < code.size(); ++rot) {
            std::string c = code.substr(rot) + code.substr(0, rot);
            for (std::size_t k = 0; k <= c.size(); ++k) {
              std::string a = c.substr(0, k), b = detail::inverse_code(c.substr(k));
              auto& v = pieces_[a];
              if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(b);
            }
          }
        }
        max_piece_ = std::max(max_piece_, 2 * static_cast<std::size_t>(m.value()));
      }
  }

  // Calls f(next) for every freely reduced word one move away from s.
  template <class F>
  void neighbours(const std::string& s, std::size_t cap, F&& f) const {
    std::string key;
    std::string next;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      for (std::size_t k = 0; k <= max_piece_ && i + k <= s.size(); ++k) {
        key.assign(s, i, k);
        auto it = pieces_.find(key);
        if (it == pieces_.end()) continue;
        for (const auto& rep : it->second) {
          next.assign(s, 0, i);
          detail::reduce_into(next, rep);
          detail::reduce_into(next, s.substr(i + k));
          if (next.size() <= cap && next != s) f(next);
        }
      }
    }
  }

 private:
  std::unordered_map<std::string, std::vector<std::string>> pieces_;
  std::size_t max_piece_ = 0;
};

// ---------------------------------------------------------------- BFS

struct BfsVerdict {
  enum Outcome { Equal, DistinctWithinCap, Exhausted } outcome = DistinctWithinCap;
  std::size_t cap = 0;
  std::size_t states = 0;
  bool equal() const { return outcome == Equal; }
};

inline const char* to_string(BfsVerdict::Outcome o) {
  switch (o) {
    case BfsVerdict::Equal: return "Equal";
    case BfsVerdict::DistinctWithinCap: return "DistinctWithinCap";
    case BfsVerdict::Exhausted: return "Exhausted";
  }
  return "?";
}

namespace detail {

inline BfsVerdict bidirectional(const std::string& a, const std::string& b, const RelatorMoves& moves, std::size_t cap,
                                std::size_t budget) {
  if (a == b) return {BfsVerdict::Equal, cap, 1};
  std::unordered_set<std::string> seen[2] = {{a}, {b}};
  std::vector<std::string> frontier[2] = {{a}, {b}};
  while (!frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::string> next;
    bool met = false;
    for (const auto& s : frontier[side]) {
      moves.neighbours(s, cap, [&](const std::string& t) {
        if (met) return;
        if (seen[1 - side].count(t)) {
          met = true;
          return;
        }
        if (seen[side].insert(t).second) next.push_back(t);
      });
      if (met) return {BfsVerdict::Equal, cap, seen[0].size() + seen[1].size()};
      if (seen[0].size() + seen[1].size() > budget) return {BfsVerdict::Exhausted, cap, seen[0].size() + seen[1].size()};
    }
    frontier[side] = std::move(next);
  }
  return {BfsVerdict::DistinctWithinCap, cap, seen[0].size() + seen[1].size()};
}

}  // namespace detail

// Breadth-first search over freely reduced words of length <= cap. The cap
// is raised in steps of two from max(|u|,|v|); an Equal verdict at any cap is
// final.
inline BfsVerdict bfs_equal(const Word& u, const Word& v, const Presentation& p, std::size_t cap,
                            std::size_t budget = 4'000'000) {
  std::string a = detail::encode(free_reduce(u)), b = detail::encode(free_reduce(v));
  if ((a.size() + b.size()) % 2 == 1) return {BfsVerdict::DistinctWithinCap, cap, 0};
  RelatorMoves moves(p);
  std::size_t start = std::max(a.size(), b.size());
  if (cap < start) throw std::invalid_argument("bfs_equal: cap below word length");
  BfsVerdict last;
  for (std::size_t c = start; c <= cap; c += 2) {
    last = detail::bidirectional(a, b, moves, c, budget);
    if (last.outcome != BfsVerdict::DistinctWithinCap) return last;
    if (c + 2 > cap && c != cap) last = detail::bidirectional(a, b, moves, cap, budget);
  }
  last.cap = cap;
  return last;
}

struct GeodesicLength {
  std::optional<std::size_t> length;  // minimum found at the final cap
  std::size_t cap = 0;
  bool stabilized = false;  // the minimum did not change over the last escalation
  bool exhausted = false;   // a state budget was hit
};

inline std::optional<std::size_t> bfs_min_length(const Word& w, const RelatorMoves& moves, std::size_t cap,
                                                 std::size_t budget, bool* exhausted = nullptr) {
  std::string a = detail::encode(free_reduce(w));
  std::unordered_set<std::string> seen{a};
  std::deque<std::string> queue{a};
  std::size_t best = a.size();
  while (!queue.empty()) {
    std::string s = std::move(queue.front());
    queue.pop_front();
    moves.neighbours(s, cap, [&](const std::string& t) {
      if (seen.insert(t).second) {
        best = std::min(best, t.size());
        queue.push_back(t);
      }
    });
    if (seen.size() > budget) {
      if (exhausted) *exhausted = true;
      return std::nullopt;
    }
  }
  return best;
}

// Minimum length over the class of w reachable within the cap, escalating the
// cap from |w|+4 by 2 up to |w|+8 until two successive minima agree.
inline GeodesicLength bfs_geodesic_length(const Word& w, const Presentation& p, std::size_t max_slack = 8,
                                          std::size_t budget = 4'000'000) {
  RelatorMoves moves(p);
  GeodesicLength out;
  std::size_t base = free_reduce(w).size();
  std::optional<std::size_t> prev;
  for (std::size_t slack = 4; slack <= max_slack; slack += 2) {
    bool ex = false;
    auto len = bfs_min_length(w, moves, base + slack, budget, &ex);
    out.cap = base + slack;
    if (ex) {
      out.exhausted = true;
      return out;
    }
    out.length = len;
    if (prev && *prev == *len) {
      out.stabilized = true;
      return out;
    }
    prev = len;
  }
  return out;
}

// ---------------------------------------------------------------- dihedral

// Geodesity criterion for words over two generators: freely reduced and
// p + n <= m. Stated for m = 3; other m only when `general` is set.
inline bool dihedral_geodesic(const Word& w, const Presentation& p, bool general = false) {
  if (w.empty()) return true;
  if (!is_freely_reduced(w)) return false;
  auto names = detail::two_names(w.view());
  if (!names) {
    bool one_name = std::all_of(w.begin(), w.end(), [&](Letter l) { return l.name == w[0].name; });
    if (one_name) return true;
    throw std::invalid_argument("dihedral_geodesic: word uses more than two names");
  }
  auto m = p.m(names->first, names->second);
  if (!m.is_finite()) return true;
  if (!general && !m.equals(3)) throw std::invalid_argument("dihedral_geodesic: m must be 3 unless general is set");
  auto s = pn_stats(w, p);
  return s.p + s.n <= m.value();
}

// ---------------------------------------------------------------- RRS enumeration

// Exhaustive RRS search over all decompositions, kept incrementally: the state
// holds every chain u_1..u_i of critical words lying inside the current prefix.
class RrsEnumerator {
 public:
  explicit RrsEnumerator(const Presentation& p) : p_(&p) {}

  const Word& word() const { return w_; }

  void push(Letter l) {
    w_.push_back(l);
    const std::size_t n = w_.size();
    level_begin_.push_back(nodes_.size());
    for (std::size_t c0 = 0; c0 + 1 <= n; ++c0) {
      if (auto cw = classify_critical(w_.view().subspan(c0, n - c0), *p_))
        add(Node{npos, c0, n, cw->carry(*p_), std::move(*cw)});
    }
    const std::size_t end_prev = level_begin_.back();
    for (std::size_t k = 0; k < end_prev; ++k) {
      const Node& nd = nodes_[k];
      Word u = nd.carry;
      u.append(w_.view().subspan(nd.end, n - nd.end));
      if (auto cw = classify_critical(u, *p_)) add(Node{k, nd.end, n, cw->carry(*p_), std::move(*cw)});
    }
  }

  void pop() {
    nodes_.resize(level_begin_.back());
    level_begin_.pop_back();
    w_.pop_back();
  }

  // Every RRS of word()·x with gamma = x.
  std::vector<Rrs> with_last(Letter x) const {
    std::vector<Rrs> out;
    const std::size_t n = w_.size();
    Letter want = x.inverse();
    auto tail_ok = [&](const Word& t) {
      if (t.empty() || t.front() != want) return false;
      for (std::size_t k = 1; k < t.size(); ++k)
        if (!p_->commutes(t[k].name, want.name)) return false;
      return true;
    };
    for (std::size_t c0 = 0; c0 < n; ++c0) {
      Word t = w_.suffix_from(c0);
      if (tail_ok(t)) out.push_back(Rrs{{{c0, n}}, {}, std::move(t)});
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const Node& nd = nodes_[k];
      Word t = nd.carry;
      t.append(w_.view().subspan(nd.end, n - nd.end));
      if (!tail_ok(t)) continue;
      Rrs r;
      r.tail = std::move(t);
      std::vector<std::size_t> chain;
      for (std::size_t q = k; q != npos; q = nodes_[q].parent) chain.push_back(q);
      std::reverse(chain.begin(), chain.end());
      r.decomposition.cuts.push_back(nodes_[chain.front()].begin);
      for (auto q : chain) {
        r.decomposition.cuts.push_back(nodes_[q].end);
        r.u.push_back(nodes_[q].cw);
      }
      r.decomposition.cuts.push_back(n);
      out.push_back(std::move(r));
    }
    return out;
  }

  std::size_t chain_count() const { return nodes_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Node {
    std::size_t parent;
    std::size_t begin;  // start of w_i in the host word
    std::size_t end;    // end of w_i
    Word carry;
    CriticalWord cw;
  };
  void add(Node n) { nodes_.push_back(std::move(n)); }

  const Presentation* p_;
  Word w_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> level_begin_;
};

inline constexpr std::size_t kEnumerationBound = 14;

// Every RRS of w (any gamma) of length at most max_len.
inline std::vector<Rrs> enumerate_rrs(const Word& w, const Presentation& p, std::size_t max_len = kEnumerationBound) {
  if (w.size() > kEnumerationBound) throw std::invalid_argument("enumerate_rrs: word too long for exhaustive mode");
  std::vector<Rrs> out;
  RrsEnumerator e(p);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0)
      for (auto& r : e.with_last(w[k])) {
        if (r.m() <= max_len) out.push_back(std::move(r));
      }
    e.push(w[k]);
  }
  return out;
}

// The optimal RRSs among a list of RRSs of the same word.
inline std::vector<Rrs> optimal_among(const Word& w, std::vector<Rrs> all, const Presentation& p) {
  if (all.empty()) return {};
  std::size_t best = 0;
  for (const auto& r : all) best = std::max(best, r.decomposition.cuts.front());
  std::vector<Rrs> out;
  for (auto& r : all)
    if (r.decomposition.cuts.front() == best && optimality_clauses(w, r, p)) out.push_back(std::move(r));
  return out;
}

enum class OptimalityMode { Procedure, Enumeration };

inline bool is_optimal(const Word& w, const Rrs& r, const Presentation& p,
                       OptimalityMode mode = OptimalityMode::Procedure) {
  if (!validate_rrs(w, r, p)) throw std::invalid_argument("is_optimal: not an RRS of the word");
  if (!optimality_clauses(w, r, p)) return false;
  const std::size_t c0 = r.decomposition.cuts.front();
  if (mode == OptimalityMode::Enumeration) {
    for (const auto& o : enumerate_rrs(w, p))
      if (o.decomposition.cuts.front() > c0) return false;
    return true;
  }
  if (r.decomposition.cuts.back() + 1 != w.size())
    throw std::invalid_argument("is_optimal: procedure mode needs gamma to be the last letter");
  auto best = find_optimal_rrs(w.prefix(w.size() - 1), w.back(), p);
  return best && best->decomposition.cuts.front() <= c0;
}

// ---------------------------------------------------------------- Hecke certificate

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s && comp; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

}  // namespace detail

// The reflection representation of the Hecke algebra with a random generic
// parameter q, reduced modulo a large prime: s acts by
//   e_s -> -q e_s,  e_t -> e_t + k_st e_s,  k_st = sqrt(q) (zeta + zeta^-1),
// zeta a primitive 2m_st-th root of unity (k = 0 for m = 2, random for m = inf).
// Equal group elements have equal images, so the shortest word with the same
// image bounds the geodesic length from below.
class HeckeImage {
 public:
  using Matrix = std::vector<std::uint64_t>;

  HeckeImage(const Presentation& p, std::uint64_t seed = 12345) : n_(p.rank()) {
    std::mt19937_64 rng(seed);
    std::uint64_t l = 2;
    for (std::uint16_t i = 0; i < n_; ++i)
      for (std::uint16_t j = i + 1; j < n_; ++j)
        if (auto m = p.m({i}, {j}); m.is_finite()) l = std::lcm(l, 2 * static_cast<std::uint64_t>(m.value()));
    mod_ = (std::uint64_t{1} << 61) / l * l + 1;
    while (!detail::is_prime(mod_)) mod_ -= l;
    auto rnd = [&] { return 2 + rng() % (mod_ - 3); };
    std::uint64_t r = rnd(), q = detail::mulmod(r, r, mod_);
    std::vector<std::uint64_t> k(n_ * n_, 0);
    for (std::uint16_t i = 0; i < n_; ++i)
      for (std::uint16_t j = i + 1; j < n_; ++j) {
        auto m = p.m({i}, {j});
        std::uint64_t v;
        if (!m.is_finite()) {
          v = rnd();
        } else if (m.equals(2)) {
          v = 0;
        } else {
          std::uint64_t order = 2 * static_cast<std::uint64_t>(m.value());
          std::uint64_t z;
          do {
            z = detail::powmod(rnd(), (mod_ - 1) / order, mod_);
          } while (detail::powmod(z, order / 2, mod_) != mod_ - 1 || !primitive(z, order));
          std::uint64_t zi = detail::powmod(z, mod_ - 2, mod_);
          v = detail::mulmod(r, (z + zi) % mod_, mod_);
        }
        k[i * n_ + j] = k[j * n_ + i] = v;
      }
    std::uint64_t qinv = detail::powmod(q, mod_ - 2, mod_);
    for (std::size_t s = 0; s < n_; ++s) {
      Matrix g = identity();
      // Column t is the image of e_t.
      for (std::size_t t = 0; t < n_; ++t) g[s * n_ + t] = t == s ? mod_ - q : k[s * n_ + t];
      // g^-1 = (g + (q - 1) I) / q.
      Matrix gi = g;
      for (std::size_t d = 0; d < n_; ++d) gi[d * n_ + d] = (gi[d * n_ + d] + q + mod_ - 1) % mod_;
      for (auto& e : gi) e = detail::mulmod(e, qinv, mod_);
      gens_.push_back(g);
      inv_.push_back(gi);
    }
  }

  Matrix identity() const {
    Matrix m(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

  // m * image(l)
  Matrix times(const Matrix& m, Letter l) const {
    const Matrix& g = l.positive() ? gens_[l.name.index] : inv_[l.name.index];
    Matrix out(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t kk = 0; kk < n_; ++kk) {
        std::uint64_t a = m[i * n_ + kk];
        if (!a) continue;
        for (std::size_t j = 0; j < n_; ++j)
          out[i * n_ + j] = (out[i * n_ + j] + detail::mulmod(a, g[kk * n_ + j], mod_)) % mod_;
      }
    return out;
  }

  Matrix of(const Word& w) const {
    Matrix m = identity();
    for (Letter l : w) m = times(m, l);
    return m;
  }

 private:
  bool primitive(std::uint64_t z, std::uint64_t order) const {
    for (std::uint64_t d = 1; d < order; ++d)
      if (order % d == 0 && detail::powmod(z, d, mod_) == 1) return false;
    return true;
  }

  std::size_t n_;
  std::uint64_t mod_;
  std::vector<Matrix> gens_, inv_;
};

// ---------------------------------------------------------------- ball table

namespace detail {

// Words over at most 8 generators of length at most 15, 4 bits per letter.
inline u64 pack(const std::string& s) {
  u64 v = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) v |= static_cast<u64>(static_cast<unsigned char>(s[i])) << (4 + 4 * i);
  return v;
}
inline std::string unpack(u64 v) {
  std::string s(v & 15, '\0');
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<char>((v >> (4 + 4 * i)) & 15);
  return s;
}

}  // namespace detail

// Geodesic lengths of all freely reduced words of length <= radius, from an
// upper bound (union-find over all words of length <= radius + slack joined by
// relator moves) and a lower bound (Hecke images of words of length <= radius).
class GeodesicTable {
 public:
  struct Verdict {
    std::size_t lower = 0, upper = 0;
    bool exact() const { return lower == upper; }
  };

  GeodesicTable(const Presentation& p, std::size_t radius, std::size_t slack = 2) : p_(p), radius_(radius) {
    if (p.rank() > 8 || radius + slack > 15) throw std::invalid_argument("GeodesicTable: ball too large");
    const std::size_t cap = radius + slack;
    const int letters = static_cast<int>(2 * p.rank());
    std::string cur;
    HeckeImage hecke(p);
    std::vector<HeckeImage::Matrix> stack{hecke.identity()};
    std::unordered_map<std::string, std::size_t> lowest;  // image -> min length
    auto image_key = [](const HeckeImage::Matrix& m) {
      return std::string(reinterpret_cast<const char*>(m.data()), m.size() * sizeof(m[0]));
    };
    // Depth-first enumeration of reduced words; lexicographic by code so
    // `codes_` is built in an order we sort afterwards anyway.
    auto rec = [&](auto&& self) -> void {
      codes_.push_back(detail::pack(cur));
      if (cur.size() <= radius) {
        auto key = image_key(stack.back());
        auto [it, fresh] = lowest.try_emplace(key, cur.size());
        if (!fresh) it->second = std::min(it->second, cur.size());
      }
      if (cur.size() == cap) return;
      for (int c = 0; c < letters; ++c) {
        if (!cur.empty() && cur.back() == detail::inv_code(static_cast<char>(c))) continue;
        cur.push_back(static_cast<char>(c));
        if (cur.size() <= radius) stack.push_back(hecke.times(stack.back(), detail::code_letter(static_cast<char>(c))));
        self(self);
        if (cur.size() <= radius) stack.pop_back();
        cur.pop_back();
      }
    };
    rec(rec);
    std::sort(codes_.begin(), codes_.end());
    parent_.resize(codes_.size());
    std::iota(parent_.begin(), parent_.end(), 0u);
    RelatorMoves moves(p);
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      std::string s = detail::unpack(codes_[i]);
      moves.neighbours(s, cap, [&](const std::string& t) { unite(i, index(t)); });
    }
    minlen_.assign(codes_.size(), 255);
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      auto r = find(i);
      minlen_[r] = std::min<std::uint8_t>(minlen_[r], static_cast<std::uint8_t>(codes_[i] & 15));
    }
    // Lower bounds, recomputed per word on demand from the image map.
    lowest_ = std::move(lowest);
    hecke_ = std::make_unique<HeckeImage>(hecke);
  }

  std::size_t radius() const { return radius_; }
  std::size_t size() const { return codes_.size(); }

  Verdict verdict(const Word& w) {
    Word r = free_reduce(w);
    if (r.size() > radius_) throw std::invalid_argument("GeodesicTable: word outside the ball");
    std::string s = detail::encode(r);
    Verdict v;
    v.upper = minlen_[find(index(s))];
    auto key = hecke_->of(r);
    v.lower = lowest_.at(std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(key[0])));
    return v;
  }

 private:
  std::size_t index(const std::string& s) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), detail::pack(s));
    return static_cast<std::size_t>(it - codes_.begin());
  }
  std::uint32_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return static_cast<std::uint32_t>(i);
  }
  void unite(std::size_t a, std::size_t b) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }

  const Presentation& p_;
  std::size_t radius_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> minlen_;
  std::unordered_map<std::string, std::size_t> lowest_;
  std::unique_ptr<HeckeImage> hecke_;
};

}  // namespace artin
