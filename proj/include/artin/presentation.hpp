#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace artin {

struct GeneratorId {
  std::uint16_t index = 0;
  auto operator<=>(const GeneratorId&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Coxeter label m(x,y): an integer >= 2 or infinity (no relation).
class CoxeterLabel {
 public:
  static CoxeterLabel finite(int m) {
    if (m < 2) throw std::invalid_argument("Coxeter label must be >= 2");
    return CoxeterLabel(m);
  }
  static CoxeterLabel infinity() { return CoxeterLabel(std::nullopt); }

  bool is_finite() const { return m_.has_value(); }
  int value() const {
    if (!m_) throw std::logic_error("label is infinite");
    return *m_;
  }
  bool equals(int k) const { return m_ == k; }
  // Infinity is at least every integer.
  bool at_least(int k) const { return !m_ || *m_ >= k; }

  bool operator==(const CoxeterLabel&) const = default;

  std::string to_string() const { return m_ ? std::to_string(*m_) : "inf"; }

 private:
  explicit CoxeterLabel(std::optional<int> m) : m_(m) {}
  std::optional<int> m_;
};

class Presentation {
 public:
  Presentation() = default;

  // Builds a presentation where every pair is labelled `fill`.
  explicit Presentation(std::vector<std::string> names, CoxeterLabel fill = CoxeterLabel::infinity())
      : names_(std::move(names)), labels_(names_.size() * names_.size(), fill) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<std::uint16_t>(i)).second)
        throw std::invalid_argument("duplicate generator '" + names_[i] + "'");
    }
  }

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GeneratorId g) const { return names_.at(g.index); }

  std::optional<GeneratorId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return GeneratorId{it->second};
  }

  void set(GeneratorId x, GeneratorId y, CoxeterLabel m) {
    if (x == y) throw std::invalid_argument("label of a generator with itself");
    labels_[x.index * rank() + y.index] = m;
    labels_[y.index * rank() + x.index] = m;
  }

  CoxeterLabel m(GeneratorId x, GeneratorId y) const {
    if (x == y) throw std::invalid_argument("label of a generator with itself");
    return labels_[x.index * rank() + y.index];
  }

  // m(x,y) = 2. A generator is treated as commuting with itself.
  bool commutes(GeneratorId x, GeneratorId y) const {
    return x == y || labels_[x.index * rank() + y.index].equals(2);
  }

  bool operator==(const Presentation& o) const { return names_ == o.names_ && labels_ == o.labels_; }

 private:
  std::vector<std::string> names_;
  std::vector<CoxeterLabel> labels_;
  std::unordered_map<std::string, std::uint16_t> index_;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace detail

// File format:
//   generators: a b c
//   pair: a b = 3
//   pair: a c = inf
// '#' starts a comment. Every unordered pair must be given exactly once.
inline Presentation parse_presentation(std::string_view text) {
  struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t line;
    void skip_ws() {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    }
    bool done() {
      skip_ws();
      return pos >= s.size();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, pos + 1, msg); }
    std::string ident() {
      skip_ws();
      if (pos >= s.size() || !detail::is_ident_start(s[pos])) fail("expected a generator name");
      std::size_t b = pos;
      while (pos < s.size() && detail::is_ident_char(s[pos])) ++pos;
      return std::string(s.substr(b, pos - b));
    }
    void expect(char c) {
      skip_ws();
      if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
      ++pos;
    }
  };

  std::vector<std::string> names;
  bool have_generators = false;
  struct PairLine {
    std::string x, y;
    CoxeterLabel m;
    std::size_t line, col;
  };
  std::vector<PairLine> pairs;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor c{line, 0, line_no};
    if (!c.done()) {
      std::string key = c.ident();
      c.expect(':');
      if (key == "generators") {
        if (have_generators) c.fail("generators declared twice");
        have_generators = true;
        while (!c.done()) names.push_back(c.ident());
        if (names.empty()) c.fail("no generators declared");
      } else if (key == "pair") {
        std::size_t col = c.pos + 1;
        std::string x = c.ident();
        std::string y = c.ident();
        c.expect('=');
        c.skip_ws();
        std::size_t b = c.pos;
        while (c.pos < line.size() && detail::is_ident_char(line[c.pos])) ++c.pos;
        std::string tok(line.substr(b, c.pos - b));
        std::optional<CoxeterLabel> m;
        if (tok == "inf") {
          m = CoxeterLabel::infinity();
        } else if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos && tok.size() < 9) {
          int v = std::stoi(tok);
          if (v < 2) throw ParseError(line_no, b + 1, "label must be >= 2 or inf");
          m = CoxeterLabel::finite(v);
        } else {
          throw ParseError(line_no, b + 1, "expected an integer label or 'inf'");
        }
        if (!c.done()) c.fail("trailing characters");
        pairs.push_back({x, y, *m, line_no, col});
      } else {
        throw ParseError(line_no, 1, "unknown directive '" + key + "'");
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  if (!have_generators) throw ParseError(line_no, 1, "missing 'generators:' line");
  Presentation p = [&] {
    try {
      return Presentation(names);
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }();

  std::vector<bool> seen(p.rank() * p.rank(), false);
  for (const auto& pl : pairs) {
    auto x = p.find(pl.x), y = p.find(pl.y);
    if (!x) throw ParseError(pl.line, pl.col, "unknown generator '" + pl.x + "'");
    if (!y) throw ParseError(pl.line, pl.col, "unknown generator '" + pl.y + "'");
    if (*x == *y) throw ParseError(pl.line, pl.col, "pair of a generator with itself");
    std::size_t k = x->index * p.rank() + y->index;
    if (seen[k]) throw ParseError(pl.line, pl.col, "pair " + pl.x + " " + pl.y + " given twice");
    seen[k] = seen[y->index * p.rank() + x->index] = true;
    p.set(*x, *y, pl.m);
  }
  for (std::size_t i = 0; i < p.rank(); ++i)
    for (std::size_t j = i + 1; j < p.rank(); ++j)
      if (!seen[i * p.rank() + j])
        throw ParseError(line_no, 1, "missing pair " + names[i] + " " + names[j]);
  return p;
}

inline std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& n : p.names()) out << ' ' << n;
  out << '\n';
  for (std::uint16_t i = 0; i < p.rank(); ++i)
    for (std::uint16_t j = i + 1; j < p.rank(); ++j)
      out << "pair: " << p.names()[i] << ' ' << p.names()[j] << " = "
          << p.m(GeneratorId{i}, GeneratorId{j}).to_string() << '\n';
  return out.str();
}

// A triple violating the hypothesis, labelled so that m(x,y)=3, m(x,z)=2 and
// m(y,z) is 3 (an A3 subdiagram) or 4 (a B3 subdiagram).
struct ForbiddenTriple {
  GeneratorId x, y, z;
  int m_yz;
  bool operator==(const ForbiddenTriple&) const = default;
};

inline std::vector<ForbiddenTriple> validate_a3b3_free(const Presentation& p) {
  std::vector<ForbiddenTriple> out;
  const auto n = static_cast<std::uint16_t>(p.rank());
  for (std::uint16_t i = 0; i < n; ++i)
    for (std::uint16_t j = i + 1; j < n; ++j)
      for (std::uint16_t k = j + 1; k < n; ++k) {
        GeneratorId g[3] = {{i}, {j}, {k}};
        // Try each generator as the centre-adjacent x with m(x,z) = 2.
        for (int xi = 0; xi < 3; ++xi) {
          bool found = false;
          for (int yi = 0; yi < 3 && !found; ++yi) {
            if (yi == xi) continue;
            int zi = 3 - xi - yi;
            GeneratorId x = g[xi], y = g[yi], z = g[zi];
            if (!p.m(x, y).equals(3) || !p.m(x, z).equals(2)) continue;
            auto myz = p.m(y, z);
            if (myz.equals(3) || myz.equals(4)) {
              out.push_back({x, y, z, myz.value()});
              found = true;
            }
          }
          if (found) break;
        }
      }
  return out;
}

class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const Presentation& p, std::vector<ForbiddenTriple> triples)
      : std::runtime_error(describe(p, triples)), triples_(std::move(triples)) {}
  const std::vector<ForbiddenTriple>& triples() const { return triples_; }

  static std::string describe(const Presentation& p, const std::vector<ForbiddenTriple>& ts) {
    std::string s = "diagram contains A3/B3 subdiagrams:";
    for (const auto& t : ts)
      s += " {" + p.name(t.x) + "," + p.name(t.y) + "," + p.name(t.z) + "}" +
           (t.m_yz == 3 ? "(A3)" : "(B3)");
    return s;
  }

 private:
  std::vector<ForbiddenTriple> triples_;
};

inline void require_a3b3_free(const Presentation& p) {
  auto t = validate_a3b3_free(p);
  if (!t.empty()) throw HypothesisError(p, std::move(t));
}

}  // namespace artin
