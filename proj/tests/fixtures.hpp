#pragma once

#include <string>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin::fixtures {

// Generators a, b, c with the given labels; 0 means infinity.
inline Presentation abc(int ab, int ac, int bc) {
  Presentation p({"a", "b", "c"});
  auto lab = [](int m) { return m ? CoxeterLabel::finite(m) : CoxeterLabel::infinity(); };
  p.set({0}, {1}, lab(ab));
  p.set({0}, {2}, lab(ac));
  p.set({1}, {2}, lab(bc));
  return p;
}

inline Presentation dihedral(int m) {
  Presentation p({"a", "b"});
  p.set({0}, {1}, m ? CoxeterLabel::finite(m) : CoxeterLabel::infinity());
  return p;
}

struct W {
  const Presentation& p;
  Word operator()(const std::string& s) const { return parse_word(s, p); }
};

}  // namespace artin::fixtures
