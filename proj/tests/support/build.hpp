#pragma once

// Terse constructors for tests: single-letter variable universes and
// monomials written as strings ("ab", "a^2").

#include <string>
#include <vector>

#include "locoh/ideal_io.hpp"
#include "locoh/monomial.hpp"

namespace locoh::testing {

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> v;
  for (int j = 0; j < n; ++j) v.push_back(std::string(1, static_cast<char>('a' + j)));
  return v;
}

inline Monomial mono(int n, const std::string& text) {
  return parse_monomial(text, letters(n), 1, 1);
}

inline MonomialIdeal ideal(int n, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const std::string& g : gens) ms.push_back(mono(n, g));
  return MonomialIdeal(n, ms);
}

inline VarSet vars(int n, const std::string& text) {
  VarSet s(n);
  for (char c : text) s = s.with(c - 'a');
  return s;
}

inline MultiDegree deg(std::vector<int> coords) { return MultiDegree(std::move(coords)); }

}  // namespace locoh::testing
