#pragma once

// Independent brute-force oracles used to freeze expected values: subset
// enumeration straight from the defining conditions, no shared code with the
// library's constructions.

#include <cstdint>
#include <vector>

#include "locoh/monomial.hpp"
#include "locoh/simplicial.hpp"
#include "locoh/varset.hpp"

namespace locoh::testing {

/// Membership in the ideal's complex by definition: the product of the
/// variables outside the face lies in the ideal.
inline bool delta_contains_by_definition(const MonomialIdeal& ideal, const VarSet& face) {
  return ideal.contains(Monomial::from_support(face.complement()));
}

/// All faces of the ideal's complex by 2^n enumeration.
inline std::vector<VarSet> delta_faces_by_enumeration(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  std::vector<VarSet> faces;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet f(n, bits);
    if (delta_contains_by_definition(ideal, f)) faces.push_back(f);
  }
  return faces;
}

/// Alexander dual by 2^n enumeration of the defining condition.
inline MonomialIdeal dual_by_enumeration(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  std::vector<Monomial> gens;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet f(n, bits);
    if (!ideal.contains(Monomial::from_support(f.complement())))
      gens.push_back(Monomial::from_support(f));
  }
  return MonomialIdeal(n, gens);
}

/// Membership in the generator complex by the lcm condition.
inline bool generator_face_by_definition(const MonomialIdeal& ideal, const VarSet& support,
                                         std::uint64_t subset) {
  if (support.empty()) return false;
  Monomial lcm = Monomial::one(ideal.n());
  for (std::uint64_t s = subset; s != 0; s &= s - 1) {
    const int g = std::countr_zero(s);
    lcm = lcm.lcm_with(ideal.generators()[static_cast<std::size_t>(g)]);
  }
  for (int v : support.members())
    if (lcm.exponent(v) == 0) return true;
  return false;
}

/// Same-face-set comparison against a complex built from facets.
inline bool complex_has_faces(const SimplicialComplex& complex,
                              const std::vector<VarSet>& faces) {
  if (complex.is_void()) return faces.empty();
  const int n = complex.universe_size();
  std::vector<bool> expected(std::size_t{1} << n, false);
  for (const VarSet& f : faces) expected[f.bits()] = true;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    if (complex.contains_face(VarSet(n, bits)) != expected[bits]) return false;
  return !faces.empty();
}

/// Euler characteristic from face counts, augmentation included:
/// sum over q >= -1 of (-1)^q #(q-faces).
inline long euler_characteristic_faces(const SimplicialComplex& complex) {
  long total = 0;
  for (int card = 0; card <= complex.max_face_card(); ++card) {
    const long count = static_cast<long>(complex.faces_with_card(card).size());
    total += (card % 2 == 0 ? -1 : 1) * count;  // card = q+1, sign (-1)^q
  }
  return total;
}

}  // namespace locoh::testing
