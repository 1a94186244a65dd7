#include "locoh/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace locoh {

SimplicialComplex SimplicialComplex::from_facets(int universe, std::vector<VarSet> facets) {
  for (const VarSet& f : facets)
    if (f.universe_size() != universe)
      throw std::invalid_argument("SimplicialComplex: facet universe mismatch");
  if (facets.empty()) return void_complex(universe);
  SimplicialComplex k;
  k.n_ = universe;
  k.facets_ = inclusion_maximal(std::move(facets));
  return k;
}

int SimplicialComplex::max_face_card() const {
  if (void_) return -1;
  int m = 0;
  for (const VarSet& f : facets_) m = std::max(m, f.size());
  return m;
}

bool SimplicialComplex::contains_face(const VarSet& face) const {
  if (void_) return false;
  for (const VarSet& f : facets_)
    if (face.subset_of(f)) return true;
  return false;
}

std::vector<VarSet> SimplicialComplex::faces_with_card(int card) const {
  if (void_ || card < 0) return {};
  if (card == 0) return {VarSet(n_)};
  std::unordered_set<std::uint64_t> seen;
  std::vector<VarSet> out;
  std::vector<int> verts, pick(static_cast<std::size_t>(card));
  for (const VarSet& facet : facets_) {
    if (facet.size() < card) continue;
    verts = facet.members();
    const int m = static_cast<int>(verts.size());
    // walk all card-subsets of this facet
    for (int i = 0; i < card; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VarSet face(n_);
      for (int i = 0; i < card; ++i)
        face = face.with(verts[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
      if (seen.insert(face.bits()).second) out.push_back(face);
      int i = card - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - card + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < card; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end(), face_lex_less);
  return out;
}

bool SimplicialComplex::subcomplex_of(const SimplicialComplex& other) const {
  if (n_ != other.n_) throw std::invalid_argument("subcomplex_of: universe mismatch");
  if (void_) return true;
  if (other.void_) return false;
  for (const VarSet& f : facets_)
    if (!other.contains_face(f)) return false;
  return true;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("stanley_reisner_complex: zero ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("stanley_reisner_complex: ideal must be squarefree");
  std::vector<VarSet> facets;
  facets.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) facets.push_back(g.support().complement());
  return SimplicialComplex::from_facets(ideal.n(), std::move(facets));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, const VarSet& support) {
  if (complex.is_void()) throw std::invalid_argument("full_subcomplex: void complex");
  if (support.universe_size() != complex.universe_size())
    throw std::invalid_argument("full_subcomplex: universe mismatch");
  if (support.empty()) return SimplicialComplex::void_complex(complex.universe_size());
  std::vector<VarSet> facets;
  facets.reserve(complex.facets().size());
  for (const VarSet& f : complex.facets()) facets.push_back(f & support);
  return SimplicialComplex::from_facets(complex.universe_size(), std::move(facets));
}

SimplicialComplex generator_complex(const MonomialIdeal& ideal, const VarSet& support) {
  if (ideal.is_zero()) throw std::domain_error("generator_complex: zero ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("generator_complex: ideal must be squarefree");
  if (support.universe_size() != ideal.n())
    throw std::invalid_argument("generator_complex: universe mismatch");
  const int r = ideal.num_generators();
  if (support.empty()) return SimplicialComplex::void_complex(r);
  std::vector<VarSet> facets;
  for (int i : support.members()) {
    // generators not divisible by variable i span a full simplex
    VarSet avoid(r);
    for (int j = 0; j < r; ++j)
      if (ideal.generators()[static_cast<std::size_t>(j)].exponent(i) == 0) avoid = avoid.with(j);
    facets.push_back(avoid);
  }
  return SimplicialComplex::from_facets(r, std::move(facets));
}

SimplicialComplex negative_support_complex(const MonomialIdeal& ideal, const MultiDegree& alpha) {
  if (ideal.is_zero()) throw std::domain_error("negative_support_complex: zero ideal");
  if (alpha.n() != ideal.n())
    throw std::invalid_argument("negative_support_complex: degree length mismatch");
  if (alpha.all_at_least(0)) return SimplicialComplex::void_complex(ideal.n());
  std::vector<VarSet> facets;
  for (const Monomial& g : ideal.generators()) {
    VarSet w(ideal.n());
    for (int j = 0; j < ideal.n(); ++j)
      if (alpha[j] + g.exponent(j) < 0) w = w.with(j);
    facets.push_back(w);
  }
  return SimplicialComplex::from_facets(ideal.n(), std::move(facets));
}

}  // namespace locoh
