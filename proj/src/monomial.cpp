#include "locoh/monomial.hpp"

#include <algorithm>

namespace locoh {

namespace {

void strip_dominated(std::vector<VarSet>& sets, bool keep_maximal) {
  std::sort(sets.begin(), sets.end(),
            [](const VarSet& a, const VarSet& b) { return a.bits() < b.bits(); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      if (keep_maximal) {
        // drop proper subsets; among equals (impossible after unique) keep one
        if (sets[i].subset_of(sets[j])) dominated = true;
      } else {
        if (sets[j].subset_of(sets[i])) dominated = true;
      }
    }
    if (!dominated) kept.push_back(sets[i]);
  }
  std::sort(kept.begin(), kept.end(), face_lex_less);
  sets = std::move(kept);
}

}  // namespace

std::vector<VarSet> inclusion_maximal(std::vector<VarSet> sets) {
  strip_dominated(sets, /*keep_maximal=*/true);
  return sets;
}

std::vector<VarSet> inclusion_minimal(std::vector<VarSet> sets) {
  strip_dominated(sets, /*keep_maximal=*/false);
  return sets;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  if (n < 0 || n > kMaxVariables)
    throw std::invalid_argument("MonomialIdeal: ambient size must be in [0,64]");
  for (const Monomial& g : gens)
    if (g.n() != n) throw std::invalid_argument("MonomialIdeal: ambient dimension mismatch");

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }

  squarefree_ = true;
  for (const Monomial& g : gens_)
    if (!g.is_squarefree()) squarefree_ = false;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.n() != n_) throw std::invalid_argument("MonomialIdeal: ambient dimension mismatch");
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: empty generator list");
  const int n = gens.front().n();
  for (const Monomial& g : gens)
    if (g.n() != n) throw std::invalid_argument("minimalize: ambient dimension mismatch");
  return MonomialIdeal(n, gens);
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, int d) {
  if (d < 1) throw std::invalid_argument("frobenius_power: exponent must be >= 1");
  if (!ideal.is_squarefree())
    throw std::domain_error("frobenius_power: ideal must be squarefree");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.power(d));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

std::vector<VarSet> minimal_transversals(int n, const std::vector<VarSet>& family) {
  std::vector<VarSet> cur = {VarSet(n)};
  for (const VarSet& s : family) {
    if (s.empty())
      throw std::invalid_argument("minimal_transversals: empty set has no transversal");
    std::vector<VarSet> next;
    for (const VarSet& t : cur) {
      if (t.intersects(s)) {
        next.push_back(t);
      } else {
        for (int v : s.members()) next.push_back(t.with(v));
      }
    }
    cur = inclusion_minimal(std::move(next));
  }
  return cur;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("alexander_dual: zero ideal");
  if (!ideal.is_proper()) throw std::domain_error("alexander_dual: unit ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("alexander_dual: ideal must be squarefree");
  std::vector<VarSet> supports;
  supports.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  std::vector<Monomial> gens;
  for (const VarSet& t : minimal_transversals(ideal.n(), supports))
    gens.push_back(Monomial::from_support(t));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

}  // namespace locoh
