#include "locoh/localcoh.hpp"

#include <map>
#include <stdexcept>

namespace locoh {

namespace {

void require_squarefree_nonzero(const MonomialIdeal& ideal, const char* who) {
  if (ideal.is_zero()) throw std::domain_error(std::string(who) + ": zero ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error(std::string(who) + ": ideal must be squarefree");
}

GradedPiece piece_from_complex(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                               const SimplicialComplex& complex, const FieldSpec& field,
                               bool want_basis) {
  GradedPiece p;
  p.ideal = ideal;
  p.i = i;
  p.alpha = alpha;
  p.q = i - 2;
  p.cochain_dim = complex.faces_with_card(p.q + 1).size();
  p.dim = cohomology_dim(complex, p.q, field);
  if (want_basis) p.basis = reduced_cohomology(complex, p.q, field);
  return p;
}

GradedPiece zero_piece(const MonomialIdeal& ideal, int i, const MultiDegree& alpha) {
  GradedPiece p;
  p.ideal = ideal;
  p.i = i;
  p.alpha = alpha;
  p.q = i - 2;
  return p;
}

}  // namespace

GradedPiece lc_piece(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                     const FieldSpec& field, bool want_basis) {
  require_squarefree_nonzero(ideal, "lc_piece");
  const SimplicialComplex sub =
      full_subcomplex(stanley_reisner_complex(ideal), alpha.negative_support());
  return piece_from_complex(ideal, i, alpha, sub, field, want_basis);
}

GradedPiece lc_piece_via_generators(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                                    const FieldSpec& field, bool want_basis) {
  require_squarefree_nonzero(ideal, "lc_piece_via_generators");
  const SimplicialComplex t = generator_complex(ideal, alpha.negative_support());
  return piece_from_complex(ideal, i, alpha, t, field, want_basis);
}

GradedPiece ext_piece(const MonomialIdeal& ideal, int i, const MultiDegree& beta,
                      const FieldSpec& field, bool want_basis) {
  require_squarefree_nonzero(ideal, "ext_piece");
  if (!beta.all_at_least(-1)) return zero_piece(ideal, i, beta);
  return lc_piece(ideal, i, beta, field, want_basis);
}

GradedPiece ext_piece_general(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                              const FieldSpec& field, bool want_basis) {
  if (ideal.is_zero()) throw std::domain_error("ext_piece_general: zero ideal");
  const SimplicialComplex complex = negative_support_complex(ideal, alpha);
  return piece_from_complex(ideal, i, alpha, complex, field, want_basis);
}

ExactMatrix multiplication_map(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                               int var, const FieldSpec& field) {
  require_squarefree_nonzero(ideal, "multiplication_map");
  if (var < 0 || var >= ideal.n())
    throw std::invalid_argument("multiplication_map: variable index out of range");
  const SimplicialComplex delta = stanley_reisner_complex(ideal);
  const SimplicialComplex source = full_subcomplex(delta, alpha.negative_support());
  const SimplicialComplex target =
      full_subcomplex(delta, alpha.plus_unit(var).negative_support());
  return restriction_on_cohomology(source, target, i - 2, field);
}

long hochster_betti(const MonomialIdeal& ideal, int i, const VarSet& alpha,
                    const FieldSpec& field) {
  require_squarefree_nonzero(ideal, "hochster_betti");
  if (!ideal.is_proper()) throw std::domain_error("hochster_betti: unit ideal");
  if (alpha.universe_size() != ideal.n())
    throw std::invalid_argument("hochster_betti: universe mismatch");
  if (i < 0) return 0;
  const SimplicialComplex delta = stanley_reisner_complex(alexander_dual(ideal));
  return cohomology_dim(full_subcomplex(delta, alpha), alpha.size() - i - 2, field);
}

long hochster_betti(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                    const FieldSpec& field) {
  if (!alpha.is_zero_one()) return 0;
  return hochster_betti(ideal, i, alpha.positive_support(), field);
}

std::vector<std::pair<MultiDegree, long>> hilbert_function_box(
    const MonomialIdeal& ideal, int i, const MultiDegree& lo, const MultiDegree& hi,
    const FieldSpec& field, GradedModule module) {
  require_squarefree_nonzero(ideal, "hilbert_function_box");
  if (lo.n() != ideal.n() || hi.n() != ideal.n())
    throw std::invalid_argument("hilbert_function_box: degree length mismatch");
  if (!lo.coordinatewise_leq(hi))
    throw std::invalid_argument("hilbert_function_box: box bounds out of order");
  {
    double size = 1;
    for (int j = 0; j < ideal.n(); ++j) size *= hi[j] - lo[j] + 1.0;
    if (size > static_cast<double>(1 << 22))
      throw std::invalid_argument("hilbert_function_box: box has more than 2^22 degrees");
  }

  const SimplicialComplex delta = stanley_reisner_complex(ideal);
  std::map<std::uint64_t, long> by_support;  // I_alpha class -> dimension
  std::vector<std::pair<MultiDegree, long>> out;

  std::vector<int> cur = lo.coords();
  const int n = ideal.n();
  while (true) {
    const MultiDegree alpha(cur);
    long dim = 0;
    if (module == GradedModule::Ext && !alpha.all_at_least(-1)) {
      dim = 0;
    } else {
      const VarSet supp = alpha.negative_support();
      const auto it = by_support.find(supp.bits());
      if (it != by_support.end()) {
        dim = it->second;
      } else {
        dim = cohomology_dim(full_subcomplex(delta, supp), i - 2, field);
        by_support.emplace(supp.bits(), dim);
      }
    }
    if (dim != 0) out.emplace_back(alpha, dim);

    int j = n - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == hi[j]) {
      cur[static_cast<std::size_t>(j)] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<HilbertTerm> hilbert_series_closed_form(const MonomialIdeal& ideal, int i,
                                                    const FieldSpec& field) {
  require_squarefree_nonzero(ideal, "hilbert_series_closed_form");
  if (!ideal.is_proper()) throw std::domain_error("hilbert_series_closed_form: unit ideal");
  const int n = ideal.n();
  // beta_{|a|-i, a}(dual) collapses through Hochster's formula to the
  // cohomology of this ideal's own complex restricted to a.
  const SimplicialComplex delta = stanley_reisner_complex(ideal);
  std::vector<HilbertTerm> terms;
  std::vector<VarSet> by_weight;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    by_weight.emplace_back(n, bits);
  std::sort(by_weight.begin(), by_weight.end(), [](const VarSet& a, const VarSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return face_lex_less(a, b);
  });
  for (const VarSet& a : by_weight) {
    const long mult = cohomology_dim(full_subcomplex(delta, a), i - 2, field);
    if (mult != 0) terms.push_back(HilbertTerm{a, a.complement(), mult});
  }
  return terms;
}

long evaluate_hilbert_terms(const std::vector<HilbertTerm>& terms, const MultiDegree& beta) {
  long total = 0;
  for (const HilbertTerm& t : terms) {
    bool matches = true;
    for (int j = 0; j < beta.n() && matches; ++j) {
      if (t.alpha.test(j)) {
        if (beta[j] != -1) matches = false;
      } else {
        if (beta[j] < 0) matches = false;
      }
    }
    if (matches) total += t.multiplicity;
  }
  return total;
}

}  // namespace locoh
