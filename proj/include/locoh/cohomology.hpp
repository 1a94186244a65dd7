#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "locoh/field.hpp"
#include "locoh/matrix.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

// Reduced simplicial cohomology over an exact field.
//
// Conventions, which several callers lean on:
//   - the void complex has trivial cohomology in every degree;
//   - the empty complex {∅} has H^{-1} = k and nothing else;
//   - the cochain complex is augmented: C^{-1} is spanned by the empty face;
//   - q-faces are ordered face-lex, coboundary signs come from the position
//     of the inserted vertex in the sorted target face.

/// Basis of H^q(complex; k): deterministic echelon-form cocycle
/// representatives with their coordinate face order.
template <class F>
struct CohomologyBasis {
  SimplicialComplex complex;
  int q = 0;
  std::vector<VarSet> faces;    // q-faces carrying cochain coordinates
  std::vector<VarSet> cofaces;  // (q+1)-faces
  std::vector<std::vector<typename F::Elem>> reps;

  std::size_t dim() const { return reps.size(); }
};

/// Coboundary matrix C^q -> C^{q+1}; rows are (q+1)-faces, columns q-faces.
template <class F>
Matrix<F> coboundary_matrix(const F& field, const SimplicialComplex& complex, int q) {
  const std::vector<VarSet> lo = complex.faces_with_card(q + 1);
  const std::vector<VarSet> hi = complex.faces_with_card(q + 2);
  Matrix<F> d(field, hi.size(), lo.size());
  std::map<std::uint64_t, std::size_t> col;
  for (std::size_t j = 0; j < lo.size(); ++j) col[lo[j].bits()] = j;
  for (std::size_t r = 0; r < hi.size(); ++r) {
    const std::vector<int> verts = hi[r].members();
    for (std::size_t pos = 0; pos < verts.size(); ++pos) {
      const VarSet face = hi[r].without(verts[pos]);
      const auto it = col.find(face.bits());
      if (it == col.end())
        throw std::logic_error("coboundary_matrix: complex is not downward closed");
      d.at(r, it->second) = field.from_int(pos % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

template <class F>
CohomologyBasis<F> reduced_cohomology_basis(const F& field, const SimplicialComplex& complex,
                                            int q) {
  CohomologyBasis<F> out;
  out.complex = complex;
  out.q = q;
  if (complex.is_void() || q < -1) return out;
  out.faces = complex.faces_with_card(q + 1);
  out.cofaces = complex.faces_with_card(q + 2);
  if (out.faces.empty()) return out;

  const Matrix<F> d_out = coboundary_matrix(field, complex, q);
  const Matrix<F> d_in = coboundary_matrix(field, complex, q - 1);

  RowSpace<F> span(field);
  for (std::size_t c = 0; c < d_in.cols(); ++c) {
    std::vector<typename F::Elem> col(d_in.rows(), field.zero());
    for (std::size_t r = 0; r < d_in.rows(); ++r) col[r] = d_in.at(r, c);
    span.add(std::move(col));
  }
  const std::size_t image_rank = span.dim();

  std::size_t kernel_dim = 0;
  for (auto& z : d_out.kernel_basis()) {
    ++kernel_dim;
    if (auto rep = span.add(std::move(z))) out.reps.push_back(std::move(*rep));
  }
  if (out.reps.size() != kernel_dim - image_rank)
    throw std::logic_error("reduced_cohomology_basis: rank bookkeeping failed");
  return out;
}

/// Matrix of H^q(big) -> H^q(small) induced by the inclusion of `small` in
/// `big`, in the two echelon bases; rows index the target basis. The
/// restricted representative is certified to be a cocycle of `small` by
/// solving restricted = (target combination) + coboundary exactly.
template <class F>
Matrix<F> restriction_matrix(const F& field, const CohomologyBasis<F>& big,
                             const CohomologyBasis<F>& small) {
  Matrix<F> out(field, small.dim(), big.dim());
  if (small.dim() == 0 || big.dim() == 0) return out;
  if (small.q != big.q) throw std::invalid_argument("restriction_matrix: degree mismatch");
  const int q = big.q;

  std::map<std::uint64_t, std::size_t> src_index;
  for (std::size_t j = 0; j < big.faces.size(); ++j) src_index[big.faces[j].bits()] = j;

  // unknowns: target combination coefficients, then a coboundary witness
  const Matrix<F> d_in = coboundary_matrix(field, small.complex, q - 1);
  const std::size_t nf = small.faces.size();
  Matrix<F> lhs(field, nf, small.dim() + d_in.cols());
  for (std::size_t t = 0; t < small.dim(); ++t)
    for (std::size_t r = 0; r < nf; ++r) lhs.at(r, t) = small.reps[t][r];
  for (std::size_t c = 0; c < d_in.cols(); ++c)
    for (std::size_t r = 0; r < nf; ++r) lhs.at(r, small.dim() + c) = d_in.at(r, c);

  Matrix<F> rhs(field, nf, big.dim());
  for (std::size_t s = 0; s < big.dim(); ++s)
    for (std::size_t r = 0; r < nf; ++r) {
      const auto it = src_index.find(small.faces[r].bits());
      if (it == src_index.end())
        throw std::invalid_argument("restriction_matrix: not a subcomplex");
      rhs.at(r, s) = big.reps[s][it->second];
    }

  const auto x = lhs.solve(rhs);
  if (!x)
    throw std::logic_error("restriction_matrix: restricted cocycle not expressible");
  for (std::size_t t = 0; t < small.dim(); ++t)
    for (std::size_t s = 0; s < big.dim(); ++s) out.at(t, s) = x->at(t, s);
  return out;
}

/// Cohomology dimension of a finite complex of based vector spaces given by
/// its differentials d[j] : term j -> term j+1. `position` may be any term
/// index in [0, d.size()]. Consecutive differentials must compose to zero.
template <class F>
long strand_cohomology(const F& field, const std::vector<Matrix<F>>& d, std::size_t position) {
  (void)field;
  if (position > d.size()) throw std::invalid_argument("strand_cohomology: position out of range");
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    if (d[j + 1].cols() != d[j].rows())
      throw std::logic_error("strand_cohomology: inconsistent term dimensions");
    if (!(d[j + 1] * d[j]).is_zero())
      throw std::logic_error("strand_cohomology: differentials do not compose to zero");
  }
  const bool has_out = position < d.size();
  const bool has_in = position > 0;
  const std::size_t dim_here = has_out ? d[position].cols() : d[position - 1].rows();
  const long kernel = has_out
                          ? static_cast<long>(d[position].cols()) -
                                static_cast<long>(d[position].rank())
                          : static_cast<long>(dim_here);
  const long image = has_in ? static_cast<long>(d[position - 1].rank()) : 0;
  return kernel - image;
}

// ---------------------------------------------------------------------------
// Field-erased layer.

/// Cached dimension of H^q(complex; k). The cache is process-wide, keyed by
/// the canonical facet list, q and the field, and safe to share between
/// threads.
long cohomology_dim(const SimplicialComplex& complex, int q, const FieldSpec& field);

/// Rendered cohomology basis for display layers.
struct RenderedCohomology {
  int q = 0;
  long dim = 0;
  std::vector<VarSet> faces;
  std::vector<std::vector<std::string>> reps;  // canonical scalar strings
};

RenderedCohomology reduced_cohomology(const SimplicialComplex& complex, int q,
                                      const FieldSpec& field);

/// Field-erased exact matrix for display layers; entries are canonical
/// scalar strings in row-major order.
struct ExactMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> entries;
  FieldSpec field;
  std::size_t rank = 0;

  bool invertible() const { return rows == cols && rank == rows; }
  const std::string& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Matrix of H^q(big) -> H^q(small) for a subcomplex inclusion; throws
/// std::invalid_argument when `small` is not a subcomplex of `big`.
ExactMatrix restriction_on_cohomology(const SimplicialComplex& big,
                                      const SimplicialComplex& small, int q,
                                      const FieldSpec& field);

}  // namespace locoh
