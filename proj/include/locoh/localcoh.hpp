#pragma once

#include <optional>
#include <vector>

#include "locoh/cohomology.hpp"
#include "locoh/monomial.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

/// One multigraded component of a local cohomology or Ext module, together
/// with the cochain bookkeeping behind it. `q` is the simplicial degree the
/// dimension was read from and `cochain_dim` the number of q-faces.
struct GradedPiece {
  MonomialIdeal ideal;
  int i = 0;
  MultiDegree alpha;
  long dim = 0;
  int q = 0;
  std::size_t cochain_dim = 0;
  std::optional<RenderedCohomology> basis;
};

/// dim_k H^i_B(R)_alpha for a squarefree nonzero ideal, read off the full
/// subcomplex of the ideal's complex on the negative support of alpha. The
/// value depends on alpha only through that support set.
GradedPiece lc_piece(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                     const FieldSpec& field, bool want_basis = false);

/// Same value computed on the generator-indexed complex instead; the two
/// routes agree through a nerve equivalence and are tested against each
/// other.
GradedPiece lc_piece_via_generators(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                                    const FieldSpec& field, bool want_basis = false);

/// dim_k Ext^i_R(R/B, R)_beta for squarefree B: equal to the local
/// cohomology component when beta >= (-1,..,-1), zero otherwise.
GradedPiece ext_piece(const MonomialIdeal& ideal, int i, const MultiDegree& beta,
                      const FieldSpec& field, bool want_basis = false);

/// dim_k Ext^i_R(R/B, R)_alpha for an arbitrary nonzero monomial ideal,
/// via the negative-support complex. Agrees with ext_piece on squarefree
/// ideals.
GradedPiece ext_piece_general(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                              const FieldSpec& field, bool want_basis = false);

/// Matrix of multiplication by X_var from degree alpha to alpha + e_var on
/// H^i_B(R), in the canonical cohomology bases. Invertible whenever
/// alpha_var != -1.
ExactMatrix multiplication_map(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                               int var, const FieldSpec& field);

/// Multigraded Betti number beta_{i,alpha}(ideal) = dim Tor_i(ideal, k)_alpha
/// for a squarefree degree given by its support set (Hochster's formula).
long hochster_betti(const MonomialIdeal& ideal, int i, const VarSet& alpha,
                    const FieldSpec& field);

/// MultiDegree overload; degrees outside {0,1}^n give 0.
long hochster_betti(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                    const FieldSpec& field);

enum class GradedModule { LocalCohomology, Ext };

/// Nonzero dimensions of the chosen module's graded pieces over a coordinate
/// box, memoized per negative-support class (only 2^n distinct values
/// exist). Degrees with dimension zero are omitted.
std::vector<std::pair<MultiDegree, long>> hilbert_function_box(
    const MonomialIdeal& ideal, int i, const MultiDegree& lo, const MultiDegree& hi,
    const FieldSpec& field, GradedModule module = GradedModule::LocalCohomology);

/// One summand of the Ext Hilbert series: the twist alpha (a squarefree
/// degree), its complementary free variable set, and the multiplicity
/// beta_{|alpha|-i, alpha} of the dual ideal.
struct HilbertTerm {
  VarSet alpha;
  VarSet free_vars;
  long multiplicity = 0;
};

/// Finite term list determining the Hilbert function of Ext^i_R(R/B, R):
/// each term contributes `multiplicity` at every degree beta with
/// beta_j = -1 on alpha and beta_j >= 0 elsewhere.
std::vector<HilbertTerm> hilbert_series_closed_form(const MonomialIdeal& ideal, int i,
                                                    const FieldSpec& field);

/// Pointwise evaluation of a closed-form term list at one degree.
long evaluate_hilbert_terms(const std::vector<HilbertTerm>& terms, const MultiDegree& beta);

}  // namespace locoh
