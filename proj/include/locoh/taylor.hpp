#pragma once

#include <cstdint>
#include <vector>

#include "locoh/field.hpp"
#include "locoh/monomial.hpp"

namespace locoh {

/// Taylor complex of the d-th Frobenius power of an ideal: free basis
/// elements indexed by generator subsets, graded by subset size, with
/// lcm-power degrees and Koszul-style signed monomial differentials.
/// A brute-force homological pathway kept deliberately independent of the
/// simplicial one; capped at 20 generators (2^r basis elements).
class TaylorComplex {
 public:
  struct DifferentialTerm {
    std::uint32_t target;  // subset with one generator removed
    int sign;              // (-1)^{position of the removed generator}
    Monomial coefficient;  // (m_I / m_{I minus i})^d
  };

  TaylorComplex(const MonomialIdeal& ideal, int power);

  const MonomialIdeal& ideal() const { return ideal_; }
  int power() const { return power_; }
  int num_generators() const { return r_; }

  /// deg(f^d_I) = d * deg(lcm of the generators in `subset`).
  const Monomial& lcm(std::uint32_t subset) const { return lcms_[subset]; }
  MultiDegree basis_degree(std::uint32_t subset) const {
    return lcm(subset).power(power_).degree();
  }

  /// Subsets of the given size, ascending by bit pattern.
  std::vector<std::uint32_t> basis_of_rank(int p) const;

  /// Signed monomial terms of the differential applied to f_subset.
  std::vector<DifferentialTerm> differential(std::uint32_t subset) const;

 private:
  MonomialIdeal ideal_;
  int power_;
  int r_;
  std::vector<Monomial> lcms_;  // 2^r entries, lcm of each generator subset
};

TaylorComplex build_taylor(const MonomialIdeal& ideal, int power);

/// dim_k Ext^i_R(R/B^[d], R)_alpha computed from the degree-alpha strand of
/// the dualized Taylor complex of a squarefree nonzero ideal.
long ext_via_taylor(const MonomialIdeal& ideal, int power, int i, const MultiDegree& alpha,
                    const FieldSpec& field);

/// Basis sizes of that strand by homological rank, before any elimination.
std::vector<std::size_t> taylor_strand_sizes(const MonomialIdeal& ideal, int power,
                                             const MultiDegree& alpha);

/// dim_k Tor_i^R(ideal, k)_alpha from the Taylor complex of the ideal
/// (differential entries collapse to 0/1 scalars over k).
long tor_via_taylor(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                    const FieldSpec& field);

/// Ext values along d = 1..d_max at a fixed (i, alpha), with the expected
/// stabilization bookkeeping made explicit.
struct StabilizationReport {
  struct Row {
    int d = 0;
    long value = 0;
    bool degree_in_range = false;  // alpha >= (-d,..,-d)
  };
  std::vector<Row> rows;
  int first_stable_d = 0;  // smallest d with alpha >= -d (0 if beyond d_max)
  long limit_value = 0;    // lc_piece dimension
  bool vanishing_ok = true;   // value 0 whenever some alpha_j < -d
  bool stabilization_ok = true;  // value == limit for every in-range d
};

StabilizationReport stabilization_check(const MonomialIdeal& ideal, int i,
                                        const MultiDegree& alpha, int d_max,
                                        const FieldSpec& field);

}  // namespace locoh
