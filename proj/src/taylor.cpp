#include "locoh/taylor.hpp"

#include <bit>
#include <stdexcept>

#include "locoh/cohomology.hpp"
#include "locoh/localcoh.hpp"
#include "locoh/matrix.hpp"

namespace locoh {

namespace {
constexpr int kMaxTaylorGenerators = 20;

int position_in_subset(std::uint32_t subset, int member) {
  return std::popcount(subset & ((std::uint32_t{1} << member) - 1));
}
}  // namespace

TaylorComplex::TaylorComplex(const MonomialIdeal& ideal, int power)
    : ideal_(ideal), power_(power), r_(ideal.num_generators()) {
  if (ideal.is_zero()) throw std::domain_error("TaylorComplex: zero ideal");
  if (power < 1) throw std::invalid_argument("TaylorComplex: power must be >= 1");
  if (r_ > kMaxTaylorGenerators)
    throw std::length_error("TaylorComplex: more than 20 generators");
  lcms_.reserve(std::size_t{1} << r_);
  lcms_.push_back(Monomial::one(ideal.n()));
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << r_); ++s) {
    const int low = std::countr_zero(s);
    lcms_.push_back(
        lcms_[s & (s - 1)].lcm_with(ideal.generators()[static_cast<std::size_t>(low)]));
  }
}

std::vector<std::uint32_t> TaylorComplex::basis_of_rank(int p) const {
  std::vector<std::uint32_t> out;
  if (p < 0 || p > r_) return out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << r_); ++s)
    if (std::popcount(s) == p) out.push_back(s);
  return out;
}

std::vector<TaylorComplex::DifferentialTerm> TaylorComplex::differential(
    std::uint32_t subset) const {
  std::vector<DifferentialTerm> terms;
  const Monomial full = lcm(subset).power(power_);
  for (std::uint32_t s = subset; s != 0; s &= s - 1) {
    const int member = std::countr_zero(s);
    const std::uint32_t target = subset & ~(std::uint32_t{1} << member);
    const int sign = position_in_subset(subset, member) % 2 == 0 ? 1 : -1;
    terms.push_back(DifferentialTerm{target, sign, full / lcm(target).power(power_)});
  }
  return terms;
}

TaylorComplex build_taylor(const MonomialIdeal& ideal, int power) {
  return TaylorComplex(ideal, power);
}

namespace {

// Degree-alpha strand of the dual: one basis element per subset I with
// alpha + d*deg(m_I) >= 0 (the unique monomial of that degree).
std::vector<std::vector<std::uint32_t>> dual_strand_subsets(const TaylorComplex& taylor,
                                                            const MultiDegree& alpha) {
  const int r = taylor.num_generators();
  const auto in_strand = [&](std::uint32_t subset) {
    const MultiDegree deg = taylor.basis_degree(subset);
    for (int j = 0; j < alpha.n(); ++j)
      if (alpha[j] + deg[j] < 0) return false;
    return true;
  };
  std::vector<std::vector<std::uint32_t>> strand(static_cast<std::size_t>(r) + 1);
  for (int p = 0; p <= r; ++p)
    for (std::uint32_t s : taylor.basis_of_rank(p))
      if (in_strand(s)) strand[static_cast<std::size_t>(p)].push_back(s);
  return strand;
}

}  // namespace

std::vector<std::size_t> taylor_strand_sizes(const MonomialIdeal& ideal, int power,
                                             const MultiDegree& alpha) {
  if (ideal.is_zero()) throw std::domain_error("taylor_strand_sizes: zero ideal");
  if (alpha.n() != ideal.n())
    throw std::invalid_argument("taylor_strand_sizes: degree mismatch");
  const TaylorComplex taylor(ideal, power);
  std::vector<std::size_t> sizes;
  for (const auto& rank : dual_strand_subsets(taylor, alpha)) sizes.push_back(rank.size());
  return sizes;
}

long ext_via_taylor(const MonomialIdeal& ideal, int power, int i, const MultiDegree& alpha,
                    const FieldSpec& field) {
  if (ideal.is_zero()) throw std::domain_error("ext_via_taylor: zero ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("ext_via_taylor: ideal must be squarefree");
  if (alpha.n() != ideal.n()) throw std::invalid_argument("ext_via_taylor: degree mismatch");
  const TaylorComplex taylor(ideal, power);
  const int r = taylor.num_generators();
  if (i < 0 || i > r) return 0;

  const std::vector<std::vector<std::uint32_t>> strand = dual_strand_subsets(taylor, alpha);

  return with_field(field, [&](auto f) {
    using F = decltype(f);
    std::vector<Matrix<F>> ds;
    ds.reserve(static_cast<std::size_t>(r));
    for (int p = 0; p < r; ++p) {
      const auto& cols = strand[static_cast<std::size_t>(p)];
      const auto& rows = strand[static_cast<std::size_t>(p) + 1];
      std::map<std::uint32_t, std::size_t> row_of;
      for (std::size_t t = 0; t < rows.size(); ++t) row_of[rows[t]] = t;
      Matrix<F> m(f, rows.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        // dual differential: e_J -> sum of signed e_{J+g} over supersets
        for (int g = 0; g < r; ++g) {
          const std::uint32_t bit = std::uint32_t{1} << g;
          if (cols[c] & bit) continue;
          const std::uint32_t up = cols[c] | bit;
          const auto it = row_of.find(up);
          if (it == row_of.end()) continue;
          m.at(it->second, c) = f.from_int(position_in_subset(up, g) % 2 == 0 ? 1 : -1);
        }
      }
      ds.push_back(std::move(m));
    }
    return strand_cohomology(f, ds, static_cast<std::size_t>(i));
  });
}

long tor_via_taylor(const MonomialIdeal& ideal, int i, const MultiDegree& alpha,
                    const FieldSpec& field) {
  if (ideal.is_zero()) throw std::domain_error("tor_via_taylor: zero ideal");
  if (!ideal.is_proper()) throw std::domain_error("tor_via_taylor: unit ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("tor_via_taylor: ideal must be squarefree");
  if (alpha.n() != ideal.n()) throw std::invalid_argument("tor_via_taylor: degree mismatch");
  const TaylorComplex taylor(ideal, 1);
  const int r = taylor.num_generators();
  if (i < 0 || i + 1 > r) return 0;

  // Tensoring with k keeps only differential terms whose monomial
  // coefficient is 1, i.e. steps that preserve the lcm degree. The Taylor
  // terms resolving the ideal itself sit one rank up.
  const auto strand_at = [&](int p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s : taylor.basis_of_rank(p))
      if (taylor.basis_degree(s) == alpha) out.push_back(s);
    return out;
  };
  const std::vector<std::uint32_t> above = strand_at(i + 2);
  const std::vector<std::uint32_t> here = strand_at(i + 1);
  const std::vector<std::uint32_t> below = strand_at(i);

  return with_field(field, [&](auto f) {
    using F = decltype(f);
    const auto boundary = [&](const std::vector<std::uint32_t>& from,
                              const std::vector<std::uint32_t>& to) {
      std::map<std::uint32_t, std::size_t> row_of;
      for (std::size_t t = 0; t < to.size(); ++t) row_of[to[t]] = t;
      Matrix<F> m(f, to.size(), from.size());
      for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& term : taylor.differential(from[c])) {
          if (!term.coefficient.is_one()) continue;
          const auto it = row_of.find(term.target);
          if (it == row_of.end()) continue;
          m.at(it->second, c) = f.from_int(term.sign);
        }
      return m;
    };
    std::vector<Matrix<F>> ds;
    ds.push_back(boundary(above, here));
    if (i >= 1) ds.push_back(boundary(here, below));
    return strand_cohomology(f, ds, 1);
  });
}

StabilizationReport stabilization_check(const MonomialIdeal& ideal, int i,
                                        const MultiDegree& alpha, int d_max,
                                        const FieldSpec& field) {
  if (d_max < 1) throw std::invalid_argument("stabilization_check: d_max must be >= 1");
  StabilizationReport report;
  report.limit_value = lc_piece(ideal, i, alpha, field).dim;
  for (int d = 1; d <= d_max; ++d) {
    StabilizationReport::Row row;
    row.d = d;
    row.value = ext_via_taylor(ideal, d, i, alpha, field);
    row.degree_in_range = alpha.all_at_least(-d);
    if (row.degree_in_range) {
      if (report.first_stable_d == 0) report.first_stable_d = d;
      if (row.value != report.limit_value) report.stabilization_ok = false;
    } else if (row.value != 0) {
      report.vanishing_ok = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace locoh
