#include "locoh/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "locoh/cohomology.hpp"
#include "locoh/localcoh.hpp"
#include "locoh/matrix.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

namespace {

void require_sf_proper(const MonomialIdeal& ideal, const char* who) {
  if (ideal.is_zero()) throw std::domain_error(std::string(who) + ": zero ideal");
  if (!ideal.is_proper()) throw std::domain_error(std::string(who) + ": unit ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error(std::string(who) + ": ideal must be squarefree");
}

std::vector<VarSet> subsets_by_weight(int n) {
  std::vector<VarSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    out.emplace_back(n, bits);
  std::sort(out.begin(), out.end(), [](const VarSet& a, const VarSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return face_lex_less(a, b);
  });
  return out;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field) {
  require_sf_proper(ideal, "betti_table");
  BettiTable table;
  table.ideal = ideal;
  const SimplicialComplex delta = stanley_reisner_complex(alexander_dual(ideal));
  for (const VarSet& a : subsets_by_weight(ideal.n())) {
    if (a.empty()) continue;
    const SimplicialComplex sub = full_subcomplex(delta, a);
    for (int i = 0; i + 1 <= a.size(); ++i) {
      const long b = cohomology_dim(sub, a.size() - i - 2, field);
      if (b != 0) table.entries[{i, a.bits()}] = b;
    }
  }
  return table;
}

BettiDiagram betti_diagram(const MonomialIdeal& ideal, const FieldSpec& field) {
  BettiDiagram diagram;
  diagram.table = betti_table(ideal, field);
  std::map<std::pair<int, int>, BettiDiagram::Cell> cells;
  for (const auto& [key, mult] : diagram.table.entries) {
    const auto [j, bits] = key;
    const VarSet a(ideal.n(), bits);
    const int row = a.size() - j;
    auto& cell = cells[{row, j}];
    cell.row = row;
    cell.col = j;
    cell.total += mult;
    cell.degrees.emplace_back(a, mult);
    diagram.max_row = std::max(diagram.max_row, row);
    diagram.max_col = std::max(diagram.max_col, j);
  }
  for (auto& [key, cell] : cells) {
    std::sort(cell.degrees.begin(), cell.degrees.end(),
              [](const auto& x, const auto& y) { return face_lex_less(x.first, y.first); });
    diagram.cells.push_back(std::move(cell));
  }
  return diagram;
}

bool is_extremal(const BettiTable& table, int i, const VarSet& alpha) {
  for (const auto& [key, mult] : table.entries) {
    if (mult == 0) continue;
    const auto [j, bits] = key;
    if (j < i) continue;
    const VarSet other(alpha.universe_size(), bits);
    if (other == alpha || !alpha.subset_of(other)) continue;
    if (other.size() - alpha.size() >= j - i) return false;
  }
  return true;
}

FiltrationReport filtration_quotients(const MonomialIdeal& ideal, int i,
                                      const FieldSpec& field) {
  require_sf_proper(ideal, "filtration_quotients");
  FiltrationReport report;
  report.ideal = ideal;
  report.i = i;
  const int n = ideal.n();
  report.layers.resize(static_cast<std::size_t>(n) + 1);
  // beta_{l-i,alpha}(dual) via Hochster collapses onto this ideal's own
  // complex restricted to the support of alpha.
  const SimplicialComplex delta = stanley_reisner_complex(ideal);
  for (const VarSet& a : subsets_by_weight(n)) {
    if (a.empty()) continue;  // layer 0 is always empty
    const long mult = cohomology_dim(full_subcomplex(delta, a), i - 2, field);
    if (mult != 0)
      report.layers[static_cast<std::size_t>(a.size())].push_back(
          FiltrationReport::Entry{a, mult});
  }
  return report;
}

BettiCheckReport check_betti_inequality(const MonomialIdeal& ideal, const FieldSpec& field) {
  require_sf_proper(ideal, "check_betti_inequality");
  BettiCheckReport report;
  report.ideal = ideal;
  const MonomialIdeal dual = alexander_dual(ideal);
  const BettiTable primal_table = betti_table(ideal, field);
  const BettiTable dual_table = betti_table(dual, field);
  const int n = ideal.n();
  for (const VarSet& a : subsets_by_weight(n)) {
    for (int i = 0; i <= n; ++i) {
      BettiCheckReport::Row row;
      row.i = i;
      row.alpha = a;
      row.lhs = primal_table.at(i, a);
      const int dual_index = a.size() - i - 1;
      row.dual_value = dual_index < 0 ? 0 : dual_table.at(dual_index, a);
      for (const auto& [key, mult] : dual_table.entries) {
        const auto [j, bits] = key;
        if (j != dual_index) continue;
        if (a.subset_of(VarSet(n, bits))) row.rhs += mult;
      }
      row.inequality_ok = row.lhs <= row.rhs;
      row.dual_extremal = row.dual_value != 0 && is_extremal(dual_table, dual_index, a);
      if (row.dual_extremal)
        row.equality_ok = row.lhs == row.dual_value && is_extremal(primal_table, i, a);
      if (!row.inequality_ok || !row.equality_ok) ++report.violations;
      if (row.lhs != 0 || row.rhs != 0 || row.dual_value != 0)
        report.rows.push_back(row);
    }
  }
  return report;
}

PrimeIdealSet associated_primes(const MonomialIdeal& ideal, int i, const FieldSpec& field) {
  require_sf_proper(ideal, "associated_primes");
  PrimeIdealSet out;
  const SimplicialComplex delta = stanley_reisner_complex(ideal);
  const int q = i - 2;
  for (const VarSet& f : subsets_by_weight(ideal.n())) {
    if (f.empty()) continue;
    const SimplicialComplex on_f = full_subcomplex(delta, f);
    if (cohomology_dim(on_f, q, field) == 0) continue;
    const bool joint_kernel = with_field(field, [&](auto fld) {
      using F = decltype(fld);
      const CohomologyBasis<F> src = reduced_cohomology_basis(fld, on_f, q);
      // stack the one-vertex-deleted restrictions and test rank once
      std::vector<Matrix<F>> blocks;
      std::size_t total_rows = 0;
      for (const int j : f.members()) {
        const CohomologyBasis<F> dst =
            reduced_cohomology_basis(fld, full_subcomplex(delta, f.without(j)), q);
        Matrix<F> block = restriction_matrix(fld, src, dst);
        total_rows += block.rows();
        blocks.push_back(std::move(block));
      }
      Matrix<F> stacked(fld, total_rows, src.dim());
      std::size_t r0 = 0;
      for (const Matrix<F>& block : blocks) {
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) stacked.at(r0 + r, c) = block.at(r, c);
        r0 += block.rows();
      }
      return stacked.rank() < src.dim();
    });
    if (joint_kernel) out.primes.push_back(f);
  }
  return out;
}

PrimeIdealSet minimal_associated_primes(const MonomialIdeal& ideal, int i,
                                        const FieldSpec& field) {
  require_sf_proper(ideal, "minimal_associated_primes");
  const SimplicialComplex delta = stanley_reisner_complex(ideal);
  PrimeIdealSet out;
  std::vector<VarSet> support;  // nonzero dual Betti supports, ascending weight
  for (const VarSet& a : subsets_by_weight(ideal.n())) {
    if (a.empty()) continue;
    if (cohomology_dim(full_subcomplex(delta, a), i - 2, field) == 0) continue;
    bool minimal = true;
    for (const VarSet& smaller : support)
      if (smaller.subset_of(a)) {
        minimal = false;
        break;
      }
    support.push_back(a);
    if (minimal) out.primes.push_back(a);
  }
  return out;
}

}  // namespace locoh
