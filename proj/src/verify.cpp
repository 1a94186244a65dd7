#include "locoh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "locoh/cohomology.hpp"
#include "locoh/ideal_io.hpp"
#include "locoh/localcoh.hpp"
#include "locoh/matrix.hpp"
#include "locoh/simplicial.hpp"
#include "locoh/structure.hpp"
#include "locoh/taylor.hpp"

namespace locoh {

namespace {

constexpr std::size_t kMaxDetails = 5;

void record(VerifyCheck& check, bool ok, const std::string& what) {
  ++check.cases;
  if (!ok) {
    ++check.mismatches;
    if (check.details.size() < kMaxDetails) check.details.push_back(what);
  }
}

std::string show(const MonomialIdeal& ideal) {
  const std::vector<std::string> names = default_var_names(ideal.n());
  std::string out = "(";
  for (std::size_t g = 0; g < ideal.generators().size(); ++g) {
    if (g) out += ",";
    out += render_monomial(ideal.generators()[g], names);
  }
  return out + ")";
}

/// All degree vectors in [lo,hi]^n, or a seeded sample when the box exceeds
/// the budget.
std::vector<MultiDegree> degree_box(int n, int lo, int hi, std::size_t budget,
                                    std::uint64_t seed) {
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    total *= width;
    if (total > budget) break;
  }
  std::vector<MultiDegree> out;
  if (total <= budget) {
    std::vector<int> cur(static_cast<std::size_t>(n), lo);
    while (true) {
      out.emplace_back(cur);
      int j = n - 1;
      while (j >= 0 && cur[static_cast<std::size_t>(j)] == hi) {
        cur[static_cast<std::size_t>(j)] = lo;
        --j;
      }
      if (j < 0) break;
      ++cur[static_cast<std::size_t>(j)];
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < budget; ++k) {
      std::vector<int> cur(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        cur[static_cast<std::size_t>(j)] = lo + static_cast<int>(rng() % width);
      out.emplace_back(cur);
    }
  }
  return out;
}

VerifyCheck check_involution(const MonomialIdeal& B) {
  VerifyCheck check;
  check.name = "alexander dual involution";
  record(check, alexander_dual(alexander_dual(B)) == B, show(B));
  return check;
}

VerifyCheck check_sr_consistency(const MonomialIdeal& B) {
  VerifyCheck check;
  check.name = "stanley-reisner minimal non-faces = dual generators";
  const int n = B.n();
  if (n > 12) return check;  // subset enumeration only at desk scale
  const SimplicialComplex delta = stanley_reisner_complex(B);
  std::vector<VarSet> non_faces;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet f(n, bits);
    if (!delta.contains_face(f)) non_faces.push_back(f);
  }
  std::vector<VarSet> minimal_nf = inclusion_minimal(std::move(non_faces));
  std::vector<VarSet> dual_supports;
  const MonomialIdeal dual = alexander_dual(B);
  for (const Monomial& g : dual.generators()) dual_supports.push_back(g.support());
  std::sort(dual_supports.begin(), dual_supports.end(), face_lex_less);
  record(check, minimal_nf == dual_supports, show(B));
  return check;
}

VerifyCheck check_duality(const MonomialIdeal& B, const VerifyOptions& opt) {
  VerifyCheck check;
  check.name = "tor/ext duality and taylor tor oracle";
  const MonomialIdeal dual = alexander_dual(B);
  const int n = B.n();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VarSet a(n, bits);
    const MultiDegree alpha = MultiDegree::indicator(a);
    for (int i = -1; i <= n + 1; ++i) {
      const long hochster = i < 0 ? 0 : hochster_betti(dual, i, a, opt.field);
      const long ext = ext_piece(B, a.size() - i, alpha.negated(), opt.field).dim;
      record(check, hochster == ext,
             show(B) + " i=" + std::to_string(i) + " a=" + render_multidegree(alpha) +
                 " hochster=" + std::to_string(hochster) + " ext=" + std::to_string(ext));
      const long tor = tor_via_taylor(dual, i, alpha, opt.field);
      record(check, tor == hochster,
             show(B) + " i=" + std::to_string(i) + " a=" + render_multidegree(alpha) +
                 " tor=" + std::to_string(tor) + " hochster=" + std::to_string(hochster));
    }
  }
  return check;
}

VerifyCheck check_pathways(const MonomialIdeal& B, const VerifyOptions& opt) {
  VerifyCheck check;
  check.name = "pathway agreement (subcomplex / generator complex / general)";
  const int n = B.n();
  // one representative per sign class, which covers every degree
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
      if ((bits >> j) & 1) coords[static_cast<std::size_t>(j)] = -1;
    const MultiDegree alpha(coords);
    for (int i = 0; i <= n + 2; ++i) {
      const long direct = lc_piece(B, i, alpha, opt.field).dim;
      const long via_gens = lc_piece_via_generators(B, i, alpha, opt.field).dim;
      const long general = ext_piece_general(B, i, alpha, opt.field).dim;
      record(check, direct == via_gens && direct == general,
             show(B) + " i=" + std::to_string(i) + " alpha=" + render_multidegree(alpha) +
                 " direct=" + std::to_string(direct) + " gens=" + std::to_string(via_gens) +
                 " general=" + std::to_string(general));
    }
  }
  return check;
}

VerifyCheck check_stabilization(const MonomialIdeal& B, const VerifyOptions& opt) {
  VerifyCheck check;
  check.name = "taylor ext stabilization in d";
  const int n = B.n();
  // ext strands grow with 2^r; shrink the degree sample as r does
  const int r = B.num_generators();
  std::size_t budget = opt.box_budget;
  if (r == 6) budget = std::min<std::size_t>(budget, 256);
  if (r == 7) budget = std::min<std::size_t>(budget, 64);
  if (r == 8) budget = std::min<std::size_t>(budget, 16);
  if (r > 8) return check;  // the dedicated oracle entry points still work
  const auto degrees = degree_box(n, -opt.d_max, 1, budget, opt.seed ^ 0x5742u);
  for (const MultiDegree& alpha : degrees) {
    for (int i = 0; i <= n; ++i) {
      const StabilizationReport report =
          stabilization_check(B, i, alpha, opt.d_max, opt.field);
      record(check, report.vanishing_ok && report.stabilization_ok,
             show(B) + " i=" + std::to_string(i) + " alpha=" + render_multidegree(alpha));
    }
  }
  return check;
}

VerifyCheck check_multiplication(const MonomialIdeal& B, const VerifyOptions& opt) {
  VerifyCheck check;
  check.name = "multiplication maps (isomorphism clause, composition)";
  const int n = B.n();
  std::mt19937_64 rng(opt.seed ^ 0xau);
  const int samples = 40;
  for (int s = 0; s < samples; ++s) {
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) coords[static_cast<std::size_t>(j)] = -2 + static_cast<int>(rng() % 4);
    const MultiDegree alpha(coords);
    const int l = static_cast<int>(rng() % n);
    const int m = static_cast<int>(rng() % n);
    const int i = static_cast<int>(rng() % (n + 2));
    const ExactMatrix by_l = multiplication_map(B, i, alpha, l, opt.field);
    if (alpha[l] != -1)
      record(check, by_l.invertible(),
             show(B) + " not invertible at i=" + std::to_string(i) +
                 " alpha=" + render_multidegree(alpha) + " l=" + std::to_string(l));
    // composing in either variable order gives the same matrix
    with_field(opt.field, [&](auto fld) {
      using F = decltype(fld);
      const SimplicialComplex delta = stanley_reisner_complex(B);
      const int q = i - 2;
      const auto basis_at = [&](const MultiDegree& deg) {
        return reduced_cohomology_basis(fld, full_subcomplex(delta, deg.negative_support()), q);
      };
      const auto base = basis_at(alpha);
      const auto after_l = basis_at(alpha.plus_unit(l));
      const auto after_m = basis_at(alpha.plus_unit(m));
      const auto end = basis_at(alpha.plus_unit(l).plus_unit(m));
      const Matrix<F> lm =
          restriction_matrix(fld, after_l, end) * restriction_matrix(fld, base, after_l);
      const Matrix<F> ml =
          restriction_matrix(fld, after_m, end) * restriction_matrix(fld, base, after_m);
      record(check, lm == ml,
             show(B) + " composition differs at i=" + std::to_string(i) +
                 " alpha=" + render_multidegree(alpha) + " l=" + std::to_string(l) +
                 " m=" + std::to_string(m));
    });
  }
  return check;
}

VerifyCheck check_betti(const MonomialIdeal& B, const VerifyOptions& opt) {
  VerifyCheck check;
  check.name = "betti inequality and extremal equality";
  const BettiCheckReport report = check_betti_inequality(B, opt.field);
  record(check, report.violations == 0,
         show(B) + " violations=" + std::to_string(report.violations));
  return check;
}

VerifyCheck check_hilbert(const MonomialIdeal& B, const VerifyOptions& opt) {
  VerifyCheck check;
  check.name = "hilbert closed form vs ext pieces";
  const int n = B.n();
  for (int i = 0; i <= n; ++i) {
    const auto terms = hilbert_series_closed_form(B, i, opt.field);
    const auto degrees = degree_box(n, -1, 2, opt.box_budget, opt.seed ^ 0x48u);
    for (const MultiDegree& beta : degrees) {
      const long from_terms = evaluate_hilbert_terms(terms, beta);
      const long from_pieces = ext_piece(B, i, beta, opt.field).dim;
      record(check, from_terms == from_pieces,
             show(B) + " i=" + std::to_string(i) + " beta=" + render_multidegree(beta) +
                 " terms=" + std::to_string(from_terms) +
                 " pieces=" + std::to_string(from_pieces));
    }
  }
  return check;
}

void merge(VerifyReport& into, const VerifyReport& from) {
  for (const VerifyCheck& check : from.checks) {
    auto it = std::find_if(into.checks.begin(), into.checks.end(),
                           [&](const VerifyCheck& c) { return c.name == check.name; });
    if (it == into.checks.end()) {
      into.checks.push_back(check);
      continue;
    }
    it->cases += check.cases;
    it->mismatches += check.mismatches;
    for (const std::string& d : check.details)
      if (it->details.size() < kMaxDetails) it->details.push_back(d);
  }
}

}  // namespace

VerifyReport verify_ideal(const MonomialIdeal& ideal, const VerifyOptions& options) {
  if (ideal.is_zero()) throw std::domain_error("verify: zero ideal");
  if (!ideal.is_proper()) throw std::domain_error("verify: unit ideal");
  if (!ideal.is_squarefree())
    throw std::domain_error("verify: oracle suite needs a squarefree ideal");
  VerifyReport report;
  report.checks.push_back(check_involution(ideal));
  report.checks.push_back(check_sr_consistency(ideal));
  report.checks.push_back(check_duality(ideal, options));
  report.checks.push_back(check_pathways(ideal, options));
  report.checks.push_back(check_stabilization(ideal, options));
  report.checks.push_back(check_multiplication(ideal, options));
  report.checks.push_back(check_betti(ideal, options));
  report.checks.push_back(check_hilbert(ideal, options));
  return report;
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int max_vars, int max_gens) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_vars - 1)));
  const int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
  std::vector<Monomial> gens;
  for (int g = 0; g < r; ++g) {
    const std::uint64_t mask = 1 + rng() % ((std::uint64_t{1} << n) - 1);
    gens.push_back(Monomial::from_support(VarSet(n, mask)));
  }
  return MonomialIdeal(n, std::move(gens));
}

VerifyReport verify_random(int count, const VerifyOptions& options,
                           std::vector<std::string>* labels) {
  std::mt19937_64 rng(options.seed);
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) ideals.push_back(random_squarefree_ideal(rng, 5, 5));
  if (labels)
    for (const MonomialIdeal& ideal : ideals) labels->push_back(show(ideal));

  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOCOH_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) workers = static_cast<std::size_t>(v);
  }
  workers = std::min(workers, ideals.size());

  std::vector<VerifyReport> partial(ideals.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < std::max<std::size_t>(workers, 1); ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= ideals.size()) return;
        partial[k] = verify_ideal(ideals[k], options);
      }
    });
  }
  for (std::thread& t : pool) t.join();

  VerifyReport merged;
  for (const VerifyReport& r : partial) merge(merged, r);
  return merged;
}

}  // namespace locoh
