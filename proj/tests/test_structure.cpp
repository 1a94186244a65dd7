#include <random>

#include "doctest.h"
#include "locoh/localcoh.hpp"
#include "locoh/structure.hpp"
#include "locoh/verify.hpp"
#include "support/build.hpp"

using namespace locoh;
using namespace locoh::testing;

namespace {
const FieldSpec kQQ = FieldSpec::rationals();
}

TEST_CASE("filtration layers of the introduction example") {
  const MonomialIdeal b = ideal(4, {"ab", "cd"});
  const FiltrationReport report = filtration_quotients(b, 2, kQQ);
  REQUIRE(report.layers.size() == 5);
  CHECK(report.layers[0].empty());
  CHECK(report.layers[1].empty());
  REQUIRE(report.layers[2].size() == 4);
  for (const auto& entry : report.layers[2]) {
    CHECK(entry.multiplicity == 1);
    CHECK((entry.alpha & vars(4, "ab")).size() == 1);
    CHECK((entry.alpha & vars(4, "cd")).size() == 1);
  }
  REQUIRE(report.layers[3].size() == 4);
  for (const auto& entry : report.layers[3]) CHECK(entry.multiplicity == 1);
  REQUIRE(report.layers[4].size() == 1);
  CHECK(report.layers[4][0].alpha == VarSet::full(4));
  CHECK(report.layers[4][0].multiplicity == 1);

  for (int i : {0, 1})
    for (const auto& layer : filtration_quotients(b, i, kQQ).layers) CHECK(layer.empty());
}

TEST_CASE("filtration of the koszul self-dual case") {
  const MonomialIdeal maximal = ideal(3, {"a", "b", "c"});
  const FiltrationReport report = filtration_quotients(maximal, 3, kQQ);
  for (std::size_t l = 0; l < 3; ++l) CHECK(report.layers[l].empty());
  REQUIRE(report.layers[3].size() == 1);
  CHECK(report.layers[3][0].multiplicity == 1);
}

TEST_CASE("filtration layers account for every ext dimension") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 15; ++trial) {
    const MonomialIdeal b = random_squarefree_ideal(rng, 4, 4);
    const int n = b.n();
    for (int i = 0; i <= n; ++i) {
      const FiltrationReport report = filtration_quotients(b, i, kQQ);
      std::vector<HilbertTerm> terms;
      for (const auto& layer : report.layers)
        for (const auto& entry : layer)
          terms.push_back(HilbertTerm{entry.alpha, entry.alpha.complement(),
                                      entry.multiplicity});
      for (int sample = 0; sample < 40; ++sample) {
        std::vector<int> coords(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
          coords[static_cast<std::size_t>(j)] = -1 + static_cast<int>(rng() % 4);
        const MultiDegree beta(coords);
        CHECK(evaluate_hilbert_terms(terms, beta) == ext_piece(b, i, beta, kQQ).dim);
      }
    }
  }
}

TEST_CASE("betti diagram of the introduction dual") {
  const BettiDiagram diagram = betti_diagram(ideal(4, {"bd", "bc", "ad", "ac"}), kQQ);
  long by_col[3] = {0, 0, 0};
  for (const auto& [key, mult] : diagram.table.entries) {
    REQUIRE(key.first <= 2);
    by_col[key.first] += mult;
  }
  CHECK(by_col[0] == 4);
  CHECK(by_col[1] == 4);
  CHECK(by_col[2] == 1);
  CHECK(diagram.table.entries.size() == 9);
}

TEST_CASE("betti diagram golden values for small ideals") {
  const BettiTable principal = betti_table(ideal(3, {"abc"}), kQQ);
  CHECK(principal.entries.size() == 1);
  CHECK(principal.at(0, vars(3, "abc")) == 1);

  const BettiTable two_gens = betti_table(ideal(3, {"ab", "ac"}), kQQ);
  CHECK(two_gens.at(0, vars(3, "ab")) == 1);
  CHECK(two_gens.at(0, vars(3, "ac")) == 1);
  CHECK(two_gens.at(1, vars(3, "abc")) == 1);
  CHECK(two_gens.entries.size() == 3);
}

TEST_CASE("extremality in the betti poset") {
  const BettiTable table = betti_table(ideal(4, {"bd", "bc", "ad", "ac"}), kQQ);
  CHECK(is_extremal(table, 2, vars(4, "abcd")));
  CHECK_FALSE(is_extremal(table, 0, vars(4, "bd")));
  // a unique nonzero entry is vacuously extremal
  const BettiTable principal = betti_table(ideal(3, {"abc"}), kQQ);
  CHECK(is_extremal(principal, 0, vars(3, "abc")));
}

TEST_CASE("betti inequality and extremal equality audits") {
  SUBCASE("introduction example") {
    const BettiCheckReport report = check_betti_inequality(ideal(4, {"ab", "cd"}), kQQ);
    CHECK(report.violations == 0);
    bool saw_extremal = false;
    for (const auto& row : report.rows)
      if (row.dual_extremal) {
        saw_extremal = true;
        CHECK(row.lhs == row.dual_value);
      }
    CHECK(saw_extremal);
  }
  SUBCASE("principal ideal against the maximal ideal") {
    const BettiCheckReport report = check_betti_inequality(ideal(4, {"abcd"}), kQQ);
    CHECK(report.violations == 0);
  }
  SUBCASE("random corpus has no violations") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 25; ++trial) {
      const MonomialIdeal b = random_squarefree_ideal(rng, 5, 5);
      CHECK(check_betti_inequality(b, kQQ).violations == 0);
    }
  }
  SUBCASE("self-dual instances bound the inequality in both directions") {
    // search small random ideals for fixed points of the dual
    std::mt19937_64 rng(3141);
    int found = 0;
    std::vector<MonomialIdeal> self_dual = {ideal(3, {"ab", "ac", "bc"})};
    for (int trial = 0; trial < 400; ++trial) {
      const MonomialIdeal b = random_squarefree_ideal(rng, 4, 5);
      if (alexander_dual(b) == b) self_dual.push_back(b);
    }
    for (const MonomialIdeal& b : self_dual) {
      REQUIRE(alexander_dual(b) == b);
      ++found;
      const BettiCheckReport report = check_betti_inequality(b, kQQ);
      CHECK(report.violations == 0);
      // with B = dual(B) the inequality also runs backwards, so extremal
      // entries must match exactly
      const BettiTable table = betti_table(b, kQQ);
      for (const auto& row : report.rows)
        if (row.dual_extremal) CHECK(row.lhs == table.at(row.alpha.size() - row.i - 1, row.alpha));
    }
    CHECK(found >= 1);
  }
}

TEST_CASE("associated primes golden examples") {
  SUBCASE("four-cycle with a diagonal") {
    const PrimeIdealSet ass = associated_primes(ideal(4, {"ab", "bc", "cd", "ad", "ac"}), 3, kQQ);
    REQUIRE(ass.primes.size() == 2);
    CHECK(ass.contains(vars(4, "abd")));
    CHECK(ass.contains(vars(4, "bcd")));
  }
  SUBCASE("betti support strictly exceeds the associated primes") {
    const MonomialIdeal b = ideal(3, {"a", "bc"});
    const PrimeIdealSet ass = associated_primes(b, 2, kQQ);
    REQUIRE(ass.primes.size() == 2);
    CHECK(ass.contains(vars(3, "ab")));
    CHECK(ass.contains(vars(3, "ac")));
    // the betti support of the dual also contains {a,b,c}
    const MonomialIdeal dual = alexander_dual(b);
    CHECK(hochster_betti(dual, 1, vars(3, "abc"), kQQ) != 0);
    CHECK_FALSE(ass.contains(vars(3, "abc")));
  }
  SUBCASE("complete intersection") {
    const PrimeIdealSet ass = associated_primes(ideal(4, {"ab", "cd"}), 2, kQQ);
    REQUIRE(ass.primes.size() == 4);
    for (const char* f : {"ac", "ad", "bc", "bd"}) CHECK(ass.contains(vars(4, f)));
  }
}

TEST_CASE("minimal associated primes") {
  SUBCASE("example with a strict gap") {
    const PrimeIdealSet minimal = minimal_associated_primes(ideal(3, {"a", "bc"}), 2, kQQ);
    REQUIRE(minimal.primes.size() == 2);
    CHECK(minimal.contains(vars(3, "ab")));
    CHECK(minimal.contains(vars(3, "ac")));
  }
  SUBCASE("vanishing ext has no primes") {
    CHECK(minimal_associated_primes(ideal(3, {"a", "bc"}), 0, kQQ).primes.empty());
    CHECK(associated_primes(ideal(3, {"a", "bc"}), 0, kQQ).primes.empty());
  }
  SUBCASE("minimal primes are the inclusion-minimal associated primes") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 20; ++trial) {
      const MonomialIdeal b = random_squarefree_ideal(rng, 4, 4);
      for (int i = 0; i <= b.n(); ++i) {
        const PrimeIdealSet all = associated_primes(b, i, kQQ);
        const PrimeIdealSet minimal = minimal_associated_primes(b, i, kQQ);
        std::vector<VarSet> expected;
        for (const VarSet& p : all.primes) {
          bool is_minimal = true;
          for (const VarSet& q : all.primes)
            if (!(q == p) && q.subset_of(p)) is_minimal = false;
          if (is_minimal) expected.push_back(p);
        }
        CHECK(minimal.primes == expected);
      }
    }
  }
}

TEST_CASE("associated primes sit inside the dual betti support") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 15; ++trial) {
    const MonomialIdeal b = random_squarefree_ideal(rng, 4, 4);
    const MonomialIdeal dual = alexander_dual(b);
    for (int i = 0; i <= b.n(); ++i)
      for (const VarSet& p : associated_primes(b, i, kQQ).primes)
        CHECK(hochster_betti(dual, p.size() - i, p, kQQ) != 0);
  }
}

TEST_CASE("betti table of the maximal ideal is the koszul pattern") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Monomial> gens;
    for (int j = 0; j < n; ++j) gens.push_back(Monomial::from_support(VarSet::single(n, j)));
    const BettiTable table = betti_table(MonomialIdeal(n, gens), kQQ);
    CHECK(table.entries.size() == (std::size_t{1} << n) - 1);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const VarSet a(n, bits);
      CHECK(table.at(a.size() - 1, a) == 1);
    }
  }
}
