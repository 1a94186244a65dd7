// Acceptance suite: golden examples exercised through the CLI binary plus
// the seeded property corpus, one pass/fail line per criterion. The CLI
// path and data directory come from --cli= / --data= (or LOCOH_CLI /
// LOCOH_DATA).

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "locoh/cohomology.hpp"
#include "locoh/localcoh.hpp"
#include "locoh/matrix.hpp"
#include "locoh/simplicial.hpp"
#include "locoh/structure.hpp"
#include "locoh/taylor.hpp"
#include "locoh/verify.hpp"
#include "support/build.hpp"

using namespace locoh;
using namespace locoh::testing;
using nlohmann::json;

namespace {

std::string g_cli;
std::string g_data;
const FieldSpec kQQ = FieldSpec::rationals();

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  CommandResult result;
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

struct Criterion {
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)) {}
  ~Criterion() {
    std::printf("[criterion %d] %s - %s\n", number_, ok_ ? "PASS" : "FAIL", title_.c_str());
    std::fflush(stdout);
  }
  void expect(bool condition, const char* what) {
    CHECK_MESSAGE(condition, what);
    if (!condition) ok_ = false;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
};

std::set<std::set<std::string>> varset_list(const json& arr) {
  std::set<std::set<std::string>> out;
  for (const auto& entry : arr) out.insert(std::set<std::string>(entry.begin(), entry.end()));
  return out;
}

std::vector<MonomialIdeal> seeded_corpus(std::uint64_t seed, int count, int max_vars,
                                         int max_gens) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(random_squarefree_ideal(rng, max_vars, max_gens));
  return out;
}

}  // namespace

TEST_CASE("criterion 1: introduction golden example through the CLI") {
  Criterion crit(1, "dual, dual betti table and filtration of (ab, cd)");
  const std::string file = g_data + "/intro.ideal";

  const CommandResult dual = run_cli("dual " + file + " --json");
  crit.expect(dual.exit_code == 0, "dual exits 0");
  {
    const json doc = json::parse(dual.output);
    std::set<std::string> gens;
    for (const auto& g : doc["results"]["generators"]) gens.insert(g["rendered"]);
    crit.expect(gens == std::set<std::string>{"bd", "bc", "ad", "ac"},
                "dual generators are exactly {bd, bc, ad, ac}");
  }

  const CommandResult betti = run_cli("betti " + file + " --of dual --json");
  crit.expect(betti.exit_code == 0, "betti exits 0");
  {
    const json doc = json::parse(betti.output);
    const auto& entries = doc["results"]["entries"];
    crit.expect(entries.size() == 9, "nine nonzero betti entries");
    std::set<std::set<std::string>> by_col[3];
    for (const auto& e : entries) {
      crit.expect(e["multiplicity"] == 1, "every multiplicity is 1");
      const int j = e["hom_index"];
      crit.expect(0 <= j && j <= 2, "homological index in range");
      by_col[j].insert(std::set<std::string>(e["degree"].begin(), e["degree"].end()));
    }
    crit.expect(by_col[0] == std::set<std::set<std::string>>{
                                 {"b", "d"}, {"b", "c"}, {"a", "d"}, {"a", "c"}},
                "F_0 twists match");
    crit.expect(by_col[1] == std::set<std::set<std::string>>{{"b", "c", "d"},
                                                             {"a", "c", "d"},
                                                             {"a", "b", "d"},
                                                             {"a", "b", "c"}},
                "F_1 twists match");
    crit.expect(by_col[2] == std::set<std::set<std::string>>{{"a", "b", "c", "d"}},
                "F_2 twist matches");
  }

  const CommandResult filtration = run_cli("filtration " + file + " --i 2 --json");
  crit.expect(filtration.exit_code == 0, "filtration exits 0");
  {
    const json doc = json::parse(filtration.output);
    const auto& layers = doc["results"]["layers"];
    crit.expect(layers.size() == 5, "layers 0..4 present");
    crit.expect(layers[0].empty() && layers[1].empty(), "M_0 and M_1 vanish");
    std::set<std::set<std::string>> l2, l3, l4;
    for (const auto& e : layers[2]) {
      crit.expect(e["multiplicity"] == 1, "layer 2 multiplicities are 1");
      l2.insert(std::set<std::string>(e["alpha"].begin(), e["alpha"].end()));
    }
    for (const auto& e : layers[3]) {
      crit.expect(e["multiplicity"] == 1, "layer 3 multiplicities are 1");
      l3.insert(std::set<std::string>(e["alpha"].begin(), e["alpha"].end()));
    }
    for (const auto& e : layers[4]) {
      crit.expect(e["multiplicity"] == 1, "layer 4 multiplicity is 1");
      l4.insert(std::set<std::string>(e["alpha"].begin(), e["alpha"].end()));
    }
    crit.expect(l2 == std::set<std::set<std::string>>{
                          {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}},
                "M_2/M_1 summands match");
    crit.expect(l3 == std::set<std::set<std::string>>{{"b", "c", "d"},
                                                      {"a", "c", "d"},
                                                      {"a", "b", "d"},
                                                      {"a", "b", "c"}},
                "M_3/M_2 summands match");
    crit.expect(l4 == std::set<std::set<std::string>>{{"a", "b", "c", "d"}},
                "M_4/M_3 summand matches");
  }
}

TEST_CASE("criterion 2: associated primes of the 4-cycle with diagonal") {
  Criterion crit(2, "ass --i 3 on (ab, bc, cd, ad, ac)");
  const CommandResult r = run_cli("ass " + g_data + "/cycle4-diagonal.ideal --i 3 --json");
  crit.expect(r.exit_code == 0, "ass exits 0");
  const json doc = json::parse(r.output);
  crit.expect(varset_list(doc["results"]["primes"]) ==
                  std::set<std::set<std::string>>{{"a", "b", "d"}, {"b", "c", "d"}},
              "Ass(Ext^3) = {(a,b,d), (b,c,d)}");
}

TEST_CASE("criterion 3: associated primes strictly inside the betti support") {
  Criterion crit(3, "ass --i 2 on (a, bc) and the betti-support gap");
  const CommandResult r = run_cli("ass " + g_data + "/point-line.ideal --i 2 --json");
  crit.expect(r.exit_code == 0, "ass exits 0");
  const json doc = json::parse(r.output);
  crit.expect(varset_list(doc["results"]["primes"]) ==
                  std::set<std::set<std::string>>{{"a", "b"}, {"a", "c"}},
              "Ass(Ext^2) = {(a,b), (a,c)}");

  const MonomialIdeal b = ideal(3, {"a", "bc"});
  const MonomialIdeal dual = alexander_dual(b);
  std::set<std::set<int>> support;
  for (std::uint64_t bits = 1; bits < 8; ++bits) {
    const VarSet a(3, bits);
    if (hochster_betti(dual, a.size() - 2, a, kQQ) != 0) {
      std::set<int> s;
      for (int v : a.members()) s.insert(v);
      support.insert(s);
    }
  }
  crit.expect(support == std::set<std::set<int>>{{0, 1, 2}, {0, 1}, {0, 2}},
              "betti support is {{a,b,c}, {a,b}, {a,c}}");
}

TEST_CASE("criterion 4: tor/ext duality over 50 seeded ideals") {
  Criterion crit(4, "hochster = ext and taylor tor = hochster, exhaustively");
  long mismatches = 0, cases = 0;
  for (const MonomialIdeal& b : seeded_corpus(40504050, 50, 5, 5)) {
    const MonomialIdeal dual = alexander_dual(b);
    const int n = b.n();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const VarSet a(n, bits);
      const MultiDegree alpha = MultiDegree::indicator(a);
      for (int i = 0; i <= n; ++i) {
        const long hochster = hochster_betti(dual, i, a, kQQ);
        const long ext = ext_piece(b, a.size() - i, alpha.negated(), kQQ).dim;
        const long tor = tor_via_taylor(dual, i, alpha, kQQ);
        cases += 2;
        if (hochster != ext) ++mismatches;
        if (tor != hochster) ++mismatches;
      }
    }
  }
  crit.expect(cases > 0, "corpus generated");
  crit.expect(mismatches == 0, "zero mismatches");
}

TEST_CASE("criterion 5: taylor stabilization over 20 seeded ideals") {
  Criterion crit(5, "ext via taylor vanishes below -d and stabilizes to lc");
  long mismatches = 0, cases = 0;
  for (const MonomialIdeal& b : seeded_corpus(50605060, 20, 4, 4)) {
    const int n = b.n();
    std::vector<int> cur(static_cast<std::size_t>(n), -2);
    while (true) {
      const MultiDegree alpha(cur);
      for (int i = 0; i <= n; ++i) {
        const long limit = lc_piece(b, i, alpha, kQQ).dim;
        for (int d = 1; d <= 3; ++d) {
          const long value = ext_via_taylor(b, d, i, alpha, kQQ);
          ++cases;
          if (alpha.all_at_least(-d)) {
            if (value != limit) ++mismatches;
          } else if (value != 0) {
            ++mismatches;
          }
        }
      }
      int j = n - 1;
      while (j >= 0 && cur[static_cast<std::size_t>(j)] == 1) {
        cur[static_cast<std::size_t>(j)] = -2;
        --j;
      }
      if (j < 0) break;
      ++cur[static_cast<std::size_t>(j)];
    }
  }
  crit.expect(cases > 0, "corpus generated");
  crit.expect(mismatches == 0, "zero mismatches");
}

TEST_CASE("criterion 6: nerve pathway agreement on the criterion-4 corpus") {
  Criterion crit(6, "lc via generator complex equals lc via full subcomplex");
  long mismatches = 0, cases = 0;
  for (const MonomialIdeal& b : seeded_corpus(40504050, 50, 5, 5)) {
    const int n = b.n();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<int> coords(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < n; ++j)
        if ((bits >> j) & 1) coords[static_cast<std::size_t>(j)] = -1;
      const MultiDegree alpha(coords);
      for (int i = 0; i <= n + 1; ++i) {
        ++cases;
        if (lc_piece(b, i, alpha, kQQ).dim != lc_piece_via_generators(b, i, alpha, kQQ).dim)
          ++mismatches;
      }
    }
  }
  crit.expect(cases > 0, "corpus generated");
  crit.expect(mismatches == 0, "zero mismatches");
}

TEST_CASE("criterion 7: multiplication maps on 1000 seeded triples") {
  Criterion crit(7, "invertibility off the -1 wall and commuting compositions");
  const auto corpus = seeded_corpus(40504050, 50, 5, 5);
  std::mt19937_64 rng(70707);
  long mismatches = 0, cases = 0;
  const RationalField qq;
  while (cases < 1000) {
    const MonomialIdeal& b = corpus[rng() % corpus.size()];
    const int n = b.n();
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) coords[static_cast<std::size_t>(j)] = -2 + static_cast<int>(rng() % 4);
    const MultiDegree alpha(coords);
    const int l = static_cast<int>(rng() % n);
    const int m = static_cast<int>(rng() % n);
    const int i = static_cast<int>(rng() % (n + 2));
    ++cases;

    if (alpha[l] != -1 && !multiplication_map(b, i, alpha, l, kQQ).invertible()) ++mismatches;

    const SimplicialComplex delta = stanley_reisner_complex(b);
    const int q = i - 2;
    const auto basis_at = [&](const MultiDegree& d) {
      return reduced_cohomology_basis(qq, full_subcomplex(delta, d.negative_support()), q);
    };
    const auto base = basis_at(alpha);
    const auto via_l = basis_at(alpha.plus_unit(l));
    const auto via_m = basis_at(alpha.plus_unit(m));
    const auto end = basis_at(alpha.plus_unit(l).plus_unit(m));
    const Matrix<RationalField> lm =
        restriction_matrix(qq, via_l, end) * restriction_matrix(qq, base, via_l);
    const Matrix<RationalField> ml =
        restriction_matrix(qq, via_m, end) * restriction_matrix(qq, base, via_m);
    if (!(lm == ml)) ++mismatches;
  }
  crit.expect(cases == 1000, "exactly 1000 triples");
  crit.expect(mismatches == 0, "zero mismatches");
}

TEST_CASE("criterion 8: betti inequality and extremal equality over the corpus") {
  Criterion crit(8, "check reports zero violations; extremal pairs transfer with equality");
  long violations = 0, extremal_pairs = 0;
  for (const MonomialIdeal& b : seeded_corpus(40504050, 50, 5, 5)) {
    const BettiCheckReport report = check_betti_inequality(b, kQQ);
    violations += report.violations;
    for (const auto& row : report.rows)
      if (row.dual_extremal) {
        ++extremal_pairs;
        if (!(row.lhs == row.dual_value && row.equality_ok)) ++violations;
      }
  }
  crit.expect(extremal_pairs > 0, "extremal pairs occurred");
  crit.expect(violations == 0, "zero violations");

  const CommandResult r = run_cli("check " + g_data + "/intro.ideal --json");
  crit.expect(r.exit_code == 0, "cli check exits 0");
}

TEST_CASE("criterion 9: hilbert closed form matches ext pieces pointwise") {
  Criterion crit(9, "closed-form evaluation over [-1,2]^n equals the ext box");
  long mismatches = 0, cases = 0;
  for (const MonomialIdeal& b : seeded_corpus(40504050, 50, 5, 5)) {
    const int n = b.n();
    for (int i = 0; i <= n; ++i) {
      const auto terms = hilbert_series_closed_form(b, i, kQQ);
      const auto box =
          hilbert_function_box(b, i, MultiDegree(std::vector<int>(n, -1)),
                               MultiDegree(std::vector<int>(n, 2)), kQQ, GradedModule::Ext);
      std::map<std::vector<int>, long> expected;
      for (const auto& [alpha, dim] : box) expected[alpha.coords()] = dim;
      std::vector<int> cur(static_cast<std::size_t>(n), -1);
      while (true) {
        ++cases;
        const auto it = expected.find(cur);
        const long box_value = it == expected.end() ? 0 : it->second;
        if (evaluate_hilbert_terms(terms, MultiDegree(cur)) != box_value) ++mismatches;
        int j = n - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == 2) {
          cur[static_cast<std::size_t>(j)] = -1;
          --j;
        }
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
      }
    }
  }
  crit.expect(cases > 0, "corpus generated");
  crit.expect(mismatches == 0, "zero mismatches");
}

TEST_CASE("criterion 10: reduced cohomology and void conventions") {
  Criterion crit(10, "empty/void complexes and empty-support constructions");
  const SimplicialComplex empty = SimplicialComplex::empty_complex(4);
  const SimplicialComplex void_c = SimplicialComplex::void_complex(4);
  for (int q = -3; q <= 3; ++q) {
    const long e = cohomology_dim(empty, q, kQQ);
    crit.expect(e == (q == -1 ? 1 : 0), "empty complex is k exactly in degree -1");
    crit.expect(cohomology_dim(void_c, q, kQQ) == 0, "void complex vanishes everywhere");
  }
  const MonomialIdeal b = ideal(4, {"ab", "cd"});
  crit.expect(full_subcomplex(stanley_reisner_complex(b), VarSet(4)).is_void(),
              "empty-support full subcomplex is void");
  crit.expect(generator_complex(b, VarSet(4)).is_void(),
              "empty-support generator complex is void");
  crit.expect(negative_support_complex(b, MultiDegree::zero(4)).is_void(),
              "nonnegative degrees give the void complex");
}

TEST_CASE("bundled corpus verifies through the CLI") {
  Criterion crit(11, "verify exits 0 on every bundled ideal");
  for (const char* name : {"intro", "cycle4-diagonal", "point-line", "principal", "maximal",
                           "path3", "reisner-rp2"}) {
    const CommandResult r =
        run_cli("verify " + g_data + "/" + name + ".ideal --dmax 2 --seed 7");
    crit.expect(r.exit_code == 0, name);
  }
}

TEST_CASE("cli exit codes and json stability") {
  Criterion crit(12, "exit codes 2/3 and byte-stable json documents");

  const CommandResult bad = run_cli("dual /dev/stdin < /dev/null");
  crit.expect(bad.exit_code == 2, "empty input is a parse error (exit 2)");

  const CommandResult nonreduced = run_cli("dual " + g_data + "/nonreduced.ideal");
  crit.expect(nonreduced.exit_code == 3, "dual of a non-squarefree ideal exits 3");

  const CommandResult general =
      run_cli("ext " + g_data + "/nonreduced.ideal --i 1 --alpha -1,0 --json");
  crit.expect(general.exit_code == 0, "ext handles non-squarefree input");
  if (general.exit_code == 0) {
    const json doc = json::parse(general.output);
    crit.expect(doc["results"]["dim"] == 1, "Ext^1(R/(x^2, xy^2), R)_(-1,0) = k");
  }

  const std::string file = g_data + "/intro.ideal --json";
  for (const std::string& cmd : {"dual " + file, "betti " + file,
                                "filtration " + file + " --i 2", "check " + file}) {
    const CommandResult r = run_cli(cmd);
    crit.expect(r.exit_code == 0, "json command exits 0");
    std::string body = r.output;
    if (!body.empty() && body.back() == '\n') body.pop_back();
    crit.expect(nlohmann::ordered_json::parse(body).dump(2) == body,
                "parse+dump is byte-identical");
  }
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0)
      g_cli = arg.substr(6);
    else if (arg.rfind("--data=", 0) == 0)
      g_data = arg.substr(7);
    else
      rest.push_back(argv[i]);
  }
  if (g_cli.empty())
    if (const char* env = std::getenv("LOCOH_CLI")) g_cli = env;
  if (g_data.empty())
    if (const char* env = std::getenv("LOCOH_DATA")) g_data = env;
  if (g_cli.empty() || g_data.empty()) {
    std::cerr << "usage: acceptance_tests --cli=<locoh binary> --data=<ideals dir>\n";
    return 2;
  }
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
