#include "doctest.h"
#include "json.hpp"
#include "locoh/ideal_io.hpp"
#include "locoh/verify.hpp"
#include "support/build.hpp"

using namespace locoh;
using namespace locoh::testing;

TEST_CASE("ideal document parsing") {
  const IdealDocument doc = parse_ideal_document("vars a b c d\nab, cd\n");
  CHECK(doc.vars == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(doc.ideal == ideal(4, {"ab", "cd"}));
  CHECK(doc.field == FieldSpec::rationals());

  const IdealDocument powers =
      parse_ideal_document("vars x1 x2 x3\nfield gf 7\nx1^2*x3, x2\n");
  CHECK(powers.field == FieldSpec::prime_field(7));
  CHECK(powers.ideal.generators().size() == 2);
  CHECK(powers.ideal.generators()[1].exponent(0) == 2);
  CHECK(powers.ideal.generators()[1].exponent(2) == 1);

  // longest-match tokenization of juxtaposed names
  const IdealDocument juxta = parse_ideal_document("vars x x1\nxx1\n");
  CHECK(juxta.ideal.generators().front() == Monomial(std::vector<int>{1, 1}));

  // comments and blank lines
  const IdealDocument commented =
      parse_ideal_document("# a complete intersection\nvars a b\n\na, b  # both\n");
  CHECK(commented.ideal == ideal(2, {"a", "b"}));

  // generators spread over lines, '*' separators optional
  const IdealDocument multi = parse_ideal_document("vars a b c\na*b\nbc\n");
  CHECK(multi.ideal == ideal(3, {"ab", "bc"}));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_ideal_document("gens ab\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document("vars a b\nq\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document("vars a b\na^0\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document("vars a a\na\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document("vars a b\n"), ParseError);
  try {
    parse_ideal_document("vars a b\nab, aq\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("monomial rendering round-trips through the parser") {
  const std::vector<std::string> names = letters(4);
  for (const char* text : {"ab", "a^2b", "acd", "d^5"}) {
    const Monomial m = mono(4, text);
    CHECK(parse_monomial(render_monomial(m, names), names, 1, 1) == m);
  }
  CHECK(render_monomial(mono(4, "ab"), names) == "ab");
  const std::vector<std::string> long_names = {"x1", "x2"};
  CHECK(render_monomial(parse_monomial("x1^2*x2", long_names, 1, 1), long_names) == "x1^2*x2");
}

TEST_CASE("multidegree parsing") {
  CHECK(parse_multidegree("-1,0,2,-3", 4) == deg({-1, 0, 2, -3}));
  CHECK_THROWS_AS(parse_multidegree("1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_multidegree("1,x,2", 3), std::invalid_argument);
}

TEST_CASE("input hash is canonical") {
  const IdealDocument a = parse_ideal_document("vars a b c d\nab, cd\n");
  const IdealDocument b = parse_ideal_document("vars a b c d\n cd , a*b \n");
  const IdealDocument c = parse_ideal_document("vars a b c d\nab, cd, abd\n");
  CHECK(input_hash(a) == input_hash(b));
  CHECK(input_hash(a) == input_hash(c));  // abd is redundant after minimalization
  const IdealDocument other = parse_ideal_document("vars a b c d\nab, cd, ac\n");
  CHECK(input_hash(a) != input_hash(other));
}

TEST_CASE("json documents round-trip through parse and dump") {
  nlohmann::ordered_json doc;
  doc["command"] = "dual";
  doc["input_hash"] = "0123456789abcdef";
  doc["field"] = "rational";
  doc["results"]["generators"] = {{{"exponents", {0, 1, 0, 1}}, {"rendered", "bd"}}};
  const std::string once = doc.dump(2);
  CHECK(nlohmann::ordered_json::parse(once).dump(2) == once);
}

TEST_CASE("verify suite passes on the bundled examples") {
  VerifyOptions options;
  options.field = FieldSpec::rationals();
  options.d_max = 2;
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"ab", "cd"}, {"ab", "bc", "cd", "ad", "ac"}, {"a", "bc"}, {"abcd"}}) {
    const VerifyReport report = verify_ideal(ideal(4, gens), options);
    CHECK(report.ok());
    CHECK(report.total_cases() > 0);
  }
}

TEST_CASE("random corpus verification fans out over the worker pool") {
  VerifyOptions options;
  options.field = FieldSpec::rationals();
  options.seed = 99;
  std::vector<std::string> labels;
  const VerifyReport report = verify_random(6, options, &labels);
  CHECK(report.ok());
  CHECK(labels.size() == 6);
  // aggregated by check name, not by ideal
  for (const VerifyCheck& check : report.checks) CHECK(check.cases >= 6);
}

TEST_CASE("random ideal generator is deterministic and in range") {
  std::mt19937_64 a(12), b(12);
  for (int k = 0; k < 20; ++k) {
    const MonomialIdeal x = random_squarefree_ideal(a, 5, 5);
    const MonomialIdeal y = random_squarefree_ideal(b, 5, 5);
    CHECK(x == y);
    CHECK(x.n() <= 5);
    CHECK(x.num_generators() <= 5);
    CHECK(x.is_squarefree());
    CHECK(x.is_proper());
    CHECK_FALSE(x.is_zero());
  }
}

TEST_CASE("parser survives garbage input") {
  std::mt19937_64 rng(404);
  const std::string alphabet = "abxy12 ,^*#\n\t()-_~%$";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    if (trial % 3 != 0) text = "vars a b\n";  // sometimes a valid header first
    const int len = static_cast<int>(rng() % 40);
    for (int k = 0; k < len; ++k) text.push_back(alphabet[rng() % alphabet.size()]);
    try {
      const IdealDocument doc = parse_ideal_document(text);
      CHECK(doc.n() >= 1);  // anything parsed must be well-formed
      CHECK_FALSE(doc.ideal.is_zero());
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    }
  }
}
