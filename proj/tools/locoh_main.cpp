// Command-line front end: ideal parsing, command dispatch, table and JSON
// output, and the oracle verification harness.
//
// Exit codes: 0 success, 2 input parse error, 3 domain error (zero/unit
// ideal, non-squarefree where unsupported), 4 verification mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "locoh/cohomology.hpp"
#include "locoh/ideal_io.hpp"
#include "locoh/localcoh.hpp"
#include "locoh/simplicial.hpp"
#include "locoh/structure.hpp"
#include "locoh/taylor.hpp"
#include "locoh/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace locoh;

struct Common {
  std::string file;
  std::string field_override;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.file, "ideal file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--field", c.field_override, "coefficient field: 'rational' or 'gf <p>'");
  cmd->add_flag("--json", c.json, "emit a machine-readable JSON document");
}

IdealDocument load_document(const Common& c) {
  std::ifstream in(c.file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  IdealDocument doc = parse_ideal_document(buffer.str());
  if (!c.field_override.empty()) doc.field = FieldSpec::parse(c.field_override);
  return doc;
}

ordered_json skeleton(const std::string& command, const IdealDocument& doc) {
  ordered_json j;
  j["command"] = command;
  j["input_hash"] = input_hash(doc);
  j["field"] = doc.field.name();
  j["results"] = ordered_json::object();
  return j;
}

void emit(const Common& c, const ordered_json& doc, const std::string& human) {
  if (c.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

ordered_json json_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  ordered_json j;
  j["exponents"] = m.exponents();
  j["rendered"] = render_monomial(m, vars);
  return j;
}

ordered_json json_varset(const VarSet& s, const std::vector<std::string>& vars) {
  ordered_json j = ordered_json::array();
  for (int v : s.members()) j.push_back(vars[static_cast<std::size_t>(v)]);
  return j;
}

ordered_json json_complex(const SimplicialComplex& k, const std::vector<std::string>& vars) {
  ordered_json j;
  j["void"] = k.is_void();
  ordered_json facets = ordered_json::array();
  for (const VarSet& f : k.facets()) facets.push_back(json_varset(f, vars));
  j["facets"] = facets;
  return j;
}

ordered_json json_matrix(const ExactMatrix& m) {
  ordered_json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["rank"] = m.rank;
  j["invertible"] = m.invertible();
  return j;
}

std::string human_matrix(const ExactMatrix& m) {
  std::ostringstream out;
  out << m.rows << "x" << m.cols << " matrix, rank " << m.rank
      << (m.invertible() ? " (invertible)\n" : "\n");
  for (std::size_t r = 0; r < m.rows; ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols; ++c) out << " " << m.at(r, c);
    out << " ]\n";
  }
  return out.str();
}

std::string complex_to_text(const SimplicialComplex& k, const std::vector<std::string>& vars) {
  if (k.is_void()) return "void complex\n";
  std::ostringstream out;
  out << "facets:";
  for (const VarSet& f : k.facets()) out << " " << render_varset(f, vars);
  out << "\n";
  return out.str();
}

int variable_index(const IdealDocument& doc, const std::string& name) {
  for (std::size_t j = 0; j < doc.vars.size(); ++j)
    if (doc.vars[j] == name) return static_cast<int>(j);
  throw std::invalid_argument("unknown variable '" + name + "'");
}

// --------------------------------------------------------------------------
// Subcommand handlers.

int run_dual(const Common& c) {
  const IdealDocument doc = load_document(c);
  const MonomialIdeal dual = alexander_dual(doc.ideal);
  ordered_json j = skeleton("dual", doc);
  ordered_json gens = ordered_json::array();
  std::string human;
  for (const Monomial& g : dual.generators()) {
    gens.push_back(json_monomial(g, doc.vars));
    if (!human.empty()) human += " ";
    human += render_monomial(g, doc.vars);
  }
  j["results"]["generators"] = gens;
  emit(c, j, human + "\n");
  return 0;
}

struct ComplexOptions {
  std::string alpha;
  bool generators = false;
  bool general = false;
};

int run_complex(const Common& c, const ComplexOptions& o) {
  const IdealDocument doc = load_document(c);
  ordered_json j = skeleton("complex", doc);
  SimplicialComplex k;
  std::vector<std::string> vertex_names = doc.vars;
  std::string which;
  if (o.alpha.empty()) {
    k = stanley_reisner_complex(doc.ideal);
    which = "stanley_reisner";
  } else {
    const MultiDegree alpha = parse_multidegree(o.alpha, doc.n());
    if (o.generators) {
      k = generator_complex(doc.ideal, alpha.negative_support());
      vertex_names.clear();
      for (int g = 1; g <= doc.ideal.num_generators(); ++g)
        vertex_names.push_back("g" + std::to_string(g));
      which = "generator_complex";
    } else if (o.general) {
      k = negative_support_complex(doc.ideal, alpha);
      which = "negative_support";
    } else {
      k = full_subcomplex(stanley_reisner_complex(doc.ideal), alpha.negative_support());
      which = "full_subcomplex";
    }
  }
  j["results"]["complex_kind"] = which;
  j["results"]["complex"] = json_complex(k, vertex_names);
  emit(c, j, which + ": " + complex_to_text(k, vertex_names));
  return 0;
}

int run_betti(const Common& c, bool of_dual) {
  const IdealDocument doc = load_document(c);
  const MonomialIdeal target = of_dual ? alexander_dual(doc.ideal) : doc.ideal;
  const BettiDiagram diagram = betti_diagram(target, doc.field);
  ordered_json j = skeleton("betti", doc);
  j["results"]["of_dual"] = of_dual;
  ordered_json entries = ordered_json::array();
  for (const auto& [key, mult] : diagram.table.entries) {
    ordered_json e;
    e["hom_index"] = key.first;
    e["degree"] = json_varset(VarSet(doc.n(), key.second), doc.vars);
    e["multiplicity"] = mult;
    entries.push_back(e);
  }
  j["results"]["entries"] = entries;

  std::ostringstream human;
  human << "betti numbers of " << (of_dual ? "the alexander dual" : "the ideal") << "\n";
  human << "  row = |degree| - column, column = homological index\n";
  human << "  i\\j";
  for (int col = 0; col <= diagram.max_col; ++col) human << "\t" << col;
  human << "\n";
  for (int row = 0; row <= diagram.max_row; ++row) {
    human << "  " << row;
    for (int col = 0; col <= diagram.max_col; ++col) {
      long total = 0;
      for (const auto& cell : diagram.cells)
        if (cell.row == row && cell.col == col) total = cell.total;
      human << "\t" << (total == 0 ? "." : std::to_string(total));
    }
    human << "\n";
  }
  human << "  by column (Tor_j summands):\n";
  for (int col = 0; col <= diagram.max_col; ++col) {
    human << "    j=" << col << ":";
    for (const auto& cell : diagram.cells)
      if (cell.col == col)
        for (const auto& [deg, mult] : cell.degrees) {
          human << " " << render_varset(deg, doc.vars);
          if (mult != 1) human << "^" << mult;
        }
    human << "\n";
  }
  emit(c, j, human.str());
  return 0;
}

struct PieceOptions {
  int i = 0;
  std::string alpha;
  bool general = false;
  bool basis = false;
};

int run_piece(const Common& c, const PieceOptions& o, bool local_cohomology) {
  const IdealDocument doc = load_document(c);
  const MultiDegree alpha = parse_multidegree(o.alpha, doc.n());
  GradedPiece piece;
  std::string command = local_cohomology ? "lc" : "ext";
  if (local_cohomology) {
    piece = lc_piece(doc.ideal, o.i, alpha, doc.field, o.basis);
  } else if (o.general || !doc.ideal.is_squarefree()) {
    piece = ext_piece_general(doc.ideal, o.i, alpha, doc.field, o.basis);
  } else {
    piece = ext_piece(doc.ideal, o.i, alpha, doc.field, o.basis);
  }
  ordered_json j = skeleton(command, doc);
  j["results"]["i"] = o.i;
  j["results"]["alpha"] = alpha.coords();
  j["results"]["dim"] = piece.dim;
  j["results"]["cochain_degree"] = piece.q;
  j["results"]["cochain_dim"] = piece.cochain_dim;
  std::ostringstream human;
  human << "dim = " << piece.dim << "   (simplicial degree " << piece.q << ", "
        << piece.cochain_dim << " cochain basis elements)\n";
  if (piece.basis) {
    ordered_json basis = ordered_json::array();
    for (const auto& rep : piece.basis->reps) {
      ordered_json cocycle = ordered_json::array();
      for (std::size_t f = 0; f < piece.basis->faces.size(); ++f) {
        if (rep[f] == "0") continue;
        ordered_json term;
        term["face"] = json_varset(piece.basis->faces[f], doc.vars);
        term["coeff"] = rep[f];
        cocycle.push_back(term);
      }
      basis.push_back(cocycle);
    }
    j["results"]["basis"] = basis;
    for (std::size_t r = 0; r < piece.basis->reps.size(); ++r) {
      human << "  cocycle " << r + 1 << ":";
      for (std::size_t f = 0; f < piece.basis->faces.size(); ++f)
        if (piece.basis->reps[r][f] != "0")
          human << " " << piece.basis->reps[r][f] << "*"
                << render_varset(piece.basis->faces[f], doc.vars);
      human << "\n";
    }
  }
  emit(c, j, human.str());
  return 0;
}

int run_mult(const Common& c, int i, const std::string& alpha_text, const std::string& var) {
  const IdealDocument doc = load_document(c);
  const MultiDegree alpha = parse_multidegree(alpha_text, doc.n());
  const int l = variable_index(doc, var);
  const ExactMatrix m = multiplication_map(doc.ideal, i, alpha, l, doc.field);
  ordered_json j = skeleton("mult", doc);
  j["results"]["i"] = i;
  j["results"]["alpha"] = alpha.coords();
  j["results"]["variable"] = var;
  j["results"]["matrix"] = json_matrix(m);
  emit(c, j, human_matrix(m));
  return 0;
}

int run_filtration(const Common& c, int i) {
  const IdealDocument doc = load_document(c);
  const FiltrationReport report = filtration_quotients(doc.ideal, i, doc.field);
  ordered_json j = skeleton("filtration", doc);
  j["results"]["i"] = i;
  ordered_json layers = ordered_json::array();
  std::ostringstream human;
  human << "filtration subquotients of Ext^" << i << "\n";
  for (std::size_t l = 0; l < report.layers.size(); ++l) {
    ordered_json layer = ordered_json::array();
    for (const auto& entry : report.layers[l]) {
      ordered_json e;
      e["alpha"] = json_varset(entry.alpha, doc.vars);
      e["multiplicity"] = entry.multiplicity;
      layer.push_back(e);
    }
    layers.push_back(layer);
    if (report.layers[l].empty()) continue;
    human << "  M_" << l << "/M_" << l - 1 << " =";
    bool first = true;
    for (const auto& entry : report.layers[l]) {
      if (!first) human << " +";
      first = false;
      human << " R/" << render_prime(entry.alpha, doc.vars)
            << render_multidegree(MultiDegree::indicator(entry.alpha));
      if (entry.multiplicity != 1) human << "^" << entry.multiplicity;
    }
    human << "\n";
  }
  j["results"]["layers"] = layers;
  emit(c, j, human.str());
  return 0;
}

int run_ass(const Common& c, int i, bool minimal) {
  const IdealDocument doc = load_document(c);
  const PrimeIdealSet primes = minimal ? minimal_associated_primes(doc.ideal, i, doc.field)
                                       : associated_primes(doc.ideal, i, doc.field);
  ordered_json j = skeleton("ass", doc);
  j["results"]["i"] = i;
  j["results"]["minimal"] = minimal;
  ordered_json list = ordered_json::array();
  std::string human;
  for (const VarSet& p : primes.primes) {
    list.push_back(json_varset(p, doc.vars));
    if (!human.empty()) human += " ";
    human += render_prime(p, doc.vars);
  }
  j["results"]["primes"] = list;
  emit(c, j, human + "\n");
  return 0;
}

struct HilbertOptions {
  int i = 0;
  std::string box;
  bool closed_form = false;
  std::string module = "lc";
};

std::pair<MultiDegree, MultiDegree> parse_box(const std::string& text, int n) {
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("box must look like lo..hi");
  const std::string lo_text = text.substr(0, sep);
  const std::string hi_text = text.substr(sep + 2);
  const auto parse_side = [n](const std::string& side) {
    if (side.find(',') == std::string::npos) {
      const int v = std::stoi(side);
      return MultiDegree(std::vector<int>(static_cast<std::size_t>(n), v));
    }
    return parse_multidegree(side, n);
  };
  return {parse_side(lo_text), parse_side(hi_text)};
}

int run_hilbert(const Common& c, const HilbertOptions& o) {
  const IdealDocument doc = load_document(c);
  if (o.closed_form == !o.box.empty())
    throw std::invalid_argument("hilbert needs exactly one of --box and --closed-form");
  ordered_json j = skeleton("hilbert", doc);
  j["results"]["i"] = o.i;
  std::ostringstream human;
  if (o.closed_form) {
    const auto terms = hilbert_series_closed_form(doc.ideal, o.i, doc.field);
    ordered_json list = ordered_json::array();
    for (const HilbertTerm& t : terms) {
      ordered_json e;
      e["alpha"] = json_varset(t.alpha, doc.vars);
      e["free_vars"] = json_varset(t.free_vars, doc.vars);
      e["multiplicity"] = t.multiplicity;
      list.push_back(e);
      human << "  alpha=" << render_varset(t.alpha, doc.vars)
            << " free=" << render_varset(t.free_vars, doc.vars)
            << " multiplicity=" << t.multiplicity << "\n";
    }
    j["results"]["terms"] = list;
    if (terms.empty()) human << "  (no terms; the module vanishes)\n";
  } else {
    const auto [lo, hi] = parse_box(o.box, doc.n());
    const GradedModule module =
        o.module == "ext" ? GradedModule::Ext : GradedModule::LocalCohomology;
    const auto table = hilbert_function_box(doc.ideal, o.i, lo, hi, doc.field, module);
    ordered_json list = ordered_json::array();
    for (const auto& [alpha, dim] : table) {
      ordered_json e;
      e["alpha"] = alpha.coords();
      e["dim"] = dim;
      list.push_back(e);
      human << "  " << render_multidegree(alpha) << " -> " << dim << "\n";
    }
    j["results"]["module"] = o.module;
    j["results"]["table"] = list;
    if (table.empty()) human << "  (all zero on this box)\n";
  }
  emit(c, j, human.str());
  return 0;
}

int run_check(const Common& c) {
  const IdealDocument doc = load_document(c);
  const BettiCheckReport report = check_betti_inequality(doc.ideal, doc.field);
  ordered_json j = skeleton("check", doc);
  ordered_json rows = ordered_json::array();
  std::ostringstream human;
  human << "betti inequality audit (lhs <= rhs, extremal equality)\n";
  for (const auto& row : report.rows) {
    ordered_json e;
    e["i"] = row.i;
    e["alpha"] = json_varset(row.alpha, doc.vars);
    e["lhs"] = row.lhs;
    e["rhs"] = row.rhs;
    e["dual_value"] = row.dual_value;
    e["dual_extremal"] = row.dual_extremal;
    e["inequality_ok"] = row.inequality_ok;
    e["equality_ok"] = row.equality_ok;
    rows.push_back(e);
    human << "  i=" << row.i << " alpha=" << render_varset(row.alpha, doc.vars) << " "
          << row.lhs << " <= " << row.rhs;
    if (row.dual_extremal) human << "  [dual extremal, dual value " << row.dual_value << "]";
    if (!row.inequality_ok || !row.equality_ok) human << "  VIOLATION";
    human << "\n";
  }
  j["results"]["rows"] = rows;
  j["results"]["violations"] = report.violations;
  human << (report.violations == 0 ? "no violations\n"
                                   : std::to_string(report.violations) + " violations\n");
  emit(c, j, human.str());
  return report.violations == 0 ? 0 : 4;
}

struct VerifyCli {
  int d_max = 2;
  std::uint64_t seed = 1;
  int random_count = 0;
};

int run_verify(const Common& c, const VerifyCli& v) {
  const IdealDocument doc = load_document(c);
  VerifyOptions options;
  options.field = doc.field;
  options.d_max = v.d_max;
  options.seed = v.seed;

  VerifyReport report = verify_ideal(doc.ideal, options);
  std::vector<std::string> random_labels;
  if (v.random_count > 0) {
    const VerifyReport random_report =
        verify_random(v.random_count, options, &random_labels);
    for (const VerifyCheck& check : random_report.checks) report.checks.push_back(check);
  }

  ordered_json j = skeleton("verify", doc);
  ordered_json checks = ordered_json::array();
  std::ostringstream human;
  for (const VerifyCheck& check : report.checks) {
    ordered_json e;
    e["name"] = check.name;
    e["cases"] = check.cases;
    e["mismatches"] = check.mismatches;
    e["details"] = check.details;
    checks.push_back(e);
    human << "  [" << (check.ok() ? "ok" : "FAIL") << "] " << check.name << " ("
          << check.cases << " cases";
    if (!check.ok()) human << ", " << check.mismatches << " mismatches";
    human << ")\n";
    for (const std::string& d : check.details) human << "      " << d << "\n";
  }
  j["results"]["checks"] = checks;
  j["results"]["ok"] = report.ok();
  if (v.random_count > 0) j["results"]["random_ideals"] = random_labels;
  human << (report.ok() ? "verify: all checks passed\n" : "verify: MISMATCHES FOUND\n");
  emit(c, j, human.str());
  return report.ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multigraded local cohomology and Ext of monomial ideals"};
  app.require_subcommand(1);

  Common common;
  int exit_code = 0;

  auto* dual = app.add_subcommand("dual", "alexander dual generators");
  add_common(dual, common);
  dual->callback([&]() { exit_code = run_dual(common); });

  ComplexOptions complex_options;
  auto* complex = app.add_subcommand("complex", "simplicial complexes attached to the ideal");
  add_common(complex, common);
  complex->add_option("--alpha", complex_options.alpha, "multidegree a1,...,an");
  complex->add_flag("--gens", complex_options.generators,
                    "complex on generator indices (needs --alpha)");
  complex->add_flag("--general", complex_options.general,
                    "negative-support complex for arbitrary ideals (needs --alpha)");
  complex->callback([&]() { exit_code = run_complex(common, complex_options); });

  std::string betti_of;
  auto* betti = app.add_subcommand("betti", "multigraded betti diagram");
  add_common(betti, common);
  betti->add_option("--of", betti_of, "betti numbers of the dual instead ('--of dual')")
      ->check(CLI::IsMember({"dual"}));
  betti->callback([&]() { exit_code = run_betti(common, betti_of == "dual"); });

  PieceOptions lc_options;
  auto* lc = app.add_subcommand("lc", "graded piece of local cohomology H^i_B(R)");
  add_common(lc, common);
  lc->add_option("--i", lc_options.i, "cohomological index")->required();
  lc->add_option("--alpha", lc_options.alpha, "multidegree a1,...,an")->required();
  lc->add_flag("--basis", lc_options.basis, "print cocycle representatives");
  lc->callback([&]() { exit_code = run_piece(common, lc_options, true); });

  PieceOptions ext_options;
  auto* ext = app.add_subcommand("ext", "graded piece of Ext^i(R/B, R)");
  add_common(ext, common);
  ext->add_option("--i", ext_options.i, "cohomological index")->required();
  ext->add_option("--alpha", ext_options.alpha, "multidegree a1,...,an")->required();
  ext->add_flag("--general", ext_options.general,
                "use the arbitrary-monomial-ideal pathway");
  ext->add_flag("--basis", ext_options.basis, "print cocycle representatives");
  ext->callback([&]() { exit_code = run_piece(common, ext_options, false); });

  int mult_i = 0;
  std::string mult_alpha, mult_var;
  auto* mult = app.add_subcommand("mult", "matrix of multiplication by a variable");
  add_common(mult, common);
  mult->add_option("--i", mult_i, "cohomological index")->required();
  mult->add_option("--alpha", mult_alpha, "multidegree a1,...,an")->required();
  mult->add_option("--var", mult_var, "variable name")->required();
  mult->callback([&]() { exit_code = run_mult(common, mult_i, mult_alpha, mult_var); });

  int filtration_i = 0;
  auto* filtration = app.add_subcommand("filtration", "canonical Ext filtration subquotients");
  add_common(filtration, common);
  filtration->add_option("--i", filtration_i, "cohomological index")->required();
  filtration->callback([&]() { exit_code = run_filtration(common, filtration_i); });

  int ass_i = 0;
  bool ass_minimal = false;
  auto* ass = app.add_subcommand("ass", "associated primes of Ext^i(R/B, R)");
  add_common(ass, common);
  ass->add_option("--i", ass_i, "cohomological index")->required();
  ass->add_flag("--minimal", ass_minimal, "only the minimal associated primes");
  ass->callback([&]() { exit_code = run_ass(common, ass_i, ass_minimal); });

  HilbertOptions hilbert_options;
  auto* hilbert = app.add_subcommand("hilbert", "hilbert data of H^i_B(R) or Ext");
  add_common(hilbert, common);
  hilbert->add_option("--i", hilbert_options.i, "cohomological index")->required();
  hilbert->add_option("--box", hilbert_options.box, "degree box lo..hi (vectors or scalars)");
  hilbert->add_flag("--closed-form", hilbert_options.closed_form,
                    "finite term list for the Ext hilbert function");
  hilbert->add_option("--module", hilbert_options.module, "lc or ext (box mode)")
      ->check(CLI::IsMember({"lc", "ext"}));
  hilbert->callback([&]() { exit_code = run_hilbert(common, hilbert_options); });

  auto* check = app.add_subcommand("check", "betti inequality and extremal equality audit");
  add_common(check, common);
  check->callback([&]() { exit_code = run_check(common); });

  VerifyCli verify_options;
  auto* verify = app.add_subcommand("verify", "oracle-equivalence suite");
  add_common(verify, common);
  verify->add_option("--dmax", verify_options.d_max, "largest frobenius power to test")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--random", verify_options.random_count,
                     "also verify this many seeded random ideals");
  verify->callback([&]() { exit_code = run_verify(common, verify_options); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const locoh::ParseError& e) {
    std::cerr << common.file << ":" << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
