#include "locoh/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace locoh {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

Monomial parse_monomial(const std::string& token, const std::vector<std::string>& vars,
                        int line, int start_column) {
  std::vector<int> exps(vars.size(), 0);
  std::size_t pos = 0;
  const auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(line, start_column + static_cast<int>(pos), msg);
  };
  bool any = false;
  while (pos < token.size()) {
    const char c = token[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    // longest declared name matching at this position
    std::size_t best = std::string::npos;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const std::string& name = vars[v];
      if (name.size() <= best_len) continue;
      if (token.compare(pos, name.size(), name) == 0) {
        best = v;
        best_len = name.size();
      }
    }
    if (best == std::string::npos) throw fail(std::string("unknown variable at '") + c + "'");
    pos += best_len;
    int exp = 1;
    if (pos < token.size() && token[pos] == '^') {
      ++pos;
      if (pos >= token.size() || !std::isdigit(static_cast<unsigned char>(token[pos])))
        throw fail("expected an exponent after '^'");
      long val = 0;
      while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
        val = val * 10 + (token[pos] - '0');
        if (val > 1'000'000) throw fail("exponent too large");
        ++pos;
      }
      if (val < 1) throw fail("exponents must be >= 1");
      exp = static_cast<int>(val);
    }
    exps[best] += exp;
    any = true;
  }
  if (!any) throw ParseError(line, start_column, "empty monomial");
  return Monomial(std::move(exps));
}

IdealDocument parse_ideal_document(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    lines.push_back(cur);
  }

  IdealDocument doc;
  doc.field = FieldSpec::rationals();
  bool have_vars = false;
  std::vector<Monomial> gens;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string line = strip_comment(lines[li]);
    if (blank(line)) continue;

    const std::vector<std::string> words = split_ws(line);
    if (!have_vars) {
      if (words.empty() || words.front() != "vars")
        throw ParseError(line_no, 1, "expected a 'vars ...' header line");
      for (std::size_t w = 1; w < words.size(); ++w) {
        const std::string& name = words[w];
        if (!std::all_of(name.begin(), name.end(), is_name_char) ||
            std::isdigit(static_cast<unsigned char>(name.front())))
          throw ParseError(line_no, 1, "bad variable name '" + name + "'");
        if (std::find(doc.vars.begin(), doc.vars.end(), name) != doc.vars.end())
          throw ParseError(line_no, 1, "duplicate variable name '" + name + "'");
        doc.vars.push_back(name);
      }
      if (doc.vars.empty()) throw ParseError(line_no, 1, "no variables declared");
      if (doc.vars.size() > static_cast<std::size_t>(kMaxVariables))
        throw ParseError(line_no, 1, "at most 64 variables are supported");
      have_vars = true;
      continue;
    }
    if (words.front() == "field") {
      std::string rest;
      for (std::size_t w = 1; w < words.size(); ++w) {
        if (w > 1) rest += ' ';
        rest += words[w];
      }
      try {
        doc.field = FieldSpec::parse(rest);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 1, e.what());
      }
      continue;
    }

    // generator line: comma-separated monomials
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      const std::string token = line.substr(start, comma - start);
      if (!blank(token))
        gens.push_back(parse_monomial(token, doc.vars, line_no, static_cast<int>(start) + 1));
      start = comma + 1;
    }
  }

  if (!have_vars) throw ParseError(1, 1, "expected a 'vars ...' header line");
  if (gens.empty()) throw ParseError(static_cast<int>(lines.size()), 1, "no generators given");
  doc.ideal = MonomialIdeal(doc.n(), std::move(gens));
  return doc;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.is_one()) return "1";
  bool single_letters = true;
  for (const std::string& v : vars)
    if (v.size() != 1) single_letters = false;
  std::string out;
  for (int j = 0; j < m.n(); ++j) {
    const int e = m.exponent(j);
    if (e == 0) continue;
    if (!out.empty() && !single_letters) out += '*';
    out += vars[static_cast<std::size_t>(j)];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string render_varset(const VarSet& s, const std::vector<std::string>& vars) {
  std::string out = "{";
  bool first = true;
  for (int j : s.members()) {
    if (!first) out += ',';
    out += vars[static_cast<std::size_t>(j)];
    first = false;
  }
  return out + "}";
}

std::string render_prime(const VarSet& s, const std::vector<std::string>& vars) {
  std::string out = "(";
  bool first = true;
  for (int j : s.members()) {
    if (!first) out += ',';
    out += vars[static_cast<std::size_t>(j)];
    first = false;
  }
  return out + ")";
}

std::string render_multidegree(const MultiDegree& d) {
  std::string out = "(";
  for (int j = 0; j < d.n(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(d[j]);
  }
  return out + ")";
}

MultiDegree parse_multidegree(const std::string& text, int n) {
  std::vector<int> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(start, comma - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multidegree entry '" + piece + "'");
    }
    while (used < piece.size() && std::isspace(static_cast<unsigned char>(piece[used]))) ++used;
    if (used != piece.size())
      throw std::invalid_argument("bad multidegree entry '" + piece + "'");
    coords.push_back(value);
    start = comma + 1;
  }
  if (static_cast<int>(coords.size()) != n)
    throw std::invalid_argument("multidegree has " + std::to_string(coords.size()) +
                                " entries, expected " + std::to_string(n));
  return MultiDegree(std::move(coords));
}

std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

std::string input_hash(const IdealDocument& doc) {
  std::string canon;
  for (const std::string& v : doc.vars) canon += v + ";";
  canon += "|" + doc.field.name() + "|";
  for (const Monomial& g : doc.ideal.generators()) {
    for (int j = 0; j < g.n(); ++j) canon += std::to_string(g.exponent(j)) + ",";
    canon += ";";
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace locoh
