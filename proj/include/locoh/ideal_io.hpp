#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "locoh/field.hpp"
#include "locoh/monomial.hpp"
#include "locoh/varset.hpp"

namespace locoh {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parsed ideal document: a `vars` header line, an optional `field` line,
/// and comma/newline-separated monomial generators ('*' optional between
/// variables, '^' for exponents, '#' starts a comment).
struct IdealDocument {
  std::vector<std::string> vars;
  MonomialIdeal ideal;
  FieldSpec field;

  int n() const { return static_cast<int>(vars.size()); }
};

IdealDocument parse_ideal_document(const std::string& text);

/// Single monomial in an established variable context (longest-match
/// tokenization over the declared names). Positions are reported relative
/// to (line, start_column).
Monomial parse_monomial(const std::string& token, const std::vector<std::string>& vars,
                        int line, int start_column);

std::string render_monomial(const Monomial& m, const std::vector<std::string>& vars);
std::string render_varset(const VarSet& s, const std::vector<std::string>& vars);
std::string render_prime(const VarSet& s, const std::vector<std::string>& vars);
std::string render_multidegree(const MultiDegree& d);

/// Comma-separated signed integers, length must be n.
MultiDegree parse_multidegree(const std::string& text, int n);

/// Default variable names x1..xn when none are supplied.
std::vector<std::string> default_var_names(int n);

/// Stable 64-bit FNV-1a hash of the canonical ideal presentation, hex
/// encoded; whitespace and generator order in the source do not affect it.
std::string input_hash(const IdealDocument& doc);

}  // namespace locoh
