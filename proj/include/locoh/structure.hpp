#pragma once

#include <map>
#include <vector>

#include "locoh/field.hpp"
#include "locoh/monomial.hpp"
#include "locoh/varset.hpp"

namespace locoh {

/// All nonzero multigraded Betti numbers beta_{i,alpha} of a squarefree
/// ideal; keys are (homological index, degree support), values the
/// multiplicities. Entries exist only for squarefree degrees.
struct BettiTable {
  MonomialIdeal ideal;
  std::map<std::pair<int, std::uint64_t>, long> entries;

  long at(int i, const VarSet& alpha) const {
    const auto it = entries.find({i, alpha.bits()});
    return it == entries.end() ? 0 : it->second;
  }
};

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field);

/// Betti-diagram cell: row index |alpha| - j, column the homological
/// index j, with the contributing degrees listed.
struct BettiDiagram {
  struct Cell {
    int row = 0;  // |alpha| - j
    int col = 0;  // j
    long total = 0;
    std::vector<std::pair<VarSet, long>> degrees;
  };
  BettiTable table;
  std::vector<Cell> cells;  // sorted by (row, col)
  int max_row = 0;
  int max_col = 0;
};

BettiDiagram betti_diagram(const MonomialIdeal& ideal, const FieldSpec& field);

/// Extremality in the (index, degree) poset: no nonzero entry at (j, a')
/// with j >= i, a' strictly containing a and |a'| - |a| >= j - i.
bool is_extremal(const BettiTable& table, int i, const VarSet& alpha);

/// Layered subquotient data of the canonical filtration of
/// Ext^i_R(R/B, R): layer l collects the twists alpha of weight l with
/// multiplicity beta_{l-i,alpha}(dual). Only nonzero rows are stored.
struct FiltrationReport {
  MonomialIdeal ideal;
  int i = 0;
  struct Entry {
    VarSet alpha;
    long multiplicity = 0;
  };
  std::vector<std::vector<Entry>> layers;  // index l = 0..n
};

FiltrationReport filtration_quotients(const MonomialIdeal& ideal, int i, const FieldSpec& field);

/// Pointwise audit of the Betti inequality between an ideal and its
/// Alexander dual, plus the extremal-equality clause.
struct BettiCheckReport {
  struct Row {
    int i = 0;
    VarSet alpha;
    long lhs = 0;        // beta_{i,alpha}(B)
    long rhs = 0;        // sum over a' >= alpha of beta_{|alpha|-i-1,a'}(dual)
    long dual_value = 0; // beta_{|alpha|-i-1,alpha}(dual)
    bool inequality_ok = true;
    bool dual_extremal = false;  // dual_value nonzero and extremal in the dual table
    bool equality_ok = true;     // when dual_extremal: lhs == dual_value and lhs extremal
  };
  MonomialIdeal ideal;
  std::vector<Row> rows;  // rows with any nonzero quantity
  long violations = 0;
};

BettiCheckReport check_betti_inequality(const MonomialIdeal& ideal, const FieldSpec& field);

/// Set of monomial primes, each given by its variable support.
struct PrimeIdealSet {
  std::vector<VarSet> primes;  // sorted by (weight, face-lex)

  bool contains(const VarSet& f) const {
    for (const VarSet& p : primes)
      if (p == f) return true;
    return false;
  }
};

/// Associated primes of Ext^i_R(R/B, R): the supports F whose restriction
/// maps to all one-vertex-deleted subcomplexes have a nonzero joint kernel.
/// One stacked rank computation per F.
PrimeIdealSet associated_primes(const MonomialIdeal& ideal, int i, const FieldSpec& field);

/// Minimal associated primes, read off the dual Betti support alone:
/// supports with nonzero multiplicity none of whose proper subsets has one.
PrimeIdealSet minimal_associated_primes(const MonomialIdeal& ideal, int i,
                                        const FieldSpec& field);

}  // namespace locoh
