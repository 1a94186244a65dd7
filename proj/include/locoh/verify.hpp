#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locoh/field.hpp"
#include "locoh/monomial.hpp"

namespace locoh {

struct VerifyOptions {
  FieldSpec field;
  int d_max = 2;
  /// Cap on exhaustive degree boxes before seeded subsampling kicks in.
  std::size_t box_budget = 4096;
  std::uint64_t seed = 1;
};

struct VerifyCheck {
  std::string name;
  long cases = 0;
  long mismatches = 0;
  std::vector<std::string> details;  // first few mismatch descriptions

  bool ok() const { return mismatches == 0; }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool ok() const {
    for (const VerifyCheck& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  long total_cases() const {
    long t = 0;
    for (const VerifyCheck& c : checks) t += c.cases;
    return t;
  }
  long total_mismatches() const {
    long t = 0;
    for (const VerifyCheck& c : checks) t += c.mismatches;
    return t;
  }
};

/// Cross-validates every fast-path result on one squarefree ideal against
/// the independent Taylor-resolution oracle and the internal dualities:
/// dual involution, duality of Betti numbers with Ext, Tor strands,
/// pathway agreement, stabilization in d, multiplication maps, the Betti
/// inequality and the Hilbert closed form.
VerifyReport verify_ideal(const MonomialIdeal& ideal, const VerifyOptions& options);

/// Runs verify_ideal on `count` seeded random ideals (fanned out over a
/// small worker pool, capped by the LOCOH_WORKERS environment variable).
/// Returns one aggregated report; `labels` receives a printable generator
/// list per ideal.
VerifyReport verify_random(int count, const VerifyOptions& options,
                           std::vector<std::string>* labels = nullptr);

/// Seeded random squarefree nonzero proper ideal with at most `max_vars`
/// variables and `max_gens` generators. Deterministic across platforms.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int max_vars, int max_gens);

}  // namespace locoh
