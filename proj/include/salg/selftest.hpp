#pragma once

// The acceptance checks, runnable from the CLI (`salg selftest`) and from the
// acceptance test binary. Output depends only on the seed.

#include <cstdint>
#include <string>
#include <vector>

namespace salg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool ok = true;
  /// Short deterministic lines: counts, values found, first failure.
  std::vector<std::string> details;
};

/// Criteria 1..9; `only` restricts to the listed ids when non-empty.
std::vector<CriterionResult> run_selftest(std::uint64_t seed, const std::vector<int>& only = {});

CriterionResult check_free_ksdim(std::uint64_t seed);
CriterionResult check_corpus_exactness(std::uint64_t seed);
CriterionResult check_groebner_oracle(std::uint64_t seed);
CriterionResult check_covers(std::uint64_t seed);
CriterionResult check_gr(std::uint64_t seed);
CriterionResult check_hc_axioms(std::uint64_t seed);
CriterionResult check_graded_criterion(std::uint64_t seed);
CriterionResult check_orbits(std::uint64_t seed);
CriterionResult check_monomorphisms(std::uint64_t seed);

}  // namespace salg
