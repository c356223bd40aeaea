#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oto/ext.hpp"
#include "oto/hierarchy.hpp"
#include "oto/normalize.hpp"
#include "oto/term.hpp"

// Executable property checks over bounded, deterministic sample spaces.

namespace oto::audit {

struct CheckReport {
  std::string suite;
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;  // outside the evaluation budget; never counted as passed
  std::optional<std::string> counterexample;

  bool passed() const { return violations == 0; }
  void fail(std::string what);
};

struct Options {
  std::uint64_t max_norm = 4;
  std::uint64_t seed = 1;
  std::uint64_t sampled_triples = 10'000;
  /// Norm limits of the fixed-size spaces; the audit caps them at max_norm + offset.
  std::uint64_t cnf_norm = 7;
  std::uint64_t hierarchy_alpha_norm = 3;
  std::uint64_t hierarchy_max_m = 6;
  std::uint64_t shift_max_alpha = 6;
  std::uint64_t ext_leaf_norm = 2;
  EvalBudget budget{200'000, 4096, 200'000};
};

const std::vector<std::string>& suites();  // order, oracle, hierarchy, lemmas, prover

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<CheckReport> run(const std::string& suite, const Options& opts);

/// "suite/name: PASS (n instances, s skipped)" or FAIL with the counterexample.
std::string format(const CheckReport& r);

// Individual checks, usable with custom spaces.

std::vector<CheckReport> order_axioms(const std::vector<Term>& terms);
CheckReport transitivity_exhaustive(const std::vector<Term>& terms);
CheckReport transitivity_sampled(const std::vector<Term>& terms, std::uint64_t samples,
                                 std::uint64_t seed);
std::vector<CheckReport> add_laws(const std::vector<Term>& terms);
std::vector<CheckReport> collapse_laws(const std::vector<Term>& terms);
CheckReport cnf_agreement(const std::vector<Term>& terms);
std::vector<CheckReport> coefficient_corollary(const std::vector<Term>& terms);
std::vector<CheckReport> coefficient_invariants(const std::vector<Term>& terms);
std::vector<CheckReport> roundtrips(const std::vector<Term>& terms);
CheckReport normalize_idempotence(std::uint64_t max_norm);
CheckReport enumeration_matches_raw(std::uint64_t max_norm);

std::vector<CheckReport> hierarchy_closed_forms(const EvalBudget& budget);
std::vector<CheckReport> hierarchy_corollary(std::uint64_t alpha_norm, std::uint64_t max_m,
                                             const EvalBudget& budget);
std::vector<CheckReport> shift_lemmas(std::uint64_t max_alpha, std::uint64_t max_m,
                                      const EvalBudget& budget);
std::vector<CheckReport> norm_bound_spot_checks(const EvalBudget& budget);
CheckReport base_contracts();

/// Extended expressions of depth <= 3 over canonical leaves of norm <= leaf_norm.
std::vector<ExtTerm> ext_space(std::uint64_t leaf_norm);
std::vector<CheckReport> prover_checks(const std::vector<ExtTerm>& space);
std::vector<CheckReport> prover_examples();

/// Every raw term whose raw norm is at most k, sums as left-nested chains.
std::vector<RawTerm> raw_terms_up_to_norm(std::uint64_t k);

}  // namespace oto::audit
