#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oto/term.hpp"

namespace oto {

using BigNat = boost::multiprecision::cpp_int;

/// A strictly increasing number-theoretic function used as the base of the
/// hierarchy.
struct BaseFunction {
  std::string name;
  std::function<BigNat(const BigNat&)> eval;
  bool satisfies_f1f2 = false;  // declared, see check_base_contract
  std::string closed_form;

  BigNat operator()(const BigNat& m) const { return eval(m); }
};

/// m + 1. Violates (f.1).
BaseFunction suc_base();
/// 2m + 1.
BaseFunction lin_base();
/// m + 2^(m+4). Throws BudgetExceeded when m is too large to exponentiate.
BaseFunction expshift_base();
/// m -> f(n + m), written f[n].
BaseFunction shift_base(const BaseFunction& f, std::uint64_t n);
/// Looks up "suc", "lin" or "expshift". Throws std::invalid_argument.
BaseFunction base_by_name(const std::string& name);

struct ContractCheck {
  std::string condition;  // "monotone", "f.1" or "f.2"
  std::optional<std::uint64_t> counterexample;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // values too large to evaluate
};

struct ContractReport {
  std::vector<ContractCheck> checks;
  bool passed() const;
};

/// Exhaustively checks strict monotonicity, (f.1) 2m+1 <= f(m) and (f.2)
/// 2 f(m) <= f(f(m)) for m <= up_to. Instances whose arguments would exceed
/// `max_bits` bits are counted as skipped.
ContractReport check_base_contract(const BaseFunction& f, std::uint64_t up_to,
                                   std::uint64_t max_bits = 1u << 16);

struct EvalBudget {
  std::uint64_t max_enumerated_terms = 1'000'000;
  std::uint64_t max_value_bits = 1u << 16;
  std::uint64_t max_recursion_nodes = 2'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  enum class Kind { kTerms, kValueBits, kNodes };
  BudgetExceeded(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(BudgetExceeded::Kind k);

/// Replacement norms for designated terms (matched syntactically). Only the
/// term itself is affected, not terms containing it.
using NormOverride = std::unordered_map<Term, std::uint64_t>;

/// Evaluator for f^alpha(m) = max { f^b(f^b(m)) | b < alpha, N(b) <= f(N(alpha) + m) }
/// with f^0(m) = f(m).
///
/// The recursion is over canonical terms; memo entries are keyed by the exact
/// term and argument. One instance holds one memo table and must not be
/// shared across threads.
class HierarchyEvaluator {
 public:
  HierarchyEvaluator(BaseFunction f, EvalBudget budget = {}, NormOverride overrides = {});
  ~HierarchyEvaluator();
  HierarchyEvaluator(HierarchyEvaluator&&) noexcept;
  HierarchyEvaluator& operator=(HierarchyEvaluator&&) noexcept;

  /// Throws BudgetExceeded. Budgets are cumulative over the instance.
  BigNat eval(const Term& alpha, const BigNat& m);

  std::uint64_t norm_of(const Term& t) const;
  /// Terms b < alpha with N(b) <= k, honoring overrides.
  const std::vector<Term>& index_set(const Term& alpha, std::uint64_t k);

  /// Set when f is not declared to satisfy (f.1)/(f.2).
  const std::vector<std::string>& warnings() const;
  std::uint64_t nodes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot evaluation with a fresh memo table. Contract warnings are
/// appended to `warnings` when given.
BigNat eval_hierarchy(const BaseFunction& f, const Term& alpha, const BigNat& m,
                      const EvalBudget& budget = {}, const NormOverride& overrides = {},
                      std::vector<std::string>* warnings = nullptr);

/// Terms b < alpha with N(b) <= k.
std::vector<Term> enumerate_below(const Term& alpha, std::uint64_t k,
                                  std::size_t max_terms = 2'000'000);

}  // namespace oto
