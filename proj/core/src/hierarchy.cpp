#include "oto/hierarchy.hpp"

#include <limits>

#include "oto/enumerate.hpp"
#include "oto/order.hpp"

namespace oto {

namespace {

constexpr std::uint64_t kMaxExpshiftArg = 1u << 22;

std::uint64_t bits(const BigNat& v) {
  return v == 0 ? 0 : static_cast<std::uint64_t>(boost::multiprecision::msb(v)) + 1;
}

std::uint64_t saturate(const BigNat& v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(v);
}

struct EvalKey {
  Term alpha;
  BigNat m;
  bool operator==(const EvalKey& o) const { return m == o.m && alpha == o.alpha; }
};

struct EvalKeyHash {
  std::size_t operator()(const EvalKey& k) const noexcept {
    const auto low = static_cast<std::uint64_t>(k.m & std::numeric_limits<std::uint64_t>::max());
    return k.alpha.hash() * 1000003u ^ std::hash<std::uint64_t>{}(low) ^ bits(k.m);
  }
};

struct IndexKey {
  Term alpha;
  std::uint64_t k;
  bool operator==(const IndexKey& o) const { return k == o.k && alpha == o.alpha; }
};

struct IndexKeyHash {
  std::size_t operator()(const IndexKey& k) const noexcept {
    return k.alpha.hash() * 31 + std::hash<std::uint64_t>{}(k.k);
  }
};

}  // namespace

BaseFunction suc_base() {
  return {"suc", [](const BigNat& m) { return BigNat(m + 1); }, false, "m + 1"};
}

BaseFunction lin_base() {
  return {"lin", [](const BigNat& m) { return BigNat(2 * m + 1); }, true, "2m + 1"};
}

BaseFunction expshift_base() {
  return {"expshift",
          [](const BigNat& m) {
            if (m > kMaxExpshiftArg) {
              throw BudgetExceeded(BudgetExceeded::Kind::kValueBits,
                                   "expshift argument too large to exponentiate");
            }
            BigNat p = 1;
            p <<= static_cast<unsigned>(m) + 4;
            return BigNat(m + p);
          },
          true, "m + 2^(m+4)"};
}

BaseFunction shift_base(const BaseFunction& f, std::uint64_t n) {
  auto inner = f.eval;
  return {f.name + "[" + std::to_string(n) + "]",
          [inner, n](const BigNat& m) { return inner(m + n); }, f.satisfies_f1f2,
          f.closed_form + " at m + " + std::to_string(n)};
}

BaseFunction base_by_name(const std::string& name) {
  if (name == "suc") return suc_base();
  if (name == "lin") return lin_base();
  if (name == "expshift") return expshift_base();
  throw std::invalid_argument("unknown base function '" + name + "'");
}

bool ContractReport::passed() const {
  for (const auto& c : checks) {
    if (c.counterexample) return false;
  }
  return true;
}

ContractReport check_base_contract(const BaseFunction& f, std::uint64_t up_to,
                                   std::uint64_t max_bits) {
  ContractCheck mono{"monotone", std::nullopt, 0, 0};
  ContractCheck f1{"f.1", std::nullopt, 0, 0};
  ContractCheck f2{"f.2", std::nullopt, 0, 0};
  std::optional<BigNat> prev;
  for (std::uint64_t m = 0; m <= up_to; ++m) {
    const BigNat fm = f(m);
    if (prev) {
      ++mono.checked;
      if (!(*prev < fm) && !mono.counterexample) mono.counterexample = m - 1;
    }
    prev = fm;
    ++f1.checked;
    if (BigNat(2 * m + 1) > fm && !f1.counterexample) f1.counterexample = m;
    if (bits(fm) > max_bits) {
      ++f2.skipped;
      continue;
    }
    BigNat ffm;
    try {
      ffm = f(fm);
    } catch (const BudgetExceeded&) {
      ++f2.skipped;
      continue;
    }
    ++f2.checked;
    if (2 * fm > ffm && !f2.counterexample) f2.counterexample = m;
  }
  return ContractReport{{mono, f1, f2}};
}

std::string to_string(BudgetExceeded::Kind k) {
  switch (k) {
    case BudgetExceeded::Kind::kTerms: return "enumerated-terms";
    case BudgetExceeded::Kind::kValueBits: return "value-bits";
    case BudgetExceeded::Kind::kNodes: return "recursion-nodes";
  }
  return "?";
}

struct HierarchyEvaluator::Impl {
  BaseFunction f;
  EvalBudget budget;
  NormOverride overrides;
  TermEnumerator enumerator;
  std::unordered_map<EvalKey, BigNat, EvalKeyHash> memo;
  std::unordered_map<IndexKey, std::vector<Term>, IndexKeyHash> index_memo;
  std::vector<std::string> warnings;
  std::uint64_t nodes = 0;

  Impl(BaseFunction base, EvalBudget b, NormOverride o)
      : f(std::move(base)),
        budget(b),
        overrides(std::move(o)),
        enumerator(static_cast<std::size_t>(b.max_enumerated_terms)) {}

  std::uint64_t norm_of(const Term& t) const {
    if (auto it = overrides.find(t); it != overrides.end()) return it->second;
    return t.norm();
  }

  BigNat checked(BigNat v) const {
    if (bits(v) > budget.max_value_bits) {
      throw BudgetExceeded(BudgetExceeded::Kind::kValueBits,
                           "value exceeds " + std::to_string(budget.max_value_bits) + " bits");
    }
    return v;
  }

  const std::vector<Term>& index_set(const Term& alpha, std::uint64_t k) {
    IndexKey key{alpha, k};
    if (auto it = index_memo.find(key); it != index_memo.end()) return it->second;
    std::vector<Term> out;
    try {
      for (auto& b : enumerator.up_to_norm(k, alpha)) {
        if (norm_of(b) <= k) out.push_back(std::move(b));
      }
    } catch (const EnumerationBudget& e) {
      throw BudgetExceeded(BudgetExceeded::Kind::kTerms, e.what());
    }
    for (const auto& [t, n] : overrides) {
      if (n > k || t.norm() <= k || !less(t, alpha)) continue;
      out.push_back(t);
    }
    return index_memo.emplace(std::move(key), std::move(out)).first->second;
  }

  BigNat eval(const Term& alpha, const BigNat& m) {
    if (alpha.is_zero()) return checked(f(m));
    EvalKey key{alpha, m};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes > budget.max_recursion_nodes) {
      throw BudgetExceeded(BudgetExceeded::Kind::kNodes,
                           "recursion exceeded " + std::to_string(budget.max_recursion_nodes) +
                               " nodes");
    }
    const std::uint64_t k = saturate(f(BigNat(norm_of(alpha)) + m));
    // Copy: recursive calls may rehash the index memo.
    const std::vector<Term> betas = index_set(alpha, k);
    BigNat best = 0;
    for (const auto& b : betas) {
      const BigNat inner = eval(b, m);
      const BigNat v = eval(b, inner);
      if (v > best) best = v;
    }
    best = checked(std::move(best));
    memo.emplace(std::move(key), best);
    return best;
  }
};

HierarchyEvaluator::HierarchyEvaluator(BaseFunction f, EvalBudget budget, NormOverride overrides)
    : impl_(std::make_unique<Impl>(std::move(f), budget, std::move(overrides))) {
  if (!impl_->f.satisfies_f1f2) {
    impl_->warnings.push_back("base function '" + impl_->f.name +
                              "' is not declared to satisfy (f.1)/(f.2)");
  }
}

HierarchyEvaluator::~HierarchyEvaluator() = default;
HierarchyEvaluator::HierarchyEvaluator(HierarchyEvaluator&&) noexcept = default;
HierarchyEvaluator& HierarchyEvaluator::operator=(HierarchyEvaluator&&) noexcept = default;

BigNat HierarchyEvaluator::eval(const Term& alpha, const BigNat& m) { return impl_->eval(alpha, m); }
std::uint64_t HierarchyEvaluator::norm_of(const Term& t) const { return impl_->norm_of(t); }
const std::vector<Term>& HierarchyEvaluator::index_set(const Term& alpha, std::uint64_t k) {
  return impl_->index_set(alpha, k);
}
const std::vector<std::string>& HierarchyEvaluator::warnings() const { return impl_->warnings; }
std::uint64_t HierarchyEvaluator::nodes() const { return impl_->nodes; }

BigNat eval_hierarchy(const BaseFunction& f, const Term& alpha, const BigNat& m,
                      const EvalBudget& budget, const NormOverride& overrides,
                      std::vector<std::string>* warnings) {
  HierarchyEvaluator ev(f, budget, overrides);
  if (warnings) warnings->insert(warnings->end(), ev.warnings().begin(), ev.warnings().end());
  return ev.eval(alpha, m);
}

std::vector<Term> enumerate_below(const Term& alpha, std::uint64_t k, std::size_t max_terms) {
  return terms_up_to_norm(k, alpha, max_terms);
}

}  // namespace oto
