#include <gtest/gtest.h>

#include <map>

#include "oto/enumerate.hpp"
#include "oto/hierarchy.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"
#include "oto/syntax.hpp"
#include "expansion.hpp"
#include "printers.hpp"

using namespace oto;

namespace {

Term nat(std::uint64_t n) { return Term::natural(n); }
Term w() { return omega_power(nat(1)); }

BigNat pow2(unsigned n) { return BigNat(1) << n; }

}  // namespace

TEST(Hierarchy, Examples) {
  const auto suc = suc_base();
  EXPECT_EQ(eval_hierarchy(suc, nat(0), 7), 8);
  EXPECT_EQ(eval_hierarchy(suc, nat(3), 2), 10);
  EXPECT_EQ(eval_hierarchy(suc, w(), 2), 66);
  EXPECT_EQ(eval_hierarchy(suc, w(), 2, {}, NormOverride{{w(), 1}}), 34);
}

TEST(Hierarchy, FiniteClosedForm) {
  HierarchyEvaluator ev(suc_base());
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned m = 0; m <= 10; ++m) EXPECT_EQ(ev.eval(nat(n), m), m + pow2(n)) << n << " " << m;
  }
}

TEST(Hierarchy, OmegaLevelMatchesExpansion) {
  oto_test::Expand structural(suc_base());
  oto_test::Expand override1(suc_base(), NormOverride{{w(), 1}});
  for (unsigned m = 0; m <= 4; ++m) {
    EXPECT_EQ(eval_hierarchy(suc_base(), w(), m), structural(w(), m)) << m;
    EXPECT_EQ(eval_hierarchy(suc_base(), w(), m, {}, NormOverride{{w(), 1}}), override1(w(), m)) << m;
  }
  for (unsigned m = 0; m <= 10; ++m) {
    EXPECT_EQ(eval_hierarchy(suc_base(), w(), m), m + pow2(m + 4));
    EXPECT_EQ(eval_hierarchy(suc_base(), w(), m, {}, NormOverride{{w(), 1}}), m + pow2(m + 3));
  }
}

TEST(Hierarchy, LinMatchesExpansion) {
  oto_test::Expand lin(lin_base());
  for (const auto& a : {nat(0), nat(1), nat(2), nat(3)}) {
    for (unsigned m = 0; m <= 3; ++m) EXPECT_EQ(eval_hierarchy(lin_base(), a, m), lin(a, m));
  }
}

TEST(Hierarchy, Budgets) {
  EvalBudget tiny{1000, 64, 1000};
  try {
    eval_hierarchy(suc_base(), make_collapse(nat(1), Term()), 0, tiny);
    FAIL() << "expected a budget failure";
  } catch (const BudgetExceeded& e) {
    SUCCEED() << to_string(e.kind());
  }
  try {
    eval_hierarchy(lin_base(), nat(12), 0, EvalBudget{1000, 64, 10'000'000});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.kind(), BudgetExceeded::Kind::kValueBits);
  }
  try {
    eval_hierarchy(lin_base(), nat(12), 0, EvalBudget{1000, 1 << 20, 100});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.kind(), BudgetExceeded::Kind::kNodes);
  }
}

TEST(Hierarchy, DeterministicFailureKind) {
  EvalBudget b{5000, 256, 5000};
  auto kind = [&] {
    try {
      eval_hierarchy(lin_base(), w(), 3, b);
    } catch (const BudgetExceeded& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind(), kind());
}

TEST(Hierarchy, ContractWarning) {
  std::vector<std::string> warnings;
  eval_hierarchy(suc_base(), nat(1), 0, {}, {}, &warnings);
  EXPECT_EQ(warnings.size(), 1u);
  warnings.clear();
  eval_hierarchy(lin_base(), nat(1), 0, {}, {}, &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(ShiftBase, Examples) {
  const auto s0 = shift_base(suc_base(), 0);
  for (unsigned m = 0; m <= 20; ++m) EXPECT_EQ(s0(m), suc_base()(m));
  EXPECT_EQ(shift_base(suc_base(), 3)(4), 8);
  EXPECT_EQ(shift_base(lin_base(), 2)(5), 15);
  EXPECT_EQ(shift_base(lin_base(), 2).name, "lin[2]");
}

TEST(BaseContract, Examples) {
  EXPECT_TRUE(check_base_contract(lin_base(), 1000).passed());
  const auto suc = check_base_contract(suc_base(), 10);
  EXPECT_FALSE(suc.passed());
  bool found = false;
  for (const auto& c : suc.checks) {
    if (c.counterexample && *c.counterexample == 1) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(check_base_contract(expshift_base(), 64).passed());
  EXPECT_EQ(expshift_base()(2), 66);
}

TEST(EnumerateBelow, Examples) {
  EXPECT_EQ(enumerate_below(nat(1), 9), std::vector<Term>{Term()});
  EXPECT_EQ(enumerate_below(w(), 3), (std::vector<Term>{nat(0), nat(1), nat(2), nat(3)}));
  const auto ww = enumerate_below(omega_power(w()), 2);
  EXPECT_EQ(ww, (std::vector<Term>{nat(0), nat(1), nat(2), w()}));
}

TEST(HierarchyProperties, MonotoneAndDominated) {
  EvalBudget b{100'000, 4096, 100'000};
  const auto alphas = terms_up_to_norm(3);
  for (const auto& f : {suc_base(), lin_base()}) {
    for (const auto& a : alphas) {
      if (!a.is_natural() || a.natural_value() > 3) continue;
      for (unsigned m = 0; m < 4; ++m) {
        const BigNat v = eval_hierarchy(f, a, m, b);
        EXPECT_LT(v, eval_hierarchy(f, a, m + 1, b));
        EXPECT_LE(eval_hierarchy(f, a, v, b), eval_hierarchy(f, add(a, nat(1)), m, b));
      }
    }
  }
}
