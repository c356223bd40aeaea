#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <unordered_set>

#include "brute_force.hpp"
#include "printers.hpp"
#include "oto/coefficients.hpp"
#include "oto/enumerate.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"
#include "oto/syntax.hpp"

using namespace oto;

namespace {

Term nat(std::uint64_t n) { return Term::natural(n); }
Term w() { return omega_power(nat(1)); }
Term W() { return Term::omega(); }
Term P(const char* s) { return parse_term(s); }

}  // namespace

TEST(Normalize, SuccessorOfZeroIsOne) {
  const Term one = normalize(RawTerm::succ(RawTerm::zero()));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.leading().is_wpow());
  EXPECT_TRUE(one.leading().exponent().is_zero());
  EXPECT_EQ(one, nat(1));
}

TEST(Normalize, ZeroIterateIsSuccessor) {
  for (const auto& x : {nat(0), nat(4), w(), P("S^(W)(0)")}) {
    EXPECT_EQ(normalize(RawTerm::collapse(RawTerm::zero(), to_raw(x))), add(x, nat(1)));
    EXPECT_EQ(make_collapse(Term(), x), add(x, nat(1)));
  }
}

TEST(Normalize, OmegaPowers) {
  EXPECT_EQ(normalize(RawTerm::omega_pow(RawTerm::zero(), to_raw(w()))), w());
  // w^(W*2 + 3) = W^2 * w^3
  const RawTerm e = RawTerm::plus(RawTerm::omega_pow(RawTerm::nat_of(1), RawTerm::nat_of(2)), RawTerm::nat_of(3));
  const Term got = normalize(RawTerm::wpow(e));
  EXPECT_EQ(got, omega_times(nat(2), omega_power(nat(3))));
  EXPECT_EQ(to_string(got), "W^(2)*(w^(3))");
}

TEST(Normalize, MalformedSeed) {
  EXPECT_THROW(normalize(RawTerm::collapse(RawTerm::nat_of(1), RawTerm::omega())), MalformedTerm);
  EXPECT_THROW(normalize(RawTerm::omega_pow(RawTerm::nat_of(1), RawTerm::omega())), MalformedTerm);
}

TEST(Normalize, StronglyCriticalFixedPoint) {
  const Term g = P("S^(1)(0)");
  EXPECT_EQ(omega_power(g), g);
  EXPECT_EQ(omega_power(W()), W());
}

TEST(Norm, PaperValues) {
  EXPECT_EQ(Term().norm(), 0u);
  EXPECT_EQ(W().norm(), 1u);
  EXPECT_EQ(nat(3).norm(), 3u);
  EXPECT_EQ(make_collapse(nat(2), Term()).norm(), 3u);
  EXPECT_EQ(w().norm(), 2u);
}

TEST(Norm, RawAgreesOnCanonicalRendering) {
  for (const auto& t : terms_up_to_norm(4)) EXPECT_EQ(raw_norm(to_raw(t)), t.norm()) << to_string(t);
}

TEST(Coefficients, PaperValues) {
  EXPECT_TRUE(coefficients(Term()).empty());
  EXPECT_TRUE(coefficients(W()).empty());
  const Term c = P("S^(W)(0)");
  const CoeffSet kc = coefficients(c);
  ASSERT_EQ(kc.size(), 1u);
  EXPECT_EQ(kc.members()[0], c);
  const CoeffSet k = coefficients(omega_times(w(), nat(5)));
  EXPECT_TRUE(k.equivalent_to(CoeffSet{nat(5), w()}));
  EXPECT_EQ(k.size(), 2u);
}

TEST(Coefficients, CountableIsSingleton) {
  for (const auto& t : terms_up_to_norm(5)) {
    if (!t.is_below_omega() || t.is_zero()) continue;
    const CoeffSet k = coefficients(t);
    ASSERT_EQ(k.size(), 1u) << to_string(t);
    EXPECT_EQ(k.members()[0], t);
  }
}

TEST(Coefficients, InsertRejectsUncountable) {
  CoeffSet k;
  EXPECT_THROW(k.insert(W()), MalformedTerm);
  EXPECT_TRUE(k.insert(P("S^(1)(0)")));
  EXPECT_FALSE(k.insert(P("S^(1)(1)")));  // EQ member already present
  EXPECT_EQ(k.size(), 1u);
}

TEST(Classify, Examples) {
  EXPECT_TRUE(P("S^(W)(0)").is_below_omega());
  EXPECT_FALSE(W().is_below_omega());
  EXPECT_EQ(classify(P("w^0 + w^0")), TermClass::kCompositeSum);
  EXPECT_EQ(classify(Term()), TermClass::kZero);
  EXPECT_EQ(classify(w()), TermClass::kAdditivelyIndecomposable);
  EXPECT_EQ(classify(W()), TermClass::kStronglyCritical);
  EXPECT_EQ(classify(P("S^(1)(0)")), TermClass::kStronglyCritical);
}

TEST(Classify, CollapseSideConditions) {
  for (const auto& t : terms_up_to_norm(5)) {
    if (!t.is_monomial() || !t.leading().is_collapse()) continue;
    EXPECT_TRUE(less(t.leading().seed(), t)) << to_string(t);
    EXPECT_TRUE(coefficients(t.leading().iterate()).all_below(t)) << to_string(t);
  }
}

TEST(Enumerate, SmallNorms) {
  EXPECT_EQ(terms_up_to_norm(0), std::vector<Term>{Term()});
  const auto one = terms_up_to_norm(1);
  ASSERT_EQ(one.size(), 3u);
  std::unordered_set<Term> s(one.begin(), one.end());
  EXPECT_TRUE(s.count(Term()) && s.count(nat(1)) && s.count(W()));
  EXPECT_EQ(terms_up_to_norm(3, w()), (std::vector<Term>{nat(0), nat(1), nat(2), nat(3)}));
}

TEST(Enumerate, Counts) {
  const std::vector<std::size_t> want = {1, 3, 8, 26, 110, 515, 2576};
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(terms_up_to_norm(k).size(), want[k]) << k;
}

TEST(Enumerate, MatchesBruteForce) {
  oto_test::BruteForce bf;
  for (std::uint64_t k = 0; k <= 5; ++k) {
    const auto got = terms_up_to_norm(k);
    const auto want = bf.up_to(k);
    std::unordered_set<Term> g(got.begin(), got.end()), b(want.begin(), want.end());
    EXPECT_EQ(g.size(), got.size()) << "repeats at " << k;
    EXPECT_EQ(g, b) << "norm " << k;
  }
}

TEST(Enumerate, BelowBoundFilters) {
  const auto all = terms_up_to_norm(4);
  for (const auto& bound : {nat(2), w(), P("S^(1)(0)"), W(), P("W + 1")}) {
    std::vector<Term> want;
    for (const auto& t : all) {
      if (less(t, bound)) want.push_back(t);
    }
    auto got = terms_up_to_norm(4, bound);
    std::unordered_set<Term> g(got.begin(), got.end()), b(want.begin(), want.end());
    EXPECT_EQ(g, b) << to_string(bound);
  }
}

TEST(Enumerate, CapThrows) {
  EXPECT_THROW(terms_up_to_norm(6, std::nullopt, 100), EnumerationBudget);
  // An astronomically large norm below a limit must fail cleanly, not overflow.
  EXPECT_THROW(terms_up_to_norm(UINT64_MAX, w(), 10'000), EnumerationBudget);
  EXPECT_EQ(terms_up_to_norm(UINT64_MAX, nat(3), 10'000).size(), 3u);
}

TEST(Normalize, IdempotentOnRawTerms) {
  // Random raw trees of small size.
  std::mt19937_64 rng(7);
  std::function<RawTerm(int)> gen = [&](int depth) -> RawTerm {
    const int k = depth <= 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 8);
    switch (k) {
      case 0: return RawTerm::zero();
      case 1: return RawTerm::omega();
      case 2: return RawTerm::nat_of(rng() % 4);
      case 3: return RawTerm::succ(gen(depth - 1));
      case 4: return RawTerm::plus(gen(depth - 1), gen(depth - 1));
      case 5: return RawTerm::wpow(gen(depth - 1));
      case 6: return RawTerm::omega_pow(gen(depth - 1), gen(depth - 1));
      default: return RawTerm::collapse(gen(depth - 1), gen(depth - 1));
    }
  };
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const RawTerm r = gen(4);
    Term t;
    try {
      t = normalize(r);
    } catch (const MalformedTerm&) {
      continue;
    }
    ++checked;
    ASSERT_EQ(normalize(to_raw(t)), t) << to_string(t);
  }
  EXPECT_GT(checked, 1000);
}
