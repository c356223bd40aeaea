#include <gtest/gtest.h>

#include <random>

#include "oto/cnf.hpp"
#include "oto/enumerate.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"
#include "oto/syntax.hpp"
#include "printers.hpp"

using namespace oto;

namespace {

Term nat(std::uint64_t n) { return Term::natural(n); }
Term w() { return omega_power(nat(1)); }
Term P(const char* s) { return parse_term(s); }

const std::vector<Term>& norm4() {
  static const auto t = terms_up_to_norm(4);
  return t;
}

}  // namespace

TEST(Compare, Examples) {
  EXPECT_EQ(compare(nat(0), nat(1)), Ordering::kLess);
  EXPECT_EQ(compare(P("S^(W)(0)"), Term::omega()), Ordering::kLess);
  EXPECT_EQ(compare(P("S^(1)(0)"), P("S^(1)(1)")), Ordering::kEqual);
  EXPECT_EQ(compare(w(), P("S^(1)(0)")), Ordering::kLess);
  EXPECT_EQ(compare(P("S^(1)(0)"), P("S^(2)(0)")), Ordering::kLess);
}

TEST(Compare, MoreCollapseCases) {
  // epsilon_0 + 1 is still below the next fixed point
  EXPECT_EQ(compare(P("S^(1)(0) + 1"), P("S^(1)(S^(1)(0) + 1)")), Ordering::kLess);
  EXPECT_EQ(compare(P("S^(1)(S^(1)(0))"), P("S^(1)(0)")), Ordering::kGreater);
  EXPECT_EQ(compare(P("w^(S^(1)(0) + 1)"), P("S^(1)(0)")), Ordering::kGreater);
  EXPECT_EQ(compare(P("S^(W)(0)"), P("S^(1)(0)")), Ordering::kGreater);
  EXPECT_EQ(compare(P("W^(2)*(1)"), P("W^(1)*(S^(W)(0))")), Ordering::kGreater);
}

TEST(Add, Examples) {
  for (const auto& t : norm4()) EXPECT_EQ(add(Term(), t), t);
  EXPECT_EQ(add(nat(1), w()), w());
  const Term w1 = add(w(), nat(1));
  ASSERT_EQ(w1.size(), 2u);
  EXPECT_EQ(w1[0], Monomial::wpow(nat(1)));
  EXPECT_EQ(w1[1], Monomial::wpow(Term()));
}

TEST(Add, OmegaMonomialsMerge) {
  const Term a = omega_times(nat(1), nat(2));
  const Term b = omega_times(nat(1), w());
  const Term s = add(a, b);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s, omega_times(nat(1), add(nat(2), w())));
}

TEST(MaxTerm, Examples) {
  const std::vector<Term> z = {nat(0)};
  EXPECT_EQ(max_term(z), nat(0));
  const std::vector<Term> k = {nat(5), w()};
  EXPECT_EQ(max_term(k), w());
  const std::vector<Term> eq = {P("S^(1)(0)"), P("S^(1)(1)")};
  EXPECT_EQ(max_term(eq), eq[0]);
}

TEST(OrderProperties, MirrorAndIrreflexive) {
  const auto& ts = norm4();
  for (const auto& s : ts) {
    ASSERT_EQ(compare(s, s), Ordering::kEqual) << to_string(s);
    for (const auto& t : ts) ASSERT_EQ(compare(s, t), mirror(compare(t, s))) << to_string(s) << " " << to_string(t);
  }
}

TEST(OrderProperties, SortedSampleIsChain) {
  // Sorting with compare and checking every pair afterwards catches
  // intransitivity that a comparison sort would hide.
  std::vector<Term> ts = terms_up_to_norm(5);
  std::mt19937_64 rng(3);
  std::shuffle(ts.begin(), ts.end(), rng);
  ts.resize(300);
  std::stable_sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return less(a, b); });
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      ASSERT_NE(compare(ts[i], ts[j]), Ordering::kGreater) << to_string(ts[i]) << " " << to_string(ts[j]);
    }
  }
}

TEST(OrderProperties, AddLeftMonotoneSampled) {
  const auto ts = terms_up_to_norm(5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const Term& a = ts[pick(rng)];
    const Term& b = ts[pick(rng)];
    const Term& c = ts[pick(rng)];
    ASSERT_EQ(compare(add(a, b), add(a, c)), compare(b, c));
    ASSERT_EQ(compare(add(add(a, b), c), add(a, add(b, c))), Ordering::kEqual);
    ASSERT_TRUE(less_equal(b, add(a, b)));
  }
}

TEST(OrderProperties, AgreesWithCnfOnFragment) {
  std::vector<Term> frag;
  for (const auto& t : terms_up_to_norm(6)) {
    if (!t.contains_omega() && !t.contains_collapse()) frag.push_back(t);
  }
  ASSERT_GT(frag.size(), 50u);
  for (const auto& s : frag) {
    const auto cs = cnf::cnf_of(s);
    for (const auto& t : frag) {
      const auto want = static_cast<int>(cnf::cnf_compare(cs, cnf::cnf_of(t)));
      ASSERT_EQ(static_cast<int>(compare(s, t)), want) << to_string(s) << " vs " << to_string(t);
      ASSERT_EQ(cnf::cnf_of(add(s, t)), cnf::cnf_add(cs, cnf::cnf_of(t)));
    }
  }
}

TEST(OrderProperties, CollapseBelowOmega) {
  for (const auto& t : terms_up_to_norm(5)) {
    if (t.is_below_omega()) EXPECT_TRUE(less(t, Term::omega())) << to_string(t);
  }
}
