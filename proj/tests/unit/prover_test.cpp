#include <gtest/gtest.h>

#include "oto/enumerate.hpp"
#include "oto/ext.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"
#include "oto/prover.hpp"
#include "oto/syntax.hpp"
#include "printers.hpp"

using namespace oto;

namespace {

Term nat(std::uint64_t n) { return Term::natural(n); }
Term w() { return omega_power(nat(1)); }
ExtTerm C(const Term& t) { return ExtTerm::canon(t); }
ExtTerm X(const char* s) { return parse_ext(s); }
const FunExpr S = FunExpr::suc();
const FunExpr E = FunExpr::e();

void expect_le(const ExtTerm& s, const ExtTerm& t) {
  const auto r = prove_le(s, t);
  ASSERT_TRUE(r.proved) << to_string(s) << " <= " << to_string(t);
  EXPECT_FALSE(check_trace(r.trace).has_value()) << *check_trace(r.trace);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.back().conclusion, Fact::le(s, t));
}

}  // namespace

TEST(Ext, ReduceAndNorm) {
  EXPECT_EQ(reduce(ExtTerm::apply(S, C(w()))), add(w(), nat(1)));
  EXPECT_EQ(reduce(ExtTerm::apply(FunExpr::iterate(S, nat(2)), C(Term()))), make_collapse(nat(2), Term()));
  EXPECT_FALSE(reduce(ExtTerm::apply(E, C(Term()))).has_value());
  EXPECT_EQ(reduce(ExtTerm::veblen(C(Term()), C(nat(1)))), w());
  EXPECT_FALSE(reduce(ExtTerm::veblen(C(nat(1)), C(Term()))).has_value());
  EXPECT_EQ(norm(ExtTerm::apply(E, C(nat(2)))), 3u);
  EXPECT_EQ(norm(ExtTerm::veblen(C(nat(1)), C(nat(1)))), 3u);
  EXPECT_THROW(ExtTerm::apply(S, C(Term::omega())), MalformedTerm);
}

TEST(Ext, Coefficients) {
  const ExtTerm e = ExtTerm::apply(E, C(w()));
  EXPECT_EQ(ext_coefficients(e), std::vector<ExtTerm>{e});
  const ExtTerm phi = ExtTerm::veblen(C(nat(1)), C(nat(2)));
  EXPECT_EQ(ext_coefficients(phi), std::vector<ExtTerm>{phi});
  EXPECT_TRUE(ext_coefficients(C(Term::omega())).empty());
}

TEST(Prover, PaperExamples) {
  const ExtTerm zero = C(Term());
  expect_le(ExtTerm::apply(FunExpr::iterate(FunExpr::iterate(S, nat(1)), nat(2)), zero),
            C(make_collapse(nat(3), Term())));
  expect_le(ExtTerm::apply(FunExpr::iterate(FunExpr::shift(S, CoeffSet{w()}), nat(1)), zero),
            C(make_collapse(nat(1), w())));
  expect_le(ExtTerm::apply(E, zero), C(make_collapse(nat(1), Term())));
  for (const auto& t : terms_up_to_norm(4)) expect_le(C(t), C(t));
}

TEST(Prover, ParsedExamples) {
  expect_le(X("E(w^1)"), X("S^(1)(w^1)"));
  expect_le(X("S^(1)^(w^1)(0)"), X("S^(w^1 + 1)(0)"));
  expect_le(X("E(0)"), X("E(1)"));
  expect_le(X("S(E(0))"), X("S^(2)(0)"));
}

TEST(Prover, Unknown) {
  const auto r = prove_le(X("S^(1)(0)"), X("E(0)"));
  EXPECT_FALSE(r.proved);
  EXPECT_FALSE(prove_le(X("W"), X("S^(W)(0)")).proved);
  EXPECT_FALSE(prove_le(X("phi(1,0)"), X("S^(1)(0)")).proved);
}

TEST(Prover, TraceCheckerRejectsTampering) {
  auto r = prove_le(X("E(0)"), X("S^(1)(0)"));
  ASSERT_TRUE(r.proved);
  ASSERT_FALSE(check_trace(r.trace).has_value());
  auto bad = r.trace;
  bad.back().conclusion = Fact::le(X("S^(2)(0)"), X("S^(1)(0)"));
  EXPECT_TRUE(check_trace(bad).has_value());
  auto bad2 = r.trace;
  bad2.front().rule = "no-such-rule";
  EXPECT_TRUE(check_trace(bad2).has_value());
  auto bad3 = r.trace;
  if (!bad3.back().premises.empty()) {
    bad3.back().premises[0] = bad3.size() + 5;
    EXPECT_TRUE(check_trace(bad3).has_value());
  }
  ProofTrace order_lie = {{"order", {}, Fact::le(X("S^(2)(0)"), X("S^(1)(0)")), std::nullopt}};
  EXPECT_TRUE(check_trace(order_lie).has_value());
}

TEST(DominantOto, Examples) {
  EXPECT_EQ(dominant_oto(X("E(0)")), make_collapse(nat(1), Term()));
  EXPECT_EQ(dominant_oto(ExtTerm::apply(FunExpr::iterate(FunExpr::iterate(S, nat(1)), nat(2)), C(Term()))),
            make_collapse(nat(3), Term()));
  for (const auto& t : terms_up_to_norm(4)) EXPECT_EQ(dominant_oto(C(t)), t);
  EXPECT_THROW(dominant_oto(X("phi(1,0)")), VeblenPresent);
}

TEST(DominantOto, ValidatesOnNestedInputs) {
  for (const char* s : {"E(E(0))", "S^(2)[w^1](1)", "E^(w^1)(2)", "S(E(1)) + E(0)", "E[3, w^1](0)",
                        "S^(1)^(2)(E(0))"}) {
    const ExtTerm x = X(s);
    const Term d = dominant_oto(x);
    expect_le(x, C(d));
    EXPECT_LE(norm(x), d.norm()) << s;
  }
}
