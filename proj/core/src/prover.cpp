#include "oto/prover.hpp"

#include "oto/normalize.hpp"
#include "oto/order.hpp"

namespace oto {

bool operator==(const Fact& a, const Fact& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Fact::Kind::kFunLE) return a.flhs == b.flhs && a.frhs == b.frhs;
  return a.lhs == b.lhs && a.rhs == b.rhs;
}

const std::vector<std::string>& proof_rules() {
  static const std::vector<std::string> rules = {
      "refl",       "order",       "trans",       "eval",         "lt-le",       "zero-least",
      "apply",      "sum-mono",    "veblen-mono", "arg-below",    "coeff-below", "strict-succ",
      "fun-refl",   "fun-trans",   "E-bound",     "zero-iterate", "iter-iter",   "shift-iter",
      "base-mono",  "shift-mono",  "shift-merge"};
  return rules;
}

namespace {

using Kind = Fact::Kind;

const ExtTerm& canon_zero() {
  static const ExtTerm z = ExtTerm::canon(Term());
  return z;
}

bool is_term_fact(const Fact& f) { return f.kind != Kind::kFunLE; }

bool is_suc_iterate(const FunExpr& f) {
  return f.kind() == FunExpr::Kind::kIterate && f.base().kind() == FunExpr::Kind::kSuc;
}

// Suc^e or Suc^e[K]: the shapes every function symbol is bounded by.
bool is_normal_fun(const FunExpr& f) {
  return is_suc_iterate(f) || (f.kind() == FunExpr::Kind::kShift && is_suc_iterate(f.base()));
}

std::optional<std::string> check_step(const ProofTrace& trace, std::size_t i) {
  const ProofStep& st = trace[i];
  const Fact& c = st.conclusion;
  for (auto p : st.premises) {
    if (p >= i) return "premise does not refer to an earlier step";
  }
  auto prem = [&](std::size_t j) -> const Fact& { return trace[st.premises[j]].conclusion; };
  auto arity = [&](std::size_t n) { return st.premises.size() == n; };
  const std::string& r = st.rule;

  if (r == "refl") {
    if (arity(0) && c.kind == Kind::kTermLE && c.lhs == c.rhs) return std::nullopt;
  } else if (r == "order") {
    if (arity(0) && is_term_fact(c) && c.lhs.kind() == ExtTerm::Kind::kCanon &&
        c.rhs.kind() == ExtTerm::Kind::kCanon) {
      const auto o = compare(c.lhs.term(), c.rhs.term());
      if (c.kind == Kind::kTermLE ? at_most(o) : o == Ordering::kLess) return std::nullopt;
    }
  } else if (r == "trans") {
    if (arity(2) && is_term_fact(c) && is_term_fact(prem(0)) && is_term_fact(prem(1)) &&
        prem(0).rhs == prem(1).lhs && c.lhs == prem(0).lhs && c.rhs == prem(1).rhs) {
      const bool strict = prem(0).kind == Kind::kTermLT || prem(1).kind == Kind::kTermLT;
      if (c.kind == Kind::kTermLE || strict) return std::nullopt;
    }
  } else if (r == "eval") {
    if (arity(0) && c.kind == Kind::kTermLE) {
      auto down = reduce(c.lhs);
      if (down && c.rhs == ExtTerm::canon(*down)) return std::nullopt;
      auto up = reduce(c.rhs);
      if (up && c.lhs == ExtTerm::canon(*up)) return std::nullopt;
    }
  } else if (r == "lt-le") {
    if (arity(1) && c.kind == Kind::kTermLE && prem(0).kind == Kind::kTermLT &&
        prem(0).lhs == c.lhs && prem(0).rhs == c.rhs) {
      return std::nullopt;
    }
  } else if (r == "zero-least") {
    if (arity(0) && c.kind == Kind::kTermLE && c.lhs == canon_zero()) return std::nullopt;
  } else if (r == "apply") {
    if (arity(2) && c.kind == Kind::kTermLE && prem(0).kind == Kind::kFunLE &&
        is_term_fact(prem(1)) && c.lhs.kind() == ExtTerm::Kind::kApply &&
        c.rhs.kind() == ExtTerm::Kind::kApply && c.lhs.fun() == prem(0).flhs &&
        c.rhs.fun() == prem(0).frhs && c.lhs.arg() == prem(1).lhs && c.rhs.arg() == prem(1).rhs) {
      return std::nullopt;
    }
  } else if (r == "sum-mono") {
    if (c.kind == Kind::kTermLE && c.lhs.kind() == ExtTerm::Kind::kSum &&
        c.rhs.kind() == ExtTerm::Kind::kSum && c.lhs.parts().size() == c.rhs.parts().size() &&
        arity(c.lhs.parts().size())) {
      bool ok = true;
      for (std::size_t j = 0; j < st.premises.size() && ok; ++j) {
        ok = is_term_fact(prem(j)) && prem(j).lhs == c.lhs.parts()[j] &&
             prem(j).rhs == c.rhs.parts()[j];
      }
      if (ok) return std::nullopt;
    }
  } else if (r == "veblen-mono") {
    if (arity(2) && c.kind == Kind::kTermLE && c.lhs.kind() == ExtTerm::Kind::kVeblen &&
        c.rhs.kind() == ExtTerm::Kind::kVeblen && is_term_fact(prem(0)) && is_term_fact(prem(1)) &&
        prem(0).lhs == c.lhs.left() && prem(0).rhs == c.rhs.left() &&
        prem(1).lhs == c.lhs.right() && prem(1).rhs == c.rhs.right()) {
      return std::nullopt;
    }
  } else if (r == "arg-below") {
    if (arity(0) && c.kind == Kind::kTermLT && c.rhs.kind() == ExtTerm::Kind::kApply &&
        c.rhs.arg() == c.lhs) {
      return std::nullopt;
    }
  } else if (r == "coeff-below") {
    if (arity(0) && c.kind == Kind::kTermLT && c.lhs.kind() == ExtTerm::Kind::kCanon &&
        c.rhs.kind() == ExtTerm::Kind::kApply && c.rhs.fun().kind() == FunExpr::Kind::kIterate &&
        coefficients(c.rhs.fun().exponent()).contains(c.lhs.term())) {
      return std::nullopt;
    }
  } else if (r == "strict-succ") {
    if (arity(1) && c.kind == Kind::kTermLE && prem(0).kind == Kind::kTermLT &&
        prem(0).lhs.kind() == ExtTerm::Kind::kCanon && prem(0).rhs == c.rhs &&
        c.lhs == ExtTerm::canon(add(prem(0).lhs.term(), Term::natural(1)))) {
      return std::nullopt;
    }
  } else if (r == "fun-refl") {
    if (arity(0) && c.kind == Kind::kFunLE && c.flhs == c.frhs) return std::nullopt;
  } else if (r == "fun-trans") {
    if (arity(2) && c.kind == Kind::kFunLE && prem(0).kind == Kind::kFunLE &&
        prem(1).kind == Kind::kFunLE && prem(0).frhs == prem(1).flhs && c.flhs == prem(0).flhs &&
        c.frhs == prem(1).frhs) {
      return std::nullopt;
    }
  } else if (r == "E-bound") {
    if (arity(0) && c.kind == Kind::kFunLE && c.flhs.kind() == FunExpr::Kind::kE &&
        c.frhs == FunExpr::iterate(FunExpr::suc(), Term::natural(1))) {
      return std::nullopt;
    }
  } else if (r == "zero-iterate") {
    if (arity(0) && c.kind == Kind::kFunLE &&
        (c.frhs == FunExpr::iterate(c.flhs, Term()) || c.flhs == FunExpr::iterate(c.frhs, Term()))) {
      return std::nullopt;
    }
  } else if (r == "iter-iter") {
    if (arity(0) && c.kind == Kind::kFunLE && c.flhs.kind() == FunExpr::Kind::kIterate &&
        c.flhs.base().kind() == FunExpr::Kind::kIterate) {
      const auto& inner = c.flhs.base();
      if (c.frhs == FunExpr::iterate(inner.base(), add(inner.exponent(), c.flhs.exponent()))) {
        return std::nullopt;
      }
    }
  } else if (r == "shift-iter") {
    if (arity(0) && c.kind == Kind::kFunLE && c.flhs.kind() == FunExpr::Kind::kIterate &&
        c.flhs.base().kind() == FunExpr::Kind::kShift) {
      const auto& sh = c.flhs.base();
      if (c.frhs == FunExpr::shift(FunExpr::iterate(sh.base(), c.flhs.exponent()), sh.shift_set())) {
        return std::nullopt;
      }
    }
  } else if (r == "base-mono") {
    if (arity(1) && c.kind == Kind::kFunLE && prem(0).kind == Kind::kFunLE &&
        c.flhs.kind() == FunExpr::Kind::kIterate && c.frhs.kind() == FunExpr::Kind::kIterate &&
        c.flhs.exponent() == c.frhs.exponent() && c.flhs.base() == prem(0).flhs &&
        c.frhs.base() == prem(0).frhs) {
      return std::nullopt;
    }
  } else if (r == "shift-mono") {
    if (arity(1) && c.kind == Kind::kFunLE && prem(0).kind == Kind::kFunLE &&
        c.flhs.kind() == FunExpr::Kind::kShift && c.frhs.kind() == FunExpr::Kind::kShift &&
        c.flhs.shift_set() == c.frhs.shift_set() && c.flhs.base() == prem(0).flhs &&
        c.frhs.base() == prem(0).frhs) {
      return std::nullopt;
    }
  } else if (r == "shift-merge") {
    if (arity(0) && c.kind == Kind::kFunLE && c.flhs.kind() == FunExpr::Kind::kShift &&
        c.flhs.base().kind() == FunExpr::Kind::kShift && c.frhs.kind() == FunExpr::Kind::kShift &&
        c.frhs.base() == c.flhs.base().base()) {
      CoeffSet merged = c.flhs.base().shift_set();
      merged.merge(c.flhs.shift_set());
      if (merged.equivalent_to(c.frhs.shift_set())) return std::nullopt;
    }
  } else {
    return "unknown rule '" + r + "'";
  }
  return "step does not match the schema of rule '" + r + "'";
}

class Builder {
 public:
  ProofTrace steps;

  std::size_t push(std::string rule, std::vector<std::size_t> premises, Fact conclusion) {
    steps.push_back(ProofStep{std::move(rule), std::move(premises), std::move(conclusion), std::nullopt});
    return steps.size() - 1;
  }

  const Fact& at(std::size_t i) const { return steps[i].conclusion; }

  std::size_t trans(std::size_t a, std::size_t b) {
    const bool strict = at(a).kind == Kind::kTermLT || at(b).kind == Kind::kTermLT;
    Fact f = strict ? Fact::lt(at(a).lhs, at(b).rhs) : Fact::le(at(a).lhs, at(b).rhs);
    return push("trans", {a, b}, std::move(f));
  }

  std::size_t fun_trans(std::size_t a, std::size_t b) {
    return push("fun-trans", {a, b}, Fact::fun_le(at(a).flhs, at(b).frhs));
  }

  // F <= g with g of the form Suc^e or Suc^e[K].
  std::pair<FunExpr, std::size_t> fun_upper(const FunExpr& f) {
    if (is_normal_fun(f)) return {f, push("fun-refl", {}, Fact::fun_le(f, f))};
    switch (f.kind()) {
      case FunExpr::Kind::kSuc: {
        auto g = FunExpr::iterate(f, Term());
        return {g, push("zero-iterate", {}, Fact::fun_le(f, g))};
      }
      case FunExpr::Kind::kE: {
        auto g = FunExpr::iterate(FunExpr::suc(), Term::natural(1));
        return {g, push("E-bound", {}, Fact::fun_le(f, g))};
      }
      case FunExpr::Kind::kIterate: {
        const Term& a = f.exponent();
        auto [g, s1] = fun_upper(f.base());
        auto lifted = FunExpr::iterate(g, a);
        const auto s2 = push("base-mono", {s1}, Fact::fun_le(f, lifted));
        if (g.kind() == FunExpr::Kind::kIterate) {
          auto h = FunExpr::iterate(FunExpr::suc(), add(g.exponent(), a));
          const auto s3 = push("iter-iter", {}, Fact::fun_le(lifted, h));
          return {h, fun_trans(s2, s3)};
        }
        const FunExpr& inner = g.base();
        const CoeffSet& k = g.shift_set();
        auto swapped = FunExpr::shift(FunExpr::iterate(inner, a), k);
        const auto s3 = push("shift-iter", {}, Fact::fun_le(lifted, swapped));
        auto merged = FunExpr::iterate(FunExpr::suc(), add(inner.exponent(), a));
        const auto s4 = push("iter-iter", {}, Fact::fun_le(FunExpr::iterate(inner, a), merged));
        auto h = FunExpr::shift(merged, k);
        const auto s5 = push("shift-mono", {s4}, Fact::fun_le(swapped, h));
        return {h, fun_trans(fun_trans(s2, s3), s5)};
      }
      case FunExpr::Kind::kShift: {
        auto [g, s1] = fun_upper(f.base());
        auto lifted = FunExpr::shift(g, f.shift_set());
        const auto s2 = push("shift-mono", {s1}, Fact::fun_le(f, lifted));
        if (g.kind() == FunExpr::Kind::kIterate) return {lifted, s2};
        CoeffSet merged = g.shift_set();
        merged.merge(f.shift_set());
        auto h = FunExpr::shift(g.base(), merged);
        const auto s3 = push("shift-merge", {}, Fact::fun_le(lifted, h));
        return {h, fun_trans(s2, s3)};
      }
    }
    throw std::logic_error("unreachable");
  }

  // s <= t: congruence on matching shapes first, then canonical bounds.
  // Failed attempts are rolled back so the trace holds only used steps.
  std::optional<std::size_t> prove(const ExtTerm& s, const ExtTerm& t) {
    if (s == t) return push("refl", {}, Fact::le(s, t));
    if (s.kind() == ExtTerm::Kind::kCanon && t.kind() == ExtTerm::Kind::kCanon) {
      if (!less_equal(s.term(), t.term())) return std::nullopt;
      return push("order", {}, Fact::le(s, t));
    }
    const std::size_t mark = steps.size();
    if (auto c = congruence(s, t)) return c;
    steps.resize(mark);
    auto up = upper(s);
    if (!up) {
      steps.resize(mark);
      return std::nullopt;
    }
    auto [l, sl] = lower(t);
    if (!less_equal(up->first, l)) {
      steps.resize(mark);
      return std::nullopt;
    }
    const auto so = push("order", {}, Fact::le(ExtTerm::canon(up->first), ExtTerm::canon(l)));
    return trans(trans(up->second, so), sl);
  }

  std::optional<std::size_t> congruence(const ExtTerm& s, const ExtTerm& t) {
    if (s.kind() != t.kind()) return std::nullopt;
    switch (s.kind()) {
      case ExtTerm::Kind::kApply: {
        if (!(s.fun() == t.fun())) return std::nullopt;
        const auto f = push("fun-refl", {}, Fact::fun_le(s.fun(), t.fun()));
        auto a = prove(s.arg(), t.arg());
        if (!a) return std::nullopt;
        return push("apply", {f, *a}, Fact::le(s, t));
      }
      case ExtTerm::Kind::kVeblen: {
        auto a = prove(s.left(), t.left());
        if (!a) return std::nullopt;
        auto c = prove(s.right(), t.right());
        if (!c) return std::nullopt;
        return push("veblen-mono", {*a, *c}, Fact::le(s, t));
      }
      case ExtTerm::Kind::kSum: {
        if (s.parts().size() != t.parts().size()) return std::nullopt;
        std::vector<std::size_t> prem;
        for (std::size_t i = 0; i < s.parts().size(); ++i) {
          auto p = prove(s.parts()[i], t.parts()[i]);
          if (!p) return std::nullopt;
          prem.push_back(*p);
        }
        return push("sum-mono", std::move(prem), Fact::le(s, t));
      }
      case ExtTerm::Kind::kCanon: return std::nullopt;
    }
    return std::nullopt;
  }

  // s <= Canon(u)
  std::optional<std::pair<Term, std::size_t>> upper(const ExtTerm& s) {
    switch (s.kind()) {
      case ExtTerm::Kind::kCanon: return std::pair{s.term(), push("refl", {}, Fact::le(s, s))};
      case ExtTerm::Kind::kSum: {
        std::vector<std::size_t> prem;
        std::vector<ExtTerm> bounds;
        for (const auto& p : s.parts()) {
          auto b = upper(p);
          if (!b) return std::nullopt;
          prem.push_back(b->second);
          bounds.push_back(ExtTerm::canon(b->first));
        }
        auto mid = ExtTerm::sum(bounds);
        const auto s1 = push("sum-mono", prem, Fact::le(s, mid));
        const Term u = *reduce(mid);
        const auto s2 = push("eval", {}, Fact::le(mid, ExtTerm::canon(u)));
        return std::pair{u, trans(s1, s2)};
      }
      case ExtTerm::Kind::kApply: {
        auto bx = upper(s.arg());
        if (!bx || !bx->first.is_below_omega()) return std::nullopt;
        auto [g, sf] = fun_upper(s.fun());
        auto mid = ExtTerm::apply(g, ExtTerm::canon(bx->first));
        const auto s1 = push("apply", {sf, bx->second}, Fact::le(s, mid));
        const Term u = *reduce_apply(g, bx->first);
        const auto s2 = push("eval", {}, Fact::le(mid, ExtTerm::canon(u)));
        return std::pair{u, trans(s1, s2)};
      }
      case ExtTerm::Kind::kVeblen: {
        auto ba = upper(s.left());
        if (!ba || !ba->first.is_zero()) return std::nullopt;
        auto bb = upper(s.right());
        if (!bb || !bb->first.is_below_omega()) return std::nullopt;
        auto mid = ExtTerm::veblen(ExtTerm::canon(Term()), ExtTerm::canon(bb->first));
        const auto s1 = push("veblen-mono", {ba->second, bb->second}, Fact::le(s, mid));
        const Term u = omega_power(bb->first);
        const auto s2 = push("eval", {}, Fact::le(mid, ExtTerm::canon(u)));
        return std::pair{u, trans(s1, s2)};
      }
    }
    return std::nullopt;
  }

  // Canon(l) <= t
  std::pair<Term, std::size_t> lower(const ExtTerm& t) {
    switch (t.kind()) {
      case ExtTerm::Kind::kCanon: return {t.term(), push("refl", {}, Fact::le(t, t))};
      case ExtTerm::Kind::kSum: {
        std::vector<std::size_t> prem;
        std::vector<ExtTerm> bounds;
        for (const auto& p : t.parts()) {
          auto [l, st] = lower(p);
          prem.push_back(st);
          bounds.push_back(ExtTerm::canon(l));
        }
        auto mid = ExtTerm::sum(bounds);
        const auto s1 = push("sum-mono", prem, Fact::le(mid, t));
        const Term l = *reduce(mid);
        const auto s0 = push("eval", {}, Fact::le(ExtTerm::canon(l), mid));
        return {l, trans(s0, s1)};
      }
      case ExtTerm::Kind::kApply: {
        auto [lx, sx] = lower(t.arg());
        const FunExpr& f = t.fun();
        if (auto r = reduce_apply(f, lx)) {
          auto mid = ExtTerm::apply(f, ExtTerm::canon(lx));
          const auto sf = push("fun-refl", {}, Fact::fun_le(f, f));
          const auto s1 = push("apply", {sf, sx}, Fact::le(mid, t));
          const auto s0 = push("eval", {}, Fact::le(ExtTerm::canon(*r), mid));
          return {*r, trans(s0, s1)};
        }
        // x < F(x), and members of K(a) lie below F^a(x).
        const auto s1 = push("arg-below", {}, Fact::lt(t.arg(), t));
        std::size_t best_lt = trans(sx, s1);
        Term best = lx;
        if (f.kind() == FunExpr::Kind::kIterate) {
          for (const auto& k : coefficients(f.exponent())) {
            if (!less(best, k)) continue;
            best_lt = push("coeff-below", {}, Fact::lt(ExtTerm::canon(k), t));
            best = k;
          }
        }
        Term l = add(best, Term::natural(1));
        return {l, push("strict-succ", {best_lt}, Fact::le(ExtTerm::canon(l), t))};
      }
      case ExtTerm::Kind::kVeblen: {
        auto ra = reduce(t.left());
        if (ra && ra->is_zero()) {
          auto [lb, sb] = lower(t.right());
          const auto sa = push("zero-least", {}, Fact::le(canon_zero(), t.left()));
          auto mid = ExtTerm::veblen(canon_zero(), ExtTerm::canon(lb));
          const auto s1 = push("veblen-mono", {sa, sb}, Fact::le(mid, t));
          const Term l = omega_power(lb);
          const auto s0 = push("eval", {}, Fact::le(ExtTerm::canon(l), mid));
          return {l, trans(s0, s1)};
        }
        return {Term(), push("zero-least", {}, Fact::le(canon_zero(), t))};
      }
    }
    return {Term(), push("zero-least", {}, Fact::le(canon_zero(), t))};
  }
};

}  // namespace

std::optional<std::string> check_trace(const ProofTrace& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (auto err = check_step(trace, i)) return "step " + std::to_string(i) + ": " + *err;
  }
  return std::nullopt;
}

ProveResult prove_le(const ExtTerm& s, const ExtTerm& t) {
  Builder b;
  if (!b.prove(s, t)) return {};
  return {true, std::move(b.steps)};
}

std::optional<std::pair<Term, ProofTrace>> upper_bound(const ExtTerm& s) {
  Builder b;
  auto up = b.upper(s);
  if (!up) return std::nullopt;
  return std::pair{up->first, std::move(b.steps)};
}

std::optional<std::pair<Term, ProofTrace>> lower_bound(const ExtTerm& t) {
  Builder b;
  auto lo = b.lower(t);
  return std::pair{lo.first, std::move(b.steps)};
}

Term dominant_oto(const ExtTerm& s) {
  if (s.contains_veblen()) throw VeblenPresent("expression contains a Veblen application");
  auto up = upper_bound(s);
  if (!up) throw MalformedTerm("no canonical upper bound for the expression");
  Term u = up->first;
  const auto ns = norm(s);
  if (u.norm() < ns) u = add(u, Term::natural(ns - u.norm()));
  return u;
}

}  // namespace oto
