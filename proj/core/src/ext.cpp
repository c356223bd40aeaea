#include "oto/ext.hpp"

#include <algorithm>

#include "oto/normalize.hpp"
#include "oto/order.hpp"

namespace oto {

struct FunExpr::Rep {
  Kind kind = Kind::kSuc;
  std::optional<FunExpr> base;
  Term exponent;
  CoeffSet k;
};

FunExpr::FunExpr() : FunExpr(suc()) {}

FunExpr FunExpr::suc() {
  static const FunExpr s(std::make_shared<const Rep>());
  return s;
}

FunExpr FunExpr::e() {
  static const FunExpr s(std::make_shared<const Rep>(Rep{Kind::kE, std::nullopt, {}, {}}));
  return s;
}

FunExpr FunExpr::iterate(FunExpr base, Term exponent) {
  return FunExpr(std::make_shared<const Rep>(Rep{Kind::kIterate, std::move(base), std::move(exponent), {}}));
}

FunExpr FunExpr::shift(FunExpr base, CoeffSet k) {
  return FunExpr(std::make_shared<const Rep>(Rep{Kind::kShift, std::move(base), {}, std::move(k)}));
}

FunExpr::Kind FunExpr::kind() const { return rep_->kind; }
const FunExpr& FunExpr::base() const { return *rep_->base; }
const Term& FunExpr::exponent() const { return rep_->exponent; }
const CoeffSet& FunExpr::shift_set() const { return rep_->k; }

bool operator==(const FunExpr& a, const FunExpr& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FunExpr::Kind::kSuc:
    case FunExpr::Kind::kE: return true;
    case FunExpr::Kind::kIterate: return a.exponent() == b.exponent() && a.base() == b.base();
    case FunExpr::Kind::kShift: return a.shift_set() == b.shift_set() && a.base() == b.base();
  }
  return false;
}

struct ExtTerm::Rep {
  Kind kind = Kind::kCanon;
  Term term;
  std::optional<FunExpr> fun;
  std::vector<ExtTerm> args;  // apply: {x}; veblen: {a, b}; sum: parts
  bool veblen = false;
};

ExtTerm::ExtTerm() : ExtTerm(canon(Term())) {}

ExtTerm ExtTerm::canon(Term t) {
  auto rep = std::make_shared<Rep>();
  rep->term = std::move(t);
  return ExtTerm(std::move(rep));
}

namespace {

void require_countable(const ExtTerm& x, const char* what) {
  if (auto r = reduce(x); r && !r->is_below_omega()) {
    throw MalformedTerm(std::string(what) + " must be below Omega");
  }
}

}  // namespace

ExtTerm ExtTerm::apply(FunExpr f, ExtTerm arg) {
  require_countable(arg, "function argument");
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kApply;
  rep->fun = std::move(f);
  rep->veblen = arg.contains_veblen();
  rep->args.push_back(std::move(arg));
  return ExtTerm(std::move(rep));
}

ExtTerm ExtTerm::veblen(ExtTerm a, ExtTerm b) {
  require_countable(a, "Veblen argument");
  require_countable(b, "Veblen argument");
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kVeblen;
  rep->veblen = true;
  rep->args = {std::move(a), std::move(b)};
  return ExtTerm(std::move(rep));
}

ExtTerm ExtTerm::sum(std::vector<ExtTerm> parts) {
  if (parts.empty()) return ExtTerm();
  if (parts.size() == 1) return std::move(parts.front());
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kSum;
  rep->veblen = std::any_of(parts.begin(), parts.end(),
                            [](const ExtTerm& p) { return p.contains_veblen(); });
  rep->args = std::move(parts);
  return ExtTerm(std::move(rep));
}

ExtTerm::Kind ExtTerm::kind() const { return rep_->kind; }
const Term& ExtTerm::term() const { return rep_->term; }
const FunExpr& ExtTerm::fun() const { return *rep_->fun; }
const ExtTerm& ExtTerm::arg() const { return rep_->args.front(); }
const ExtTerm& ExtTerm::left() const { return rep_->args[0]; }
const ExtTerm& ExtTerm::right() const { return rep_->args[1]; }
const std::vector<ExtTerm>& ExtTerm::parts() const { return rep_->args; }
bool ExtTerm::contains_veblen() const { return rep_->veblen; }

bool operator==(const ExtTerm& a, const ExtTerm& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExtTerm::Kind::kCanon: return a.term() == b.term();
    case ExtTerm::Kind::kApply: return a.fun() == b.fun() && a.arg() == b.arg();
    case ExtTerm::Kind::kVeblen:
    case ExtTerm::Kind::kSum: return a.parts() == b.parts();
  }
  return false;
}

namespace {

std::uint64_t apply_norm(const FunExpr& f, const ExtTerm& x);

std::uint64_t apply_norm_canon(const FunExpr& f, const Term& y) {
  return apply_norm(f, ExtTerm::canon(y));
}

std::uint64_t apply_norm(const FunExpr& f, const ExtTerm& x) {
  switch (f.kind()) {
    case FunExpr::Kind::kSuc:
    case FunExpr::Kind::kE: return norm(x) + 1;
    case FunExpr::Kind::kIterate: return apply_norm(f.base(), x) + f.exponent().norm();
    case FunExpr::Kind::kShift: {
      std::uint64_t n = apply_norm(f.base(), x);
      for (const auto& y : f.shift_set()) n = std::max(n, apply_norm_canon(f.base(), y));
      return n;
    }
  }
  return 0;
}

}  // namespace

std::uint64_t norm(const ExtTerm& s) {
  switch (s.kind()) {
    case ExtTerm::Kind::kCanon: return s.term().norm();
    case ExtTerm::Kind::kApply: return apply_norm(s.fun(), s.arg());
    case ExtTerm::Kind::kVeblen: return norm(s.left()) + norm(s.right()) + 1;
    case ExtTerm::Kind::kSum: {
      std::uint64_t n = 0;
      for (const auto& p : s.parts()) n += norm(p);
      return n;
    }
  }
  return 0;
}

std::optional<Term> reduce_apply(const FunExpr& f, const Term& x) {
  switch (f.kind()) {
    case FunExpr::Kind::kSuc: return add(x, Term::natural(1));
    case FunExpr::Kind::kE: return std::nullopt;
    case FunExpr::Kind::kIterate:
      if (f.exponent().is_zero()) return reduce_apply(f.base(), x);
      if (f.base().kind() == FunExpr::Kind::kSuc) return make_collapse(f.exponent(), x);
      return std::nullopt;
    case FunExpr::Kind::kShift: {
      std::vector<Term> candidates(f.shift_set().begin(), f.shift_set().end());
      candidates.push_back(x);
      return reduce_apply(f.base(), max_term(candidates));
    }
  }
  return std::nullopt;
}

std::optional<Term> reduce(const ExtTerm& s) {
  switch (s.kind()) {
    case ExtTerm::Kind::kCanon: return s.term();
    case ExtTerm::Kind::kApply: {
      auto x = reduce(s.arg());
      if (!x) return std::nullopt;
      return reduce_apply(s.fun(), *x);
    }
    case ExtTerm::Kind::kVeblen: {
      auto a = reduce(s.left());
      if (!a || !a->is_zero()) return std::nullopt;
      auto b = reduce(s.right());
      if (!b) return std::nullopt;
      return omega_power(*b);
    }
    case ExtTerm::Kind::kSum: {
      Term acc;
      for (const auto& p : s.parts()) {
        auto r = reduce(p);
        if (!r) return std::nullopt;
        acc = add(acc, *r);
      }
      return acc;
    }
  }
  return std::nullopt;
}

std::vector<ExtTerm> ext_coefficients(const ExtTerm& s) {
  std::vector<ExtTerm> out;
  switch (s.kind()) {
    case ExtTerm::Kind::kCanon:
      for (const auto& c : coefficients(s.term())) out.push_back(ExtTerm::canon(c));
      break;
    case ExtTerm::Kind::kApply:
    case ExtTerm::Kind::kVeblen: out.push_back(s); break;
    case ExtTerm::Kind::kSum:
      for (const auto& p : s.parts()) {
        for (auto& c : ext_coefficients(p)) {
          if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
        }
      }
      break;
  }
  return out;
}

}  // namespace oto
