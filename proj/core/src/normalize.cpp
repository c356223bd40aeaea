#include "oto/normalize.hpp"

#include "oto/order.hpp"

namespace oto {

std::uint64_t raw_norm(const RawTerm& r) {
  using K = RawTerm::Kind;
  switch (r.kind) {
    case K::kZero: return 0;
    case K::kOmega: return 1;
    case K::kNat: return r.nat;
    case K::kSucc: return raw_norm(r.args[0]) + 1;
    case K::kPlus: return raw_norm(r.args[0]) + raw_norm(r.args[1]);
    case K::kWPow: return raw_norm(r.args[0]) + 1;
    case K::kOmegaPow: return raw_norm(r.args[0]) + raw_norm(r.args[1]) + 1;
    case K::kCollapse: return raw_norm(r.args[1]) + 1 + raw_norm(r.args[0]);
  }
  return 0;
}

namespace {

const Term& one() {
  static const Term t = Term::natural(1);
  return t;
}

// The a' with 1 + a' = a, for a != 0.
Term drop_leading_one(const Term& a) {
  if (!a.leading().is_one()) return a;
  return Term::from_parts({a.parts().begin() + 1, a.parts().end()});
}

}  // namespace

Term omega_times(const Term& e, const Term& c) {
  if (!c.is_below_omega()) throw MalformedTerm("Omega coefficient must lie below Omega");
  if (e.is_zero()) return c;
  if (c.is_zero()) return Term();
  return Term::of(Monomial::omega_mono(e, c));
}

Term omega_power(const Term& e) {
  if (e.is_below_omega()) {
    if (e.size() == 1 && e.leading().is_collapse()) return e;
    return Term::of(Monomial::wpow(e));
  }
  // e = Omega * a + b with b < Omega; omega^e = Omega^a * omega^b because
  // omega^Omega = Omega.
  Term a;
  std::vector<Monomial> countable;
  for (const auto& p : e.parts()) {
    if (p.is_omega_mono()) {
      a = add(a, omega_times(drop_leading_one(p.exponent()), p.coefficient()));
    } else {
      countable.push_back(p);
    }
  }
  const Term b = Term::from_parts(std::move(countable));
  return omega_times(a, b.is_zero() ? one() : omega_power(b));
}

Term make_collapse(const Term& a, const Term& x) {
  if (!x.is_below_omega()) throw MalformedTerm("collapse seed must lie below Omega");
  if (a.is_zero()) return add(x, one());
  return Term::of(Monomial::collapse(a, x));
}

Term normalize(const RawTerm& raw) {
  using K = RawTerm::Kind;
  switch (raw.kind) {
    case K::kZero: return Term();
    case K::kOmega: return Term::omega();
    case K::kNat: return Term::natural(raw.nat);
    case K::kSucc: return add(normalize(raw.args[0]), one());
    case K::kPlus: return add(normalize(raw.args[0]), normalize(raw.args[1]));
    case K::kWPow: return omega_power(normalize(raw.args[0]));
    case K::kOmegaPow: return omega_times(normalize(raw.args[0]), normalize(raw.args[1]));
    case K::kCollapse: return make_collapse(normalize(raw.args[0]), normalize(raw.args[1]));
  }
  return Term();
}

RawTerm to_raw(const Term& t) {
  if (t.is_zero()) return RawTerm::zero();
  auto mono = [](const Monomial& m) {
    switch (m.kind()) {
      case MonoKind::kWPow: return RawTerm::wpow(to_raw(m.exponent()));
      case MonoKind::kOmegaMono:
        if (m.is_omega()) return RawTerm::omega();
        return RawTerm::omega_pow(to_raw(m.exponent()), to_raw(m.coefficient()));
      case MonoKind::kCollapse: return RawTerm::collapse(to_raw(m.iterate()), to_raw(m.seed()));
    }
    return RawTerm::zero();
  };
  RawTerm out = mono(t.leading());
  for (const auto& p : t.parts().subspan(1)) out = RawTerm::plus(std::move(out), mono(p));
  return out;
}

}  // namespace oto
