#include "oto/order.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "oto/coefficients.hpp"

namespace oto {

std::string_view symbol(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "<";
    case Ordering::kEqual: return "=";
    case Ordering::kGreater: return ">";
  }
  return "?";
}

namespace {

Ordering compare_sizes(std::size_t a, std::size_t b) {
  if (a < b) return Ordering::kLess;
  if (a > b) return Ordering::kGreater;
  return Ordering::kEqual;
}

// True iff every member of K(iterate) together with seed is below `bound`.
bool ingredients_below(const Monomial& c, const Term& bound) {
  if (!less(c.seed(), bound)) return false;
  std::vector<Term> ks;
  append_coefficients(c.iterate(), ks);
  return std::all_of(ks.begin(), ks.end(), [&](const Term& k) { return less(k, bound); });
}

Ordering compare_collapses(const Monomial& s, const Monomial& t) {
  const Term s_term = Term::of(s);
  const Term t_term = Term::of(t);
  switch (compare(s.iterate(), t.iterate())) {
    case Ordering::kLess:
      // Suc^b(y) < Suc^a(x) iff K(b) and y lie below it; otherwise one of
      // them is >= Suc^a(x) and Suc^b(y) exceeds all of them.
      return ingredients_below(s, t_term) ? Ordering::kLess : Ordering::kGreater;
    case Ordering::kGreater:
      return ingredients_below(t, s_term) ? Ordering::kGreater : Ordering::kLess;
    case Ordering::kEqual:
      break;
  }
  // Same iterate: each is the least closure point above its seed, so one is
  // strictly smaller only when it does not exceed the other's seed.
  if (s.seed() == t.seed()) return Ordering::kEqual;
  if (less_equal(s_term, t.seed())) return Ordering::kLess;
  if (less_equal(t_term, s.seed())) return Ordering::kGreater;
  return Ordering::kEqual;
}

}  // namespace

Ordering compare(const Monomial& p, const Monomial& q) {
  if (p == q) return Ordering::kEqual;
  if (p.is_omega_mono() != q.is_omega_mono()) {
    return p.is_omega_mono() ? Ordering::kGreater : Ordering::kLess;
  }
  if (p.is_omega_mono()) {
    const auto by_exponent = compare(p.exponent(), q.exponent());
    if (by_exponent != Ordering::kEqual) return by_exponent;
    return compare(p.coefficient(), q.coefficient());
  }
  if (p.is_wpow() && q.is_wpow()) return compare(p.exponent(), q.exponent());
  // omega^a against a strongly critical g: omega^a < g iff a < g, since g
  // is a fixed point of omega^.
  if (p.is_wpow()) return compare(p.exponent(), Term::of(q));
  if (q.is_wpow()) return compare(Term::of(p), q.exponent());
  return compare_collapses(p, q);
}

Ordering compare(const Term& s, const Term& t) {
  if (s.identity() == t.identity()) return Ordering::kEqual;
  const auto n = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto o = compare(s[i], t[i]);
    if (o != Ordering::kEqual) return o;
  }
  return compare_sizes(s.size(), t.size());
}

Term add(const Term& s, const Term& t) {
  if (t.is_zero()) return s;
  if (s.is_zero()) return t;
  const Monomial& head = t.leading();
  std::vector<Monomial> parts;
  parts.reserve(s.size() + t.size());
  std::size_t tail_from = 0;
  for (const auto& p : s.parts()) {
    if (p.is_omega_mono() && head.is_omega_mono() &&
        compare(p.exponent(), head.exponent()) == Ordering::kEqual) {
      // Omega^a * x + Omega^a * y = Omega^a * (x + y)
      parts.push_back(Monomial::omega_mono(p.exponent(), add(p.coefficient(), head.coefficient())));
      tail_from = 1;
      break;
    }
    if (compare(p, head) == Ordering::kLess) break;
    parts.push_back(p);
  }
  parts.insert(parts.end(), t.parts().begin() + static_cast<std::ptrdiff_t>(tail_from),
               t.parts().end());
  return Term::from_parts(std::move(parts));
}

const Term& max_term(std::span<const Term> terms) {
  assert(!terms.empty());
  const Term* best = &terms.front();
  for (const auto& t : terms.subspan(1)) {
    if (less(*best, t)) best = &t;
  }
  return *best;
}

}  // namespace oto
