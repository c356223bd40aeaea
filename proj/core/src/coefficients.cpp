#include "oto/coefficients.hpp"

#include <algorithm>

#include "oto/order.hpp"

namespace oto {

CoeffSet::CoeffSet(std::initializer_list<Term> init) {
  for (const auto& t : init) insert(t);
}

bool CoeffSet::insert(const Term& t) {
  if (!t.is_below_omega()) throw MalformedTerm("coefficient set members must lie below Omega");
  if (contains(t)) return false;
  members_.push_back(t);
  return true;
}

void CoeffSet::merge(const CoeffSet& other) {
  for (const auto& t : other) insert(t);
}

bool CoeffSet::contains(const Term& t) const {
  return std::any_of(members_.begin(), members_.end(), [&](const Term& m) { return equivalent(m, t); });
}

bool CoeffSet::all_below(const Term& bound) const {
  return std::all_of(members_.begin(), members_.end(), [&](const Term& m) { return less(m, bound); });
}

bool CoeffSet::equivalent_to(const CoeffSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](const Term& m) { return other.contains(m); });
}

void append_coefficients(const Term& t, std::vector<Term>& out) {
  if (t.is_zero() || t.is_omega()) return;
  if (t.is_below_omega()) {
    out.push_back(t);
    return;
  }
  std::vector<Monomial> tail;
  for (const auto& p : t.parts()) {
    if (p.is_omega_mono()) {
      out.push_back(p.coefficient());
      append_coefficients(p.exponent(), out);
    } else {
      tail.push_back(p);
    }
  }
  // The countable remainder is the coefficient of Omega^0.
  if (!tail.empty()) out.push_back(Term::from_parts(std::move(tail)));
}

CoeffSet coefficients(const Term& t) {
  std::vector<Term> raw;
  append_coefficients(t, raw);
  CoeffSet out;
  for (const auto& k : raw) out.insert(k);
  return out;
}

}  // namespace oto
