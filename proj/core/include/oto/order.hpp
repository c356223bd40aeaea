#pragma once

#include <span>
#include <string_view>

#include "oto/term.hpp"

namespace oto {

enum class Ordering : signed char { kLess = -1, kEqual = 0, kGreater = 1 };

constexpr Ordering mirror(Ordering o) { return static_cast<Ordering>(-static_cast<signed char>(o)); }
constexpr bool at_most(Ordering o) { return o != Ordering::kGreater; }
std::string_view symbol(Ordering o);

/// Three-way comparison of canonical terms by ordinal value.
///
/// Sums compare lexicographically on their parts. Omega-monomials dominate
/// every countable monomial. Two collapse terms Suc^b(y) and Suc^a(x) are
/// decided by the collapsing-operator rules: for b < a, Suc^b(y) is below
/// iff K(b) and y are all below Suc^a(x); for a = b, Suc^b(y) is below iff
/// it is at most x. EQ between syntactically distinct terms is a legitimate
/// verdict (collapse-seed variants).
Ordering compare(const Term& s, const Term& t);
Ordering compare(const Monomial& p, const Monomial& q);

inline bool less(const Term& s, const Term& t) { return compare(s, t) == Ordering::kLess; }
inline bool less_equal(const Term& s, const Term& t) { return at_most(compare(s, t)); }
inline bool equivalent(const Term& s, const Term& t) { return compare(s, t) == Ordering::kEqual; }

/// Ordinal sum in canonical form: left parts strictly below the first right
/// part are absorbed and Omega-monomials of equal exponent merge.
Term add(const Term& s, const Term& t);

/// The compare-greatest member; the first encountered wins among EQ members.
/// Precondition: non-empty.
const Term& max_term(std::span<const Term> terms);

}  // namespace oto
