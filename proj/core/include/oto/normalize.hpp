#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "oto/term.hpp"

namespace oto {

/// A term of the raw grammar over {0, Omega, Suc, +, omega^, Omega^a * x,
/// Suc^a(x)}, before any normalization.
struct RawTerm {
  enum class Kind { kZero, kOmega, kNat, kSucc, kPlus, kWPow, kOmegaPow, kCollapse };

  Kind kind = Kind::kZero;
  std::uint64_t nat = 0;
  std::vector<RawTerm> args;

  static RawTerm zero() { return {}; }
  static RawTerm omega() { return {Kind::kOmega, 0, {}}; }
  static RawTerm nat_of(std::uint64_t n) { return {Kind::kNat, n, {}}; }
  static RawTerm succ(RawTerm a) { return {Kind::kSucc, 0, {std::move(a)}}; }
  static RawTerm plus(RawTerm a, RawTerm b) { return {Kind::kPlus, 0, {std::move(a), std::move(b)}}; }
  static RawTerm wpow(RawTerm e) { return {Kind::kWPow, 0, {std::move(e)}}; }
  static RawTerm omega_pow(RawTerm e, RawTerm c) {
    return {Kind::kOmegaPow, 0, {std::move(e), std::move(c)}};
  }
  static RawTerm collapse(RawTerm a, RawTerm x) {
    return {Kind::kCollapse, 0, {std::move(a), std::move(x)}};
  }
};

/// Norm computed directly on the raw syntax tree.
std::uint64_t raw_norm(const RawTerm& r);

/// Canonical form with the same ordinal value. Idempotent on canonical input.
/// Throws MalformedTerm for a collapse seed or Omega coefficient at or above
/// Omega.
Term normalize(const RawTerm& raw);

/// The canonical raw rendering of a canonical term; normalize(to_raw(t)) == t.
RawTerm to_raw(const Term& t);

/// omega^e in canonical form. Exponents at or above Omega are rewritten via
/// omega^(Omega*a + b) = Omega^a * omega^b, and omega^g = g for strongly
/// critical g.
Term omega_power(const Term& e);

/// Omega^e * c in canonical form (c below Omega).
Term omega_times(const Term& e, const Term& c);

/// Suc^a(x) in canonical form; Suc^0(x) = x + 1.
Term make_collapse(const Term& a, const Term& x);

}  // namespace oto
