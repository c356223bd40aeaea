#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oto {

/// Raised when a term violates a grammar side condition that normalization
/// cannot repair (for example a collapse seed at or above Omega).
class MalformedTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Monomial;

namespace detail {
struct TermRep;
struct MonoRep;
}  // namespace detail

/// Canonical ordinal term: zero, or a non-empty sum of monomials in
/// non-increasing order.
///
/// Terms are immutable and cheap to copy (shared representation). The
/// equality operator is syntactic identity; ordinal equality is the EQ verdict
/// of `compare` in order.hpp, and the two differ on collapse-seed variants.
///
/// Construction through `from_parts` does not check the ordering invariants;
/// use `normalize` or `add` to build terms from arbitrary input.
class Term {
 public:
  Term();

  static Term zero() { return Term(); }
  static Term natural(std::uint64_t n);
  /// The bare symbol Omega, stored as Omega^1 * 1.
  static Term omega();
  static Term of(Monomial m);
  static Term from_parts(std::vector<Monomial> parts);

  bool is_zero() const;
  std::span<const Monomial> parts() const;
  std::size_t size() const { return parts().size(); }
  const Monomial& operator[](std::size_t i) const { return parts()[i]; }
  const Monomial& leading() const { return parts().front(); }

  /// The norm N, by structural recursion.
  std::uint64_t norm() const;
  std::size_t hash() const;

  /// True iff the top-level sum contains no Omega-monomial.
  bool is_below_omega() const;
  /// True iff some collapse node occurs anywhere inside the term.
  bool contains_collapse() const;
  /// True iff some Omega-monomial occurs anywhere inside the term.
  bool contains_omega() const;
  /// Number of term and monomial nodes; the termination measure of `compare`.
  std::size_t node_count() const;

  bool is_natural() const;
  /// Value of a natural-number term; only meaningful when is_natural().
  std::uint64_t natural_value() const;
  bool is_omega() const;
  /// True iff the term is exactly one monomial.
  bool is_monomial() const { return size() == 1; }

  friend bool operator==(const Term& a, const Term& b);

  const detail::TermRep* identity() const { return rep_.get(); }

 private:
  explicit Term(std::shared_ptr<const detail::TermRep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const detail::TermRep> rep_;
};

enum class MonoKind : std::uint8_t {
  kWPow,       // omega^exponent, exponent below Omega
  kOmegaMono,  // Omega^exponent * coefficient
  kCollapse,   // Suc^iterate(seed)
};

/// One additive part of a canonical sum.
class Monomial {
 public:
  static Monomial wpow(Term exponent);
  static Monomial omega_mono(Term exponent, Term coefficient);
  static Monomial collapse(Term iterate, Term seed);

  MonoKind kind() const;
  bool is_wpow() const { return kind() == MonoKind::kWPow; }
  bool is_omega_mono() const { return kind() == MonoKind::kOmegaMono; }
  bool is_collapse() const { return kind() == MonoKind::kCollapse; }
  bool is_omega() const;
  bool is_one() const;

  /// WPow and OmegaMono exponent.
  const Term& exponent() const;
  /// OmegaMono coefficient.
  const Term& coefficient() const;
  /// Collapse iterate (the superscript of Suc).
  const Term& iterate() const { return exponent(); }
  /// Collapse seed (the argument of Suc^iterate).
  const Term& seed() const { return coefficient(); }

  std::uint64_t norm() const;
  std::size_t hash() const;
  std::size_t node_count() const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  explicit Monomial(std::shared_ptr<const detail::MonoRep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const detail::MonoRep> rep_;
};

namespace detail {

struct TermRep {
  std::vector<Monomial> parts;
  std::size_t hash = 0;
  std::uint64_t norm = 0;
  std::size_t nodes = 1;
  bool below_omega = true;
  bool has_collapse = false;
  bool has_omega = false;
  bool natural = true;
};

struct MonoRep {
  MonoKind kind;
  Term first;   // exponent / iterate
  Term second;  // coefficient / seed (zero for WPow)
  std::size_t hash = 0;
  std::uint64_t norm = 0;
  std::size_t nodes = 1;
};

}  // namespace detail

/// Total syntactic order, used only for deterministic output ordering.
bool syntactic_less(const Term& a, const Term& b);
bool syntactic_less(const Monomial& a, const Monomial& b);

enum class TermClass { kZero, kAdditivelyIndecomposable, kStronglyCritical, kCompositeSum };

/// Zero, additively indecomposable, strongly critical (collapse terms and
/// Omega), or a composite sum.
TermClass classify(const Term& t);
std::string to_string(TermClass c);

}  // namespace oto

template <>
struct std::hash<oto::Term> {
  std::size_t operator()(const oto::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<oto::Monomial> {
  std::size_t operator()(const oto::Monomial& m) const noexcept { return m.hash(); }
};
