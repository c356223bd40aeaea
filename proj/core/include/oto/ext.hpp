#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oto/coefficients.hpp"
#include "oto/term.hpp"

// Extended expression layer: operator symbols Suc and E, iterates F^a,
// shifts F[K] and Veblen applications phi(a, b), on top of canonical terms.

namespace oto {

class FunExpr {
 public:
  enum class Kind { kSuc, kE, kIterate, kShift };

  FunExpr();  // Suc
  static FunExpr suc();
  static FunExpr e();
  static FunExpr iterate(FunExpr base, Term exponent);
  static FunExpr shift(FunExpr base, CoeffSet k);

  Kind kind() const;
  const FunExpr& base() const;      // kIterate, kShift
  const Term& exponent() const;     // kIterate
  const CoeffSet& shift_set() const;  // kShift

  friend bool operator==(const FunExpr& a, const FunExpr& b);

 private:
  struct Rep;
  explicit FunExpr(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

class ExtTerm {
 public:
  enum class Kind { kCanon, kApply, kVeblen, kSum };

  ExtTerm();  // Canon(0)
  static ExtTerm canon(Term t);
  /// Throws MalformedTerm if the argument reduces to a term at or above Omega.
  static ExtTerm apply(FunExpr f, ExtTerm arg);
  /// Throws MalformedTerm if an argument reduces to a term at or above Omega.
  static ExtTerm veblen(ExtTerm a, ExtTerm b);
  /// A single part is returned as is; no parts give Canon(0).
  static ExtTerm sum(std::vector<ExtTerm> parts);

  Kind kind() const;
  const Term& term() const;        // kCanon
  const FunExpr& fun() const;      // kApply
  const ExtTerm& arg() const;      // kApply
  const ExtTerm& left() const;     // kVeblen
  const ExtTerm& right() const;    // kVeblen
  const std::vector<ExtTerm>& parts() const;  // kSum

  bool contains_veblen() const;

  friend bool operator==(const ExtTerm& a, const ExtTerm& b);

 private:
  struct Rep;
  explicit ExtTerm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// N(Suc(x)) = N(E(x)) = N(x) + 1, N(G^a(x)) = N(G(x)) + N(a),
/// N(phi(a, b)) = N(a) + N(b) + 1, sums add up. G[K](x) abbreviates
/// G(max(K u {x})), so its norm is the largest N(G(y)) for y in K u {x}.
std::uint64_t norm(const ExtTerm& s);

/// The canonical term with exactly the value of s, when one is known:
/// Suc(x) = x + 1, Suc^a(x) is a collapse term, G^0 = G, G[K](x) = G(max(K u {x})),
/// phi(0, b) = omega^b. E and other Veblen applications do not reduce.
std::optional<Term> reduce(const ExtTerm& s);

/// reduce(Apply(f, Canon(x))).
std::optional<Term> reduce_apply(const FunExpr& f, const Term& x);

/// K_Omega on the extended layer: canonical parts as in coefficients(),
/// applications and Veblen terms are their own single coefficient.
std::vector<ExtTerm> ext_coefficients(const ExtTerm& s);

}  // namespace oto
