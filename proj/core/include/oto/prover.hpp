#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oto/ext.hpp"

namespace oto {

/// A judgement of the prover. Term facts relate two expressions; FunLE
/// states F(x) <= G(x) for every countable x.
struct Fact {
  enum class Kind { kTermLE, kTermLT, kFunLE };
  Kind kind = Kind::kTermLE;
  ExtTerm lhs, rhs;
  FunExpr flhs, frhs;

  static Fact le(ExtTerm s, ExtTerm t) { return {Kind::kTermLE, std::move(s), std::move(t), {}, {}}; }
  static Fact lt(ExtTerm s, ExtTerm t) { return {Kind::kTermLT, std::move(s), std::move(t), {}, {}}; }
  static Fact fun_le(FunExpr f, FunExpr g) { return {Kind::kFunLE, {}, {}, std::move(f), std::move(g)}; }

  friend bool operator==(const Fact& a, const Fact& b);
};

/// One rule application. `premises` index earlier steps of the same trace.
/// `witness` carries the coefficient member for coeff-below.
struct ProofStep {
  std::string rule;
  std::vector<std::size_t> premises;
  Fact conclusion;
  std::optional<Term> witness;
};

using ProofTrace = std::vector<ProofStep>;

/// Names of the admitted rules.
///
/// Term rules: refl, order, trans, eval, lt-le, zero-least, apply, sum-mono,
/// veblen-mono, arg-below, coeff-below, strict-succ.
/// Function rules: fun-refl, fun-trans, E-bound, zero-iterate, iter-iter,
/// shift-iter, base-mono, shift-mono, shift-merge.
const std::vector<std::string>& proof_rules();

/// Replays every step against its rule schema. Returns the first problem
/// found, or nullopt for a valid trace.
std::optional<std::string> check_trace(const ProofTrace& trace);

struct ProveResult {
  bool proved = false;  // false means UNKNOWN
  ProofTrace trace;     // last conclusion is s <= t when proved
};

/// Sound, incomplete derivation of s <= t.
ProveResult prove_le(const ExtTerm& s, const ExtTerm& t);

/// A canonical u with s <= u, and its derivation; nullopt if none is found.
std::optional<std::pair<Term, ProofTrace>> upper_bound(const ExtTerm& s);
/// A canonical l with l <= t, and its derivation.
std::optional<std::pair<Term, ProofTrace>> lower_bound(const ExtTerm& t);

class VeblenPresent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A canonical term a' with s <= a' (provable by prove_le) and N(s) <= N(a').
/// E(x) becomes Suc^1(x), (F^a)^b becomes F^(a+b), shifts fold into the
/// argument via max. If the bound loses norm through absorption, a natural
/// number is appended. Throws VeblenPresent.
Term dominant_oto(const ExtTerm& s);

}  // namespace oto
