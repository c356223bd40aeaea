#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "oto/term.hpp"

namespace oto {

/// Finite set of countable terms, deduplicated up to EQ. Insertion order is
/// kept, so the representative of an EQ-class is the first one inserted.
class CoeffSet {
 public:
  CoeffSet() = default;
  CoeffSet(std::initializer_list<Term> init);

  /// Inserts `t` unless an EQ member is present. Returns true if inserted.
  /// Throws MalformedTerm if t is not below Omega.
  bool insert(const Term& t);
  void merge(const CoeffSet& other);

  bool contains(const Term& t) const;  // up to EQ
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  std::span<const Term> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Every member strictly below `bound`.
  bool all_below(const Term& bound) const;

  /// Same members up to EQ, ignoring order.
  bool equivalent_to(const CoeffSet& other) const;

  /// Syntactic equality of the member sequences.
  friend bool operator==(const CoeffSet& a, const CoeffSet& b) { return a.members_ == b.members_; }

 private:
  std::vector<Term> members_;
};

/// The coefficient set K_Omega t, read off the base-Omega normal form:
/// {} for 0 and for Omega, {t} for countable t, and otherwise for each
/// Omega^a * c the coefficient c together with K(a), plus the countable tail.
CoeffSet coefficients(const Term& t);

/// The members of K_Omega t without EQ-deduplication, appended to `out`.
void append_coefficients(const Term& t, std::vector<Term>& out);

}  // namespace oto
