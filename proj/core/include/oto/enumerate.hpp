#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oto/term.hpp"

namespace oto {

/// The enumeration would materialize more terms than the configured cap.
class EnumerationBudget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxEnumeratedTerms = 2'000'000;

/// Norm-bounded generator of canonical terms.
///
/// Generation is driven by the canonical grammar and pruned by the upper
/// bound, so `up_to_norm(k, bound)` stays cheap whenever few terms lie below
/// the bound even if k is large. Sub-results are memoized per instance; an
/// instance is not safe for concurrent use, distinct instances are.
///
/// The cap is charged for every term materialized, intermediate sub-results
/// included, weighted by its number of top-level parts; exceeding it throws
/// EnumerationBudget.
class TermEnumerator {
 public:
  explicit TermEnumerator(std::size_t max_terms = kDefaultMaxEnumeratedTerms);
  ~TermEnumerator();
  TermEnumerator(TermEnumerator&&) noexcept;
  TermEnumerator& operator=(TermEnumerator&&) noexcept;

  /// Every canonical term t with norm(t) <= k and, if given, t < bound;
  /// ordered by norm, then syntactically.
  std::vector<Term> up_to_norm(std::uint64_t k, const std::optional<Term>& bound = std::nullopt);

  std::size_t work() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Term> terms_up_to_norm(std::uint64_t k, const std::optional<Term>& bound = std::nullopt,
                                   std::size_t max_terms = kDefaultMaxEnumeratedTerms);

}  // namespace oto
