#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oto/hierarchy.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"
#include "oto/syntax.hpp"

namespace oto_test {

using oto::BigNat;
using oto::Term;

// Direct expansion of the defining recursion for alpha <= w. The index sets
// are written out by hand (below w there are only naturals, and N(n) = n), so
// neither the enumerator nor the evaluator's memo is involved.
class Expand {
 public:
  Expand(oto::BaseFunction f, oto::NormOverride o = {}) : f_(std::move(f)), o_(std::move(o)) {
    for (std::uint64_t i = 0; i <= 12; ++i) all_.push_back(Term::natural(i));
  }

  std::uint64_t n(const Term& t) const {
    auto it = o_.find(t);
    return it == o_.end() ? t.norm() : it->second;
  }

  BigNat operator()(const Term& a, const BigNat& m) {
    if (a.is_zero()) return f_(m);
    const auto key = std::make_pair(oto::to_string(a), m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const BigNat k = f_(BigNat(n(a)) + m);
    if (k > 12 && !a.is_natural()) throw std::runtime_error("index set beyond the brute-force range");
    BigNat best = 0;
    for (const auto& b : all_) {
      if (!oto::less(b, a) || BigNat(n(b)) > k) continue;
      const BigNat v = (*this)(b, (*this)(b, m));
      if (v > best) best = v;
    }
    return memo_[key] = best;
  }

 private:
  oto::BaseFunction f_;
  oto::NormOverride o_;
  std::vector<Term> all_;
  std::map<std::pair<std::string, BigNat>, BigNat> memo_;
};

}  // namespace oto_test
