#include "oto/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "oto/order.hpp"

namespace oto {

namespace {

using TermList = std::vector<Term>;
using MonoList = std::vector<Monomial>;

// Upper limit on a part sequence: lexicographically below (or at most) the
// parts of `term` starting at `index`.
struct Bound {
  Term term;
  std::size_t index = 0;
  bool inclusive = false;
};

struct SeqKey {
  std::uint64_t budget;
  std::optional<Monomial> prev;
  std::optional<Term> bound;
  std::size_t index;
  bool inclusive;

  bool operator==(const SeqKey& o) const {
    return budget == o.budget && prev == o.prev && bound == o.bound && index == o.index &&
           inclusive == o.inclusive;
  }
};

struct SeqKeyHash {
  std::size_t operator()(const SeqKey& k) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(k.budget);
    h = h * 31 + (k.prev ? k.prev->hash() : 7);
    h = h * 31 + (k.bound ? k.bound->hash() : 11);
    h = h * 31 + k.index * 2 + (k.inclusive ? 1 : 0);
    return h;
  }
};

struct MonoKey {
  std::uint64_t budget;
  std::optional<Monomial> upper;
  bool operator==(const MonoKey& o) const { return budget == o.budget && upper == o.upper; }
};

struct MonoKeyHash {
  std::size_t operator()(const MonoKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.budget) * 31 + (k.upper ? k.upper->hash() : 13);
  }
};

}  // namespace

struct TermEnumerator::Impl {
  std::size_t max_terms;
  std::size_t work = 0;
  std::size_t depth = 0;
  std::size_t max_depth = 64;
  std::unordered_map<SeqKey, TermList, SeqKeyHash> seq_memo;
  std::unordered_map<MonoKey, MonoList, MonoKeyHash> mono_memo;
  const Term omega = Term::omega();
  const Term one = Term::natural(1);

  void charge(std::size_t n) {
    work += n;
    if (work > max_terms) {
      throw EnumerationBudget("term enumeration exceeded " + std::to_string(max_terms) + " terms");
    }
  }

  // All non-empty and empty part sequences with total norm <= budget whose
  // first part is at most `prev` and which respect `bound`.
  const TermList& seq(std::uint64_t budget, const std::optional<Monomial>& prev,
                      const std::optional<Bound>& bound) {
    SeqKey key{budget, prev, bound ? std::optional<Term>(bound->term) : std::nullopt,
               bound ? bound->index : 0, bound ? bound->inclusive : false};
    if (auto it = seq_memo.find(key); it != seq_memo.end()) return it->second;

    // A sum of d parts drags along its shorter prefixes, about d*d/2 charged
    // parts, so depths past max_depth cannot fit the cap anyway.
    if (depth >= max_depth) {
      throw EnumerationBudget("term enumeration exceeded " + std::to_string(max_terms) + " terms (sum too long)");
    }
    ++depth;
    struct Leave {
      std::size_t& d;
      ~Leave() { --d; }
    } leave{depth};

    TermList out;
    const bool bound_exhausted = bound && bound->index == bound->term.size();
    if (!bound || !bound_exhausted || bound->inclusive) out.push_back(Term());
    if (budget > 0 && !bound_exhausted) {
      std::optional<Monomial> upper = prev;
      std::optional<Monomial> bound_part;
      if (bound) {
        bound_part = bound->term[bound->index];
        if (!upper || compare(*bound_part, *upper) == Ordering::kLess) upper = bound_part;
      }
      // Copy: recursive calls may rehash the memo.
      const MonoList firsts = monos(budget, upper);
      for (const auto& q : firsts) {
        if (prev && prev->is_omega_mono() && q.is_omega_mono() &&
            compare(q.exponent(), prev->exponent()) == Ordering::kEqual) {
          continue;  // equal Omega exponents must be merged into one part
        }
        const auto rel = bound_part ? compare(q, *bound_part) : Ordering::kLess;
        if (rel == Ordering::kGreater) continue;
        std::optional<Bound> rest_bound;
        if (rel == Ordering::kEqual) rest_bound = Bound{bound->term, bound->index + 1, bound->inclusive};
        const TermList rests = seq(budget - q.norm(), q, rest_bound);
        for (const auto& rest : rests) {
          charge(rest.size() + 1);
          MonoList parts;
          parts.reserve(rest.size() + 1);
          parts.push_back(q);
          parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
          out.push_back(Term::from_parts(std::move(parts)));
        }
      }
    }
    return seq_memo.emplace(std::move(key), std::move(out)).first->second;
  }

  const TermList& below_omega(std::uint64_t budget) {
    return seq(budget, std::nullopt, Bound{omega, 0, false});
  }

  // Monomials with 1 <= norm <= budget that are at most `upper`.
  const MonoList& monos(std::uint64_t budget, const std::optional<Monomial>& upper) {
    MonoKey key{budget, upper};
    if (auto it = mono_memo.find(key); it != mono_memo.end()) return it->second;

    MonoList out;
    if (budget > 0) {
      const bool omega_level = !upper || upper->is_omega_mono();
      if (omega_level) out.push_back(Monomial::omega_mono(one, one));

      // omega^e, e countable and not strongly critical.
      {
        TermList exps;
        if (omega_level) {
          exps = below_omega(budget - 1);
        } else if (upper->is_wpow()) {
          exps = seq(budget - 1, std::nullopt, Bound{upper->exponent(), 0, true});
        } else {
          exps = seq(budget - 1, std::nullopt, Bound{Term::of(*upper), 0, false});
        }
        for (const auto& e : exps) {
          if (e.size() == 1 && e.leading().is_collapse()) continue;
          out.push_back(Monomial::wpow(e));
        }
      }

      // Suc^a(x); the seed lies strictly below the collapse term.
      const bool collapses_possible =
          budget >= 2 && !(upper && upper->is_wpow() && !upper->exponent().contains_collapse());
      if (collapses_possible) {
        TermList seeds;
        if (omega_level) {
          seeds = below_omega(budget - 2);
        } else if (upper->is_wpow()) {
          seeds = seq(budget - 2, std::nullopt, Bound{upper->exponent(), 0, false});
        } else {
          seeds = seq(budget - 2, std::nullopt, Bound{Term::of(*upper), 0, false});
        }
        for (const auto& x : seeds) {
          const TermList iterates = seq(budget - 1 - x.norm(), std::nullopt, std::nullopt);
          for (const auto& a : iterates) {
            if (a.is_zero()) continue;
            auto c = Monomial::collapse(a, x);
            if (!omega_level && compare(c, *upper) == Ordering::kGreater) continue;
            out.push_back(std::move(c));
          }
        }
      }

      // Omega^e * c other than Omega itself.
      if (omega_level && budget >= 3) {
        const TermList exps = upper ? seq(budget - 2, std::nullopt, Bound{upper->exponent(), 0, true})
                                    : seq(budget - 2, std::nullopt, std::nullopt);
        for (const auto& e : exps) {
          if (e.is_zero()) continue;
          const auto rel = upper ? compare(e, upper->exponent()) : Ordering::kLess;
          const TermList coefs = rel == Ordering::kLess
                                     ? below_omega(budget - 1 - e.norm())
                                     : seq(budget - 1 - e.norm(), std::nullopt,
                                           Bound{upper->coefficient(), 0, true});
          for (const auto& c : coefs) {
            if (c.is_zero() || (e == one && c == one)) continue;
            out.push_back(Monomial::omega_mono(e, c));
          }
        }
      }
    }
    charge(out.size());
    return mono_memo.emplace(std::move(key), std::move(out)).first->second;
  }
};

TermEnumerator::TermEnumerator(std::size_t max_terms) : impl_(std::make_unique<Impl>()) {
  impl_->max_terms = max_terms;
  std::size_t d = 64;
  while (d < 4096 && d * d / 2 < max_terms) d *= 2;
  impl_->max_depth = d;
}
TermEnumerator::~TermEnumerator() = default;
TermEnumerator::TermEnumerator(TermEnumerator&&) noexcept = default;
TermEnumerator& TermEnumerator::operator=(TermEnumerator&&) noexcept = default;

std::vector<Term> TermEnumerator::up_to_norm(std::uint64_t k, const std::optional<Term>& bound) {
  if (bound && bound->is_zero()) return {};
  std::optional<Bound> b;
  if (bound) b = Bound{*bound, 0, false};
  std::vector<Term> out = impl_->seq(k, std::nullopt, b);
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& c) {
    if (a.norm() != c.norm()) return a.norm() < c.norm();
    return syntactic_less(a, c);
  });
  return out;
}

std::size_t TermEnumerator::work() const { return impl_->work; }

std::vector<Term> terms_up_to_norm(std::uint64_t k, const std::optional<Term>& bound,
                                   std::size_t max_terms) {
  TermEnumerator e(max_terms);
  return e.up_to_norm(k, bound);
}

}  // namespace oto
