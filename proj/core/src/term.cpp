#include "oto/term.hpp"

#include <algorithm>
#include <cassert>

namespace oto {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::shared_ptr<const detail::TermRep>& zero_rep() {
  static const std::shared_ptr<const detail::TermRep> rep = [] {
    auto r = std::make_shared<detail::TermRep>();
    r->hash = 0x5bd1e995;
    return r;
  }();
  return rep;
}

}  // namespace

Term::Term() : rep_(zero_rep()) {}

Term Term::natural(std::uint64_t n) {
  if (n == 0) return Term();
  static const Monomial one = Monomial::wpow(Term());
  return from_parts(std::vector<Monomial>(n, one));
}

Term Term::omega() {
  static const Term omega = Term::of(Monomial::omega_mono(natural(1), natural(1)));
  return omega;
}

Term Term::of(Monomial m) { return from_parts({std::move(m)}); }

Term Term::from_parts(std::vector<Monomial> parts) {
  if (parts.empty()) return Term();
  auto rep = std::make_shared<detail::TermRep>();
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : parts) {
    h = mix(h, p.hash());
    rep->norm += p.norm();
    rep->nodes += p.node_count();
    if (p.is_omega_mono()) {
      rep->below_omega = false;
      rep->has_omega = true;
    }
    if (!p.is_one()) rep->natural = false;
    rep->has_collapse = rep->has_collapse || p.is_collapse() || p.exponent().contains_collapse() ||
                        p.coefficient().contains_collapse();
    rep->has_omega = rep->has_omega || p.exponent().contains_omega() ||
                     p.coefficient().contains_omega();
  }
  rep->hash = h;
  rep->parts = std::move(parts);
  return Term(std::move(rep));
}

bool Term::is_zero() const { return rep_->parts.empty(); }
std::span<const Monomial> Term::parts() const { return rep_->parts; }
std::uint64_t Term::norm() const { return rep_->norm; }
std::size_t Term::hash() const { return rep_->hash; }
bool Term::is_below_omega() const { return rep_->below_omega; }
bool Term::contains_collapse() const { return rep_->has_collapse; }
bool Term::contains_omega() const { return rep_->has_omega; }
std::size_t Term::node_count() const { return rep_->nodes; }
bool Term::is_natural() const { return rep_->natural; }
std::uint64_t Term::natural_value() const { return rep_->parts.size(); }
bool Term::is_omega() const { return size() == 1 && leading().is_omega(); }

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->hash != b.rep_->hash || a.size() != b.size()) return false;
  return std::equal(a.parts().begin(), a.parts().end(), b.parts().begin());
}

Monomial Monomial::wpow(Term exponent) {
  auto rep = std::make_shared<detail::MonoRep>();
  rep->kind = MonoKind::kWPow;
  rep->hash = mix(0x11, exponent.hash());
  rep->norm = exponent.norm() + 1;
  rep->nodes = exponent.node_count() + 1;
  rep->first = std::move(exponent);
  return Monomial(std::move(rep));
}

Monomial Monomial::omega_mono(Term exponent, Term coefficient) {
  auto rep = std::make_shared<detail::MonoRep>();
  rep->kind = MonoKind::kOmegaMono;
  rep->hash = mix(mix(0x22, exponent.hash()), coefficient.hash());
  const bool bare = exponent.is_natural() && exponent.natural_value() == 1 &&
                    coefficient.is_natural() && coefficient.natural_value() == 1;
  // N(Omega) = 1, while the general clause would give N(1) + N(1) + 1.
  rep->norm = bare ? 1 : exponent.norm() + coefficient.norm() + 1;
  rep->nodes = exponent.node_count() + coefficient.node_count() + 1;
  rep->first = std::move(exponent);
  rep->second = std::move(coefficient);
  return Monomial(std::move(rep));
}

Monomial Monomial::collapse(Term iterate, Term seed) {
  auto rep = std::make_shared<detail::MonoRep>();
  rep->kind = MonoKind::kCollapse;
  rep->hash = mix(mix(0x33, iterate.hash()), seed.hash());
  // N(Suc^a(x)) = N(Suc(x)) + N(a) = N(x) + 1 + N(a)
  rep->norm = seed.norm() + 1 + iterate.norm();
  rep->nodes = iterate.node_count() + seed.node_count() + 1;
  rep->first = std::move(iterate);
  rep->second = std::move(seed);
  return Monomial(std::move(rep));
}

MonoKind Monomial::kind() const { return rep_->kind; }
const Term& Monomial::exponent() const { return rep_->first; }
const Term& Monomial::coefficient() const { return rep_->second; }
std::uint64_t Monomial::norm() const { return rep_->norm; }
std::size_t Monomial::hash() const { return rep_->hash; }
std::size_t Monomial::node_count() const { return rep_->nodes; }

bool Monomial::is_omega() const {
  return is_omega_mono() && exponent().is_natural() && exponent().natural_value() == 1 &&
         coefficient().is_natural() && coefficient().natural_value() == 1;
}

bool Monomial::is_one() const { return is_wpow() && exponent().is_zero(); }

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.rep_ == b.rep_) return true;
  return a.rep_->hash == b.rep_->hash && a.rep_->kind == b.rep_->kind &&
         a.rep_->first == b.rep_->first && a.rep_->second == b.rep_->second;
}

bool syntactic_less(const Monomial& a, const Monomial& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (!(a.exponent() == b.exponent())) return syntactic_less(a.exponent(), b.exponent());
  if (a.is_wpow()) return false;
  return syntactic_less(a.coefficient(), b.coefficient());
}

bool syntactic_less(const Term& a, const Term& b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return syntactic_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

TermClass classify(const Term& t) {
  if (t.is_zero()) return TermClass::kZero;
  if (t.size() > 1) return TermClass::kCompositeSum;
  const auto& m = t.leading();
  if (m.is_collapse() || m.is_omega()) return TermClass::kStronglyCritical;
  // Omega^a * (x + y) splits as Omega^a * x + Omega^a * y.
  if (m.is_omega_mono() && m.coefficient().size() > 1) return TermClass::kCompositeSum;
  return TermClass::kAdditivelyIndecomposable;
}

std::string to_string(TermClass c) {
  switch (c) {
    case TermClass::kZero: return "zero";
    case TermClass::kAdditivelyIndecomposable: return "additively-indecomposable";
    case TermClass::kStronglyCritical: return "strongly-critical";
    case TermClass::kCompositeSum: return "composite-sum";
  }
  return "?";
}

}  // namespace oto
