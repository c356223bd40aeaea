#include "oto/audit.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "oto/cnf.hpp"
#include "oto/coefficients.hpp"
#include "oto/enumerate.hpp"
#include "oto/json_io.hpp"
#include "oto/order.hpp"
#include "oto/prover.hpp"
#include "oto/syntax.hpp"

namespace oto::audit {

void CheckReport::fail(std::string what) {
  ++violations;
  if (!counterexample) counterexample = std::move(what);
}

namespace {

CheckReport report(std::string suite, std::string name) {
  CheckReport r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  return r;
}

std::string str(const BigNat& v) { return v.str(); }

bool strongly_critical(const Term& t) { return classify(t) == TermClass::kStronglyCritical; }

bool single_collapse(const Term& t) { return t.is_monomial() && t.leading().is_collapse(); }

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Row-major compare matrix.
std::vector<Ordering> compare_matrix(const std::vector<Term>& terms) {
  const std::size_t n = terms.size();
  std::vector<Ordering> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = compare(terms[i], terms[j]);
  }
  return m;
}

// Expected verdict for a vs c given a ? b and b ? c, or nullopt if unconstrained.
std::optional<Ordering> chain(Ordering ab, Ordering bc) {
  if (ab == Ordering::kEqual) return bc;
  if (bc == Ordering::kEqual) return ab;
  if (ab == bc) return ab;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& suites() {
  static const std::vector<std::string> names = {"order", "oracle", "hierarchy", "lemmas", "prover"};
  return names;
}

std::string format(const CheckReport& r) {
  std::ostringstream os;
  os << r.suite << "/" << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances
     << " instances";
  if (r.skipped) os << ", " << r.skipped << " skipped";
  if (r.violations) os << ", " << r.violations << " violations";
  os << ")";
  if (r.counterexample) os << " first counterexample: " << *r.counterexample;
  return os.str();
}

std::vector<CheckReport> order_axioms(const std::vector<Term>& terms) {
  auto mirror_r = report("order", "mirror-consistency");
  auto tri = report("order", "trichotomy");
  auto irr = report("order", "irreflexivity");
  for (const auto& s : terms) {
    ++irr.instances;
    if (compare(s, s) != Ordering::kEqual) irr.fail(to_string(s));
    for (const auto& t : terms) {
      const auto st = compare(s, t);
      const auto ts = compare(t, s);
      ++mirror_r.instances;
      if (st != mirror(ts)) mirror_r.fail(to_string(s) + " vs " + to_string(t));
      ++tri.instances;
      const int holds = (st == Ordering::kLess) + (st == Ordering::kEqual && ts == Ordering::kEqual) +
                        (ts == Ordering::kLess);
      if (holds != 1) tri.fail(to_string(s) + " vs " + to_string(t));
    }
  }
  return {mirror_r, tri, irr};
}

CheckReport transitivity_exhaustive(const std::vector<Term>& terms) {
  auto r = report("order", "transitivity-exhaustive");
  const std::size_t n = terms.size();
  const auto m = compare_matrix(terms);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = m[a * n + b];
      if (ab == Ordering::kGreater) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto bc = m[b * n + c];
        if (bc == Ordering::kGreater) continue;
        ++r.instances;
        const auto want = chain(ab, bc);
        if (want && m[a * n + c] != *want) {
          r.fail(to_string(terms[a]) + ", " + to_string(terms[b]) + ", " + to_string(terms[c]));
        }
      }
    }
  }
  return r;
}

CheckReport transitivity_sampled(const std::vector<Term>& terms, std::uint64_t samples,
                                 std::uint64_t seed) {
  auto r = report("order", "transitivity-sampled");
  if (terms.empty()) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    // Sort the sample so the premises hold and the conclusion is tested.
    std::array<const Term*, 3> t = {&terms[pick(rng)], &terms[pick(rng)], &terms[pick(rng)]};
    std::sort(t.begin(), t.end(), [](const Term* x, const Term* y) { return less(*x, *y); });
    const auto ab = compare(*t[0], *t[1]);
    const auto bc = compare(*t[1], *t[2]);
    ++r.instances;
    if (ab == Ordering::kGreater || bc == Ordering::kGreater) {
      r.fail("sorting produced a descent at " + to_string(*t[0]) + ", " + to_string(*t[1]) + ", " +
             to_string(*t[2]));
      continue;
    }
    if (compare(*t[0], *t[2]) != *chain(ab, bc)) {
      r.fail(to_string(*t[0]) + ", " + to_string(*t[1]) + ", " + to_string(*t[2]));
    }
  }
  return r;
}

std::vector<CheckReport> add_laws(const std::vector<Term>& terms) {
  auto assoc = report("order", "add-associative");
  auto mono = report("order", "add-left-monotone");
  auto ident = report("order", "add-identity");
  const std::size_t n = terms.size();
  std::vector<Term> sums(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    ++ident.instances;
    if (!(add(Term(), terms[i]) == terms[i]) || !(add(terms[i], Term()) == terms[i])) {
      ident.fail(to_string(terms[i]));
    }
    for (std::size_t j = 0; j < n; ++j) sums[i * n + j] = add(terms[i], terms[j]);
  }
  const auto m = compare_matrix(terms);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Term& ab = sums[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        ++assoc.instances;
        if (compare(add(ab, terms[c]), add(terms[a], sums[b * n + c])) != Ordering::kEqual) {
          assoc.fail(to_string(terms[a]) + ", " + to_string(terms[b]) + ", " + to_string(terms[c]));
        }
        ++mono.instances;
        if (compare(ab, sums[a * n + c]) != m[b * n + c]) {
          mono.fail(to_string(terms[a]) + ", " + to_string(terms[b]) + ", " + to_string(terms[c]));
        }
      }
    }
  }
  return {assoc, mono, ident};
}

std::vector<CheckReport> collapse_laws(const std::vector<Term>& terms) {
  auto side = report("order", "collapse-side-conditions");
  auto prop = report("order", "collapse-seed-monotone");
  auto below = report("order", "collapse-below-omega");
  auto fixed = report("order", "strongly-critical-fixed-point");
  std::vector<Term> countable;
  for (const auto& t : terms) {
    if (t.is_below_omega()) countable.push_back(t);
  }
  for (const auto& c : terms) {
    if (strongly_critical(c)) {
      ++fixed.instances;
      const Term w = normalize(RawTerm::wpow(to_raw(c)));
      if (compare(w, c) != Ordering::kEqual) fixed.fail(to_string(c));
    }
    if (!single_collapse(c)) continue;
    const Monomial& m = c.leading();
    ++below.instances;
    if (!c.is_below_omega() || !less(c, Term::omega())) below.fail(to_string(c));
    ++side.instances;
    if (!less(m.seed(), c)) side.fail("seed of " + to_string(c));
    for (const auto& k : coefficients(m.iterate())) {
      if (!less(k, c)) side.fail(to_string(k) + " in K of the iterate of " + to_string(c));
    }
    for (const auto& eta : countable) {
      if (!less(eta, c)) continue;
      ++prop.instances;
      const Term d = Term::of(Monomial::collapse(m.iterate(), eta));
      if (!less_equal(d, c)) prop.fail(to_string(d) + " above " + to_string(c));
    }
  }
  return {side, prop, below, fixed};
}

CheckReport cnf_agreement(const std::vector<Term>& terms) {
  auto r = report("oracle", "cnf-compare");
  std::vector<Term> frag;
  std::vector<cnf::CnfOrdinal> vals;
  for (const auto& t : terms) {
    if (t.contains_omega() || t.contains_collapse()) continue;
    frag.push_back(t);
    vals.push_back(cnf::cnf_of(t));
  }
  for (std::size_t i = 0; i < frag.size(); ++i) {
    for (std::size_t j = 0; j < frag.size(); ++j) {
      ++r.instances;
      const auto want = static_cast<Ordering>(static_cast<signed char>(cnf::cnf_compare(vals[i], vals[j])));
      if (compare(frag[i], frag[j]) != want) r.fail(to_string(frag[i]) + " vs " + to_string(frag[j]));
    }
  }
  return r;
}

std::vector<CheckReport> coefficient_corollary(const std::vector<Term>& terms) {
  auto i1 = report("lemmas", "coefficients-zero-omega");
  auto i2 = report("lemmas", "coefficients-successor");
  auto i3 = report("lemmas", "coefficients-E");
  auto i4 = report("lemmas", "coefficients-sum");
  auto i5 = report("lemmas", "coefficients-veblen");
  auto i6 = report("lemmas", "coefficients-collapse");

  i1.instances = 2;
  if (!coefficients(Term()).empty()) i1.fail("K(0)");
  if (!coefficients(Term::omega()).empty()) i1.fail("K(W)");

  std::vector<Term> sc;
  std::vector<CoeffSet> ks;
  std::uint64_t max_norm = 0;
  for (const auto& t : terms) {
    if (strongly_critical(t)) sc.push_back(t);
    ks.push_back(coefficients(t));
    max_norm = std::max(max_norm, t.norm());
  }

  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& a = terms[i];
    const CoeffSet ks1 = coefficients(add(a, Term::natural(1)));
    for (const auto& xi : sc) {
      if (!ks[i].all_below(xi)) continue;
      ++i2.instances;
      if (!ks1.all_below(xi)) i2.fail("a = " + to_string(a) + ", xi = " + to_string(xi));
    }
    if (a.is_below_omega()) {
      ++i3.instances;
      const ExtTerm e = ExtTerm::apply(FunExpr::e(), ExtTerm::canon(a));
      const auto k = ext_coefficients(e);
      if (k.size() != 1 || !(k.front() == e)) i3.fail(to_string(e));
    }
    if (single_collapse(a)) {
      ++i6.instances;
      const CoeffSet& k = ks[i];
      if (k.size() != 1 || !(k.members()[0] == a)) i6.fail(to_string(a));
    }
  }

  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (terms[i].norm() + terms[j].norm() > max_norm) continue;
      const CoeffSet kab = coefficients(add(terms[i], terms[j]));
      for (const auto& xi : sc) {
        if (!ks[i].all_below(xi) || !ks[j].all_below(xi)) continue;
        ++i4.instances;
        if (!kab.all_below(xi)) {
          i4.fail("a = " + to_string(terms[i]) + ", b = " + to_string(terms[j]) + ", xi = " + to_string(xi));
        }
      }
    }
  }

  for (const auto& a : terms) {
    if (!a.is_below_omega()) continue;
    for (const auto& b : terms) {
      if (!b.is_below_omega() || a.norm() + b.norm() + 1 > max_norm) continue;
      const ExtTerm phi = ExtTerm::veblen(ExtTerm::canon(a), ExtTerm::canon(b));
      ++i5.instances;
      const auto k = ext_coefficients(phi);
      if (k.size() != 1 || !(k.front() == phi)) i5.fail(to_string(phi));
      for (const auto& xi : sc) {
        if (!less(a, xi) || !less(b, xi)) continue;
        // Only phi(0, b) = w^b is comparable in the canonical layer.
        auto v = reduce(phi);
        if (!v) {
          ++i5.skipped;
          continue;
        }
        ++i5.instances;
        if (!less(*v, xi)) i5.fail(to_string(phi) + " not below " + to_string(xi));
      }
    }
  }
  return {i1, i2, i3, i4, i5, i6};
}

std::vector<CheckReport> coefficient_invariants(const std::vector<Term>& terms) {
  auto single = report("lemmas", "coefficients-countable-singleton");
  auto members = report("lemmas", "coefficients-below-omega");
  for (const auto& t : terms) {
    const CoeffSet k = coefficients(t);
    ++members.instances;
    for (const auto& m : k) {
      if (!m.is_below_omega()) members.fail(to_string(m) + " in K(" + to_string(t) + ")");
    }
    if (t.is_below_omega() && !t.is_zero()) {
      ++single.instances;
      if (k.size() != 1 || !(k.members()[0] == t)) single.fail(to_string(t));
    }
  }
  return {single, members};
}

std::vector<CheckReport> roundtrips(const std::vector<Term>& terms) {
  auto surface = report("oracle", "surface-roundtrip");
  auto json = report("oracle", "json-roundtrip");
  for (const auto& t : terms) {
    ++surface.instances;
    const std::string p = to_string(t);
    try {
      const Term back = parse_term(p);
      if (!(back == t) || to_string(back) != p) surface.fail(p);
    } catch (const std::exception& e) {
      surface.fail(p + ": " + e.what());
    }
    ++json.instances;
    const std::string j = to_json(t);
    try {
      const Term back = term_from_json(j);
      if (!(back == t) || to_json(back) != j) json.fail(j);
    } catch (const std::exception& e) {
      json.fail(j + ": " + e.what());
    }
  }
  return {surface, json};
}

namespace {

struct RawGen {
  std::vector<std::vector<RawTerm>> items_memo, terms_memo;

  // Non-sum raw terms of raw norm exactly n.
  const std::vector<RawTerm>& items(std::uint64_t n) {
    while (items_memo.size() <= n) items_memo.emplace_back();
    if (!items_memo[n].empty() || n == 0) return items_memo[n];
    std::vector<RawTerm> out;
    if (n == 1) out.push_back(RawTerm::omega());
    for (const auto& x : terms(n - 1)) {
      out.push_back(RawTerm::succ(x));
      out.push_back(RawTerm::wpow(x));
    }
    for (std::uint64_t i = 0; i <= n - 1; ++i) {
      for (const auto& e : terms(i)) {
        for (const auto& c : terms(n - 1 - i)) {
          out.push_back(RawTerm::omega_pow(e, c));
          out.push_back(RawTerm::collapse(e, c));
        }
      }
    }
    items_memo[n] = std::move(out);
    return items_memo[n];
  }

  // Raw terms of raw norm exactly n: 0, or a left-nested chain of items.
  const std::vector<RawTerm>& terms(std::uint64_t n) {
    while (terms_memo.size() <= n) terms_memo.emplace_back();
    if (!terms_memo[n].empty()) return terms_memo[n];
    std::vector<RawTerm> out;
    if (n == 0) {
      out.push_back(RawTerm::zero());
    } else {
      for (const auto& it : items(n)) out.push_back(it);
      for (std::uint64_t last = 1; last < n; ++last) {
        for (const auto& head : terms(n - last)) {
          if (head.kind == RawTerm::Kind::kZero) continue;
          for (const auto& it : items(last)) out.push_back(RawTerm::plus(head, it));
        }
      }
    }
    terms_memo[n] = std::move(out);
    return terms_memo[n];
  }
};

}  // namespace

std::vector<RawTerm> raw_terms_up_to_norm(std::uint64_t k) {
  RawGen g;
  std::vector<RawTerm> out;
  for (std::uint64_t n = 0; n <= k; ++n) {
    const auto& ts = g.terms(n);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

CheckReport normalize_idempotence(std::uint64_t max_norm) {
  auto r = report("lemmas", "normalize-idempotent");
  for (const auto& raw : raw_terms_up_to_norm(max_norm)) {
    Term t;
    try {
      t = normalize(raw);
    } catch (const MalformedTerm&) {
      ++r.skipped;  // e.g. a collapse seed at or above Omega
      continue;
    }
    ++r.instances;
    const Term again = normalize(to_raw(t));
    if (!(again == t)) r.fail(to_string(t));
  }
  return r;
}

namespace {

// Normal forms of raw terms of raw norm exactly n. Normalization only looks at
// the normal forms of the arguments, so each level is built from the
// deduplicated normal forms of the levels below instead of every raw tree.
struct NormalFormGen {
  std::vector<std::vector<Term>> items_memo, terms_memo;
  std::vector<bool> items_done, terms_done;

  static void keep(std::unordered_set<Term>& seen, std::vector<Term>& out, const RawTerm& raw) {
    try {
      Term t = normalize(raw);
      if (seen.insert(t).second) out.push_back(std::move(t));
    } catch (const MalformedTerm&) {
    }
  }

  const std::vector<Term>& items(std::uint64_t n) {
    if (items_done.size() <= n) {
      items_done.resize(n + 1, false);
      items_memo.resize(n + 1);
    }
    if (items_done[n]) return items_memo[n];
    std::vector<Term> out;
    std::unordered_set<Term> seen;
    if (n == 1) keep(seen, out, RawTerm::omega());
    if (n >= 1) {
      for (const auto& x : terms(n - 1)) {
        keep(seen, out, RawTerm::succ(to_raw(x)));
        keep(seen, out, RawTerm::wpow(to_raw(x)));
      }
      for (std::uint64_t i = 0; i <= n - 1; ++i) {
        for (const auto& e : terms(i)) {
          for (const auto& c : terms(n - 1 - i)) {
            keep(seen, out, RawTerm::omega_pow(to_raw(e), to_raw(c)));
            keep(seen, out, RawTerm::collapse(to_raw(e), to_raw(c)));
          }
        }
      }
    }
    items_memo[n] = std::move(out);
    items_done[n] = true;
    return items_memo[n];
  }

  const std::vector<Term>& terms(std::uint64_t n) {
    if (terms_done.size() <= n) {
      terms_done.resize(n + 1, false);
      terms_memo.resize(n + 1);
    }
    if (terms_done[n]) return terms_memo[n];
    std::vector<Term> out;
    std::unordered_set<Term> seen;
    if (n == 0) {
      keep(seen, out, RawTerm::zero());
    } else {
      for (const auto& it : items(n)) {
        if (seen.insert(it).second) out.push_back(it);
      }
      for (std::uint64_t last = 1; last < n; ++last) {
        for (const auto& head : terms(n - last)) {
          for (const auto& it : items(last)) keep(seen, out, RawTerm::plus(to_raw(head), to_raw(it)));
        }
      }
    }
    terms_memo[n] = std::move(out);
    terms_done[n] = true;
    return terms_memo[n];
  }
};

}  // namespace

CheckReport enumeration_matches_raw(std::uint64_t max_norm) {
  auto r = report("oracle", "enumeration-vs-raw");
  std::unordered_set<Term> expected;
  NormalFormGen g;
  for (std::uint64_t n = 0; n <= max_norm; ++n) {
    for (const auto& t : g.terms(n)) {
      if (t.norm() <= max_norm) expected.insert(t);
    }
  }
  const auto got = terms_up_to_norm(max_norm);
  std::unordered_set<Term> got_set(got.begin(), got.end());
  r.instances = expected.size() + got.size();
  if (got_set.size() != got.size()) r.fail("enumeration repeats a term");
  for (const auto& t : expected) {
    if (!got_set.count(t)) r.fail("missing " + to_string(t));
  }
  for (const auto& t : got) {
    if (!expected.count(t)) r.fail("unexpected " + to_string(t));
  }
  return r;
}

namespace {

std::optional<BigNat> try_eval(const BaseFunction& f, const Term& alpha, const BigNat& m,
                               const EvalBudget& budget, const NormOverride& o = {}) {
  try {
    HierarchyEvaluator ev(f, budget, o);
    return ev.eval(alpha, m);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

BigNat pow2(std::uint64_t n) {
  BigNat p = 1;
  p <<= static_cast<unsigned>(n);
  return p;
}

}  // namespace

std::vector<CheckReport> hierarchy_closed_forms(const EvalBudget& budget) {
  auto finite = report("hierarchy", "suc-finite-closed-form");
  auto omega = report("hierarchy", "suc-omega-structural");
  auto omega1 = report("hierarchy", "suc-omega-norm-override");
  const auto suc = suc_base();
  const Term w = omega_power(Term::natural(1));
  for (std::uint64_t n = 0; n <= 10; ++n) {
    HierarchyEvaluator ev(suc, budget);
    for (std::uint64_t m = 0; m <= 10; ++m) {
      ++finite.instances;
      const BigNat want = m + pow2(n);
      try {
        const BigNat got = ev.eval(Term::natural(n), m);
        if (got != want) finite.fail("suc^" + std::to_string(n) + "(" + std::to_string(m) + ") = " + str(got));
      } catch (const BudgetExceeded& e) {
        finite.fail("budget exceeded at n = " + std::to_string(n) + ": " + e.what());
      }
    }
  }
  for (std::uint64_t m = 0; m <= 10; ++m) {
    ++omega.instances;
    auto got = try_eval(suc, w, m, budget);
    if (!got || *got != m + pow2(m + 4)) omega.fail("m = " + std::to_string(m));
    ++omega1.instances;
    got = try_eval(suc, w, m, budget, NormOverride{{w, 1}});
    if (!got || *got != m + pow2(m + 3)) omega1.fail("m = " + std::to_string(m));
  }
  return {finite, omega, omega1};
}

std::vector<CheckReport> hierarchy_corollary(std::uint64_t alpha_norm, std::uint64_t max_m,
                                             const EvalBudget& budget) {
  auto mono = report("hierarchy", "strictly-increasing");
  auto step = report("hierarchy", "step-domination");
  auto self = report("hierarchy", "self-composition");
  auto det = report("hierarchy", "deterministic");
  const auto alphas = terms_up_to_norm(alpha_norm);
  for (const auto& f : {suc_base(), lin_base()}) {
    // values[i][m], nullopt when outside the budget. Once an argument is out
    // of budget, larger arguments for the same term are not attempted.
    std::vector<std::vector<std::optional<BigNat>>> values(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      bool out = false;
      for (std::uint64_t m = 0; m <= max_m + 1; ++m) {
        values[i].push_back(out ? std::nullopt : try_eval(f, alphas[i], m, budget));
        out = !values[i].back();
      }
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const Term& a = alphas[i];
      const std::string tag = f.name + "^" + to_string(a);
      for (std::uint64_t m = 0; m < max_m; ++m) {
        if (!values[i][m] || !values[i][m + 1]) {
          ++mono.skipped;
          continue;
        }
        ++mono.instances;
        if (!(*values[i][m] < *values[i][m + 1])) mono.fail(tag + " at " + std::to_string(m));
      }
      for (std::uint64_t m = 0; m <= max_m; ++m) {
        const BigNat k = f(BigNat(a.norm()) + m);
        for (std::size_t j = 0; j < alphas.size(); ++j) {
          const Term& b = alphas[j];
          if (!less(b, a) || BigNat(b.norm()) > k) continue;
          if (!values[i][m] || !values[j][m]) {
            ++step.skipped;
            continue;
          }
          ++step.instances;
          if (!(*values[j][m] < *values[i][m])) {
            step.fail(f.name + "^" + to_string(b) + " vs " + tag + " at " + std::to_string(m));
          }
        }
        if (!values[i][m]) {
          ++self.skipped;
          continue;
        }
        auto twice = try_eval(f, a, *values[i][m], budget);
        auto next = try_eval(f, add(a, Term::natural(1)), m, budget);
        if (!twice || !next) {
          ++self.skipped;
          continue;
        }
        ++self.instances;
        if (*twice > *next) self.fail(tag + " at " + std::to_string(m));
      }
      for (std::uint64_t m = 0; m <= std::min<std::uint64_t>(max_m, 2); ++m) {
        if (!values[i][m]) {
          ++det.skipped;
          continue;
        }
        ++det.instances;
        if (try_eval(f, a, m, budget) != values[i][m]) det.fail(tag + " at " + std::to_string(m));
      }
    }
  }
  return {mono, step, self, det};
}

std::vector<CheckReport> shift_lemmas(std::uint64_t max_alpha, std::uint64_t max_m,
                                      const EvalBudget& budget) {
  auto l1 = report("lemmas", "shift-below-shifted-base");
  auto l2 = report("lemmas", "shifted-base-bound");
  auto c = report("lemmas", "shifted-base-two-steps");
  const auto f = lin_base();
  std::vector<Term> alphas;
  for (std::uint64_t a = 0; a <= max_alpha; ++a) alphas.push_back(Term::natural(a));
  const Term w = omega_power(Term::natural(1));
  alphas.push_back(w);  // only attempted at m = 0
  for (const auto& a : alphas) {
    const bool transfinite = !a.is_natural();
    for (std::uint64_t m = 0; m <= (transfinite ? 0 : max_m); ++m) {
      for (std::uint64_t n = 0; n <= m; ++n) {
        const std::string tag = "a = " + to_string(a) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
        const auto fn = shift_base(f, n);
        const auto lhs = try_eval(fn, a, m, budget);
        // f^a[n](m) <= f[n]^a(m)
        const auto shifted = try_eval(f, a, BigNat(n + m), budget);
        if (!lhs || !shifted) {
          ++l1.skipped;
        } else {
          ++l1.instances;
          if (*shifted > *lhs) l1.fail(tag);
        }
        // f[n]^a(m) <= f^a(f^a(f(m)) + f(m))
        std::optional<BigNat> rhs;
        if (lhs) {
          const BigNat fm = f(m);
          if (auto inner = try_eval(f, a, fm, budget)) rhs = try_eval(f, a, *inner + fm, budget);
        }
        if (!lhs || !rhs) {
          ++l2.skipped;
        } else {
          ++l2.instances;
          if (*lhs > *rhs) l2.fail(tag);
        }
        // f[n]^a(m) <= f^(a+2)(m)
        const auto two = lhs ? try_eval(f, add(a, Term::natural(2)), m, budget) : std::nullopt;
        if (!lhs || !two) {
          ++c.skipped;
        } else {
          ++c.instances;
          if (*lhs > *two) c.fail(tag);
        }
      }
    }
  }
  return {l1, l2, c};
}

std::vector<CheckReport> norm_bound_spot_checks(const EvalBudget& budget) {
  auto na = report("lemmas", "norm-below-collapse-value");
  auto ab = report("lemmas", "iterated-hierarchy-bound");
  const auto f = lin_base();
  const Term w = omega_power(Term::natural(1));
  // N(a) <= f^(Suc^a(0))(0)
  for (const auto& a : {Term(), Term::natural(1), Term::natural(2), w}) {
    auto v = try_eval(f, make_collapse(a, Term()), 0, budget);
    if (!v) {
      ++na.skipped;
      continue;
    }
    ++na.instances;
    if (BigNat(a.norm()) > *v) na.fail("a = " + to_string(a));
  }
  // (f^a)^b(m) <= f^(Suc^(W*a + b)(0))(m)
  for (std::uint64_t a = 0; a <= 1; ++a) {
    for (std::uint64_t b = 0; b <= 1; ++b) {
      const Term ta = Term::natural(a);
      const Term tb = Term::natural(b);
      auto ev = std::make_shared<HierarchyEvaluator>(f, budget);
      BaseFunction fa{"lin^" + std::to_string(a),
                      [ev, ta](const BigNat& m) { return ev->eval(ta, m); }, true, ""};
      const Term index = make_collapse(add(omega_times(Term::natural(1), ta), tb), Term());
      for (std::uint64_t m = 0; m <= 6; ++m) {
        auto lhs = try_eval(fa, tb, m, budget);
        auto rhs = lhs ? try_eval(f, index, m, budget) : std::nullopt;
        if (!lhs || !rhs) {
          ++ab.skipped;
          continue;
        }
        ++ab.instances;
        if (*lhs > *rhs) ab.fail("a = " + std::to_string(a) + ", b = " + std::to_string(b) + ", m = " + std::to_string(m));
      }
    }
  }
  return {na, ab};
}

CheckReport base_contracts() {
  auto r = report("hierarchy", "base-contracts");
  const auto lin = check_base_contract(lin_base(), 1000);
  ++r.instances;
  if (!lin.passed()) r.fail("lin violates its contract");
  const auto suc = check_base_contract(suc_base(), 10);
  ++r.instances;
  if (suc.checks[1].counterexample != std::optional<std::uint64_t>(1)) r.fail("suc should fail (f.1) at m = 1");
  if (suc.checks[0].counterexample) r.fail("suc should be strictly increasing");
  const auto exp = check_base_contract(expshift_base(), 64);
  ++r.instances;
  if (!exp.passed()) r.fail("expshift violates its contract");
  const auto shifted = check_base_contract(shift_base(lin_base(), 3), 200);
  ++r.instances;
  if (!shifted.passed()) r.fail("lin[3] violates its contract");
  return r;
}

std::vector<ExtTerm> ext_space(std::uint64_t leaf_norm) {
  std::vector<Term> leaves, exps;
  for (const auto& t : terms_up_to_norm(leaf_norm)) {
    exps.push_back(t);
    if (t.is_below_omega()) leaves.push_back(t);
  }
  const Term one = Term::natural(1);
  const Term w = omega_power(one);
  const FunExpr suc = FunExpr::suc(), e = FunExpr::e();

  std::vector<FunExpr> funs = {suc, e};
  for (const auto& base : {suc, e}) {
    for (const auto& a : exps) funs.push_back(FunExpr::iterate(base, a));
    funs.push_back(FunExpr::shift(base, CoeffSet{w}));
  }
  for (const auto& base : {suc, e}) {
    for (const auto& a : {one, w}) {
      for (const auto& b : {one, w}) funs.push_back(FunExpr::iterate(FunExpr::iterate(base, a), b));
      funs.push_back(FunExpr::iterate(FunExpr::shift(base, CoeffSet{w}), a));
      funs.push_back(FunExpr::shift(FunExpr::iterate(base, a), CoeffSet{w}));
    }
  }

  std::vector<ExtTerm> out;
  for (const auto& l : leaves) out.push_back(ExtTerm::canon(l));
  for (const auto& f : funs) {
    for (const auto& l : leaves) out.push_back(ExtTerm::apply(f, ExtTerm::canon(l)));
  }
  const std::vector<FunExpr> small = {suc, e, FunExpr::iterate(suc, one)};
  for (const auto& f : small) {
    for (const auto& g : small) {
      for (const auto& l : leaves) out.push_back(ExtTerm::apply(f, ExtTerm::apply(g, ExtTerm::canon(l))));
    }
  }
  for (const auto& a : leaves) {
    for (const auto& b : leaves) out.push_back(ExtTerm::veblen(ExtTerm::canon(a), ExtTerm::canon(b)));
    out.push_back(ExtTerm::veblen(ExtTerm::canon(Term()), ExtTerm::apply(e, ExtTerm::canon(a))));
    out.push_back(ExtTerm::sum({ExtTerm::apply(e, ExtTerm::canon(a)), ExtTerm::canon(one)}));
    out.push_back(ExtTerm::sum({ExtTerm::canon(w), ExtTerm::apply(suc, ExtTerm::canon(a))}));
  }
  return out;
}

std::vector<CheckReport> prover_checks(const std::vector<ExtTerm>& space) {
  auto sound = report("prover", "soundness");
  auto replay = report("prover", "trace-replay");
  auto canon = report("prover", "canonical-completeness");
  auto dom = report("prover", "dominant-oto");
  auto veb = report("prover", "veblen-rejected");
  std::vector<std::optional<Term>> reduced;
  for (const auto& s : space) reduced.push_back(reduce(s));
  for (std::size_t i = 0; i < space.size(); ++i) {
    const ExtTerm& s = space[i];
    for (std::size_t j = 0; j < space.size(); ++j) {
      const ExtTerm& t = space[j];
      const auto res = prove_le(s, t);
      const bool both_canon = s.kind() == ExtTerm::Kind::kCanon && t.kind() == ExtTerm::Kind::kCanon;
      if (both_canon) {
        ++canon.instances;
        if (res.proved != less_equal(s.term(), t.term())) canon.fail(to_string(s) + " <= " + to_string(t));
      }
      if (!res.proved) continue;
      ++replay.instances;
      if (auto err = check_trace(res.trace)) {
        replay.fail(to_string(s) + " <= " + to_string(t) + ": " + *err);
      } else if (res.trace.empty() || !(res.trace.back().conclusion == Fact::le(s, t))) {
        replay.fail(to_string(s) + " <= " + to_string(t) + ": wrong final conclusion");
      }
      if (reduced[i] && reduced[j]) {
        ++sound.instances;
        if (!less_equal(*reduced[i], *reduced[j])) sound.fail(to_string(s) + " <= " + to_string(t));
      }
    }
    if (s.contains_veblen()) {
      ++veb.instances;
      try {
        dominant_oto(s);
        veb.fail(to_string(s));
      } catch (const VeblenPresent&) {
      }
      continue;
    }
    ++dom.instances;
    const Term d = dominant_oto(s);
    const auto res = prove_le(s, ExtTerm::canon(d));
    if (!res.proved || check_trace(res.trace)) dom.fail("not provable: " + to_string(s) + " <= " + to_string(d));
    if (norm(s) > d.norm()) dom.fail("norm drops: " + to_string(s) + " -> " + to_string(d));
    if (reduced[i] && !less_equal(*reduced[i], d)) dom.fail("not above: " + to_string(s) + " -> " + to_string(d));
  }
  return {sound, replay, canon, dom, veb};
}

std::vector<CheckReport> prover_examples() {
  auto ex = report("prover", "paper-examples");
  const Term one = Term::natural(1);
  const Term w = omega_power(one);
  const FunExpr suc = FunExpr::suc();
  const ExtTerm zero = ExtTerm::canon(Term());
  const ExtTerm nested = ExtTerm::apply(FunExpr::iterate(FunExpr::iterate(suc, one), Term::natural(2)), zero);
  const ExtTerm shifted = ExtTerm::apply(FunExpr::iterate(FunExpr::shift(suc, CoeffSet{w}), one), zero);
  const ExtTerm e0 = ExtTerm::apply(FunExpr::e(), zero);
  struct Case {
    ExtTerm s;
    Term t;
  };
  const std::vector<Case> cases = {
      {nested, make_collapse(Term::natural(3), Term())},
      {shifted, make_collapse(one, w)},
      {e0, make_collapse(one, Term())},
  };
  for (const auto& c : cases) {
    ++ex.instances;
    const auto r = prove_le(c.s, ExtTerm::canon(c.t));
    if (!r.proved || check_trace(r.trace)) ex.fail(to_string(c.s) + " <= " + to_string(c.t));
  }
  ++ex.instances;
  if (!(dominant_oto(e0) == make_collapse(one, Term()))) ex.fail("dominant of E(0)");
  ++ex.instances;
  if (!(dominant_oto(nested) == make_collapse(Term::natural(3), Term()))) ex.fail("dominant of S^(1)^(2)(0)");
  for (const auto& t : terms_up_to_norm(3)) {
    ++ex.instances;
    if (!(dominant_oto(ExtTerm::canon(t)) == t)) ex.fail("dominant of " + to_string(t));
    const auto r = prove_le(ExtTerm::canon(t), ExtTerm::canon(t));
    ++ex.instances;
    if (!r.proved) ex.fail("reflexivity at " + to_string(t));
  }
  return {ex};
}

std::vector<CheckReport> run(const std::string& suite, const Options& opts) {
  std::vector<CheckReport> out;
  if (suite == "all") {
    for (const auto& s : suites()) append(out, run(s, opts));
    return out;
  }
  const auto terms = terms_up_to_norm(opts.max_norm);
  if (suite == "order") {
    append(out, order_axioms(terms));
    out.push_back(transitivity_exhaustive(terms.size() <= 600 ? terms
                                                              : terms_up_to_norm(std::min<std::uint64_t>(opts.max_norm, 5))));
    out.push_back(transitivity_sampled(terms, opts.sampled_triples, opts.seed));
    append(out, add_laws(terms_up_to_norm(std::min<std::uint64_t>(opts.max_norm, 4))));
    append(out, collapse_laws(terms));
  } else if (suite == "oracle") {
    out.push_back(cnf_agreement(terms_up_to_norm(std::min(opts.cnf_norm, opts.max_norm + 3))));
    out.push_back(enumeration_matches_raw(std::min<std::uint64_t>(opts.max_norm, 6)));
    append(out, roundtrips(terms));
  } else if (suite == "hierarchy") {
    append(out, hierarchy_closed_forms(EvalBudget{1'000'000, 1u << 16, 4'000'000}));
    append(out, hierarchy_corollary(std::min(opts.hierarchy_alpha_norm, opts.max_norm), opts.hierarchy_max_m,
                                    opts.budget));
    out.push_back(base_contracts());
  } else if (suite == "lemmas") {
    append(out, coefficient_corollary(terms));
    append(out, coefficient_invariants(terms));
    out.push_back(normalize_idempotence(std::min<std::uint64_t>(opts.max_norm, 6)));
    append(out, shift_lemmas(opts.shift_max_alpha, opts.hierarchy_max_m, opts.budget));
    append(out, norm_bound_spot_checks(opts.budget));
  } else if (suite == "prover") {
    append(out, prover_checks(ext_space(opts.ext_leaf_norm)));
    append(out, prover_examples());
  } else {
    throw std::invalid_argument("unknown audit suite '" + suite + "'");
  }
  return out;
}

}  // namespace oto::audit
