#include "oto/cnf.hpp"

namespace oto::cnf {

CnfOrdinal CnfOrdinal::natural(std::uint64_t n) {
  if (n == 0) return {};
  return omega_to(zero(), n);
}

CnfOrdinal CnfOrdinal::omega_to(CnfOrdinal e, std::uint64_t multiplicity) {
  CnfOrdinal out;
  out.terms.push_back(CnfTerm{std::move(e), multiplicity});
  return out;
}

CnfOrder cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = cnf_compare(a.terms[i].exponent, b.terms[i].exponent);
    if (e != CnfOrder::kEqual) return e;
    if (a.terms[i].multiplicity != b.terms[i].multiplicity) {
      return a.terms[i].multiplicity < b.terms[i].multiplicity ? CnfOrder::kLess : CnfOrder::kGreater;
    }
  }
  if (a.terms.size() == b.terms.size()) return CnfOrder::kEqual;
  return a.terms.size() < b.terms.size() ? CnfOrder::kLess : CnfOrder::kGreater;
}

bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) {
  return cnf_compare(a, b) == CnfOrder::kEqual;
}

CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms.front().exponent;
  CnfOrdinal out;
  for (const auto& t : a.terms) {
    const auto o = cnf_compare(t.exponent, lead);
    if (o == CnfOrder::kLess) break;
    if (o == CnfOrder::kEqual) {
      out.terms.push_back(CnfTerm{t.exponent, t.multiplicity + b.terms.front().multiplicity});
      out.terms.insert(out.terms.end(), b.terms.begin() + 1, b.terms.end());
      return out;
    }
    out.terms.push_back(t);
  }
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

CnfOrdinal cnf_of(const Term& t) {
  CnfOrdinal out;
  for (const auto& p : t.parts()) {
    if (!p.is_wpow()) throw OutOfFragment("term contains an Omega-monomial or a collapse term");
    out = cnf_add(out, CnfOrdinal::omega_to(cnf_of(p.exponent())));
  }
  return out;
}

std::string to_string(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& t : a.terms) {
    if (!s.empty()) s += " + ";
    if (t.exponent.is_zero()) {
      s += std::to_string(t.multiplicity);
      continue;
    }
    s += "w^(" + to_string(t.exponent) + ")";
    if (t.multiplicity != 1) s += "*" + std::to_string(t.multiplicity);
  }
  return s;
}

}  // namespace oto::cnf
