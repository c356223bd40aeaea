#include "oto/json_io.hpp"

#include <json.hpp>

#include "oto/normalize.hpp"
#include "oto/order.hpp"

namespace oto {

namespace {

using nlohmann::json;

constexpr int kVersion = 1;

json node(const Term& t);

json node(const Monomial& m) {
  switch (m.kind()) {
    case MonoKind::kWPow: return {{"k", "wpow"}, {"e", node(m.exponent())}};
    case MonoKind::kOmegaMono: return {{"k", "Wmono"}, {"e", node(m.exponent())}, {"c", node(m.coefficient())}};
    case MonoKind::kCollapse: return {{"k", "collapse"}, {"a", node(m.iterate())}, {"x", node(m.seed())}};
  }
  return {};
}

json node(const Term& t) {
  if (t.is_zero()) return {{"k", "zero"}};
  if (t.is_natural()) return {{"k", "nat"}, {"n", t.natural_value()}};
  if (t.is_monomial()) return node(t.leading());
  json parts = json::array();
  std::uint64_t ones = 0;
  for (const auto& p : t.parts()) {
    if (p.is_one()) {
      ++ones;
    } else {
      parts.push_back(node(p));
    }
  }
  if (ones) parts.push_back({{"k", "nat"}, {"n", ones}});
  return {{"k", "sum"}, {"parts", parts}};
}

json node(const FunExpr& f) {
  switch (f.kind()) {
    case FunExpr::Kind::kSuc: return {{"k", "suc"}};
    case FunExpr::Kind::kE: return {{"k", "E"}};
    case FunExpr::Kind::kIterate: return {{"k", "iter"}, {"f", node(f.base())}, {"a", node(f.exponent())}};
    case FunExpr::Kind::kShift: {
      json k = json::array();
      for (const auto& m : f.shift_set()) k.push_back(node(m));
      return {{"k", "shift"}, {"f", node(f.base())}, {"K", k}};
    }
  }
  return {};
}

json node(const ExtTerm& s) {
  switch (s.kind()) {
    case ExtTerm::Kind::kCanon: return node(s.term());
    case ExtTerm::Kind::kApply: return {{"k", "apply"}, {"f", node(s.fun())}, {"x", node(s.arg())}};
    case ExtTerm::Kind::kVeblen: return {{"k", "veblen"}, {"a", node(s.left())}, {"b", node(s.right())}};
    case ExtTerm::Kind::kSum: {
      json parts = json::array();
      for (const auto& p : s.parts()) parts.push_back(node(p));
      return {{"k", "sum"}, {"parts", parts}};
    }
  }
  return {};
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw JsonFormatError(std::string("missing field \"") + name + "\" in " + j.dump());
  }
  return j.at(name);
}

std::string kind_of(const json& j) {
  const json& k = field(j, "k");
  if (!k.is_string()) throw JsonFormatError("field \"k\" must be a string");
  return k.get<std::string>();
}

Term canonical(const ExtTerm& s, const char* what) {
  if (s.kind() != ExtTerm::Kind::kCanon) {
    throw JsonFormatError(std::string(what) + " must be a canonical term");
  }
  return s.term();
}

ExtTerm read(const json& j);

FunExpr read_fun(const json& j) {
  const std::string k = kind_of(j);
  if (k == "suc") return FunExpr::suc();
  if (k == "E") return FunExpr::e();
  if (k == "iter") return FunExpr::iterate(read_fun(field(j, "f")), canonical(read(field(j, "a")), "iterate exponent"));
  if (k == "shift") {
    const json& members = field(j, "K");
    if (!members.is_array()) throw JsonFormatError("field \"K\" must be an array");
    CoeffSet set;
    for (const auto& m : members) {
      const Term t = canonical(read(m), "shift member");
      if (!t.is_below_omega()) throw JsonFormatError("shift members must be below Omega");
      set.insert(t);
    }
    return FunExpr::shift(read_fun(field(j, "f")), std::move(set));
  }
  throw JsonFormatError("unknown function kind \"" + k + "\"");
}

ExtTerm read(const json& j) {
  const std::string k = kind_of(j);
  if (k == "zero") return ExtTerm::canon(Term());
  if (k == "nat") {
    const json& n = field(j, "n");
    if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<std::int64_t>() >= 0)) {
      throw JsonFormatError("field \"n\" must be a natural number");
    }
    return ExtTerm::canon(Term::natural(n.get<std::uint64_t>()));
  }
  if (k == "sum") {
    const json& ps = field(j, "parts");
    if (!ps.is_array()) throw JsonFormatError("field \"parts\" must be an array");
    std::vector<ExtTerm> parts;
    for (const auto& p : ps) {
      ExtTerm e = read(p);
      if (!parts.empty() && parts.back().kind() == ExtTerm::Kind::kCanon &&
          e.kind() == ExtTerm::Kind::kCanon) {
        parts.back() = ExtTerm::canon(add(parts.back().term(), e.term()));
      } else {
        parts.push_back(std::move(e));
      }
    }
    return ExtTerm::sum(std::move(parts));
  }
  if (k == "wpow") {
    ExtTerm e = read(field(j, "e"));
    if (e.kind() == ExtTerm::Kind::kCanon) return ExtTerm::canon(omega_power(e.term()));
    return ExtTerm::veblen(ExtTerm::canon(Term()), e);
  }
  if (k == "Wmono") {
    return ExtTerm::canon(omega_times(canonical(read(field(j, "e")), "Omega exponent"),
                                      canonical(read(field(j, "c")), "Omega coefficient")));
  }
  if (k == "collapse") {
    const Term a = canonical(read(field(j, "a")), "collapse iterate");
    ExtTerm x = read(field(j, "x"));
    if (x.kind() == ExtTerm::Kind::kCanon) return ExtTerm::canon(make_collapse(a, x.term()));
    return ExtTerm::apply(FunExpr::iterate(FunExpr::suc(), a), x);
  }
  if (k == "veblen") return ExtTerm::veblen(read(field(j, "a")), read(field(j, "b")));
  if (k == "apply") return ExtTerm::apply(read_fun(field(j, "f")), read(field(j, "x")));
  throw JsonFormatError("unknown term kind \"" + k + "\"");
}

std::string document(json n) {
  json doc = {{"v", kVersion}, {"term", std::move(n)}};
  return doc.dump();
}

}  // namespace

std::string to_json(const Term& t) { return document(node(t)); }
std::string to_json(const ExtTerm& s) { return document(node(s)); }
std::string to_json_node(const Term& t) { return node(t).dump(); }

ExtTerm ext_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(e.what());
  }
  try {
    if (j.is_object() && j.contains("v")) {
      if (j.at("v") != kVersion) throw JsonFormatError("unsupported document version " + j.at("v").dump());
      return read(field(j, "term"));
    }
    return read(j);
  } catch (const json::exception& e) {
    throw JsonFormatError(e.what());
  }
}

Term term_from_json(std::string_view text) {
  return canonical(ext_from_json(text), "the document");
}

}  // namespace oto
