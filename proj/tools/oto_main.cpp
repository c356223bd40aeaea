// oto: command line front end for the ordinal term library.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "oto/audit.hpp"
#include "oto/coefficients.hpp"
#include "oto/enumerate.hpp"
#include "oto/ext.hpp"
#include "oto/hierarchy.hpp"
#include "oto/json_io.hpp"
#include "oto/order.hpp"
#include "oto/prover.hpp"
#include "oto/syntax.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kViolation = 3, kUnknown = 4 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_style = "surface";

bool json_out() { return format_style == "json"; }

oto::ExtTerm read_ext(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return oto::ext_from_json(text);
  return oto::parse_ext(text);
}

// Canonical input; extended input is accepted when it reduces.
oto::Term read_term(const std::string& text) {
  const auto s = read_ext(text);
  if (auto t = oto::reduce(s)) return *t;
  throw Usage("'" + text + "' does not reduce to a canonical term");
}

std::string show(const oto::Term& t) { return json_out() ? oto::to_json(t) : oto::to_string(t); }
std::string show(const oto::ExtTerm& s) { return json_out() ? oto::to_json(s) : oto::to_string(s); }

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Usage(std::string("bad value for ") + name + ": " + v);
  }
}

oto::NormOverride parse_overrides(const std::vector<std::string>& specs) {
  oto::NormOverride out;
  for (const auto& spec : specs) {
    const auto eq = spec.rfind('=');
    if (eq == std::string::npos) throw Usage("--norm-override expects TERM=N, got '" + spec + "'");
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Usage("--norm-override expects a natural after '=', got '" + spec + "'");
    }
    out[oto::parse_term(spec.substr(0, eq))] = n;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal terms: normal forms, comparison, norms, the hierarchy f^a and an inequality prover"};
  app.require_subcommand(1);
  app.add_option("--format", format_style, "Output style for terms")
      ->check(CLI::IsMember({"surface", "json"}));

  std::string a, b;

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normal form of a term");
  normalize_cmd->add_option("term", a)->required();

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two terms, prints <, = or >");
  cmp_cmd->add_option("lhs", a)->required();
  cmp_cmd->add_option("rhs", b)->required();

  auto* norm_cmd = app.add_subcommand("norm", "Print the norm N(t)");
  norm_cmd->add_option("term", a)->required();

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print the coefficient set K(t)");
  coeffs_cmd->add_option("term", a)->required();

  std::uint64_t norm_max = 0;
  std::string below;
  auto* enum_cmd = app.add_subcommand("enumerate", "List canonical terms of bounded norm");
  enum_cmd->add_option("--norm-max", norm_max)->required();
  enum_cmd->add_option("--below", below, "Only terms below this one");
  auto* count_cmd = app.add_subcommand("count", "Count canonical terms of bounded norm");
  count_cmd->add_option("--norm-max", norm_max)->required();
  count_cmd->add_option("--below", below, "Only terms below this one");

  std::string alpha, arg, base = "suc";
  std::vector<std::string> overrides;
  oto::EvalBudget budget;
  std::optional<std::uint64_t> max_terms, max_bits, max_nodes;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate f^alpha(m)");
  eval_cmd->add_option("--alpha", alpha)->required();
  eval_cmd->add_option("--arg", arg)->required();
  eval_cmd->add_option("--base", base)->check(CLI::IsMember({"suc", "lin", "expshift"}));
  eval_cmd->add_option("--norm-override", overrides, "TERM=N, repeatable");
  eval_cmd->add_option("--max-terms", max_terms, "Enumeration cap (env OTO_MAX_TERMS)");
  eval_cmd->add_option("--max-value-bits", max_bits, "Bit width cap (env OTO_MAX_VALUE_BITS)");
  eval_cmd->add_option("--max-nodes", max_nodes, "Recursion node cap (env OTO_MAX_NODES)");

  bool trace = false;
  auto* prove_cmd = app.add_subcommand("prove-le", "Try to prove lhs <= rhs; prints LE or UNKNOWN");
  prove_cmd->add_option("lhs", a)->required();
  prove_cmd->add_option("rhs", b)->required();
  prove_cmd->add_flag("--trace", trace, "Print the proof steps");

  auto* to_oto_cmd = app.add_subcommand("to-oto", "Canonical upper bound of an extended expression");
  to_oto_cmd->add_option("term", a)->required();

  std::string suite;
  oto::audit::Options audit_opts;
  auto* audit_cmd = app.add_subcommand("audit", "Run property suites");
  audit_cmd->add_option("suite_name", suite, "Suite, same as --suite");
  audit_cmd->add_option("--suite", suite);
  audit_cmd->add_option("--max-norm", audit_opts.max_norm);
  audit_cmd->add_option("--seed", audit_opts.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (normalize_cmd->parsed()) {
      const auto s = read_ext(a);
      if (auto t = oto::reduce(s)) {
        std::cout << show(*t) << "\n";
      } else {
        std::cout << show(s) << "\n";
      }
    } else if (cmp_cmd->parsed()) {
      const auto o = oto::compare(read_term(a), read_term(b));
      std::cout << (o == oto::Ordering::kLess ? "<" : o == oto::Ordering::kEqual ? "=" : ">") << "\n";
    } else if (norm_cmd->parsed()) {
      std::cout << oto::norm(read_ext(a)) << "\n";
    } else if (coeffs_cmd->parsed()) {
      const auto k = oto::ext_coefficients(read_ext(a));
      if (json_out()) {
        std::cout << "[";
        for (std::size_t i = 0; i < k.size(); ++i) std::cout << (i ? "," : "") << oto::to_json(k[i]);
        std::cout << "]\n";
      } else {
        std::cout << "{";
        for (std::size_t i = 0; i < k.size(); ++i) std::cout << (i ? ", " : "") << oto::to_string(k[i]);
        std::cout << "}\n";
      }
    } else if (enum_cmd->parsed() || count_cmd->parsed()) {
      std::optional<oto::Term> bound;
      if (!below.empty()) bound = read_term(below);
      const auto terms = oto::terms_up_to_norm(norm_max, bound, env_or("OTO_MAX_TERMS", oto::kDefaultMaxEnumeratedTerms));
      if (count_cmd->parsed()) {
        std::cout << terms.size() << "\n";
      } else {
        for (const auto& t : terms) std::cout << show(t) << "\n";
      }
    } else if (eval_cmd->parsed()) {
      budget.max_enumerated_terms = max_terms.value_or(env_or("OTO_MAX_TERMS", budget.max_enumerated_terms));
      budget.max_value_bits = max_bits.value_or(env_or("OTO_MAX_VALUE_BITS", budget.max_value_bits));
      budget.max_recursion_nodes = max_nodes.value_or(env_or("OTO_MAX_NODES", budget.max_recursion_nodes));
      oto::BigNat m;
      try {
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(arg);
        m = oto::BigNat(arg);
      } catch (const std::exception&) {
        throw Usage("--arg expects a natural number, got '" + arg + "'");
      }
      std::vector<std::string> warnings;
      const auto value = oto::eval_hierarchy(oto::base_by_name(base), read_term(alpha), m, budget,
                                             parse_overrides(overrides), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      std::cout << value.str() << "\n";
    } else if (prove_cmd->parsed()) {
      const auto r = oto::prove_le(read_ext(a), read_ext(b));
      std::cout << (r.proved ? "LE" : "UNKNOWN") << "\n";
      if (trace && r.proved) std::cout << oto::format_trace(r.trace);
      return r.proved ? kOk : kUnknown;
    } else if (to_oto_cmd->parsed()) {
      std::cout << show(oto::dominant_oto(read_ext(a))) << "\n";
    } else if (audit_cmd->parsed()) {
      if (suite.empty()) throw Usage("audit needs a suite: order, oracle, hierarchy, lemmas, prover or all");
      bool ok = true;
      for (const auto& r : oto::audit::run(suite, audit_opts)) {
        std::cout << oto::audit::format(r) << "\n";
        ok = ok && r.passed();
      }
      return ok ? kOk : kViolation;
    }
  } catch (const oto::BudgetExceeded& e) {
    std::cerr << "budget exceeded (" << oto::to_string(e.kind()) << "): " << e.what() << "\n";
    return kBudget;
  } catch (const oto::EnumerationBudget& e) {
    std::cerr << "budget exceeded (terms): " << e.what() << "\n";
    return kBudget;
  } catch (const oto::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
