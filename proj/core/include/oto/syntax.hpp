#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oto/ext.hpp"
#include "oto/prover.hpp"
#include "oto/term.hpp"

// Plain-text syntax:
//
//   term  := unit ("+" unit)*
//   unit  := "0" | NAT | "W" | "W^" atom "*" atom | "w^" atom
//          | "phi(" term "," term ")" | fun "(" term ")" | "(" term ")"
//   fun   := ("S" | "E") ("^" atom | "[" term ("," term)* "]" | "[]")*
//   atom  := "(" term ")" | unit
//
// W is Omega, w^a is omega^a, S^a(x) is the collapse Suc^a(x) and S(x) the
// successor. E, phi, shifts and nested iterates leave the canonical layer.

namespace oto {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_, column_;
  std::vector<std::string> expected_;
};

/// Parses into the extended layer; input within the canonical fragment is
/// normalized and returned as Canon(t).
ExtTerm parse_ext(std::string_view text);

/// Parses and normalizes a canonical term. Throws ParseError if the input
/// uses E, phi, shifts or nested iterates.
Term parse_term(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Monomial& m);
std::string to_string(const ExtTerm& s);
std::string to_string(const FunExpr& f);
std::string to_string(const Fact& f);

/// One line per step: index, rule, premises and conclusion.
std::string format_trace(const ProofTrace& trace);

}  // namespace oto
