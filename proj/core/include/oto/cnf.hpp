#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oto/term.hpp"

// Textbook Cantor normal form below epsilon_0. This is a test oracle for the
// comparison on the Omega-free, collapse-free fragment and deliberately
// shares nothing with order.hpp.

namespace oto::cnf {

class OutOfFragment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CnfTerm;

/// omega^e1 * m1 + ... + omega^ek * mk with e1 > ... > ek and mi > 0.
/// Zero is the empty sequence.
struct CnfOrdinal {
  std::vector<CnfTerm> terms;

  bool is_zero() const { return terms.empty(); }
  static CnfOrdinal zero() { return {}; }
  static CnfOrdinal natural(std::uint64_t n);
  static CnfOrdinal omega_to(CnfOrdinal e, std::uint64_t multiplicity = 1);
};

struct CnfTerm {
  CnfOrdinal exponent;
  std::uint64_t multiplicity;
};

enum class CnfOrder { kLess = -1, kEqual = 0, kGreater = 1 };

CnfOrder cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);
bool operator==(const CnfOrdinal& a, const CnfOrdinal& b);

/// The CNF value of a term built from {0, +, omega^} only.
/// Throws OutOfFragment on Omega-monomials and collapse terms.
CnfOrdinal cnf_of(const Term& t);

std::string to_string(const CnfOrdinal& a);

}  // namespace oto::cnf
