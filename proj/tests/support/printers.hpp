#pragma once

#include <ostream>

#include "oto/syntax.hpp"

namespace oto {

inline void PrintTo(const Term& t, std::ostream* os) { *os << to_string(t); }
inline void PrintTo(const ExtTerm& t, std::ostream* os) { *os << to_string(t); }

}  // namespace oto
