#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "oto/ext.hpp"
#include "oto/term.hpp"

// Versioned JSON documents {"v":1,"term":node} with tagged nodes:
//   {"k":"zero"} {"k":"nat","n":N} {"k":"sum","parts":[...]}
//   {"k":"wpow","e":...} {"k":"Wmono","e":...,"c":...} {"k":"collapse","a":...,"x":...}
//   {"k":"veblen","a":...,"b":...} {"k":"apply","f":fun,"x":...}
// Function nodes: {"k":"suc"} {"k":"E"} {"k":"iter","f":fun,"a":term}
//   {"k":"shift","f":fun,"K":[terms]}

namespace oto {

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_json(const Term& t);
std::string to_json(const ExtTerm& s);

/// The bare node without the version envelope.
std::string to_json_node(const Term& t);

/// Reads a document (or a bare node). Canonical-fragment input is normalized
/// and returned as Canon(t). Throws JsonFormatError.
ExtTerm ext_from_json(std::string_view text);
/// Throws JsonFormatError if the document leaves the canonical layer.
Term term_from_json(std::string_view text);

}  // namespace oto
