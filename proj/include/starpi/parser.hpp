#pragma once

#include <stdexcept>

#include "starpi/free_algebra.hpp"

namespace starpi {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := rational factor* | factor+
//   factor := primary ('^' nat | '~')*
//   primary:= var | '[' poly (',' poly)+ ']' | '(' poly ')'
//   var    := ('y'|'z') nat
// Whitespace is insignificant, juxtaposition is product, brackets denote
// left-normed commutators, '~' is the involution, '^0' yields the unit.
NCPoly parse_poly(const std::string& text);

}  // namespace starpi
