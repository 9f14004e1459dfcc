#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cremona/lattice.hpp"

namespace cremona {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Class literals come in two shapes, whitespace-insensitive:
//   symplectic form  "(nu|m1,m2,...,mn)"
//   lattice form     "a;b1,...,bn"
// with entries either integers or "p/q" rationals.
Class parse_class(std::string_view text);

// Canonical rendering (symplectic form); parse(format(c)) == c.
std::string format_class(const Class& c);

std::string format_class_lattice(const Class& c);

}  // namespace cremona
