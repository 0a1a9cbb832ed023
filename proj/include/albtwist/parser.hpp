#pragma once

#include <string>

#include "albtwist/multipoly.hpp"

namespace albtwist {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, size_t column)
        : std::runtime_error(msg + " at column " + std::to_string(column)), column(column) {}
    size_t column;
};

// Parse the CLI polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := rational | 'zeta' | variable | '(' expr ')'
// 'zeta' is bound to zeta_n for the ambient order n; explicit '*' required.
// Variables are collected alphabetically into the result ring.
MultiPoly parse_poly(const std::string& text, unsigned n = 1);

}  // namespace albtwist
