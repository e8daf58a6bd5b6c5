#ifndef HAMFLAT_PARSE_HPP
#define HAMFLAT_PARSE_HPP

#include <stdexcept>
#include <string>

#include "hamflat/poly.hpp"

namespace hamflat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);
  int line, col;
};

// Polynomial expression grammar over variables u1..uN ("u^1" is accepted
// and normalized while lexing):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | VAR | '(' expr ')'
// Exponents are non-negative integer literals; juxtaposition is not
// multiplication ("2u1" is a syntax error).
Poly parse_poly(const std::string& src, int dim);

// Canonical text form: terms in descending graded-lex order, reduced
// rational coefficients. parse_poly(print_canonical(p), p.dim()) == p.
std::string print_canonical(const Poly& p);

}  // namespace hamflat

#endif
