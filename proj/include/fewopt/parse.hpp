#ifndef FEWOPT_PARSE_HPP
#define FEWOPT_PARSE_HPP

#include <string>

#include "fewopt/real.hpp"

namespace fewopt {

// Evaluates a constant expression at the given precision. Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | primary
//   primary := decimal | 'e' | 'pi' | 'sqrt' '(' expr ')' | '(' expr ')'
// Whitespace is ignored. Throws ParseError with the offending position.
Real parse_scalar(const std::string& s, mpfr_prec_t prec = 256);

}  // namespace fewopt

#endif
