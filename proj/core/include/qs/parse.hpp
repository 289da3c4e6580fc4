#ifndef QS_PARSE_HPP
#define QS_PARSE_HPP

#include <string>

#include "qs/multipoly.hpp"
#include "qs/var_context.hpp"

namespace qs {

// Parses a polynomial expression over the given context.  Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | variable | '(' expr ')' | '-' base
// Multiplication is explicit ('*'); rationals are "p" or "p/q".
// Throws ParseError on malformed input, UnknownVariable on names outside
// the context.
MultiPoly parse_poly(const VarContextPtr& ctx, const std::string& text);

}  // namespace qs

#endif  // QS_PARSE_HPP
