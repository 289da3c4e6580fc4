#ifndef QS_RATIONAL_HPP
#define QS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qs {

// Exact rational scalar.  All arithmetic in the library reduces to mpq_class
// operations; no floating point appears anywhere.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with optional sign; q must be nonzero.  The result is
// canonical (coprime, positive denominator).
Rational rational_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace qs

#endif  // QS_RATIONAL_HPP
