#ifndef QS_TESTS_SUPPORT_HPP
#define QS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qs/fraction.hpp"
#include "qs/multipoly.hpp"
#include "qs/parse.hpp"
#include "qs/var_context.hpp"

#include "qs/error.hpp"

namespace qs::testing {

// Runs fn, which must throw qs::Error, and reports the error kind.
template <class F>
ErrorKind error_kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a qs::Error, none was thrown");
}

inline VarContextPtr ctx(std::initializer_list<std::string> names) {
  return VarContext::make(std::vector<std::string>(names));
}

inline MultiPoly p(const VarContextPtr& c, const std::string& text) {
  return parse_poly(c, text);
}

inline MonicFraction frac(const VarContextPtr& c, const std::string& num,
                          const std::string& den, std::size_t var = 0) {
  return MonicFraction(parse_poly(c, num), parse_poly(c, den), var);
}

// Deterministic random polynomial: up to `terms` terms, per-variable degree
// at most `max_deg`, integer coefficients in [-9, 9].
inline MultiPoly random_poly(std::mt19937& rng, const VarContextPtr& c,
                             unsigned terms, unsigned max_deg) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  MultiPoly out(c);
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(c->size());
    for (auto& k : e) k = deg(rng);
    out.add_term(e, Rational(coeff(rng)));
  }
  return out;
}

// Random polynomial monic in `var` of exact var-degree `d`.
inline MultiPoly random_monic(std::mt19937& rng, const VarContextPtr& c,
                              std::size_t var, unsigned d, unsigned terms,
                              unsigned max_other_deg) {
  MultiPoly low = random_poly(rng, c, terms, max_other_deg);
  // Truncate var-degree below d, then add the monic head var^d.
  MultiPoly out(c);
  for (const auto& [e, coef] : low.terms()) {
    if (e[var] < d) out.add_term(e, coef);
  }
  Exponents head(c->size(), 0);
  head[var] = d;
  out.add_term(head, Rational(1));
  return out;
}

}  // namespace qs::testing

#endif  // QS_TESTS_SUPPORT_HPP
