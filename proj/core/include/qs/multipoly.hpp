#ifndef QS_MULTIPOLY_HPP
#define QS_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qs/rational.hpp"
#include "qs/var_context.hpp"

namespace qs {

// Exponent vector, one entry per context variable.
using Exponents = std::vector<std::uint32_t>;

// Descending lexicographic order on exponent vectors: the map's first entry
// is the leading term.  Earlier context variables take priority.
struct DescLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return a > b;  // vector<>::operator> is lexicographic
  }
};

class MultiPoly;
MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const Rational& c, const MultiPoly& a);

// A multivariate polynomial over Q with a fixed variable context.  Terms are
// stored sparsely in descending lexicographic order; zero coefficients are
// never stored, so structural equality is semantic equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, DescLex>;

  MultiPoly() = default;  // usable only after assignment
  explicit MultiPoly(VarContextPtr ctx);                       // zero
  MultiPoly(VarContextPtr ctx, const Rational& constant);      // constant
  MultiPoly(VarContextPtr ctx, TermMap terms);                 // takes ownership

  static MultiPoly variable(VarContextPtr ctx, std::size_t var);
  static MultiPoly monomial(VarContextPtr ctx, Exponents exps, const Rational& c);

  const VarContextPtr& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // The constant term (zero if absent).
  Rational constant_term() const;
  // Coefficient of the lexicographically leading term (zero polynomial: 0).
  Rational leading_rational() const;

  bool depends_on(std::size_t var) const;
  // Degree in one variable; -1 for the zero polynomial.
  long deg_in(std::size_t var) const;
  long total_degree() const;  // -1 for zero

  // Coefficient of var^k, a polynomial with the var-exponent zeroed out.
  MultiPoly coeff_of(std::size_t var, std::uint32_t k) const;
  // coeff_of(var, deg_in(var)); zero polynomial for zero input.
  MultiPoly leading_coeff_in(std::size_t var) const;
  // True when leading_coeff_in(var) is the constant 1.
  bool is_monic_in(std::size_t var) const;

  // Dense coefficient list by var-degree: result[k] = coeff_of(var, k).
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(std::uint32_t e) const;

  // Human-readable form, terms in descending lexicographic order.
  std::string to_string() const;

  // Adds c * x^exps, erasing the term if the sum vanishes.
  void add_term(const Exponents& exps, const Rational& c);

 private:
  VarContextPtr ctx_;
  TermMap terms_;
};

// Reassembles a polynomial from dense var-coefficients (inverse of
// coefficients_in, for coefficient lists not depending on var).
MultiPoly from_coefficients_in(const VarContextPtr& ctx, std::size_t var,
                               const std::vector<MultiPoly>& coeffs);

// Substitution of one variable by a polynomial in the same context.
struct Substitution {
  std::size_t target;
  MultiPoly replacement;
};

// f with s.target replaced by s.replacement (evaluated by Horner's rule in
// the target variable).  A ring homomorphism fixing all other variables.
MultiPoly substitute(const MultiPoly& f, const Substitution& s);

// f with the listed variables evaluated at rationals (others untouched).
MultiPoly evaluate_partial(const MultiPoly& f,
                           const std::map<std::size_t, Rational>& values);

// Long division f = q*g + r in the variable `var`, requiring g monic in var
// (leading var-coefficient equal to the constant 1); deg_var(r) < deg_var(g).
// Throws NonMonicDivisor otherwise.  Exact: f == q*g + r identically.
std::pair<MultiPoly, MultiPoly> poly_divmod(const MultiPoly& f, const MultiPoly& g,
                                            std::size_t var);

// Exact quotient a/b when b divides a; nullopt otherwise.  b must be nonzero.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b);

// Greatest common divisor (primitive polynomial remainder sequences),
// normalized so the leading rational coefficient is 1; gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Least common multiple, normalized like poly_gcd; lcm(a,0) = 0.
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

// Context transport.  embed moves a polynomial into a larger context
// containing all its variables by name; restrict moves it into a smaller one,
// requiring that dropped variables do not occur.
MultiPoly embed(const MultiPoly& f, const VarContextPtr& target);
MultiPoly restrict_to(const MultiPoly& f, const VarContextPtr& target);

}  // namespace qs

#endif  // QS_MULTIPOLY_HPP
