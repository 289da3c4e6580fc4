#ifndef QS_FRACTION_HPP
#define QS_FRACTION_HPP

#include <string>
#include <utility>

#include "qs/multipoly.hpp"
#include "qs/point_ideal.hpp"

namespace qs {

class MonicFraction;
MonicFraction operator+(const MonicFraction& a, const MonicFraction& b);
MonicFraction operator-(const MonicFraction& a, const MonicFraction& b);
MonicFraction operator*(const MonicFraction& a, const MonicFraction& b);
MonicFraction operator-(const MonicFraction& a);

// A quotient num/den of polynomials with a distinguished variable x (the
// localization variable).  Canonical form: gcd(num, den) = 1 and den has
// leading rational coefficient 1, so structural equality is field equality.
//
// Elements of R(x) — R[x] localized at the polynomials monic in x, R a
// localization of Q[X] at a rational point — are represented by fractions
// whose denominator has a unit leading x-coefficient (checked where it
// matters, at reduction and inversion boundaries, against the point at
// hand).  Denominators free of x (units of R itself) are the degenerate
// case and equally welcome.
class MonicFraction {
 public:
  MonicFraction() = default;  // usable only after assignment
  // num/den, canonicalized; den must be nonzero.
  MonicFraction(MultiPoly num, MultiPoly den, std::size_t var = 0);
  explicit MonicFraction(MultiPoly num, std::size_t var = 0);
  static MonicFraction constant(VarContextPtr ctx, const Rational& c, std::size_t var = 0);

  const VarContextPtr& context() const noexcept { return num_.context(); }
  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  std::size_t var() const noexcept { return var_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  // The underlying polynomial; requires is_polynomial().
  MultiPoly to_poly() const;

  MonicFraction& operator+=(const MonicFraction& o) { return *this = *this + o; }
  MonicFraction& operator-=(const MonicFraction& o) { return *this = *this - o; }
  MonicFraction& operator*=(const MonicFraction& o) { return *this = *this * o; }
  bool operator==(const MonicFraction& o) const;
  bool operator!=(const MonicFraction& o) const { return !(*this == o); }

  // Multiplicative inverse in the field of fractions; requires nonzero.
  // (Unit recognition in R(x) is the separate invert_unit below.)
  MonicFraction field_inverse() const;

  std::string to_string() const;

 private:
  struct ReducedTag {};
  // Fast path for results already in lowest terms: skips the gcd, still
  // normalizes sign/leading coefficient and the zero representative.
  MonicFraction(ReducedTag, MultiPoly num, MultiPoly den, std::size_t var);
  void normalize_reduced();
  void canonicalize();
  MultiPoly num_, den_;
  std::size_t var_ = 0;

  friend MonicFraction operator+(const MonicFraction&, const MonicFraction&);
  friend MonicFraction operator-(const MonicFraction&, const MonicFraction&);
  friend MonicFraction operator*(const MonicFraction&, const MonicFraction&);
  friend std::pair<MultiPoly, MonicFraction> polynomial_part(const MonicFraction&);
};

// Splits f into polynomial and proper parts: f = q + proper with
// deg_x(num(proper)) < deg_x(den(proper)).  This is the R-linear retraction
// onto R[x] along the direct summand of proper fractions.  Requires the
// denominator strictly monic in x, i.e. a unit leading x-coefficient after
// canonicalization; throws NonMonicDivisor otherwise.
std::pair<MultiPoly, MonicFraction> polynomial_part(const MonicFraction& f);

// Image of f under evaluation at the point, canonicalized.  Requires the
// denominator's residue to be nonzero (automatic for denominators monic in
// x); throws NotLocalAtPoint otherwise.
MonicFraction reduce_fraction(const MonicFraction& f, const PointIdeal& ideal);

// Multiplicative inverse when f is recognized as a unit of R(x): both the
// numerator's and the denominator's leading x-coefficients must be units of
// R — nonzero rationals when no point is given, residues nonzero at the
// point otherwise.  Throws NotRecognizedUnit when the criterion fails.
MonicFraction invert_unit(const MonicFraction& f, const PointIdeal* local = nullptr);

// Substitution applied to numerator and denominator (the denominator's
// image must stay nonzero; it does for every use in this library, where
// substitutions never touch the denominator's variables destructively).
MonicFraction frac_substitute(const MonicFraction& f, const Substitution& s);

// Context transport, as for MultiPoly.
MonicFraction embed_fraction(const MonicFraction& f, const VarContextPtr& target);
MonicFraction restrict_fraction(const MonicFraction& f, const VarContextPtr& target);

}  // namespace qs

#endif  // QS_FRACTION_HPP
