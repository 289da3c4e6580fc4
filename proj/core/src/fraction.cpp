#include "qs/fraction.hpp"

#include "qs/error.hpp"

namespace qs {

MonicFraction::MonicFraction(MultiPoly num, MultiPoly den, std::size_t var)
    : num_(std::move(num)), den_(std::move(den)), var_(var) {
  require_same_context(num_.context(), den_.context(), "MonicFraction");
  if (den_.is_zero()) fail(ErrorKind::Internal, "zero denominator");
  if (var_ >= num_.context()->size())
    fail(ErrorKind::Internal, "fraction variable out of range");
  canonicalize();
}

MonicFraction::MonicFraction(MultiPoly num, std::size_t var)
    : num_(std::move(num)), den_(num_.context(), Rational(1)), var_(var) {
  if (var_ >= num_.context()->size())
    fail(ErrorKind::Internal, "fraction variable out of range");
}

MonicFraction MonicFraction::constant(VarContextPtr ctx, const Rational& c, std::size_t var) {
  return MonicFraction(MultiPoly(std::move(ctx), c), var);
}

MonicFraction::MonicFraction(ReducedTag, MultiPoly num, MultiPoly den, std::size_t var)
    : num_(std::move(num)), den_(std::move(den)), var_(var) {
  normalize_reduced();
}

void MonicFraction::normalize_reduced() {
  if (num_.is_zero()) {
    den_ = MultiPoly(num_.context(), Rational(1));
    return;
  }
  Rational lead = den_.leading_rational();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

void MonicFraction::canonicalize() {
  if (!num_.is_zero() && !den_.is_one()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      auto qn = try_divide_exact(num_, g);
      auto qd = try_divide_exact(den_, g);
      if (!qn || !qd) fail(ErrorKind::Internal, "gcd does not divide its arguments");
      num_ = std::move(*qn);
      den_ = std::move(*qd);
    }
  }
  normalize_reduced();
}

MultiPoly MonicFraction::to_poly() const {
  if (!den_.is_one()) fail(ErrorKind::Internal, "fraction is not polynomial");
  return num_;
}

bool MonicFraction::operator==(const MonicFraction& o) const {
  // Canonical representatives: field equality is structural equality.  A
  // denominator-free value is a polynomial, which lives in every R(x)
  // identically, so its distinguished variable does not take part.
  if (var_ != o.var_ && !(is_polynomial() && o.is_polynomial())) return false;
  return num_ == o.num_ && den_ == o.den_;
}

MonicFraction MonicFraction::field_inverse() const {
  if (is_zero()) fail(ErrorKind::Internal, "inverse of zero fraction");
  return MonicFraction(den_, num_, var_);
}

std::string MonicFraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Checks contexts and reconciles the distinguished variables: equal
// variables pass through, and a denominator-free operand (a polynomial,
// which lives in every R(x)) adopts the other side's variable.
std::size_t reconcile_vars(const MonicFraction& a, const MonicFraction& b,
                           const char* where) {
  require_same_context(a.context(), b.context(), where);
  if (a.var() == b.var()) return a.var();
  if (a.is_polynomial()) return b.var();
  if (b.is_polynomial()) return a.var();
  fail(ErrorKind::Internal, "mixed fraction variables");
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_one()) return a;
  auto q = try_divide_exact(a, b);
  if (!q) fail(ErrorKind::Internal, "expected exact division failed");
  return *q;
}

// Classical reduced fraction addition: with both inputs in lowest terms, any
// common factor of t = na*(db/g) + nb*(da/g) with the combined denominator
// divides g = gcd(da, db), so one small gcd finishes the reduction.
std::pair<MultiPoly, MultiPoly> add_parts(const MonicFraction& a,
                                          const MonicFraction& b, int sign) {
  MultiPoly nb = sign < 0 ? -b.num() : b.num();
  if (a.is_zero()) return {nb, b.den()};
  if (b.is_zero()) return {a.num(), a.den()};
  MultiPoly g = poly_gcd(a.den(), b.den());
  if (g.is_one()) return {a.num() * b.den() + nb * a.den(), a.den() * b.den()};
  MultiPoly da1 = exact_quotient(a.den(), g);
  MultiPoly db1 = exact_quotient(b.den(), g);
  MultiPoly t = a.num() * db1 + nb * da1;
  if (t.is_zero()) return {t, MultiPoly(a.context(), Rational(1))};
  MultiPoly h = poly_gcd(t, g);
  return {exact_quotient(t, h), exact_quotient(g, h) * da1 * db1};
}

}  // namespace

MonicFraction operator+(const MonicFraction& a, const MonicFraction& b) {
  std::size_t var = reconcile_vars(a, b, "fraction operator+");
  auto [n, d] = add_parts(a, b, +1);
  return MonicFraction(MonicFraction::ReducedTag{}, std::move(n), std::move(d), var);
}

MonicFraction operator-(const MonicFraction& a, const MonicFraction& b) {
  std::size_t var = reconcile_vars(a, b, "fraction operator-");
  auto [n, d] = add_parts(a, b, -1);
  return MonicFraction(MonicFraction::ReducedTag{}, std::move(n), std::move(d), var);
}

MonicFraction operator*(const MonicFraction& a, const MonicFraction& b) {
  std::size_t var = reconcile_vars(a, b, "fraction operator*");
  if (a.is_zero() || b.is_zero())
    return MonicFraction(MultiPoly(a.context()), var);
  // Cross-reduction: with canonical inputs the only common factors pair the
  // numerator of one side with the denominator of the other.
  MultiPoly g1 = poly_gcd(a.num(), b.den());
  MultiPoly g2 = poly_gcd(b.num(), a.den());
  MultiPoly na = exact_quotient(a.num(), g1);
  MultiPoly db = exact_quotient(b.den(), g1);
  MultiPoly nb = exact_quotient(b.num(), g2);
  MultiPoly da = exact_quotient(a.den(), g2);
  return MonicFraction(MonicFraction::ReducedTag{}, na * nb, da * db, var);
}

MonicFraction operator-(const MonicFraction& a) {
  return MonicFraction(-a.num(), a.den(), a.var());
}

std::pair<MultiPoly, MonicFraction> polynomial_part(const MonicFraction& f) {
  const std::size_t x = f.var();
  if (f.den().is_one()) return {f.num(), MonicFraction(MultiPoly(f.context()), f.var())};
  // The remainder below shares no factor with the denominator: r = num - q*den
  // and gcd(num, den) = 1 already, so the proper part needs no reduction.
  // The quotient is a Q-polynomial only when the denominator is monic in x
  // up to a rational factor; denominators whose leading x-coefficient
  // involves other variables are rejected (their quotients live in the
  // larger coefficient field, outside this signature).
  MultiPoly lead = f.den().leading_coeff_in(x);
  if (!lead.is_constant())
    fail(ErrorKind::NonMonicDivisor, "denominator is not monic in the distinguished variable");
  Rational c = lead.constant_term();
  MultiPoly num = f.num();
  MultiPoly den = f.den();
  if (c != 1) {
    Rational inv = Rational(1) / c;
    num = inv * num;
    den = inv * den;
  }
  auto [q, r] = poly_divmod(num, den, x);
  return {q, MonicFraction(MonicFraction::ReducedTag{}, std::move(r), std::move(den),
                           f.var())};
}

MonicFraction reduce_fraction(const MonicFraction& f, const PointIdeal& ideal) {
  require_same_context(f.context(), ideal.context(), "reduce_fraction");
  MultiPoly dbar = ideal.residue(f.den());
  if (dbar.is_zero())
    fail(ErrorKind::NotLocalAtPoint, "denominator vanishes at the point");
  return MonicFraction(ideal.residue(f.num()), std::move(dbar), f.var());
}

MonicFraction invert_unit(const MonicFraction& f, const PointIdeal* local) {
  if (f.is_zero()) fail(ErrorKind::NotRecognizedUnit, "zero is not a unit");
  const std::size_t x = f.var();
  auto leading_is_unit = [&](const MultiPoly& p) {
    MultiPoly lead = p.leading_coeff_in(x);
    if (local != nullptr) lead = local->residue(lead);
    return lead.is_constant() && !lead.is_zero();
  };
  // f = num/den is a unit of R(x) exactly when num and den are both monic
  // in x up to a unit of R, i.e. have unit leading x-coefficients.
  if (!leading_is_unit(f.num()) || !leading_is_unit(f.den()))
    fail(ErrorKind::NotRecognizedUnit,
         "leading coefficient in the distinguished variable is not a unit");
  return f.field_inverse();
}

MonicFraction frac_substitute(const MonicFraction& f, const Substitution& s) {
  MultiPoly den = substitute(f.den(), s);
  if (den.is_zero()) fail(ErrorKind::Internal, "substitution annihilates a denominator");
  return MonicFraction(substitute(f.num(), s), std::move(den), f.var());
}

MonicFraction embed_fraction(const MonicFraction& f, const VarContextPtr& target) {
  std::size_t var = target->index_of(f.context()->name(f.var()));
  return MonicFraction(embed(f.num(), target), embed(f.den(), target), var);
}

MonicFraction restrict_fraction(const MonicFraction& f, const VarContextPtr& target) {
  std::size_t var = target->index_of(f.context()->name(f.var()));
  return MonicFraction(restrict_to(f.num(), target), restrict_to(f.den(), target), var);
}

}  // namespace qs
