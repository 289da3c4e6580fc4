#include "qs/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "qs/error.hpp"

namespace qs {

namespace {

Exponents zero_exps(const VarContextPtr& ctx) {
  return Exponents(ctx->size(), 0);
}

bool exps_divide(const Exponents& a, const Exponents& b) {
  // a | b componentwise
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exps_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

MultiPoly::MultiPoly(VarContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) fail(ErrorKind::Internal, "null context");
}

MultiPoly::MultiPoly(VarContextPtr ctx, const Rational& constant) : ctx_(std::move(ctx)) {
  if (!ctx_) fail(ErrorKind::Internal, "null context");
  if (constant != 0) terms_.emplace(zero_exps(ctx_), constant);
}

MultiPoly::MultiPoly(VarContextPtr ctx, TermMap terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  if (!ctx_) fail(ErrorKind::Internal, "null context");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ctx_->size())
      fail(ErrorKind::Internal, "exponent width does not match context");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::variable(VarContextPtr ctx, std::size_t var) {
  if (var >= ctx->size()) fail(ErrorKind::Internal, "variable index out of range");
  Exponents e(ctx->size(), 0);
  e[var] = 1;
  return monomial(std::move(ctx), std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(VarContextPtr ctx, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(ctx));
  if (exps.size() != p.ctx_->size())
    fail(ErrorKind::Internal, "exponent width does not match context");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

bool MultiPoly::is_one() const { return is_constant() && constant_term() == 1; }

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(zero_exps(ctx_));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_rational() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool MultiPoly::depends_on(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

long MultiPoly::deg_in(std::size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
  return d;
}

long MultiPoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (auto k : e) t += k;
    d = std::max(d, t);
  }
  return d;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, std::uint32_t k) const {
  MultiPoly out(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents reduced = e;
    reduced[var] = 0;
    out.terms_.emplace(std::move(reduced), c);
  }
  return out;
}

MultiPoly MultiPoly::leading_coeff_in(std::size_t var) const {
  long d = deg_in(var);
  if (d < 0) return MultiPoly(ctx_);
  return coeff_of(var, static_cast<std::uint32_t>(d));
}

bool MultiPoly::is_monic_in(std::size_t var) const {
  return leading_coeff_in(var).is_one();
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  long d = deg_in(var);
  std::vector<MultiPoly> out;
  out.reserve(static_cast<std::size_t>(d + 1));
  for (long k = 0; k <= d; ++k)
    out.push_back(coeff_of(var, static_cast<std::uint32_t>(k)));
  return out;
}

MultiPoly from_coefficients_in(const VarContextPtr& ctx, std::size_t var,
                               const std::vector<MultiPoly>& coeffs) {
  MultiPoly out(ctx);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    require_same_context(ctx, coeffs[k].context(), "from_coefficients_in");
    if (coeffs[k].depends_on(var))
      fail(ErrorKind::Internal, "coefficient depends on the assembly variable");
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponents shifted = e;
      shifted[var] = static_cast<std::uint32_t>(k);
      out.add_term(shifted, c);
    }
  }
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_context(ctx_, o.ctx_, "operator+");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_context(ctx_, o.ctx_, "operator-");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.context());
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly r(a.context());
  if (c == 0) return r;
  for (const auto& [e, k] : a.terms()) r.add_term(e, c * k);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a.context(), b.context(), "operator*");
  MultiPoly r(a.context());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result(ctx_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](std::uint32_t k) { return k != 0; });
    if (!has_vars || coeff != 1) {
      out << coeff.get_str();
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << ctx_->name(i);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

MultiPoly substitute(const MultiPoly& f, const Substitution& s) {
  require_same_context(f.context(), s.replacement.context(), "substitute");
  if (s.target >= f.context()->size())
    fail(ErrorKind::UnknownVariable, "substitution target out of range");
  if (!f.depends_on(s.target)) return f;
  // Horner in the target variable: coefficients have the target exponent
  // zeroed, so a single pass is an exact ring homomorphism.
  std::vector<MultiPoly> cs = f.coefficients_in(s.target);
  MultiPoly acc(f.context());
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * s.replacement + cs[k];
  return acc;
}

MultiPoly evaluate_partial(const MultiPoly& f,
                           const std::map<std::size_t, Rational>& values) {
  MultiPoly out(f.context());
  for (const auto& [e, c] : f.terms()) {
    Rational coeff = c;
    Exponents reduced = e;
    for (const auto& [var, value] : values) {
      if (var >= e.size()) fail(ErrorKind::UnknownVariable, "evaluation variable out of range");
      for (std::uint32_t k = 0; k < e[var]; ++k) coeff *= value;
      reduced[var] = 0;
    }
    out.add_term(reduced, coeff);
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> poly_divmod(const MultiPoly& f, const MultiPoly& g,
                                            std::size_t var) {
  require_same_context(f.context(), g.context(), "poly_divmod");
  if (!g.is_monic_in(var))
    fail(ErrorKind::NonMonicDivisor,
         "divisor is not monic in " + g.context()->name(var));
  const long dg = g.deg_in(var);
  MultiPoly q(f.context());
  MultiPoly r = f;
  long dr = r.deg_in(var);
  while (dr >= dg) {
    // g monic in var: subtracting lead(r) * var^(dr-dg) * g cancels the
    // entire var-degree-dr slice of r, so dr strictly decreases.
    MultiPoly lead = r.coeff_of(var, static_cast<std::uint32_t>(dr));
    MultiPoly shift = MultiPoly::variable(f.context(), var)
                          .pow(static_cast<std::uint32_t>(dr - dg));
    MultiPoly t = lead * shift;
    q += t;
    r -= t * g;
    dr = r.deg_in(var);
  }
  return {q, r};
}

std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a.context(), b.context(), "try_divide_exact");
  if (b.is_zero()) fail(ErrorKind::Internal, "division by zero polynomial");
  MultiPoly q(a.context());
  MultiPoly r = a;
  const auto& lead_b = *b.terms().begin();
  while (!r.is_zero()) {
    // Cancel leading terms under the lex order; since lex is a monomial
    // order, failure of componentwise divisibility means b does not divide a.
    const auto& lead_r = *r.terms().begin();
    if (!exps_divide(lead_b.first, lead_r.first)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(a.context(), exps_sub(lead_r.first, lead_b.first),
                                      lead_r.second / lead_b.second);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// Smallest-index variable occurring in a or b; nullopt when both constant.
std::optional<std::size_t> main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = 0; v < a.context()->size(); ++v)
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return std::nullopt;
}

MultiPoly normalize_leading(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading_rational()) * p;
}

// Rescales by a positive rational so all coefficients become coprime
// integers.  Controls coefficient growth inside remainder sequences.
MultiPoly integer_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm(1);
  for (const auto& [e, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(c.get_mpq_t()));
  mpz_class num_gcd(0);
  for (const auto& [e, c] : p.terms()) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return scale * p;
}

bool is_univariate_in(const MultiPoly& p, std::size_t var) {
  for (std::size_t v = 0; v < p.context()->size(); ++v)
    if (v != var && p.depends_on(v)) return false;
  return true;
}

// gcd of the var-coefficients (the content relative to var).
MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly acc(p.context());
  for (const MultiPoly& c : p.coefficients_in(var)) acc = poly_gcd(acc, c);
  return acc;
}

MultiPoly divide_exact_or_die(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) fail(ErrorKind::Internal, "expected exact division failed");
  return *q;
}

// Pseudo-remainder of a by b in var:  lc(b)^k * a  reduced until the
// var-degree drops below deg_var(b).
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const long db = b.deg_in(var);
  const MultiPoly lb = b.leading_coeff_in(var);
  long da = a.deg_in(var);
  while (da >= db && !a.is_zero()) {
    MultiPoly la = a.leading_coeff_in(var);
    MultiPoly shift = MultiPoly::variable(a.context(), var)
                          .pow(static_cast<std::uint32_t>(da - db));
    a = lb * a - la * shift * b;
    long next = a.deg_in(var);
    if (next >= da && !a.is_zero())
      fail(ErrorKind::Internal, "pseudo-remainder failed to reduce degree");
    da = next;
  }
  return a;
}

MultiPoly univariate_gcd(MultiPoly a, MultiPoly b, std::size_t var) {
  // Primitive remainder sequence over Z[var]: pseudo-remainders keep the
  // coefficients integral, and stripping integer content each step prevents
  // the explosive growth plain rational Euclid would suffer.
  a = integer_primitive(a);
  b = integer_primitive(b);
  if (a.deg_in(var) < b.deg_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    MultiPoly r = integer_primitive(pseudo_remainder(a, b, var));
    a = std::move(b);
    b = std::move(r);
  }
  return normalize_leading(a);
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a.context(), b.context(), "poly_gcd");
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  auto var = main_variable(a, b);
  if (!var) return MultiPoly(a.context(), Rational(1));  // both nonzero constants
  const std::size_t v = *var;
  if (is_univariate_in(a, v) && is_univariate_in(b, v)) return univariate_gcd(a, b, v);
  if (!a.depends_on(v)) return poly_gcd(content_in(b, v), a);
  if (!b.depends_on(v)) return poly_gcd(content_in(a, v), b);

  // Primitive polynomial remainder sequence in the main variable.
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = poly_gcd(ca, cb);
  MultiPoly A = integer_primitive(divide_exact_or_die(a, ca));
  MultiPoly B = integer_primitive(divide_exact_or_die(b, cb));
  if (A.deg_in(v) < B.deg_in(v)) std::swap(A, B);
  while (true) {
    MultiPoly r = pseudo_remainder(A, B, v);
    if (r.is_zero()) break;
    r = integer_primitive(divide_exact_or_die(r, content_in(r, v)));
    A = B;
    B = r;
  }
  return normalize_leading(c * B);
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
  require_same_context(a.context(), b.context(), "poly_lcm");
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.context());
  MultiPoly g = poly_gcd(a, b);
  return normalize_leading(a * divide_exact_or_die(b, g));
}

MultiPoly embed(const MultiPoly& f, const VarContextPtr& target) {
  if (same_context(f.context(), target)) return f;
  std::vector<std::size_t> where(f.context()->size());
  for (std::size_t i = 0; i < where.size(); ++i)
    where[i] = target->index_of(f.context()->name(i));
  MultiPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    Exponents mapped(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) mapped[where[i]] = e[i];
    out.add_term(mapped, c);
  }
  return out;
}

MultiPoly restrict_to(const MultiPoly& f, const VarContextPtr& target) {
  if (same_context(f.context(), target)) return f;
  std::vector<std::size_t> where(f.context()->size(), SIZE_MAX);
  for (std::size_t i = 0; i < where.size(); ++i) {
    const std::string& n = f.context()->name(i);
    if (target->has(n)) {
      where[i] = target->index_of(n);
    } else if (f.depends_on(i)) {
      fail(ErrorKind::UnknownVariable,
           "polynomial depends on '" + n + "' absent from the target context");
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    Exponents mapped(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) mapped[where[i]] = e[i];
    out.add_term(mapped, c);
  }
  return out;
}

}  // namespace qs
