#include "qs/horrocks.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qs/error.hpp"
#include "qs/hermite.hpp"
#include "qs/linsolve.hpp"

namespace qs {

namespace {

// ---------------------------------------------------------------------------
// Dense x-coefficient arithmetic over the coefficient field Q(X).
//
// The retraction [.] of R(x) onto R[x] divides numerators by denominators in
// the distinguished variable while the coefficients live in the fraction
// field of the remaining variables.  MultiPoly division cannot express this
// (its quotients are polynomials), so a little dense layer does: an XPoly is
// the list of x-coefficients, each an x-free MonicFraction.
// ---------------------------------------------------------------------------

using XPoly = std::vector<MonicFraction>;

void xp_trim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

XPoly xpoly_of(const MultiPoly& f, std::size_t var) {
  XPoly out;
  for (MultiPoly& c : f.coefficients_in(var)) out.emplace_back(std::move(c), var);
  xp_trim(out);
  return out;
}

// num = q*den + r with deg r < deg den, coefficient-field division.
std::pair<XPoly, XPoly> xfield_divmod(XPoly num, const XPoly& den) {
  if (den.empty()) fail(ErrorKind::Internal, "x-division by zero");
  MonicFraction lead_inv = den.back().field_inverse();
  XPoly q;
  if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, lead_inv - lead_inv);
  while (num.size() >= den.size()) {
    MonicFraction c = num.back() * lead_inv;
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t k = 0; k < den.size(); ++k) {
      if (den[k].is_zero()) continue;
      num[shift + k] -= c * den[k];
    }
    if (!num.back().is_zero())
      fail(ErrorKind::Internal, "x-division failed to cancel the leading term");
    num.pop_back();
    xp_trim(num);
  }
  xp_trim(q);
  return {std::move(q), std::move(num)};
}

MonicFraction assemble_xpoly(const XPoly& p, const VarContextPtr& ctx, std::size_t var) {
  MonicFraction acc{MultiPoly(ctx)};
  MultiPoly xpow(ctx, Rational(1));
  const MultiPoly x = MultiPoly::variable(ctx, var);
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (!p[d].is_zero()) acc += p[d] * MonicFraction(xpow, var);
    if (d + 1 < p.size()) xpow = xpow * x;
  }
  return acc;
}

// f = poly + rem/den with deg_x rem < deg_x den, all in Q(X)[x] terms.
struct XSplit {
  XPoly poly, rem, den;
};

XSplit xsplit(const MonicFraction& f, std::size_t var) {
  XPoly den = xpoly_of(f.den(), var);
  auto [q, r] = xfield_divmod(xpoly_of(f.num(), var), den);
  return {std::move(q), std::move(r), std::move(den)};
}

// The polynomial part [f] as a single fraction (x-free denominator).
MonicFraction retraction(const MonicFraction& f, const VarContextPtr& ctx,
                         std::size_t var) {
  if (f.is_polynomial()) return f;
  return assemble_xpoly(xsplit(f, var).poly, ctx, var);
}

// Splits f after checking it is a legitimate element of R(x): the
// denominator's leading x-coefficient must be invertible at the point, or
// no monic denominator for f exists at all.
XSplit validated_split(const MonicFraction& f, const PointIdeal& ideal,
                       std::size_t var) {
  MultiPoly lead = f.den().leading_coeff_in(var);
  if (ideal.vanishes(lead))
    fail(ErrorKind::NotLocalAtPoint,
         "denominator is not monic at the point: leading coefficient '" +
             lead.to_string() + "' vanishes");
  return xsplit(f, var);
}

// [x^d * f] for d = 0..max_d, built incrementally: with f = poly + rem/den,
//   [x^(d+1) f] = x*[x^d f] + c_d,   x*rem_d = c_d*den + rem_(d+1),
// and deg(x*rem_d) <= deg den keeps each step to a single reduction.
std::vector<XPoly> shifted_parts(const XSplit& split, long max_d) {
  std::vector<XPoly> parts;
  parts.reserve(static_cast<std::size_t>(max_d) + 1);
  parts.push_back(split.poly);
  XPoly rem = split.rem;
  for (long d = 1; d <= max_d; ++d) {
    XPoly shifted;
    if (!rem.empty()) {
      shifted.reserve(rem.size() + 1);
      shifted.push_back(rem[0] - rem[0]);  // x-free zero in the right context
      shifted.insert(shifted.end(), rem.begin(), rem.end());
    }
    XPoly next = parts.back();
    if (!next.empty()) {
      MonicFraction zero = next[0] - next[0];
      next.insert(next.begin(), zero);
    }
    if (shifted.size() == split.den.size()) {
      MonicFraction c = shifted.back() * split.den.back().field_inverse();
      for (std::size_t k = 0; k < split.den.size(); ++k) {
        if (!split.den[k].is_zero()) shifted[k] -= c * split.den[k];
      }
      xp_trim(shifted);
      if (next.empty()) next.push_back(c); else next[0] += c;
    }
    rem = std::move(shifted);
    xp_trim(next);
    parts.push_back(std::move(next));
  }
  return parts;
}

bool denominator_is_x_free(const FracMat& M, std::size_t var) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (M.at(i, j).den().depends_on(var)) return false;
  return true;
}

// det V in 1 + m*R(x)_0, for canonical detv = f/g: the denominator's leading
// x-coefficient must be a unit at the point (so f/g can be rescaled to a
// quotient of monics), f and g must have equal x-degree and equal leading
// x-coefficients (so f - g is a proper numerator), and f - g must vanish at
// the point (so the proper part lies in m*R(x)_0).  A failure here means an
// internal-consistency bug: the construction of V guarantees membership.
void check_determinant_membership(const MonicFraction& detv, const PointIdeal& ideal,
                                  std::size_t var) {
  const MultiPoly& f = detv.num();
  const MultiPoly& g = detv.den();
  if (detv.is_zero()) fail(ErrorKind::Internal, "determinant vanished");
  if (ideal.vanishes(g.leading_coeff_in(var)))
    fail(ErrorKind::Internal, "determinant denominator is not monic at the point");
  if (f.deg_in(var) != g.deg_in(var) ||
      f.leading_coeff_in(var) != g.leading_coeff_in(var) ||
      !ideal.vanishes(f - g))
    fail(ErrorKind::Internal,
         "determinant " + detv.to_string() + " lies outside 1 + m*R(x)_0");
}

}  // namespace

LiftedUnit lift_invertible(const FracMat& target, const PointIdeal& ideal) {
  require_same_context(target.context(), ideal.context(), "lift_invertible");
  for (std::size_t i = 0; i < target.rows(); ++i) {
    for (std::size_t j = 0; j < target.cols(); ++j) {
      const MonicFraction& e = target.at(i, j);
      for (const auto& kv : ideal.point()) {
        if (e.num().depends_on(kv.first) || e.den().depends_on(kv.first))
          fail(ErrorKind::InvalidInput,
               "lift target entry involves a point variable, so is not over Q(x)");
      }
    }
  }
  LiftedUnit unit{elementary_factorization(target), target};
  // Entries of Q(x) lift to R(x) verbatim, so the product is the target
  // itself; re-check the factorization's product all the same.
  if (product_of_factors(target.context(), target.rows(), unit.factors) != target)
    fail(ErrorKind::Internal, "factor product does not reproduce the lift target");
  return unit;
}

FracMat solve_polynomial_part_identity(const FracMat& aprime, const PointIdeal& ideal,
                                       Side side, long hint_denominator_degree,
                                       unsigned escalation_ceiling) {
  require_same_context(aprime.context(), ideal.context(),
                       "solve_polynomial_part_identity");
  const VarContextPtr& ctx = aprime.context();
  // Every fraction entry carries the distinguished variable; a purely
  // polynomial matrix defaults to variable 0.
  std::size_t var = 0;
  bool var_seen = false;
  for (std::size_t i = 0; i < aprime.rows() && !var_seen; ++i)
    for (std::size_t j = 0; j < aprime.cols() && !var_seen; ++j)
      if (!aprime.at(i, j).is_polynomial()) {
        var = aprime.at(i, j).var();
        var_seen = true;
      }

  const std::size_t inner = side == Side::Left ? aprime.rows() : aprime.cols();
  const std::size_t outer = side == Side::Left ? aprime.cols() : aprime.rows();
  auto entry = [&](std::size_t j, std::size_t k) -> const MonicFraction& {
    return side == Side::Left ? aprime.at(j, k) : aprime.at(k, j);
  };

  // Split every entry once.
  std::vector<std::vector<XSplit>> splits(inner);
  long max_num_deg = 0;
  for (std::size_t j = 0; j < inner; ++j) {
    splits[j].reserve(outer);
    for (std::size_t k = 0; k < outer; ++k) {
      splits[j].push_back(validated_split(entry(j, k), ideal, var));
      max_num_deg = std::max(max_num_deg, entry(j, k).num().deg_in(var));
    }
  }

  const long hint = std::max(hint_denominator_degree, 0L);
  const long d0 = hint + max_num_deg;
  const long dmax = d0 + static_cast<long>(escalation_ceiling) * std::max(hint, 1L);
  const MonicFraction zero{MultiPoly(ctx)};
  const MonicFraction one{MultiPoly(ctx, Rational(1))};

  for (long D = d0; D <= dmax; ++D) {
    // [x^d * entry] for all entries and d <= D.
    std::vector<std::vector<std::vector<XPoly>>> parts(inner);
    long epows = 0;
    for (std::size_t j = 0; j < inner; ++j) {
      parts[j].reserve(outer);
      for (std::size_t k = 0; k < outer; ++k) {
        parts[j].push_back(shifted_parts(splits[j][k], D));
        for (const XPoly& p : parts[j][k])
          epows = std::max(epows, static_cast<long>(p.size()));
      }
    }
    epows = std::max(epows, 1L);  // keep the constant-term equations present

    // One shared left-hand side: row (k, e), column (j, d).
    const std::size_t n_rows = outer * static_cast<std::size_t>(epows);
    const std::size_t n_cols = inner * static_cast<std::size_t>(D + 1);
    std::vector<std::vector<MonicFraction>> lhs(n_rows,
                                                std::vector<MonicFraction>(n_cols, zero));
    for (std::size_t k = 0; k < outer; ++k) {
      for (long e = 0; e < epows; ++e) {
        auto& row = lhs[k * epows + e];
        for (std::size_t j = 0; j < inner; ++j) {
          for (long d = 0; d <= D; ++d) {
            const XPoly& p = parts[j][k][static_cast<std::size_t>(d)];
            if (static_cast<std::size_t>(e) < p.size())
              row[j * (D + 1) + d] = p[static_cast<std::size_t>(e)];
          }
        }
      }
    }

    FracMat F(ctx, side == Side::Left ? outer : inner,
              side == Side::Left ? inner : outer);
    bool solved = true;
    for (std::size_t u = 0; u < outer && solved; ++u) {
      std::vector<MonicFraction> rhs(n_rows, zero);
      rhs[u * epows + 0] = one;
      auto sol = solve_over_local_ring(lhs, rhs, ideal);
      if (!sol) {
        solved = false;
        break;
      }
      for (std::size_t j = 0; j < inner; ++j) {
        XPoly coeffs(sol->begin() + static_cast<long>(j) * (D + 1),
                     sol->begin() + static_cast<long>(j + 1) * (D + 1));
        xp_trim(coeffs);
        MonicFraction value = assemble_xpoly(coeffs, ctx, var);
        if (side == Side::Left)
          F.at(u, j) = std::move(value);
        else
          F.at(j, u) = std::move(value);
      }
    }
    if (!solved) continue;

    // The equations were exact, so this re-check can only catch bugs.
    FracMat product = side == Side::Left ? F * aprime : aprime * F;
    for (std::size_t i = 0; i < outer; ++i)
      for (std::size_t k = 0; k < outer; ++k) {
        MonicFraction part = retraction(product.at(i, k), ctx, var);
        if (part != (i == k ? one : zero))
          fail(ErrorKind::Internal, "polynomial-part identity failed after solve");
      }
    return F;
  }
  fail(ErrorKind::DegreeBoundExhausted,
       "no polynomial-part solution up to x-degree " + std::to_string(dmax));
}

EquivalenceCert<MonicFraction> horrocks_free_basis(const HorrocksInput& input,
                                                   unsigned escalation_ceiling,
                                                   HorrocksTrace* trace) {
  const PolyMat& E = input.E;
  const VarContextPtr& ctx = E.context();
  const std::size_t x = input.var;
  if (!E.is_square()) fail(ErrorKind::DimensionMismatch, "E must be square");
  if (x >= ctx->size()) fail(ErrorKind::UnknownVariable, "distinguished variable");
  require_same_context(ctx, input.ideal.context(), "horrocks_free_basis");
  if (input.ideal.assigns(x))
    fail(ErrorKind::InvalidInput, "the point must not constrain the distinguished variable");
  const std::size_t n = E.rows(), m = input.B.rows();
  if (input.A.rows() != n || input.A.cols() != m || input.B.cols() != n)
    fail(ErrorKind::DimensionMismatch, "trivialization shapes");
  if (!E.is_idempotent()) fail(ErrorKind::NotIdempotent, "E*E != E");
  const FracMat Ef = to_fractions(E);
  if (input.A * input.B != Ef) fail(ErrorKind::InvalidInput, "A*B != E over R(x)");
  if (!(input.B * input.A).is_identity())
    fail(ErrorKind::InvalidInput, "B*A != I over R(x)");

  // (1) Reduce E to the residue field, (2) present its image over Q[x].
  PolyMat Ebar = reduce_mat(E, input.ideal);
  auto [Chat, Dhat] = hermite_basis_of_idempotent(Ebar, x);
  if (Dhat.rows() != m)
    fail(ErrorKind::Internal, "rank over the residue field disagrees with m");

  // (3) Lift the change of basis Dhat*reduce(A), an invertible matrix over
  // Q(x), to a factored unit U of R(x).
  FracMat Abar = reduce_mat(input.A, input.ideal);
  FracMat U_target = to_fractions(Dhat) * Abar;
  LiftedUnit unit = lift_invertible(U_target, input.ideal);

  // (4) Transport the trivialization: A' = A*U^{-1}, B' = U*B land in
  // R[x] + m*R(x)_0 and reduce to Chat, Dhat.
  FracMat Aprime = input.A;
  for (const ElementaryFactor& f : inverse_factors(unit.factors))
    apply_factor_right(Aprime, f);
  FracMat Bprime = input.B;
  for (auto it = unit.factors.rbegin(); it != unit.factors.rend(); ++it)
    apply_factor_left(Bprime, *it);
  if (reduce_mat(Aprime, input.ideal) != to_fractions(Chat))
    fail(ErrorKind::ResidueMismatch, "A' does not reduce to the hermite basis");
  if (reduce_mat(Bprime, input.ideal) != to_fractions(Dhat))
    fail(ErrorKind::ResidueMismatch, "B' does not reduce to the hermite presentation");

  // (5) First polynomial-part solve: [F'*A'] = I_m.  The degree hint is the
  // monic common denominator h with h*B' polynomial.
  long hint_left = common_denominator(Bprime).deg_in(x);
  FracMat Fprime = solve_polynomial_part_identity(Aprime, input.ideal, Side::Left,
                                                  hint_left, escalation_ceiling);

  // (6) V := F'*A' is invertible because det V lies in the multiplicative
  // group 1 + m*R(x)_0; the membership is checked exactly.
  FracMat V = Fprime * Aprime;
  MonicFraction detV = det_frac(V);
  check_determinant_membership(detV, input.ideal, x);

  // (7) B'' := V*B' = F'*E has entries polynomial in x.
  FracMat Bsecond = Fprime * Ef;
  if (V * Bprime != Bsecond) fail(ErrorKind::Internal, "V*B' != F'*E");
  if (!denominator_is_x_free(Bsecond, x))
    fail(ErrorKind::Internal, "B'' kept an x-dependent denominator");

  // (8) Second solve: B''*G'' = I_m (both sides polynomial in x, so the
  // retraction is the identity there); A'' := E*G'' equals A'*V^{-1}.
  std::vector<ElementaryFactor> vfactors = elementary_factorization(V);
  FracMat AprimeVinv = Aprime;
  for (const ElementaryFactor& f : inverse_factors(vfactors))
    apply_factor_right(AprimeVinv, f);
  long hint_right = common_denominator(AprimeVinv).deg_in(x);
  FracMat Gsecond = solve_polynomial_part_identity(Bsecond, input.ideal, Side::Right,
                                                   hint_right, escalation_ceiling);
  FracMat Asecond = Ef * Gsecond;
  if (Asecond != AprimeVinv) fail(ErrorKind::Internal, "E*G'' != A'*V^{-1}");
  if (!denominator_is_x_free(Asecond, x))
    fail(ErrorKind::Internal, "A'' kept an x-dependent denominator");

  // (9) Final exact verification.
  EquivalenceCert<MonicFraction> cert{Ef, FracMat::identity(ctx, m), Asecond, Bsecond};
  VerifyReport report = verify_certificate(cert);
  if (!report.pass)
    fail(ErrorKind::Internal, "pipeline certificate failed: " + report.first_failure);
  for (std::size_t i = 0; i < 2; ++i) {
    const FracMat& M = i == 0 ? Asecond : Bsecond;
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c)
        if (input.ideal.vanishes(M.at(r, c).den()))
          fail(ErrorKind::Internal, "output denominator vanishes at the point");
  }

  if (trace != nullptr) {
    trace->Ebar = std::move(Ebar);
    trace->Chat = std::move(Chat);
    trace->Dhat = std::move(Dhat);
    trace->U_target = std::move(U_target);
    trace->factor_count = unit.factors.size();
    trace->Aprime = std::move(Aprime);
    trace->Bprime = std::move(Bprime);
    trace->Fprime = std::move(Fprime);
    trace->V = std::move(V);
    trace->detV = std::move(detV);
    trace->det_check = true;
    trace->Bsecond = Bsecond;
    trace->Gsecond = std::move(Gsecond);
    trace->Asecond = Asecond;
  }
  return cert;
}

}  // namespace qs
