#include "qs/hermite.hpp"

#include <vector>

namespace qs {

namespace {

// The Euclidean scaffolding the reduction needs from its entry type.
//
// Polynomials in Q[var] (var may be NO_VARIABLE for plain rationals):
struct PolyOps {
  using El = MultiPoly;
  VarContextPtr ctx;
  std::size_t var;

  long deg(const El& e) const {
    if (e.is_zero()) return -1;
    if (var == NO_VARIABLE) return 0;
    return e.deg_in(var);
  }

  Rational lead_rational(const El& e) const {
    MultiPoly lead = var == NO_VARIABLE ? e : e.leading_coeff_in(var);
    if (!lead.is_constant())
      fail(ErrorKind::InvalidInput,
           "matrix entry is not univariate in the reduction variable");
    return lead.constant_term();
  }

  // b nonzero; quotient/remainder with deg(r) < deg(b).
  std::pair<El, El> divmod(const El& a, const El& b) const {
    Rational lc = lead_rational(b);
    if (var == NO_VARIABLE || deg(b) == 0) {
      MultiPoly lead = var == NO_VARIABLE ? b : b.coeff_of(var, 0);
      if (!lead.is_constant())
        fail(ErrorKind::InvalidInput,
             "matrix entry is not univariate in the reduction variable");
      return {(Rational(1) / lead.constant_term()) * a, El(ctx)};
    }
    MultiPoly monic = (Rational(1) / lc) * b;
    auto [q, r] = poly_divmod(a, monic, var);
    return {(Rational(1) / lc) * q, r};
  }

  // u with u*e monic (leading coefficient 1).
  El unit_to_monic(const El& e) const {
    return El(ctx, Rational(1) / lead_rational(e));
  }
};

// Fractions num/den with den free of `var`: polynomials in var over the
// coefficient field K = Q(x_loc).
struct FracOps {
  using El = MonicFraction;
  VarContextPtr ctx;
  std::size_t var;

  long deg(const El& e) const {
    if (e.is_zero()) return -1;
    if (e.den().depends_on(var))
      fail(ErrorKind::InvalidInput, "denominator depends on the reduction variable");
    return e.num().deg_in(var);
  }

  El lead(const El& e) const {
    return El(e.num().leading_coeff_in(var), e.den(), e.var());
  }

  std::pair<El, El> divmod(const El& a, const El& b) const {
    // Schoolbook division with K-coefficients; every step is exact
    // fraction arithmetic, so the invariant a = q*b + r holds identically.
    El q(MultiPoly(ctx), a.var());
    El r = a;
    const long db = deg(b);
    const El lb = lead(b);
    long dr = deg(r);
    while (dr >= db) {
      El coeff = lead(r) * lb.field_inverse();
      El tpow(MultiPoly::variable(ctx, var).pow(static_cast<std::uint32_t>(dr - db)),
              a.var());
      El t = coeff * tpow;
      q += t;
      r -= t * b;
      long next = deg(r);
      if (next >= dr && !r.is_zero())
        fail(ErrorKind::Internal, "division failed to reduce the degree");
      dr = next;
    }
    return {q, r};
  }

  El unit_to_monic(const El& e) const { return lead(e).field_inverse(); }
};

template <class Ops>
struct Reducer {
  using El = typename Ops::El;
  using Row = std::vector<El>;

  Ops ops;
  std::vector<Row> rows;
  std::vector<std::size_t> pivot_cols;  // per echelon row, ascending

  void hermite_reduce() {
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t j = 0; j < ncols && r < rows.size(); ++j) {
      // Euclid within the column on rows >= r until one nonzero entry is left.
      while (true) {
        std::size_t best = SIZE_MAX;
        std::size_t live = 0;
        for (std::size_t i = r; i < rows.size(); ++i) {
          if (rows[i][j].is_zero()) continue;
          ++live;
          if (best == SIZE_MAX || ops.deg(rows[i][j]) < ops.deg(rows[best][j]))
            best = i;
        }
        if (live == 0) break;
        if (live == 1) {
          std::swap(rows[r], rows[best]);
          scale_row(r, ops.unit_to_monic(rows[r][j]));
          pivot_cols.push_back(j);
          ++r;
          break;
        }
        for (std::size_t i = r; i < rows.size(); ++i) {
          if (i == best || rows[i][j].is_zero()) continue;
          auto [q, rem] = ops.divmod(rows[i][j], rows[best][j]);
          (void)rem;
          subtract_multiple(i, best, q, j);
        }
      }
    }
    // Reduce the entries above each pivot modulo the (monic) pivot.  Later
    // pivot rows have zeros in earlier pivot columns, so ascending order
    // leaves finished columns untouched.
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = pivot_cols[k];
        if (rows[i][j].is_zero()) continue;
        auto [q, rem] = ops.divmod(rows[i][j], rows[k][j]);
        (void)rem;
        subtract_multiple(i, k, q, 0);
      }
    }
  }

  // Expresses v as sum c_k * rows[k] (pivot back-substitution); requires v
  // to lie in the row space, which idempotence guarantees for rows of E.
  Row coordinates(Row v) const {
    Row coeffs;
    coeffs.reserve(pivot_cols.size());
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      const std::size_t j = pivot_cols[k];
      auto [q, rem] = ops.divmod(v[j], rows[k][j]);
      if (!rem.is_zero())
        fail(ErrorKind::Internal, "row does not lie in the row space");
      coeffs.push_back(q);
      if (!q.is_zero())
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * rows[k][c];
    }
    for (const El& e : v)
      if (!e.is_zero()) fail(ErrorKind::Internal, "row does not lie in the row space");
    return coeffs;
  }

 private:
  void scale_row(std::size_t i, const El& u) {
    for (El& e : rows[i]) e = u * e;
  }
  void subtract_multiple(std::size_t i, std::size_t src, const El& q, std::size_t from) {
    if (q.is_zero()) return;
    for (std::size_t c = from; c < rows[i].size(); ++c) rows[i][c] -= q * rows[src][c];
  }
};

template <class T, class Ops>
std::pair<Mat<T>, Mat<T>> hermite_impl(const Mat<T>& E, const Ops& ops) {
  if (!E.is_square()) fail(ErrorKind::DimensionMismatch, "idempotent must be square");
  if (!E.is_idempotent()) fail(ErrorKind::NotIdempotent, "E*E != E");
  const std::size_t n = E.rows();

  Reducer<Ops> red{ops, {}, {}};
  red.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    typename Reducer<Ops>::Row row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(E.at(i, j));
    red.rows.push_back(std::move(row));
  }
  red.hermite_reduce();

  const std::size_t m = red.pivot_cols.size();
  Mat<T> D(E.context(), m, n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j) D.at(k, j) = red.rows[k][j];

  Mat<T> C(E.context(), n, m);
  for (std::size_t i = 0; i < n; ++i) {
    typename Reducer<Ops>::Row row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(E.at(i, j));
    auto coeffs = red.coordinates(std::move(row));
    for (std::size_t k = 0; k < m; ++k) C.at(i, k) = coeffs[k];
  }

  if (C * D != E) fail(ErrorKind::Internal, "C*D != E after reduction");
  if (!(D * C).is_identity()) fail(ErrorKind::Internal, "D*C != I after reduction");
  return {C, D};
}

}  // namespace

std::pair<PolyMat, PolyMat> hermite_basis_of_idempotent(const PolyMat& E,
                                                        std::size_t var) {
  if (var != NO_VARIABLE && var >= E.context()->size())
    fail(ErrorKind::UnknownVariable, "reduction variable out of range");
  return hermite_impl(E, PolyOps{E.context(), var});
}

std::pair<FracMat, FracMat> hermite_basis_of_idempotent_frac(const FracMat& E,
                                                             std::size_t var) {
  if (var >= E.context()->size())
    fail(ErrorKind::UnknownVariable, "reduction variable out of range");
  return hermite_impl(E, FracOps{E.context(), var});
}

}  // namespace qs
