#include "qs/linsolve.hpp"

#include <limits>
#include <utility>

#include "qs/error.hpp"

namespace qs {

namespace {

// Multiplicity of the linear form (w - a) in a nonzero polynomial, computed
// by repeated exact division.
long vanishing_order(MultiPoly f, std::size_t var, const Rational& value) {
  const auto& ctx = f.context();
  MultiPoly linear = MultiPoly::variable(ctx, var) - MultiPoly(ctx, value);
  long order = 0;
  for (;;) {
    if (f.is_zero()) fail(ErrorKind::Internal, "vanishing order of zero");
    auto quotient = try_divide_exact(f, linear);
    if (!quotient) return order;
    f = std::move(*quotient);
    ++order;
  }
}

// Valuation of a nonzero polynomial with respect to the maximal ideal of the
// point.  Exact (order of vanishing) when a single variable is assigned.
// With several assigned variables the ideal is not principal; we use the
// cheap lower bound "0 if nonvanishing residue, else 1", which is enough to
// steer pivoting away from the maximal ideal.
long poly_valuation(const MultiPoly& f, const PointIdeal& ideal) {
  if (f.is_zero()) fail(ErrorKind::Internal, "valuation of zero polynomial");
  const auto& assignment = ideal.point();
  if (assignment.empty()) return 0;
  if (assignment.size() == 1) {
    const auto& [var, value] = *assignment.begin();
    return vanishing_order(f, var, value);
  }
  return ideal.vanishes(f) ? 1 : 0;
}

}  // namespace

long point_valuation(const MonicFraction& f, const PointIdeal& ideal) {
  if (f.is_zero()) fail(ErrorKind::Internal, "valuation of zero fraction");
  return poly_valuation(f.num(), ideal) - poly_valuation(f.den(), ideal);
}

std::optional<std::vector<MonicFraction>> solve_over_local_ring(
    std::vector<std::vector<MonicFraction>> lhs, std::vector<MonicFraction> rhs,
    const PointIdeal& ideal) {
  const std::size_t rows = lhs.size();
  if (rhs.size() != rows) fail(ErrorKind::DimensionMismatch, "solver shapes");
  std::size_t cols = 0;
  for (const auto& row : lhs) {
    if (cols == 0) cols = row.size();
    if (row.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged solver rows");
  }

  // Forward elimination with global minimum-valuation pivoting: among all
  // untouched rows and columns, pick the entry of least valuation (row-major
  // scan, first minimum wins) so quotients stay local.
  std::vector<std::size_t> pivot_row_of_col(cols, std::numeric_limits<std::size_t>::max());
  std::vector<bool> row_used(rows, false);
  std::vector<std::size_t> pivot_order;  // columns in elimination order
  for (;;) {
    bool found = false;
    long best_val = 0;
    std::size_t best_r = 0, best_c = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] != std::numeric_limits<std::size_t>::max()) continue;
        if (lhs[r][c].is_zero()) continue;
        long val = point_valuation(lhs[r][c], ideal);
        if (!found || val < best_val) {
          found = true;
          best_val = val;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (!found) break;

    row_used[best_r] = true;
    pivot_row_of_col[best_c] = best_r;
    pivot_order.push_back(best_c);
    const MonicFraction pivot_inv = lhs[best_r][best_c].field_inverse();
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == best_r || lhs[r][best_c].is_zero()) continue;
      MonicFraction factor = lhs[r][best_c] * pivot_inv;
      for (std::size_t c = 0; c < cols; ++c) {
        if (lhs[best_r][c].is_zero()) continue;
        lhs[r][c] -= factor * lhs[best_r][c];
      }
      rhs[r] -= factor * rhs[best_r];
    }
  }

  // Rows that were never used as pivots are now all-zero on the left; they
  // must be zero on the right too, or the system is inconsistent.
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_used[r]) continue;
    if (!rhs[r].is_zero()) return std::nullopt;
  }

  // Free unknowns are set to zero, so each pivot unknown is just the
  // (fully eliminated) right-hand side divided by its pivot.
  const auto& ctx = ideal.context();
  std::vector<MonicFraction> solution(cols, MonicFraction::constant(ctx, Rational(0)));
  for (std::size_t c : pivot_order) {
    std::size_t r = pivot_row_of_col[c];
    solution[c] = rhs[r] * lhs[r][c].field_inverse();
  }

  // A genuine point of the local ring must have denominators invertible at
  // the point; otherwise the candidate escapes R and is rejected.
  for (const auto& entry : solution) {
    if (entry.is_zero()) continue;
    if (ideal.vanishes(entry.den())) return std::nullopt;
  }
  return solution;
}

}  // namespace qs
