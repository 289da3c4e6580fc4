#include "qs/elementary.hpp"

namespace qs {

ElementaryFactor ElementaryFactor::inverse() const {
  ElementaryFactor inv = *this;
  if (kind == Kind::Transvection) {
    inv.scalar = -scalar;
  } else {
    inv.scalar = scalar.field_inverse();
  }
  return inv;
}

std::vector<ElementaryFactor> elementary_factorization(const FracMat& M) {
  if (!M.is_square()) fail(ErrorKind::DimensionMismatch, "factorization of non-square matrix");
  const std::size_t n = M.rows();
  FracMat W = M;
  // Reduce W to the identity by left-multiplications e_1, ..., e_s; then
  // M = e_1^{-1} * ... * e_s^{-1} in that order.
  std::vector<ElementaryFactor> applied;

  auto apply_and_record = [&](const ElementaryFactor& f) {
    apply_factor_left(W, f);
    applied.push_back(f);
  };

  for (std::size_t j = 0; j < n; ++j) {
    if (W.at(j, j).is_zero()) {
      // Repair the pivot with a transvection from a lower row; rows above
      // already carry their identity part and must not be mixed in.
      std::size_t source = SIZE_MAX;
      for (std::size_t i = j + 1; i < n; ++i) {
        if (!W.at(i, j).is_zero()) {
          source = i;
          break;
        }
      }
      if (source == SIZE_MAX) fail(ErrorKind::SingularMatrix, "column has no usable pivot");
      apply_and_record({ElementaryFactor::Kind::Transvection, j, source,
                        RingOps<MonicFraction>::one(M.context())});
    }
    const MonicFraction pivot_inv = W.at(j, j).field_inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || W.at(i, j).is_zero()) continue;
      apply_and_record({ElementaryFactor::Kind::Transvection, i, j,
                        -(W.at(i, j) * pivot_inv)});
    }
  }
  // W is now diagonal with nonzero entries; dilate each to 1.
  for (std::size_t i = 0; i < n; ++i) {
    const MonicFraction& d = W.at(i, i);
    if (d.is_zero()) fail(ErrorKind::SingularMatrix, "zero diagonal after reduction");
    if (!d.is_one())
      apply_and_record({ElementaryFactor::Kind::Dilation, i, i, d.field_inverse()});
  }
  if (!W.is_identity()) fail(ErrorKind::Internal, "reduction did not reach the identity");

  std::vector<ElementaryFactor> out;
  out.reserve(applied.size());
  for (const ElementaryFactor& f : applied) out.push_back(f.inverse());
  return out;
}

FracMat factor_matrix(const VarContextPtr& ctx, std::size_t n,
                      const ElementaryFactor& f) {
  FracMat m = FracMat::identity(ctx, n);
  if (f.kind == ElementaryFactor::Kind::Transvection) {
    if (f.i == f.j || f.i >= n || f.j >= n)
      fail(ErrorKind::Internal, "bad transvection indices");
    m.at(f.i, f.j) = f.scalar;
  } else {
    if (f.i >= n) fail(ErrorKind::Internal, "bad dilation index");
    if (f.scalar.is_zero()) fail(ErrorKind::Internal, "dilation by zero");
    m.at(f.i, f.i) = f.scalar;
  }
  return m;
}

FracMat product_of_factors(const VarContextPtr& ctx, std::size_t n,
                           const std::vector<ElementaryFactor>& factors) {
  FracMat acc = FracMat::identity(ctx, n);
  // Right-multiplying by each factor in order yields F_1 * F_2 * ... * F_r.
  for (const ElementaryFactor& f : factors) apply_factor_right(acc, f);
  return acc;
}

std::vector<ElementaryFactor> inverse_factors(const std::vector<ElementaryFactor>& factors) {
  std::vector<ElementaryFactor> out;
  out.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

void apply_factor_left(FracMat& M, const ElementaryFactor& f) {
  if (f.kind == ElementaryFactor::Kind::Transvection) {
    for (std::size_t c = 0; c < M.cols(); ++c)
      M.at(f.i, c) += f.scalar * M.at(f.j, c);
  } else {
    for (std::size_t c = 0; c < M.cols(); ++c)
      M.at(f.i, c) = f.scalar * M.at(f.i, c);
  }
}

void apply_factor_right(FracMat& M, const ElementaryFactor& f) {
  if (f.kind == ElementaryFactor::Kind::Transvection) {
    // (M * (I + s*e_{ij})) adds s * column_i onto column_j.
    for (std::size_t r = 0; r < M.rows(); ++r)
      M.at(r, f.j) += M.at(r, f.i) * f.scalar;
  } else {
    for (std::size_t r = 0; r < M.rows(); ++r)
      M.at(r, f.i) = M.at(r, f.i) * f.scalar;
  }
}

}  // namespace qs
