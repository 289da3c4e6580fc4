#include "qs/matrix.hpp"

namespace qs {

FracMat to_fractions(const PolyMat& m) {
  return m.map([](const MultiPoly& p) { return MonicFraction(p); });
}

PolyMat to_polynomials(const FracMat& m) {
  return m.map([](const MonicFraction& f) {
    if (!f.is_polynomial())
      fail(ErrorKind::InvalidInput, "matrix entry has a nontrivial denominator");
    return f.num();
  });
}

PolyMat embed_mat(const PolyMat& m, const VarContextPtr& target) {
  PolyMat r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = embed(m.at(i, j), target);
  return r;
}

PolyMat restrict_mat(const PolyMat& m, const VarContextPtr& target) {
  PolyMat r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = restrict_to(m.at(i, j), target);
  return r;
}

FracMat embed_mat(const FracMat& m, const VarContextPtr& target) {
  FracMat r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = embed_fraction(m.at(i, j), target);
  return r;
}

FracMat restrict_mat(const FracMat& m, const VarContextPtr& target) {
  FracMat r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = restrict_fraction(m.at(i, j), target);
  return r;
}

PolyMat substitute_mat(const PolyMat& m, const Substitution& s) {
  return m.map([&](const MultiPoly& p) { return substitute(p, s); });
}

FracMat substitute_mat(const FracMat& m, const Substitution& s) {
  return m.map([&](const MonicFraction& f) { return frac_substitute(f, s); });
}

PolyMat reduce_mat(const PolyMat& m, const PointIdeal& ideal) {
  return m.map([&](const MultiPoly& p) { return ideal.residue(p); });
}

FracMat reduce_mat(const FracMat& m, const PointIdeal& ideal) {
  return m.map([&](const MonicFraction& f) { return reduce_fraction(f, ideal); });
}

namespace {

template <class T, class MatT>
T det_generic(const MatT& m, const T& zero) {
  if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RingOps<T>::one(m.context());
  if (n == 1) return m.at(0, 0);
  T acc = zero;
  // Laplace expansion down the first column; fine at certificate sizes.
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, 0).is_zero()) continue;
    MatT minor(m.context(), n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
      ++mr;
    }
    T term = m.at(i, 0) * det_generic(minor, zero);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

MultiPoly det_poly(const PolyMat& m) {
  return det_generic<MultiPoly>(m, MultiPoly(m.context()));
}

MonicFraction det_frac(const FracMat& m) {
  return det_generic<MonicFraction>(m, MonicFraction(MultiPoly(m.context())));
}

MultiPoly common_denominator(const FracMat& m) {
  MultiPoly acc(m.context(), Rational(1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      acc = poly_lcm(acc, m.at(i, j).den());
  return acc;
}

}  // namespace qs
