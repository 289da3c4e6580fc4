#ifndef QS_MATRIX_HPP
#define QS_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "qs/error.hpp"
#include "qs/fraction.hpp"
#include "qs/multipoly.hpp"

namespace qs {

// Zero/one constructors for the two entry rings.
template <class T>
struct RingOps;

template <>
struct RingOps<MultiPoly> {
  static MultiPoly zero(const VarContextPtr& c) { return MultiPoly(c); }
  static MultiPoly one(const VarContextPtr& c) { return MultiPoly(c, Rational(1)); }
};

template <>
struct RingOps<MonicFraction> {
  static MonicFraction zero(const VarContextPtr& c) { return MonicFraction(MultiPoly(c)); }
  static MonicFraction one(const VarContextPtr& c) {
    return MonicFraction(MultiPoly(c, Rational(1)));
  }
};

// Dense row-major matrix over polynomials or fractions, with the variable
// context carried alongside (needed to build zeros/ones of empty matrices).
template <class T>
class Mat {
 public:
  Mat() = default;  // usable only after assignment
  Mat(VarContextPtr ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
        entries_(rows * cols, RingOps<T>::zero(ctx_)) {}

  static Mat identity(VarContextPtr ctx, std::size_t n) {
    Mat m(std::move(ctx), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingOps<T>::one(m.ctx_);
    return m;
  }

  const VarContextPtr& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) fail(ErrorKind::Internal, "matrix index out of range");
    return entries_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) fail(ErrorKind::Internal, "matrix index out of range");
    return entries_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && same_context(ctx_, o.ctx_) &&
           entries_ == o.entries_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    require_shape(o, "matrix addition");
    Mat r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_shape(o, "matrix subtraction");
    Mat r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
    return r;
  }

  Mat operator*(const Mat& o) const {
    require_same_context(ctx_, o.ctx_, "matrix multiplication");
    if (cols_ != o.rows_)
      fail(ErrorKind::DimensionMismatch, "matrix multiplication shape");
    Mat r(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = entries_[i * cols_ + k];
        if (is_zero_entry(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& b = o.entries_[k * o.cols_ + j];
          if (is_zero_entry(b)) continue;
          r.at(i, j) += a * b;
        }
      }
    }
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
  }

  Mat transpose() const {
    Mat r(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  T trace() const {
    if (!is_square()) fail(ErrorKind::DimensionMismatch, "trace of a non-square matrix");
    T t = RingOps<T>::zero(ctx_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    return *this == identity(ctx_, rows_);
  }

  bool is_idempotent() const { return is_square() && (*this) * (*this) == *this; }

  // Entry-wise image under f, possibly changing the entry type.
  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(entries_[0]));
    Mat<U> r(ctx_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
    return r;
  }

  // Stacks o below this matrix.
  Mat vstack(const Mat& o) const {
    require_same_context(ctx_, o.ctx_, "vstack");
    if (cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "vstack widths differ");
    Mat r(ctx_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  // Places o to the right of this matrix.
  Mat hstack(const Mat& o) const {
    require_same_context(ctx_, o.ctx_, "hstack");
    if (rows_ != o.rows_) fail(ErrorKind::DimensionMismatch, "hstack heights differ");
    Mat r(ctx_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  Mat submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
      fail(ErrorKind::Internal, "submatrix out of range");
    Mat r(ctx_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
  }

 private:
  static bool is_zero_entry(const T& t) { return t.is_zero(); }
  void require_shape(const Mat& o, const char* where) const {
    require_same_context(ctx_, o.ctx_, where);
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(ErrorKind::DimensionMismatch, where);
  }

  VarContextPtr ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> entries_;
};

using PolyMat = Mat<MultiPoly>;
using FracMat = Mat<MonicFraction>;

// Entry-type conversions and context transport.
FracMat to_fractions(const PolyMat& m);
// Requires every entry polynomial (denominator 1); throws InvalidInput otherwise.
PolyMat to_polynomials(const FracMat& m);
PolyMat embed_mat(const PolyMat& m, const VarContextPtr& target);
PolyMat restrict_mat(const PolyMat& m, const VarContextPtr& target);
FracMat embed_mat(const FracMat& m, const VarContextPtr& target);
FracMat restrict_mat(const FracMat& m, const VarContextPtr& target);

// Entry-wise substitution / reduction.
PolyMat substitute_mat(const PolyMat& m, const Substitution& s);
FracMat substitute_mat(const FracMat& m, const Substitution& s);
PolyMat reduce_mat(const PolyMat& m, const PointIdeal& ideal);
FracMat reduce_mat(const FracMat& m, const PointIdeal& ideal);

// Determinant by cofactor expansion (small matrices only).
MultiPoly det_poly(const PolyMat& m);
MonicFraction det_frac(const FracMat& m);

// Least common multiple of all entry denominators (1 for an empty matrix).
MultiPoly common_denominator(const FracMat& m);

}  // namespace qs

#endif  // QS_MATRIX_HPP
