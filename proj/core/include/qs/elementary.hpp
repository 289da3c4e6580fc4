#ifndef QS_ELEMENTARY_HPP
#define QS_ELEMENTARY_HPP

#include <vector>

#include "qs/matrix.hpp"

namespace qs {

// One elementary matrix over the fraction field: a transvection
// I + scalar*e_{ij} (i != j) or a dilation diag(..., scalar at i, ...).
struct ElementaryFactor {
  enum class Kind { Transvection, Dilation };
  Kind kind;
  std::size_t i = 0, j = 0;  // dilation uses i only
  MonicFraction scalar;

  ElementaryFactor inverse() const;
};

// Writes an invertible matrix over a field of fractions as an ordered
// product of elementary factors: M = F_1 * F_2 * ... * F_r, r <= n^2 + n.
// No row swaps are used: a vanishing pivot is repaired by adding a lower
// row, so the factor list stays within transvections and dilations.
// Throws SingularMatrix when M is not invertible.
std::vector<ElementaryFactor> elementary_factorization(const FracMat& M);

// The matrix of a single factor, and the ordered product of a list
// (an empty list gives the identity).
FracMat factor_matrix(const VarContextPtr& ctx, std::size_t n,
                      const ElementaryFactor& f);
FracMat product_of_factors(const VarContextPtr& ctx, std::size_t n,
                           const std::vector<ElementaryFactor>& factors);

// Factorization of M^{-1}: the inverses of M's factors in reverse order.
std::vector<ElementaryFactor> inverse_factors(const std::vector<ElementaryFactor>& factors);

// In-place application without materializing the factor:
//   apply_factor_left:  M := F * M   (row operation)
//   apply_factor_right: M := M * F   (column operation)
void apply_factor_left(FracMat& M, const ElementaryFactor& f);
void apply_factor_right(FracMat& M, const ElementaryFactor& f);

}  // namespace qs

#endif  // QS_ELEMENTARY_HPP
