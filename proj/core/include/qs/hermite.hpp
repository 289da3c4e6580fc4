#ifndef QS_HERMITE_HPP
#define QS_HERMITE_HPP

#include <utility>

#include "qs/matrix.hpp"

namespace qs {

// Free-image presentation of an idempotent matrix over a univariate
// polynomial ring with a field of exact coefficients, computed through the
// row Hermite normal form.
//
// Given E idempotent (n x n), returns (C, D) where D (m x n) collects the
// nonzero rows of the Hermite normal form of E, m = rank(E), and C (n x m)
// expresses the rows of E in terms of the rows of D.  Then:
//   C * D = E   (by construction), and
//   D * C = I_m (rows of D lie in the row space of E, where v*E = v, and
//                are linearly independent, so (D*C - I)*D = 0 forces
//                D*C = I).
// Both identities are re-checked before returning.
//
// Entries must be univariate in `var` over Q — constants are fine, and a
// context without variables (pass var = NO_VARIABLE) makes this plain
// Gaussian reduction over Q.  Throws NotIdempotent when E*E != E, and
// InvalidInput when entries stray outside Q[var].
inline constexpr std::size_t NO_VARIABLE = static_cast<std::size_t>(-1);

std::pair<PolyMat, PolyMat> hermite_basis_of_idempotent(const PolyMat& E,
                                                        std::size_t var);

// The same construction over K[t], K = Q(x_loc): entries are fractions whose
// denominators avoid `var` (they live in the localization variable), and the
// Euclidean reduction runs in `var` with exact K-coefficient arithmetic.
std::pair<FracMat, FracMat> hermite_basis_of_idempotent_frac(const FracMat& E,
                                                             std::size_t var);

}  // namespace qs

#endif  // QS_HERMITE_HPP
