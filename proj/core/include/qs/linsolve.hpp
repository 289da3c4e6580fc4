#ifndef QS_LINSOLVE_HPP
#define QS_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "qs/fraction.hpp"
#include "qs/point_ideal.hpp"

namespace qs {

// Exact solver for A*x = b over the local ring R (Q[X] localized at a
// rational point), with entries given as fractions.  Free unknowns are set
// to zero; the solution is unique given the pivot choices, so the result is
// deterministic.
//
// Pivoting minimizes the point-valuation of the pivot entry.  Over the
// discrete valuation rings that matter here (one localized variable), a
// minimal-valuation pivot keeps every eliminated quotient inside R, and
// back-substitution stays in R whenever an R-solution exists at all --
// so the solver finds an R-point of the solution set exactly when one
// exists.  With no localized variables this degenerates to ordinary
// Gaussian elimination over Q(X); with several it is a best-effort
// heuristic (callers re-verify what they build from the answer).
//
// Returns nullopt when the system is inconsistent or when no solution
// within R is certified.
std::optional<std::vector<MonicFraction>> solve_over_local_ring(
    std::vector<std::vector<MonicFraction>> lhs, std::vector<MonicFraction> rhs,
    const PointIdeal& ideal);

// Point-valuation of a fraction: multiplicity of the point in the numerator
// minus the denominator's.  For a single assigned variable this is the
// order of vanishing of num/den at the point; zero when nothing is
// assigned and the value is nonzero.  Requires a nonzero argument.
long point_valuation(const MonicFraction& f, const PointIdeal& ideal);

}  // namespace qs

#endif  // QS_LINSOLVE_HPP
