#ifndef QS_SOLVER_HPP
#define QS_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qs/certificate.hpp"
#include "qs/matrix.hpp"
#include "qs/point_ideal.hpp"

namespace qs {

// Tuning for the free-basis driver and its searches.  Both bounds must be
// positive.
struct SolverConfig {
  long max_point_height = 100;  // rational-root search: max(|p|, q) <= height
  unsigned degree_escalation_ceiling = 10;  // x-degree slack for the solves
  bool trace = false;                       // CLI flag: emit progress notes
};

// User-supplied local data for idempotents in three or more variables, where
// no point search is attempted: for each rational point, a trivialization of
// E over the localization there (denominators free of the distinguished
// variable and invertible at the point: A*B = E, B*A = I), plus Bezout
// coefficients for the translation amounts r_i produced by the patching
// step, one per entry, with sum(u_i * r_i) = 1.
struct CoverEntry {
  PointIdeal ideal;
  FracMat A, B;
};
struct Cover {
  std::vector<CoverEntry> entries;
  std::vector<MultiPoly> coefficients;
};

// Searches the common vanishing locus of the generators for a rational
// point.  The generators must be nonempty, not all zero, and involve at most
// one variable between them:
//   - no variables at all (nonzero constants): the ideal they span is the
//     unit ideal, nothing vanishes — returns nullopt ("no point needed");
//   - one variable t: reduces to g = gcd(generators); nullopt when g is
//     constant, otherwise a rational root of g by the rational-root theorem,
//     the origin first, then candidates +-p/q (p | constant term, q | leading
//     coefficient of the primitive integer form) ordered by height
//     max(|p|, q) and then by value, within config.max_point_height.
// Throws NonRationalLocus when g has no rational root within the height
// bound, and UnsupportedDimension for two or more variables.
std::optional<PointIdeal> rational_point_search(
    const std::vector<MultiPoly>& generators, const SolverConfig& config = {});

// A verified free basis of the image of an idempotent matrix E over
// Q[x_1...x_v]: a certificate (E, I_m, A, B) with A*B = E and B*A = I_m as
// exact polynomial identities, m = rank(E) = trace(E).
//
// Recursion on the number v of variables E actually involves: v <= 1 is a
// Hermite reduction; for v = 2 the matrix is first trivialized over
// Q(x)[t] (x the first involved variable) — a trivialization valid over
// every localization of Q[t] at once — then a patching loop runs Horrocks
// at rational points (the origin first, then roots of the accumulated
// translation amounts) until the amounts admit a Bezout relation, and the
// glued translation certificate specializes x to 0; recursing on E(x -> 0)
// and composing closes the induction.  For v >= 3 a user-supplied Cover
// replaces the point search at the top level (the recursion below it must
// then involve at most two variables); without one, UnsupportedDimension.
// A supplied cover also overrides the search when v = 2.
//
// `log`, when non-null, receives human-readable progress lines.
EquivalenceCert<MultiPoly> quillen_suslin_free_basis(
    const PolyMat& E, const SolverConfig& config = {}, const Cover* cover = nullptr,
    std::vector<std::string>* log = nullptr);

// Completes a unimodular row v (1 x n) to an invertible n x n matrix with
// first row v and constant nonzero determinant.  Unimodularity is witnessed
// by a column w with v*w = 1, either supplied or found by an escalating
// bounded-degree exact linear solve (total degree up to deg(v) +
// config.degree_escalation_ceiling); NotUnimodular when no witness exists
// within the bound.  The complement rows are the presentation rows of a
// free basis of I - w*v.
PolyMat complete_unimodular_row(const PolyMat& v, const SolverConfig& config = {},
                                const PolyMat* witness = nullptr);

}  // namespace qs

#endif  // QS_SOLVER_HPP
