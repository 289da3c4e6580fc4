#ifndef QS_HORROCKS_HPP
#define QS_HORROCKS_HPP

#include <cstddef>
#include <vector>

#include "qs/certificate.hpp"
#include "qs/elementary.hpp"
#include "qs/matrix.hpp"
#include "qs/point_ideal.hpp"

namespace qs {

// Input to the Horrocks step.  R is the localization of Q[X] at a rational
// point (the trivial ideal makes R = Q), and x = variable `var` is the
// distinguished one.  E is idempotent with denominator-free entries in
// R[x]; A (n x m) and B (m x n) trivialize its image over the monic
// localization R(x):  A*B = E and B*A = I_m exactly.
struct HorrocksInput {
  PolyMat E;
  FracMat A, B;
  PointIdeal ideal;
  std::size_t var = 0;
};

// An invertible matrix U over R(x) kept in factored form, together with the
// matrix over Q(x) it reduces to.  U is never materialized: its factors
// (or their reversed inverses, for U^{-1}) are applied one at a time.
struct LiftedUnit {
  std::vector<ElementaryFactor> factors;  // ordered: U = f_1 * ... * f_s
  FracMat target;                         // reduce(U) = target, over Q(x)
};

// Lifts an invertible matrix over the residue fraction field Q(x) to a
// factored invertible matrix over R(x).  Elementary factors over Q(x) lift
// verbatim — polynomials in x alone have unit leading coefficients, so
// every factor is invertible in R(x) and the product reduces to the target
// identically (re-checked before returning).  Throws SingularMatrix when
// the target is singular and InvalidInput when an entry involves a
// point variable (i.e. is not its own residue).
LiftedUnit lift_invertible(const FracMat& target, const PointIdeal& ideal);

enum class Side { Left, Right };

// Solves the polynomial-part identity
//     [F * aprime] = I_m   (side = Left,  aprime n x m, F m x n)
//     [aprime * F] = I_m   (side = Right, aprime m x n, F n x m)
// for a matrix F polynomial in x with coefficients in the local base ring R;
// [.] is the entry-wise polynomial part.  Entries of aprime must be
// legitimate elements of R(x): each denominator's leading x-coefficient
// must be invertible at the point (checked; NotLocalAtPoint otherwise).
//
// The identity is an exact linear system over the coefficient field in the
// unknown x-coefficients of F up to degree D.  D escalates from
//     D0 = hint_denominator_degree + (max numerator x-degree in aprime)
// up to D0 + escalation_ceiling * max(1, hint_denominator_degree), after
// which DegreeBoundExhausted is thrown.  The hint is deg_x of a monic
// common denominator h clearing the inverse-side data (h*B' polynomial for
// the left call); existence of a solution within some such bound is what
// the Nakayama-style termination argument guarantees.  Each unknown row
// (or column) is solved independently with local-minimal pivoting, free
// unknowns set to zero, so the result is deterministic.
FracMat solve_polynomial_part_identity(const FracMat& aprime, const PointIdeal& ideal,
                                       Side side, long hint_denominator_degree,
                                       unsigned escalation_ceiling);

// Intermediate values of a Horrocks run, for diagnostics and --trace output.
struct HorrocksTrace {
  PolyMat Ebar;         // reduce(E) over Q[x]
  PolyMat Chat, Dhat;   // presentation of Ebar: Chat*Dhat = Ebar, Dhat*Chat = I
  FracMat U_target;     // Dhat * reduce(A), the unit's reduction
  std::size_t factor_count = 0;
  FracMat Aprime, Bprime;
  FracMat Fprime;       // [Fprime * Aprime] = I_m
  FracMat V;            // Fprime * Aprime
  MonicFraction detV;
  bool det_check = false;  // detV in 1 + m*R(x)_0
  FracMat Bsecond, Gsecond, Asecond;
};

// The Horrocks step: from a trivialization of E over R(x), a trivialization
// over R[x] itself.  Returns a free certificate (E, I_m, A'', B'') whose
// matrices have entries polynomial in x (denominators, when present, are
// x-free and invertible at the point), with A''*B'' = E and B''*A'' = I_m
// verified exactly.
//
// Pipeline: reduce E to Q[x] and present its image there; lift the basis
// change Dhat*reduce(A) to a factored unit U of R(x); pass to A' = A*U^{-1},
// B' = U*B, which land in R[x] + m*R(x)_0 with reduce(A') = Chat and
// reduce(B') = Dhat (checked; ResidueMismatch on violation); solve
// [F'*A'] = I_m, put V := F'*A' and check det V in 1 + m*R(x)_0 exactly;
// then B'' := V*B' = F'*E is polynomial, a second solve gives G'' with
// B''*G'' = I_m, and A'' := E*G'' = A'*V^{-1} closes both identities.
EquivalenceCert<MonicFraction> horrocks_free_basis(const HorrocksInput& input,
                                                   unsigned escalation_ceiling = 10,
                                                   HorrocksTrace* trace = nullptr);

}  // namespace qs

#endif  // QS_HORROCKS_HPP
