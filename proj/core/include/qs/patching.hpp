#ifndef QS_PATCHING_HPP
#define QS_PATCHING_HPP

#include <cstddef>
#include <vector>

#include "qs/certificate.hpp"
#include "qs/matrix.hpp"
#include "qs/point_ideal.hpp"

namespace qs {

// A certificate that translating x by j*y preserves the equivalence class
// of the idempotent E:
//     A * B = E^(x -> x + j*y)   and   B * A = E,   exactly, over R[x,y].
// All four pieces live in one shared variable context; `var` is the
// distinguished x, `aux` the translation variable y, and R is spanned by
// the remaining variables: E must be free of aux, and j free of both var
// and aux.  The set J of admissible j is an ideal of R — witnessed
// constructively by cert_add and cert_scale below.
struct TranslationCertificate {
  PolyMat E;
  MultiPoly j;
  PolyMat A, B;
  std::size_t var = 0;
  std::size_t aux = 0;
};

// Checks the defining conditions in a fixed order and reports the first
// violation: shapes agree, E*E = E, E is free of aux, j lies in R,
// A*B = E^(x -> x+j*y), B*A = E.
VerifyReport verify_translation(const TranslationCertificate& c);

// From a local trivialization of E — A*B = E and B*A = I_m over R_m[x],
// denominators var- and aux-free and invertible at the point — build a
// translation certificate for some j = r outside the maximal ideal: with
// C := A * B^(x->x+y) and D := A^(x->x+y) * B over R_m[x,y], the least
// common denominator r of the entries of C and D clears both after
// y -> r*y (the y^0 coefficient of C is A*B = E itself, and the y^k
// coefficient picks up the factor r^k), giving
//     cert.A := D^(y->r*y),  cert.B := C^(y->r*y)   over R[x,y],
//     cert.A * cert.B = E^(x->x+r*y),  cert.B * cert.A = E.
// Throws DenominatorInIdeal if r lands in the ideal (impossible for valid
// inputs; defensive) and InvalidInput for malformed inputs.
TranslationCertificate translation_from_local_trivialization(
    const PolyMat& E, const FracMat& A, const FracMat& B, const PointIdeal& ideal,
    std::size_t var, std::size_t aux);

// Certificate for j1 + j2: applies (x -> x + j2*y) to c1's matrices, which
// shifts its equivalence to target E^(x -> x + (j1+j2)*y) ~ E^(x -> x+j2*y),
// then composes with c2.  Throws MismatchedE unless both certificates are
// over the same E and the same variable pair.
TranslationCertificate cert_add(const TranslationCertificate& c1,
                                const TranslationCertificate& c2);

// Certificate for j * r, r in R: applies (y -> r*y) to the matrices; E has
// no y in it, so the B*A side is untouched.
TranslationCertificate cert_scale(const TranslationCertificate& c, const MultiPoly& r);

// Bezout combination: given certificates for j_1..j_k and coefficients
// u_1..u_k in R with sum u_i*j_i = 1, folds cert_scale over cert_add into
// a certificate for 1 — the constructive core of "J is contained in no
// maximal ideal, hence 1 lies in J".  Throws NotBezout when the sum is
// not 1.
TranslationCertificate bezout_combine(const std::vector<TranslationCertificate>& certs,
                                      const std::vector<MultiPoly>& coefficients);

// From a certificate for j = 1, substitute y -> -x:
//     A^(y->-x) * B^(y->-x) = E^(x->0),   B^(y->-x) * A^(y->-x) = E,
// an equivalence certificate E^(x->0) ~ E with matrices free of both y and
// the translation (the aux variable is simply unused afterwards).  Throws
// NotUnitTranslation unless j = 1.
EquivalenceCert<MultiPoly> specialize_to_zero(const TranslationCertificate& c);

}  // namespace qs

#endif  // QS_PATCHING_HPP
