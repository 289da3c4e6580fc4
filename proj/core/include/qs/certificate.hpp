#ifndef QS_CERTIFICATE_HPP
#define QS_CERTIFICATE_HPP

#include <string>

#include "qs/matrix.hpp"

namespace qs {

// Witness that two idempotent matrices present isomorphic modules:
//   E = A*B (n x n),  F = B*A (m x m),  A: n x m,  B: m x n.
// Over the coordinate rings here, im(E) and im(F) are then isomorphic as
// modules, via the mutually inverse maps B (restricted to im E) and A.
// Freeness certificates are the special case F = identity.
template <class T>
struct EquivalenceCert {
  Mat<T> E, F, A, B;
};

struct VerifyReport {
  bool pass = false;
  std::string first_failure;  // empty when pass
};

// Checks the four defining identities in a fixed order and reports the
// first violation: E*E = E, F*F = F, B*A = F, A*B = E.  Shape problems are
// reported as failures rather than thrown.
template <class T>
VerifyReport verify_certificate(const EquivalenceCert<T>& c) {
  const std::size_t n = c.E.rows(), m = c.F.rows();
  if (!c.E.is_square()) return {false, "E is not square"};
  if (!c.F.is_square()) return {false, "F is not square"};
  if (c.A.rows() != n || c.A.cols() != m) return {false, "A has the wrong shape"};
  if (c.B.rows() != m || c.B.cols() != n) return {false, "B has the wrong shape"};
  if (!same_context(c.E.context(), c.F.context()) ||
      !same_context(c.E.context(), c.A.context()) ||
      !same_context(c.E.context(), c.B.context()))
    return {false, "matrices use different variable contexts"};
  if (c.E * c.E != c.E) return {false, "E*E = E"};
  if (c.F * c.F != c.F) return {false, "F*F = F"};
  if (c.B * c.A != c.F) return {false, "B*A = F"};
  if (c.A * c.B != c.E) return {false, "A*B = E"};
  return {true, ""};
}

// From a split pair S: n x m, T: m x n with T*S = I_m, builds the
// certificate (E = S*T, F = I_m, A = S, B = T); E is idempotent because
// E*E = S*(T*S)*T = S*T.  Throws NotSplitPair when T*S is not the identity.
template <class T>
EquivalenceCert<T> make_idempotent(const Mat<T>& S, const Mat<T>& Tm) {
  require_same_context(S.context(), Tm.context(), "make_idempotent");
  if (S.cols() != Tm.rows() || S.rows() != Tm.cols())
    fail(ErrorKind::DimensionMismatch, "make_idempotent shapes");
  if (!(Tm * S).is_identity())
    fail(ErrorKind::NotSplitPair, "T*S is not the identity");
  return {S * Tm, Mat<T>::identity(S.context(), S.cols()), S, Tm};
}

// Transitivity: from E ~ F and F ~ G, certifies E ~ G with A = A1*A2 and
// B = B2*B1.  Throws MiddleMismatch unless c1.F equals c2.E.
template <class T>
EquivalenceCert<T> compose_certificates(const EquivalenceCert<T>& c1,
                                        const EquivalenceCert<T>& c2) {
  if (c1.F != c2.E)
    fail(ErrorKind::MiddleMismatch, "middle idempotents disagree");
  return {c1.E, c2.F, c1.A * c2.A, c2.B * c1.B};
}

// Symmetry: E ~ F becomes F ~ E by exchanging the roles of A and B.
template <class T>
EquivalenceCert<T> swap_certificate(const EquivalenceCert<T>& c) {
  return {c.F, c.E, c.B, c.A};
}

// Reflexivity: E ~ E with A = B = E (idempotence makes both identities hold).
template <class T>
EquivalenceCert<T> identity_certificate(const Mat<T>& E) {
  return {E, E, E, E};
}

// Freeness certificate: E ~ I_m with the given A, B.
template <class T>
EquivalenceCert<T> make_free_certificate(Mat<T> E, Mat<T> A, Mat<T> B) {
  Mat<T> F = Mat<T>::identity(E.context(), B.rows());
  return {std::move(E), std::move(F), std::move(A), std::move(B)};
}

template <class T>
bool is_free_certificate(const EquivalenceCert<T>& c) {
  return c.F.is_identity();
}

}  // namespace qs

#endif  // QS_CERTIFICATE_HPP
