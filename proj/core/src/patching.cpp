#include "qs/patching.hpp"

#include <string>
#include <utility>

#include "qs/error.hpp"

namespace qs {

namespace {

bool mat_depends_on(const PolyMat& m, std::size_t v) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).depends_on(v)) return true;
  return false;
}

// The translation endomorphism x -> x + j*y, entry-wise.
Substitution shift_by(const VarContextPtr& ctx, std::size_t var, std::size_t aux,
                      const MultiPoly& j) {
  return {var, MultiPoly::variable(ctx, var) + j * MultiPoly::variable(ctx, aux)};
}

void require_variable_pair(const VarContextPtr& ctx, std::size_t var, std::size_t aux,
                           const char* where) {
  if (var >= ctx->size() || aux >= ctx->size())
    fail(ErrorKind::UnknownVariable, std::string(where) + ": variable index out of range");
  if (var == aux)
    fail(ErrorKind::InvalidInput,
         std::string(where) + ": the distinguished and translation variables coincide");
}

}  // namespace

VerifyReport verify_translation(const TranslationCertificate& c) {
  const VarContextPtr& ctx = c.E.context();
  if (c.var >= ctx->size() || c.aux >= ctx->size() || c.var == c.aux)
    return {false, "variable pair is malformed"};
  if (!c.E.is_square() || c.A.rows() != c.E.rows() || c.A.cols() != c.E.cols() ||
      c.B.rows() != c.E.rows() || c.B.cols() != c.E.cols())
    return {false, "matrix shapes disagree"};
  if (!same_context(ctx, c.A.context()) || !same_context(ctx, c.B.context()) ||
      !same_context(ctx, c.j.context()))
    return {false, "matrices use different variable contexts"};
  if (!c.E.is_idempotent()) return {false, "E*E = E"};
  if (mat_depends_on(c.E, c.aux)) return {false, "E involves the translation variable"};
  if (c.j.depends_on(c.var) || c.j.depends_on(c.aux))
    return {false, "j lies outside the base ring"};
  PolyMat shifted = substitute_mat(c.E, shift_by(ctx, c.var, c.aux, c.j));
  if (c.A * c.B != shifted) return {false, "A*B = E(x -> x + j*y)"};
  if (c.B * c.A != c.E) return {false, "B*A = E"};
  return {true, ""};
}

TranslationCertificate translation_from_local_trivialization(
    const PolyMat& E, const FracMat& A, const FracMat& B, const PointIdeal& ideal,
    std::size_t var, std::size_t aux) {
  const VarContextPtr& ctx = E.context();
  require_variable_pair(ctx, var, aux, "translation_from_local_trivialization");
  require_same_context(ctx, A.context(), "translation_from_local_trivialization");
  require_same_context(ctx, B.context(), "translation_from_local_trivialization");
  require_same_context(ctx, ideal.context(), "translation_from_local_trivialization");
  if (ideal.assigns(var) || ideal.assigns(aux))
    fail(ErrorKind::InvalidInput,
         "the point must not constrain the distinguished or translation variable");
  if (!E.is_square() || A.rows() != E.rows() || B.cols() != E.cols() ||
      A.cols() != B.rows())
    fail(ErrorKind::DimensionMismatch, "trivialization shapes");
  if (!E.is_idempotent()) fail(ErrorKind::NotIdempotent, "E*E != E");
  if (mat_depends_on(E, aux))
    fail(ErrorKind::InvalidInput, "E involves the translation variable");
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A.at(i, j).num().depends_on(aux) || A.at(i, j).den().depends_on(aux))
        fail(ErrorKind::InvalidInput, "A involves the translation variable");
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      if (B.at(i, j).num().depends_on(aux) || B.at(i, j).den().depends_on(aux))
        fail(ErrorKind::InvalidInput, "B involves the translation variable");
  if (A * B != to_fractions(E))
    fail(ErrorKind::InvalidInput, "A*B != E over the localization");
  if (!(B * A).is_identity())
    fail(ErrorKind::InvalidInput, "B*A != I over the localization");

  Substitution shift = shift_by(ctx, var, aux, MultiPoly(ctx, Rational(1)));
  FracMat C = A * substitute_mat(B, shift);
  FracMat D = substitute_mat(A, shift) * B;

  MultiPoly r = common_denominator(C.hstack(D));
  if (r.depends_on(var) || r.depends_on(aux))
    fail(ErrorKind::InvalidInput,
         "denominators involve the distinguished or translation variable");
  if (ideal.vanishes(r))
    fail(ErrorKind::DenominatorInIdeal,
         "the denominator-clearing element '" + r.to_string() +
             "' vanishes at the point");

  Substitution rescale{aux, r * MultiPoly::variable(ctx, aux)};
  TranslationCertificate cert{E, r, to_polynomials(substitute_mat(D, rescale)),
                              to_polynomials(substitute_mat(C, rescale)), var, aux};
  VerifyReport report = verify_translation(cert);
  if (!report.pass)
    fail(ErrorKind::Internal, "translation certificate failed: " + report.first_failure);
  return cert;
}

TranslationCertificate cert_add(const TranslationCertificate& c1,
                                const TranslationCertificate& c2) {
  if (!same_context(c1.E.context(), c2.E.context()) || c1.E != c2.E)
    fail(ErrorKind::MismatchedE, "certificates are over different idempotents");
  if (c1.var != c2.var || c1.aux != c2.aux)
    fail(ErrorKind::MismatchedE, "certificates use different variable pairs");
  const VarContextPtr& ctx = c1.E.context();

  // (x -> x + j2*y) carries c1's equivalence one step further along c2's
  // translation; the middle idempotents then agree and the certificates
  // compose.
  Substitution shift = shift_by(ctx, c1.var, c1.aux, c2.j);
  PolyMat middle = substitute_mat(c1.E, shift);
  EquivalenceCert<MultiPoly> left{
      substitute_mat(c1.E, shift_by(ctx, c1.var, c1.aux, c1.j + c2.j)), middle,
      substitute_mat(c1.A, shift), substitute_mat(c1.B, shift)};
  EquivalenceCert<MultiPoly> right{middle, c2.E, c2.A, c2.B};
  EquivalenceCert<MultiPoly> composed = compose_certificates(left, right);

  TranslationCertificate out{c1.E, c1.j + c2.j, std::move(composed.A),
                             std::move(composed.B), c1.var, c1.aux};
  VerifyReport report = verify_translation(out);
  if (!report.pass)
    fail(ErrorKind::Internal, "certificate addition failed: " + report.first_failure);
  return out;
}

TranslationCertificate cert_scale(const TranslationCertificate& c, const MultiPoly& r) {
  require_same_context(c.E.context(), r.context(), "cert_scale");
  if (r.depends_on(c.var) || r.depends_on(c.aux))
    fail(ErrorKind::InvalidInput, "the scalar lies outside the base ring");
  Substitution rescale{c.aux, r * MultiPoly::variable(c.E.context(), c.aux)};
  TranslationCertificate out{c.E, c.j * r, substitute_mat(c.A, rescale),
                             substitute_mat(c.B, rescale), c.var, c.aux};
  VerifyReport report = verify_translation(out);
  if (!report.pass)
    fail(ErrorKind::Internal, "certificate scaling failed: " + report.first_failure);
  return out;
}

TranslationCertificate bezout_combine(const std::vector<TranslationCertificate>& certs,
                                      const std::vector<MultiPoly>& coefficients) {
  if (certs.empty() || certs.size() != coefficients.size())
    fail(ErrorKind::InvalidInput, "need matching, nonempty certificate and "
                                  "coefficient lists");
  MultiPoly sum(certs.front().E.context());
  for (std::size_t i = 0; i < certs.size(); ++i) sum += coefficients[i] * certs[i].j;
  if (!sum.is_one())
    fail(ErrorKind::NotBezout,
         "the combination sums to '" + sum.to_string() + "', not 1");

  TranslationCertificate acc = cert_scale(certs[0], coefficients[0]);
  for (std::size_t i = 1; i < certs.size(); ++i)
    acc = cert_add(acc, cert_scale(certs[i], coefficients[i]));
  if (!acc.j.is_one()) fail(ErrorKind::Internal, "combined certificate is not for 1");
  return acc;
}

EquivalenceCert<MultiPoly> specialize_to_zero(const TranslationCertificate& c) {
  if (!c.j.is_one())
    fail(ErrorKind::NotUnitTranslation,
         "specialization needs a certificate for j = 1, got '" + c.j.to_string() + "'");
  VerifyReport input_report = verify_translation(c);
  if (!input_report.pass)
    fail(ErrorKind::InvalidInput,
         "certificate does not verify: " + input_report.first_failure);
  const VarContextPtr& ctx = c.E.context();

  Substitution to_minus_x{c.aux, MultiPoly(ctx) - MultiPoly::variable(ctx, c.var)};
  EquivalenceCert<MultiPoly> out{
      substitute_mat(c.E, Substitution{c.var, MultiPoly(ctx)}), c.E,
      substitute_mat(c.A, to_minus_x), substitute_mat(c.B, to_minus_x)};
  VerifyReport report = verify_certificate(out);
  if (!report.pass)
    fail(ErrorKind::Internal, "specialization failed: " + report.first_failure);
  return out;
}

}  // namespace qs
