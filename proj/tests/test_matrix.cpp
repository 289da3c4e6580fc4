// Tests for matrices, equivalence certificates, Hermite presentations of
// idempotents, elementary factorizations, and the local linear solver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qs/certificate.hpp"
#include "qs/elementary.hpp"
#include "qs/error.hpp"
#include "qs/hermite.hpp"
#include "qs/linsolve.hpp"
#include "qs/matrix.hpp"
#include "qs/multipoly.hpp"
#include "qs/parse.hpp"
#include "support.hpp"

using namespace qs;
using namespace qs::testing;

// ---------------------------------------------------------------------------
// Oracles.  Plain triple loops and permanent-style determinant expansion,
// sharing none of the library's zero-skipping or cofactor code paths.
// ---------------------------------------------------------------------------

namespace {

template <class T>
Mat<T> matmul_oracle(const Mat<T>& a, const Mat<T>& b) {
  REQUIRE(a.cols() == b.rows());
  Mat<T> r(a.context(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

// Determinant as the signed sum over all permutations.
MultiPoly det_oracle(const PolyMat& m) {
  REQUIRE(m.is_square());
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  MultiPoly sum(m.context());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MultiPoly term(m.context(), Rational(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

PolyMat random_poly_mat(std::mt19937& rng, const VarContextPtr& c, std::size_t rows,
                        std::size_t cols, unsigned terms, unsigned max_deg) {
  PolyMat m(c, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, c, terms, max_deg);
  return m;
}

// Random conjugate P * diag(I_m, 0) * P^{-1} of the rank-m coordinate
// projection; P is a product of polynomial transvections, so P^{-1} is
// assembled alongside without any division.
PolyMat conjugated_idempotent(std::mt19937& rng, const VarContextPtr& c, std::size_t n,
                              std::size_t m, unsigned steps) {
  PolyMat E(c, n, n);
  for (std::size_t i = 0; i < m; ++i) E.at(i, i) = MultiPoly(c, Rational(1));
  PolyMat P = PolyMat::identity(c, n), Pinv = PolyMat::identity(c, n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (unsigned s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    MultiPoly coef = random_poly(rng, c, 2, 2);
    for (std::size_t k = 0; k < n; ++k) P.at(i, k) += coef * P.at(j, k);
    for (std::size_t k = 0; k < n; ++k) Pinv.at(k, j) -= Pinv.at(k, i) * coef;
  }
  REQUIRE((P * Pinv).is_identity());
  return P * E * Pinv;
}

// Fraction-entry analogue: transvection coefficients are polynomials in both
// variables divided by powers of (x + 1), so denominators stay in Q[x].
FracMat conjugated_idempotent_frac(std::mt19937& rng, const VarContextPtr& c, std::size_t n,
                                   std::size_t m, unsigned steps) {
  FracMat E(c, n, n);
  for (std::size_t i = 0; i < m; ++i)
    E.at(i, i) = MonicFraction(MultiPoly(c, Rational(1)));
  FracMat P = FracMat::identity(c, n), Pinv = FracMat::identity(c, n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> pick(0, 1);
  for (unsigned s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    MultiPoly num = random_poly(rng, c, 2, 1);
    MultiPoly den = pick(rng) ? parse_poly(c, "x+1") : MultiPoly(c, Rational(1));
    MonicFraction coef(num, den, 0);
    for (std::size_t k = 0; k < n; ++k) P.at(i, k) += coef * P.at(j, k);
    for (std::size_t k = 0; k < n; ++k) Pinv.at(k, j) -= Pinv.at(k, i) * coef;
  }
  REQUIRE((P * Pinv).is_identity());
  return P * E * Pinv;
}

template <class T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> top = a.hstack(Mat<T>(a.context(), a.rows(), b.cols()));
  Mat<T> bottom = Mat<T>(a.context(), b.rows(), a.cols()).hstack(b);
  return top.vstack(bottom);
}

// The rank-one idempotent from the unimodular column u = (1+xy, y^2, x)^T
// with retraction w = (1, 0, -y): w.u = 1, so E = u.w is idempotent.
struct ColumnInstance {
  VarContextPtr c = ctx({"x", "y"});
  PolyMat u, w;
  ColumnInstance() {
    u = PolyMat(c, 3, 1);
    u.at(0, 0) = p(c, "1+x*y");
    u.at(1, 0) = p(c, "y^2");
    u.at(2, 0) = p(c, "x");
    w = PolyMat(c, 1, 3);
    w.at(0, 0) = p(c, "1");
    w.at(0, 1) = p(c, "0");
    w.at(0, 2) = p(c, "-y");
  }
};

}  // namespace

TEST_CASE("matrix arithmetic matches the oracle and the ring axioms") {
  auto c = ctx({"x", "y"});
  std::mt19937 rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    PolyMat A = random_poly_mat(rng, c, 2, 3, 2, 2);
    PolyMat B = random_poly_mat(rng, c, 3, 2, 2, 2);
    PolyMat C = random_poly_mat(rng, c, 2, 2, 2, 2);
    CHECK(A * B == matmul_oracle(A, B));
    CHECK((A * B) * C == A * (B * C));
    CHECK((A * B + C) - C == A * B);
    CHECK((A * B).transpose() == B.transpose() * A.transpose());
    CHECK(PolyMat::identity(c, 2) * A == A);
    CHECK(A * PolyMat::identity(c, 3) == A);
    CHECK(-(-A) == A);
    PolyMat B2 = random_poly_mat(rng, c, 3, 2, 2, 2);
    CHECK(A * (B + B2) == A * B + A * B2);
  }
}

TEST_CASE("matrix shape and context violations are rejected") {
  auto c = ctx({"x"});
  PolyMat a(c, 2, 3), b(c, 2, 2);
  CHECK(error_kind_of([&] { (void)(a + b); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind_of([&] { (void)(a * a); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind_of([&] { (void)a.trace(); }) == ErrorKind::DimensionMismatch);
  // Contexts compare by variable names: a freshly built {"x"} is compatible,
  // a context with different names is not.
  PolyMat twin(ctx({"x"}), 2, 3);
  CHECK((a + twin) == a + twin);
  PolyMat other(ctx({"t"}), 2, 3);
  CHECK(error_kind_of([&] { (void)(a + other); }) == ErrorKind::ContextMismatch);
  CHECK(error_kind_of([&] { (void)a.at(5, 0); }) == ErrorKind::Internal);
}

TEST_CASE("stacking and submatrix extraction round-trip") {
  auto c = ctx({"x"});
  std::mt19937 rng(202);
  PolyMat A = random_poly_mat(rng, c, 2, 2, 2, 2);
  PolyMat B = random_poly_mat(rng, c, 1, 2, 2, 2);
  PolyMat S = A.vstack(B);
  CHECK(S.rows() == 3);
  CHECK(S.submatrix(0, 0, 2, 2) == A);
  CHECK(S.submatrix(2, 0, 1, 2) == B);
  PolyMat H = A.hstack(A);
  CHECK(H.cols() == 4);
  CHECK(H.submatrix(0, 2, 2, 2) == A);
  CHECK(error_kind_of([&] { (void)A.vstack(PolyMat(c, 1, 3)); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(error_kind_of([&] { (void)A.submatrix(1, 1, 2, 2); }) == ErrorKind::Internal);
}

TEST_CASE("fraction and polynomial matrices convert both ways") {
  auto c = ctx({"x"});
  std::mt19937 rng(303);
  PolyMat A = random_poly_mat(rng, c, 2, 2, 3, 3);
  CHECK(to_polynomials(to_fractions(A)) == A);

  FracMat F(c, 2, 2);
  F.at(0, 0) = frac(c, "1", "x");
  F.at(0, 1) = frac(c, "1", "x+1");
  F.at(1, 0) = frac(c, "3", "1");
  CHECK(error_kind_of([&] { (void)to_polynomials(F); }) == ErrorKind::InvalidInput);

  MultiPoly lcd = common_denominator(F);
  CHECK(lcd == p(c, "x^2+x"));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK((F.at(i, j) * MonicFraction(lcd)).is_polynomial());
  CHECK(common_denominator(FracMat(c, 0, 0)) == p(c, "1"));
}

TEST_CASE("matrix substitution, reduction, and context transport") {
  auto c = ctx({"x", "y"});
  PolyMat A(c, 1, 2);
  A.at(0, 0) = p(c, "x*y+1");
  A.at(0, 1) = p(c, "x");

  PolyMat shifted = substitute_mat(A, Substitution{0, p(c, "x+y")});
  CHECK(shifted.at(0, 0) == p(c, "x*y+y^2+1"));
  CHECK(shifted.at(0, 1) == p(c, "x+y"));

  PointIdeal at_y0(c, {{1, Rational(0)}});
  PolyMat red = reduce_mat(A, at_y0);
  CHECK(red.at(0, 0) == p(c, "1"));
  CHECK(red.at(0, 1) == p(c, "x"));

  FracMat Fr(c, 1, 1);
  Fr.at(0, 0) = frac(c, "1", "y+1");
  CHECK(reduce_mat(Fr, at_y0).at(0, 0) == MonicFraction(p(c, "1")));
  Fr.at(0, 0) = frac(c, "1", "y");
  CHECK(error_kind_of([&] { (void)reduce_mat(Fr, at_y0); }) == ErrorKind::NotLocalAtPoint);

  auto cx = ctx({"x"});
  PolyMat small(cx, 1, 1);
  small.at(0, 0) = p(cx, "x^2+1");
  PolyMat big = embed_mat(small, c);
  CHECK(big.at(0, 0) == p(c, "x^2+1"));
  CHECK(restrict_mat(big, cx) == small);
  PolyMat bad(c, 1, 1);
  bad.at(0, 0) = p(c, "y");
  CHECK(error_kind_of([&] { (void)restrict_mat(bad, cx); }) == ErrorKind::UnknownVariable);
}

TEST_CASE("determinants match the permutation expansion") {
  auto c = ctx({"x", "y"});
  PolyMat M(c, 2, 2);
  M.at(0, 0) = p(c, "1+x*y");
  M.at(0, 1) = p(c, "x");
  M.at(1, 0) = p(c, "y");
  M.at(1, 1) = p(c, "1");
  CHECK(det_poly(M) == p(c, "1"));

  std::mt19937 rng(404);
  for (int rep = 0; rep < 20; ++rep) {
    PolyMat R = random_poly_mat(rng, c, 3, 3, 2, 2);
    CHECK(det_poly(R) == det_oracle(R));
  }
  CHECK(det_poly(PolyMat(c, 0, 0)) == p(c, "1"));
  CHECK(error_kind_of([&] { (void)det_poly(PolyMat(c, 2, 3)); }) ==
        ErrorKind::DimensionMismatch);

  FracMat F(c, 2, 2);
  F.at(0, 0) = frac(c, "1", "x");
  F.at(1, 1) = frac(c, "x", "1");
  CHECK(det_frac(F) == MonicFraction(p(c, "1")));
}

TEST_CASE("the unimodular-column certificate verifies and is free") {
  ColumnInstance inst;
  PolyMat E = inst.u * inst.w;
  CHECK(E.is_idempotent());
  CHECK(E.trace() == p(inst.c, "1"));

  EquivalenceCert<MultiPoly> cert{E, PolyMat::identity(inst.c, 1), inst.u, inst.w};
  VerifyReport rep = verify_certificate(cert);
  CHECK(rep.pass);
  CHECK(rep.first_failure.empty());
  CHECK(is_free_certificate(cert));
  // The intertwining identity follows from the four defining ones.
  CHECK(cert.E * cert.A == cert.A * cert.F);
}

TEST_CASE("certificate verification reports the first failing identity") {
  ColumnInstance inst;
  PolyMat E = inst.u * inst.w;
  PolyMat I1 = PolyMat::identity(inst.c, 1);
  EquivalenceCert<MultiPoly> good{E, I1, inst.u, inst.w};

  // Corrupting one entry of B breaks B*A = F first.
  EquivalenceCert<MultiPoly> bad_b = good;
  bad_b.B.at(0, 1) = p(inst.c, "1");
  VerifyReport rep = verify_certificate(bad_b);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_failure == "B*A = F");

  EquivalenceCert<MultiPoly> bad_e = good;
  bad_e.E.at(0, 0) = p(inst.c, "x");
  CHECK(verify_certificate(bad_e).first_failure == "E*E = E");

  EquivalenceCert<MultiPoly> bad_f = good;
  bad_f.F.at(0, 0) = p(inst.c, "2");
  CHECK(verify_certificate(bad_f).first_failure == "F*F = F");

  // Identity in place of E: every earlier identity holds, A*B = E fails.
  EquivalenceCert<MultiPoly> bad_ab = good;
  bad_ab.E = PolyMat::identity(inst.c, 3);
  CHECK(verify_certificate(bad_ab).first_failure == "A*B = E");

  EquivalenceCert<MultiPoly> bad_shape = good;
  bad_shape.A = PolyMat(inst.c, 2, 1);
  CHECK(verify_certificate(bad_shape).first_failure == "A has the wrong shape");

  EquivalenceCert<MultiPoly> bad_ctx = good;
  bad_ctx.F = PolyMat::identity(ctx({"u", "v"}), 1);
  CHECK(verify_certificate(bad_ctx).first_failure ==
        "matrices use different variable contexts");
}

TEST_CASE("make_idempotent certifies split pairs and rejects others") {
  ColumnInstance inst;
  auto cert = make_idempotent(inst.u, inst.w);
  CHECK(verify_certificate(cert).pass);
  CHECK(cert.E == inst.u * inst.w);
  CHECK(cert.F == PolyMat::identity(inst.c, 1));
  CHECK(cert.A == inst.u);
  CHECK(cert.B == inst.w);

  auto c = ctx({"x", "y"});
  PolyMat S(c, 2, 1), T(c, 1, 2);
  S.at(0, 0) = p(c, "x");
  S.at(1, 0) = p(c, "y");
  T.at(0, 0) = p(c, "1");
  T.at(0, 1) = p(c, "1");
  CHECK(error_kind_of([&] { (void)make_idempotent(S, T); }) == ErrorKind::NotSplitPair);
  PolyMat T3(c, 1, 3);
  CHECK(error_kind_of([&] { (void)make_idempotent(S, T3); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("certificates compose, swap, and start from idempotents") {
  ColumnInstance inst;
  auto c1 = make_idempotent(inst.u, inst.w);

  auto sw = swap_certificate(c1);
  CHECK(verify_certificate(sw).pass);
  CHECK(sw.E == c1.F);
  CHECK(sw.F == c1.E);

  auto round_trip = compose_certificates(c1, sw);
  CHECK(verify_certificate(round_trip).pass);
  CHECK(round_trip.E == c1.E);
  CHECK(round_trip.F == c1.E);

  auto idc = identity_certificate(c1.E);
  CHECK(verify_certificate(idc).pass);
  auto extended = compose_certificates(idc, c1);
  CHECK(verify_certificate(extended).pass);
  CHECK(extended.F == c1.F);

  CHECK(error_kind_of([&] { (void)compose_certificates(c1, c1); }) ==
        ErrorKind::MiddleMismatch);

  auto freed = make_free_certificate(c1.E, c1.A, c1.B);
  CHECK(verify_certificate(freed).pass);
  CHECK(is_free_certificate(freed));
}

TEST_CASE("direct sums of certificates verify blockwise") {
  ColumnInstance inst;
  auto c1 = make_idempotent(inst.u, inst.w);

  PolyMat E2(inst.c, 2, 2);
  E2.at(0, 0) = p(inst.c, "1");
  E2.at(0, 1) = p(inst.c, "x");
  auto [C2, D2] = hermite_basis_of_idempotent(E2, 0);
  EquivalenceCert<MultiPoly> c2{E2, PolyMat::identity(inst.c, 1), C2, D2};
  REQUIRE(verify_certificate(c2).pass);

  EquivalenceCert<MultiPoly> sum{direct_sum(c1.E, c2.E), direct_sum(c1.F, c2.F),
                                 direct_sum(c1.A, c2.A), direct_sum(c1.B, c2.B)};
  VerifyReport rep = verify_certificate(sum);
  CHECK(rep.pass);
  CHECK(sum.E.rows() == 5);
  CHECK(sum.F.is_identity());
  CHECK(sum.E * sum.A == sum.A * sum.F);
}

TEST_CASE("hermite presentation of simple idempotents") {
  auto c = ctx({"x"});

  PolyMat E(c, 2, 2);
  E.at(0, 0) = p(c, "1");
  auto [C, D] = hermite_basis_of_idempotent(E, 0);
  CHECK(D.rows() == 1);
  CHECK(D.at(0, 0) == p(c, "1"));
  CHECK(D.at(0, 1) == p(c, "0"));
  CHECK(C.at(0, 0) == p(c, "1"));
  CHECK(C.at(1, 0) == p(c, "0"));

  PolyMat E2(c, 2, 2);
  E2.at(0, 0) = p(c, "1");
  E2.at(0, 1) = p(c, "x");
  auto [C2, D2] = hermite_basis_of_idempotent(E2, 0);
  CHECK(D2.at(0, 0) == p(c, "1"));
  CHECK(D2.at(0, 1) == p(c, "x"));
  CHECK(C2.at(0, 0) == p(c, "1"));
  CHECK(C2.at(1, 0) == p(c, "0"));
  CHECK(C2 * D2 == E2);
  CHECK((D2 * C2).is_identity());

  // The zero module presents with no rows at all.
  PolyMat Z(c, 2, 2);
  auto [CZ, DZ] = hermite_basis_of_idempotent(Z, 0);
  CHECK(DZ.rows() == 0);
  CHECK(DZ.cols() == 2);
  CHECK(CZ.rows() == 2);
  CHECK(CZ.cols() == 0);
  CHECK(CZ * DZ == Z);
  CHECK((DZ * CZ).is_identity());

  // Constant matrices reduce with no distinguished variable at all.
  auto [Cn, Dn] = hermite_basis_of_idempotent(E, NO_VARIABLE);
  CHECK(Dn == D);
  CHECK(Cn == C);

  PolyMat notid(c, 1, 1);
  notid.at(0, 0) = p(c, "x");
  CHECK(error_kind_of([&] { (void)hermite_basis_of_idempotent(notid, 0); }) ==
        ErrorKind::NotIdempotent);
  CHECK(error_kind_of([&] { (void)hermite_basis_of_idempotent(PolyMat(c, 1, 2), 0); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(error_kind_of([&] { (void)hermite_basis_of_idempotent(E, 5); }) ==
        ErrorKind::UnknownVariable);

  // Entries must stay univariate: dividing by a second variable is refused.
  auto cxy = ctx({"x", "y"});
  PolyMat mixed(cxy, 2, 2);
  mixed.at(0, 1) = p(cxy, "y");
  mixed.at(1, 1) = p(cxy, "1");
  REQUIRE(mixed.is_idempotent());
  CHECK(error_kind_of([&] { (void)hermite_basis_of_idempotent(mixed, 0); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("hermite presentation over fractions hits the frozen instance") {
  auto c = ctx({"x", "y"});
  // I - w.v for the unimodular row v = (1+xy, x) with witness w = (1, -y)^T.
  PolyMat Ebar(c, 2, 2);
  Ebar.at(0, 0) = p(c, "-x*y");
  Ebar.at(0, 1) = p(c, "-x");
  Ebar.at(1, 0) = p(c, "y+x*y^2");
  Ebar.at(1, 1) = p(c, "1+x*y");
  FracMat E = to_fractions(Ebar);
  REQUIRE(E.is_idempotent());

  auto [C, D] = hermite_basis_of_idempotent_frac(E, 1);
  CHECK(D.rows() == 1);
  CHECK(D.at(0, 0) == MonicFraction(p(c, "y")));
  CHECK(D.at(0, 1) == MonicFraction(p(c, "1")));
  CHECK(C.at(0, 0) == MonicFraction(p(c, "-x")));
  CHECK(C.at(1, 0) == MonicFraction(p(c, "1+x*y")));
  CHECK(C * D == E);
  CHECK((D * C).is_identity());

  // A denominator living in the reduction variable is rejected.
  FracMat badden(c, 2, 2);
  badden.at(0, 1) = frac(c, "1", "y+1");
  badden.at(1, 1) = MonicFraction(p(c, "1"));
  REQUIRE(badden.is_idempotent());
  CHECK(error_kind_of([&] { (void)hermite_basis_of_idempotent_frac(badden, 1); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("hermite presentations of random conjugated idempotents") {
  auto c = ctx({"x"});
  std::mt19937 rng(505);
  for (std::size_t m = 0; m <= 3; ++m) {
    for (int rep = 0; rep < 10; ++rep) {
      PolyMat E = conjugated_idempotent(rng, c, 3, m, 3);
      REQUIRE(E.is_idempotent());
      CHECK(E.trace() == MultiPoly(c, Rational(static_cast<long>(m))));
      auto [C, D] = hermite_basis_of_idempotent(E, 0);
      CHECK(D.rows() == m);
      CHECK(C * D == E);
      CHECK((D * C).is_identity());
    }
  }
}

TEST_CASE("hermite presentations of random fraction idempotents") {
  auto c = ctx({"x", "y"});
  std::mt19937 rng(606);
  for (std::size_t m = 0; m <= 2; ++m) {
    for (int rep = 0; rep < 6; ++rep) {
      FracMat E = conjugated_idempotent_frac(rng, c, 2, m, 2);
      REQUIRE(E.is_idempotent());
      auto [C, D] = hermite_basis_of_idempotent_frac(E, 1);
      CHECK(D.rows() == m);
      CHECK(C * D == E);
      CHECK((D * C).is_identity());
    }
  }
}

TEST_CASE("elementary factorization of pinned matrices") {
  auto c = ctx({"x"});

  FracMat two(c, 1, 1);
  two.at(0, 0) = MonicFraction(p(c, "2"));
  auto factors = elementary_factorization(two);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].kind == ElementaryFactor::Kind::Dilation);
  CHECK(factors[0].i == 0);
  CHECK(factors[0].scalar == MonicFraction(p(c, "2")));

  CHECK(elementary_factorization(FracMat::identity(c, 3)).empty());

  FracMat swap2(c, 2, 2);
  swap2.at(0, 1) = MonicFraction(p(c, "1"));
  swap2.at(1, 0) = MonicFraction(p(c, "1"));
  auto sf = elementary_factorization(swap2);
  CHECK(sf.size() <= 2 * 2 + 2);
  CHECK(product_of_factors(c, 2, sf) == swap2);

  FracMat diag(c, 2, 2);
  diag.at(0, 0) = frac(c, "x", "1");
  diag.at(1, 1) = frac(c, "1", "x");
  auto df = elementary_factorization(diag);
  CHECK(product_of_factors(c, 2, df) == diag);

  FracMat singular(c, 2, 2);
  singular.at(0, 0) = frac(c, "x", "1");
  singular.at(0, 1) = frac(c, "x", "1");
  singular.at(1, 0) = MonicFraction(p(c, "1"));
  singular.at(1, 1) = MonicFraction(p(c, "1"));
  CHECK(error_kind_of([&] { (void)elementary_factorization(singular); }) ==
        ErrorKind::SingularMatrix);
  CHECK(error_kind_of([&] { (void)elementary_factorization(FracMat(c, 2, 2)); }) ==
        ErrorKind::SingularMatrix);
  CHECK(error_kind_of([&] { (void)elementary_factorization(FracMat(c, 2, 3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("elementary factorization round-trips random invertible matrices") {
  auto c = ctx({"x"});
  std::mt19937 rng(707);
  std::uniform_int_distribution<std::size_t> idx(0, 2);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int rep = 0; rep < 25; ++rep) {
    // Build M as a random product of elementary factors, then refactor.
    std::vector<ElementaryFactor> build;
    for (int s = 0; s < 6; ++s) {
      std::size_t i = idx(rng), j = idx(rng);
      MultiPoly num = random_poly(rng, c, 2, 2);
      MultiPoly den = pick(rng) == 0 ? p(c, "x+1") : p(c, "1");
      if (i != j) {
        build.push_back({ElementaryFactor::Kind::Transvection, i, j,
                         MonicFraction(num, den, 0)});
      } else if (!num.is_zero()) {
        build.push_back({ElementaryFactor::Kind::Dilation, i, i,
                         MonicFraction(num, den, 0)});
      }
    }
    FracMat M = product_of_factors(c, 3, build);
    auto factors = elementary_factorization(M);
    CHECK(factors.size() <= 3 * 3 + 3);
    CHECK(product_of_factors(c, 3, factors) == M);
    FracMat Minv = product_of_factors(c, 3, inverse_factors(factors));
    CHECK((Minv * M).is_identity());
    CHECK((M * Minv).is_identity());
  }
}

TEST_CASE("factor application agrees with explicit factor matrices") {
  auto c = ctx({"x"});
  std::mt19937 rng(808);
  ElementaryFactor t{ElementaryFactor::Kind::Transvection, 0, 2, frac(c, "x", "x+1")};
  ElementaryFactor d{ElementaryFactor::Kind::Dilation, 1, 1, frac(c, "x+1", "1")};
  for (int rep = 0; rep < 10; ++rep) {
    FracMat M = to_fractions(random_poly_mat(rng, c, 3, 3, 2, 2));
    for (const auto& f : {t, d}) {
      FracMat left = M;
      apply_factor_left(left, f);
      CHECK(left == factor_matrix(c, 3, f) * M);
      FracMat right = M;
      apply_factor_right(right, f);
      CHECK(right == M * factor_matrix(c, 3, f));
    }
  }
  CHECK(t.inverse().scalar == frac(c, "-x", "x+1"));
  CHECK(d.inverse().scalar == frac(c, "1", "x+1"));
  ElementaryFactor bad{ElementaryFactor::Kind::Transvection, 1, 1,
                       MonicFraction(p(c, "1"))};
  CHECK(error_kind_of([&] { (void)factor_matrix(c, 3, bad); }) == ErrorKind::Internal);
}

TEST_CASE("point valuations count vanishing orders") {
  auto c = ctx({"x"});
  PointIdeal at0(c, {{0, Rational(0)}});
  PointIdeal at1(c, {{0, Rational(1)}});
  CHECK(point_valuation(frac(c, "x^3+x^2", "x-1"), at0) == 2);
  CHECK(point_valuation(frac(c, "x^3+x^2", "x-1"), at1) == -1);
  CHECK(point_valuation(MonicFraction(p(c, "5")), at0) == 0);
  CHECK(point_valuation(frac(c, "1", "x^2"), at0) == -2);
  CHECK(point_valuation(frac(c, "x^3+x^2", "x-1"), PointIdeal::trivial(c)) == 0);

  auto cxy = ctx({"x", "y"});
  PointIdeal origin(cxy, {{0, Rational(0)}, {1, Rational(0)}});
  CHECK(point_valuation(MonicFraction(p(cxy, "x+y")), origin) == 1);
  CHECK(point_valuation(MonicFraction(p(cxy, "1+x")), origin) == 0);
}

TEST_CASE("local solver keeps solutions inside the local ring") {
  auto c = ctx({"x"});
  PointIdeal at0(c, {{0, Rational(0)}});

  // Plain elimination with the trivial ideal.
  {
    std::vector<std::vector<MonicFraction>> lhs = {
        {MonicFraction(p(c, "1")), MonicFraction(p(c, "x"))},
        {MonicFraction(p(c, "0")), MonicFraction(p(c, "1"))}};
    std::vector<MonicFraction> rhs = {MonicFraction(p(c, "x+1")),
                                      MonicFraction(p(c, "1"))};
    auto sol = solve_over_local_ring(lhs, rhs, PointIdeal::trivial(c));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == MonicFraction(p(c, "1")));
    CHECK((*sol)[1] == MonicFraction(p(c, "1")));
  }

  // Minimal-valuation pivoting avoids dividing by the uniformizer: the
  // system x*a + b = 1 gets the local solution (0, 1), not (1/x, 0).
  {
    std::vector<std::vector<MonicFraction>> lhs = {
        {MonicFraction(p(c, "x")), MonicFraction(p(c, "1"))}};
    std::vector<MonicFraction> rhs = {MonicFraction(p(c, "1"))};
    auto sol = solve_over_local_ring(lhs, rhs, at0);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == MonicFraction(p(c, "0")));
    CHECK((*sol)[1] == MonicFraction(p(c, "1")));
  }

  // x*a = 1 has no solution in the ring local at x = 0.
  {
    std::vector<std::vector<MonicFraction>> lhs = {{MonicFraction(p(c, "x"))}};
    std::vector<MonicFraction> rhs = {MonicFraction(p(c, "1"))};
    CHECK_FALSE(solve_over_local_ring(lhs, rhs, at0).has_value());
  }

  // Inconsistent systems are reported, not mangled.
  {
    std::vector<std::vector<MonicFraction>> lhs = {{MonicFraction(p(c, "1"))},
                                                   {MonicFraction(p(c, "1"))}};
    std::vector<MonicFraction> rhs = {MonicFraction(p(c, "1")),
                                      MonicFraction(p(c, "2"))};
    CHECK_FALSE(solve_over_local_ring(lhs, rhs, at0).has_value());
  }

  // Free unknowns come back as zero.
  {
    std::vector<std::vector<MonicFraction>> lhs = {
        {MonicFraction(p(c, "1")), MonicFraction(p(c, "1"))}};
    std::vector<MonicFraction> rhs = {MonicFraction(p(c, "2"))};
    auto sol = solve_over_local_ring(lhs, rhs, PointIdeal::trivial(c));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == MonicFraction(p(c, "2")));
    CHECK((*sol)[1] == MonicFraction(p(c, "0")));
  }

  CHECK(error_kind_of([&] {
          (void)solve_over_local_ring({{MonicFraction(p(c, "1"))}}, {}, at0);
        }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("local solver solves random consistent systems exactly") {
  auto c = ctx({"x"});
  PointIdeal at0(c, {{0, Rational(0)}});
  std::mt19937 rng(909);
  std::uniform_int_distribution<int> pick(0, 2);
  auto local_entry = [&]() {
    MultiPoly num = random_poly(rng, c, 2, 2);
    MultiPoly den = pick(rng) == 0 ? p(c, "x+1") : p(c, "1");
    return MonicFraction(num, den, 0);
  };
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t rows = 3, cols = 4;
    std::vector<std::vector<MonicFraction>> lhs(rows);
    for (auto& row : lhs) {
      row.reserve(cols);
      for (std::size_t j = 0; j < cols; ++j) row.push_back(local_entry());
    }
    std::vector<MonicFraction> x0;
    x0.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) x0.push_back(local_entry());
    std::vector<MonicFraction> rhs(rows, MonicFraction(MultiPoly(c)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) rhs[i] += lhs[i][j] * x0[j];

    auto sol = solve_over_local_ring(lhs, rhs, at0);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < rows; ++i) {
      MonicFraction acc{MultiPoly(c)};
      for (std::size_t j = 0; j < cols; ++j) acc += lhs[i][j] * (*sol)[j];
      CHECK(acc == rhs[i]);
    }
    for (const auto& entry : *sol) {
      if (!entry.is_zero()) CHECK_FALSE(at0.vanishes(entry.den()));
    }
  }
}
