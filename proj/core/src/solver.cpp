#include "qs/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "qs/error.hpp"
#include "qs/hermite.hpp"
#include "qs/horrocks.hpp"
#include "qs/linsolve.hpp"
#include "qs/patching.hpp"

namespace qs {

namespace {

void require_config(const SolverConfig& config) {
  if (config.max_point_height < 1 || config.degree_escalation_ceiling < 1)
    fail(ErrorKind::InvalidInput, "config bounds must be positive");
}

void note(std::vector<std::string>* log, std::string line) {
  if (log) log->push_back(std::move(line));
}

std::vector<std::size_t> depended_vars(const PolyMat& m) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < m.context()->size(); ++v) {
    bool used = false;
    for (std::size_t i = 0; i < m.rows() && !used; ++i)
      for (std::size_t j = 0; j < m.cols() && !used; ++j)
        used = m.at(i, j).depends_on(v);
    if (used) vars.push_back(v);
  }
  return vars;
}

// Division by an arbitrary nonzero divisor univariate in `var`, wrapping the
// monic long division: f = q*g + r with deg_var(r) < deg_var(g).
std::pair<MultiPoly, MultiPoly> field_divmod(const MultiPoly& f, const MultiPoly& g,
                                             std::size_t var) {
  MultiPoly lead = g.leading_coeff_in(var);
  if (!lead.is_constant())
    fail(ErrorKind::InvalidInput, "divisor is not univariate in the base variable");
  const Rational inv_lc = Rational(1) / lead.constant_term();
  if (g.deg_in(var) <= 0) return {inv_lc * f, MultiPoly(f.context())};
  auto [q, r] = poly_divmod(f, inv_lc * g, var);
  return {inv_lc * q, r};
}

struct ExtGcd {
  MultiPoly g, s, t;  // s*a + t*b = g, leading coefficient of g is 1
};

ExtGcd extended_euclid(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const VarContextPtr& ctx = a.context();
  MultiPoly r0 = a, r1 = b;
  MultiPoly s0(ctx, Rational(1)), s1(ctx);
  MultiPoly t0(ctx), t1(ctx, Rational(1));
  while (!r1.is_zero()) {
    auto [q, rem] = field_divmod(r0, r1, var);
    MultiPoly snext = s0 - q * s1;
    MultiPoly tnext = t0 - q * t1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snext;
    t0 = t1;
    t1 = tnext;
  }
  if (!r0.is_zero()) {
    const Rational inv_lc =
        Rational(1) / r0.leading_coeff_in(var).constant_term();
    r0 = inv_lc * r0;
    s0 = inv_lc * s0;
    t0 = inv_lc * t0;
  }
  if (s0 * a + t0 * b != r0) fail(ErrorKind::Internal, "extended Euclid identity");
  return {r0, s0, t0};
}

// Coefficients u with sum(u_i * r_i) = gcd(r_1...r_k), by a left fold of
// the extended Euclidean algorithm in the single base variable.
std::pair<MultiPoly, std::vector<MultiPoly>> bezout_chain(
    const std::vector<MultiPoly>& rs, std::size_t var) {
  MultiPoly g(rs.front().context());
  std::vector<MultiPoly> coeffs;
  for (const MultiPoly& r : rs) {
    ExtGcd step = extended_euclid(g, r, var);
    for (MultiPoly& c : coeffs) c *= step.s;
    coeffs.push_back(step.t);
    g = step.g;
  }
  return {g, coeffs};
}

// Positive divisors of |n| that are at most `bound`, ascending.
std::vector<long> bounded_divisors(const mpz_class& n, long bound) {
  mpz_class mag = abs(n);
  std::vector<long> out;
  for (long d = 1; d <= bound; ++d)
    if (mpz_divisible_ui_p(mag.get_mpz_t(), static_cast<unsigned long>(d)) != 0)
      out.push_back(d);
  return out;
}

std::string point_to_string(const PointIdeal& ideal) {
  std::string s;
  for (const auto& [v, a] : ideal.point()) {
    if (!s.empty()) s += ", ";
    s += ideal.context()->name(v) + " = " + rational_to_string(a);
  }
  return s;
}

EquivalenceCert<MultiPoly> free_basis_rec(const PolyMat& E, const SolverConfig& config,
                                          const Cover* cover,
                                          std::vector<std::string>* log);

// One level of the induction for matrices involving two or more variables:
// translate the first involved variable away and recurse.
EquivalenceCert<MultiPoly> patch_level(const PolyMat& E,
                                       const std::vector<std::size_t>& vars,
                                       const SolverConfig& config, const Cover* cover,
                                       std::vector<std::string>* log) {
  const VarContextPtr& ctx = E.context();
  const std::size_t x = vars[0];

  // Work in a context extended by a fresh translation variable.  Appending
  // preserves the indices of the existing variables.
  const VarContextPtr ctxx = ctx->extended(ctx->fresh_name("t"));
  const std::size_t aux = ctx->size();
  const PolyMat Ex = embed_mat(E, ctxx);

  std::vector<TranslationCertificate> certs;
  std::vector<MultiPoly> amounts;       // the r_i, over ctxx
  std::vector<MultiPoly> coefficients;  // Bezout data, over ctxx

  if (cover != nullptr) {
    if (cover->entries.empty())
      fail(ErrorKind::InvalidInput, "cover has no entries");
    note(log, "gluing " + std::to_string(cover->entries.size()) +
                  " supplied local trivializations");
    for (const CoverEntry& entry : cover->entries) {
      require_same_context(ctx, entry.ideal.context(), "cover entry");
      PointIdeal ideal(ctxx, entry.ideal.point());
      certs.push_back(translation_from_local_trivialization(
          Ex, embed_mat(entry.A, ctxx), embed_mat(entry.B, ctxx), ideal, x, aux));
      amounts.push_back(certs.back().j);
      note(log, "  at " + point_to_string(ideal) + ": r = " + amounts.back().to_string());
    }
    coefficients.reserve(cover->coefficients.size());
    for (const MultiPoly& u : cover->coefficients)
      coefficients.push_back(embed(u, ctxx));
  } else {
    // Automatic operation, exactly two variables: x distinguished, t base.
    const std::size_t base = vars[1];
    note(log, "two variables: distinguished " + ctx->name(x) + ", base " +
                  ctx->name(base));

    // One trivialization over Q(x)[t] serves every localization of Q[t] at
    // once: its denominators lie in Q[x] and stay invertible at any point.
    auto [Chat, Dhat] = hermite_basis_of_idempotent_frac(to_fractions(Ex), base);

    long guard = -1;
    while (true) {
      PointIdeal ideal;
      if (certs.empty()) {
        ideal = PointIdeal(ctxx, {{base, Rational(0)}});
      } else {
        std::optional<PointIdeal> next = rational_point_search(amounts, config);
        if (!next) break;  // the amounts span the unit ideal
        ideal = *next;
      }
      note(log, "  Horrocks at " + point_to_string(ideal));
      HorrocksInput input{Ex, Chat, Dhat, ideal, x};
      EquivalenceCert<MonicFraction> local =
          horrocks_free_basis(input, config.degree_escalation_ceiling);
      certs.push_back(
          translation_from_local_trivialization(Ex, local.A, local.B, ideal, x, aux));
      amounts.push_back(certs.back().j);
      note(log, "  r = " + amounts.back().to_string());
      if (guard < 0) guard = amounts.front().deg_in(base) + 2;
      if (static_cast<long>(certs.size()) > guard)
        fail(ErrorKind::Internal, "patching loop failed to make progress");
    }

    auto [g, u] = bezout_chain(amounts, base);
    if (!g.is_one())
      fail(ErrorKind::Internal, "Bezout chain stopped at '" + g.to_string() + "'");
    coefficients = std::move(u);
  }

  TranslationCertificate glued = bezout_combine(certs, coefficients);
  EquivalenceCert<MultiPoly> spec = specialize_to_zero(glued);

  // The translation variable is gone from every entry; return to the
  // original context and recurse on the specialized idempotent.
  EquivalenceCert<MultiPoly> low{restrict_mat(spec.E, ctx), restrict_mat(spec.F, ctx),
                                 restrict_mat(spec.A, ctx), restrict_mat(spec.B, ctx)};
  note(log, "specialized " + ctx->name(x) + " -> 0; recursing");
  EquivalenceCert<MultiPoly> sub = free_basis_rec(low.E, config, nullptr, log);
  return compose_certificates(swap_certificate(low), sub);
}

EquivalenceCert<MultiPoly> free_basis_rec(const PolyMat& E, const SolverConfig& config,
                                          const Cover* cover,
                                          std::vector<std::string>* log) {
  const std::vector<std::size_t> vars = depended_vars(E);
  const std::size_t v = vars.size();
  if (v == 0) {
    note(log, "constant idempotent: Gaussian reduction over Q");
    auto [C, D] = hermite_basis_of_idempotent(E, NO_VARIABLE);
    return make_free_certificate(E, C, D);
  }
  if (v == 1) {
    note(log, "one variable: Hermite reduction in " + E.context()->name(vars[0]));
    auto [C, D] = hermite_basis_of_idempotent(E, vars[0]);
    return make_free_certificate(E, C, D);
  }
  if (v > 2 && cover == nullptr)
    fail(ErrorKind::UnsupportedDimension,
         "automatic operation handles at most two variables; " + std::to_string(v) +
             " require a user-supplied cover");
  return patch_level(E, vars, config, cover, log);
}

// Deterministic monomial basis: exponent vectors supported on `vars` with
// total degree at most `max_deg`, ascending by degree and then by ascending
// lexicographic order.
void monomials_of_degree(const VarContextPtr& ctx, const std::vector<std::size_t>& vars,
                         std::size_t position, long remaining, Exponents& current,
                         std::vector<Exponents>& out) {
  if (position == vars.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (long e = 0; e <= remaining; ++e) {
    current[vars[position]] = static_cast<std::uint32_t>(e);
    monomials_of_degree(ctx, vars, position + 1, remaining - e, current, out);
  }
  current[vars[position]] = 0;
}

std::vector<Exponents> monomials_up_to(const VarContextPtr& ctx,
                                       const std::vector<std::size_t>& vars,
                                       long max_deg) {
  std::vector<Exponents> out;
  Exponents current(ctx->size(), 0);
  for (long d = 0; d <= max_deg; ++d)
    monomials_of_degree(ctx, vars, 0, d, current, out);
  return out;
}

// Bounded-degree witness search: a column w with v*w = 1, the coefficients
// of w solving an exact linear system over Q.
PolyMat find_witness(const PolyMat& v, const SolverConfig& config) {
  const VarContextPtr& ctx = v.context();
  const std::size_t n = v.cols();
  const std::vector<std::size_t> vars = depended_vars(v);
  long degv = 0;
  for (std::size_t j = 0; j < n; ++j)
    degv = std::max(degv, v.at(0, j).total_degree());
  const long max_deg = degv + static_cast<long>(config.degree_escalation_ceiling);
  const PointIdeal trivial = PointIdeal::trivial(ctx);
  const Exponents zero_exp(ctx->size(), 0);

  for (long d = 0; d <= max_deg; ++d) {
    const std::vector<Exponents> monos = monomials_up_to(ctx, vars, d);
    const std::size_t cols = n * monos.size();

    // Column (j, m) of the system is the coefficient vector of
    // v_j * monomial_m; the rows are indexed by every exponent that occurs.
    std::vector<MultiPoly> columns;
    columns.reserve(cols);
    std::map<Exponents, std::size_t, DescLex> row_of;
    row_of.emplace(zero_exp, 0);  // the target 1 lives in the constant row
    for (std::size_t j = 0; j < n; ++j)
      for (const Exponents& e : monos) {
        columns.push_back(v.at(0, j) * MultiPoly::monomial(ctx, e, Rational(1)));
        for (const auto& [exp, coeff] : columns.back().terms())
          row_of.emplace(exp, row_of.size());
      }

    const std::size_t rows = row_of.size();
    const MonicFraction zero{MultiPoly(ctx)};
    std::vector<std::vector<MonicFraction>> lhs(
        rows, std::vector<MonicFraction>(cols, zero));
    std::vector<MonicFraction> rhs(rows, zero);
    rhs[row_of.at(zero_exp)] = MonicFraction(MultiPoly(ctx, Rational(1)));
    for (std::size_t c = 0; c < cols; ++c)
      for (const auto& [exp, coeff] : columns[c].terms())
        lhs[row_of.at(exp)][c] = MonicFraction(MultiPoly(ctx, coeff));

    auto sol = solve_over_local_ring(lhs, rhs, trivial);
    if (!sol) continue;

    PolyMat w(ctx, n, 1);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < monos.size(); ++m) {
        const MonicFraction& c = (*sol)[j * monos.size() + m];
        if (c.is_zero()) continue;
        w.at(j, 0) += c.to_poly() * MultiPoly::monomial(ctx, monos[m], Rational(1));
      }
    if ((v * w).is_identity()) return w;
    fail(ErrorKind::Internal, "witness solve produced a non-witness");
  }
  fail(ErrorKind::NotUnimodular,
       "no witness with v*w = 1 up to total degree " + std::to_string(max_deg));
}

}  // namespace

std::optional<PointIdeal> rational_point_search(
    const std::vector<MultiPoly>& generators, const SolverConfig& config) {
  require_config(config);
  if (generators.empty())
    fail(ErrorKind::InvalidInput, "point search needs at least one generator");
  const VarContextPtr& ctx = generators.front().context();
  bool all_zero = true;
  std::vector<std::size_t> vars;
  for (const MultiPoly& g : generators) {
    require_same_context(ctx, g.context(), "rational_point_search");
    all_zero = all_zero && g.is_zero();
  }
  if (all_zero) fail(ErrorKind::InvalidInput, "all generators are zero");
  for (std::size_t v = 0; v < ctx->size(); ++v)
    for (const MultiPoly& g : generators)
      if (g.depends_on(v)) {
        vars.push_back(v);
        break;
      }
  if (vars.empty()) return std::nullopt;  // nonzero constants: the unit ideal
  if (vars.size() >= 2)
    fail(ErrorKind::UnsupportedDimension,
         "point search handles one variable; generators involve " +
             std::to_string(vars.size()));
  const std::size_t t = vars[0];

  MultiPoly g(ctx);
  for (const MultiPoly& gen : generators) g = poly_gcd(g, gen);
  if (g.deg_in(t) <= 0) return std::nullopt;  // constant gcd: the unit ideal

  // The origin first.
  if (evaluate_partial(g, {{t, Rational(0)}}).is_zero())
    return PointIdeal(ctx, {{t, Rational(0)}});

  // Primitive integer coefficients for the rational-root theorem.
  const std::vector<MultiPoly> coeff_polys = g.coefficients_in(t);
  std::vector<Rational> coeffs;
  coeffs.reserve(coeff_polys.size());
  mpz_class den_lcm = 1;
  for (const MultiPoly& c : coeff_polys) {
    coeffs.push_back(c.constant_term());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            coeffs.back().get_den().get_mpz_t());
  }
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  ints.reserve(coeffs.size());
  for (const Rational& c : coeffs) {
    Rational scaled = c * Rational(den_lcm);
    ints.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  for (mpz_class& c : ints) c /= content;
  const mpz_class& c0 = ints.front();  // nonzero: g(0) != 0
  const mpz_class& cd = ints.back();   // nonzero: leading coefficient

  struct Candidate {
    long height;
    Rational value;
  };
  std::vector<Candidate> candidates;
  for (long p : bounded_divisors(c0, config.max_point_height))
    for (long q : bounded_divisors(cd, config.max_point_height)) {
      if (std::gcd(p, q) != 1) continue;
      const long height = std::max(p, q);
      candidates.push_back({height, rat(p, q)});
      candidates.push_back({height, rat(-p, q)});
    }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.value < b.value;
            });
  for (const Candidate& cand : candidates)
    if (evaluate_partial(g, {{t, cand.value}}).is_zero())
      return PointIdeal(ctx, {{t, cand.value}});

  fail(ErrorKind::NonRationalLocus,
       "the locus of '" + g.to_string() + "' has no rational point within height " +
           std::to_string(config.max_point_height));
}

EquivalenceCert<MultiPoly> quillen_suslin_free_basis(const PolyMat& E,
                                                     const SolverConfig& config,
                                                     const Cover* cover,
                                                     std::vector<std::string>* log) {
  require_config(config);
  if (!E.is_square()) fail(ErrorKind::DimensionMismatch, "E must be square");
  if (!E.is_idempotent()) fail(ErrorKind::NotIdempotent, "E*E != E");

  EquivalenceCert<MultiPoly> cert = free_basis_rec(E, config, cover, log);
  const VerifyReport report = verify_certificate(cert);
  if (!report.pass)
    fail(ErrorKind::Internal, "solver certificate failed: " + report.first_failure);
  if (!is_free_certificate(cert))
    fail(ErrorKind::Internal, "solver certificate is not a freeness certificate");
  note(log, "free basis of rank " + std::to_string(cert.F.rows()) + " verified");
  return cert;
}

PolyMat complete_unimodular_row(const PolyMat& v, const SolverConfig& config,
                                const PolyMat* witness) {
  require_config(config);
  if (v.rows() != 1 || v.cols() == 0)
    fail(ErrorKind::DimensionMismatch, "need a nonempty single-row matrix");
  const VarContextPtr& ctx = v.context();
  const std::size_t n = v.cols();

  PolyMat w(ctx, n, 1);
  if (witness != nullptr) {
    require_same_context(ctx, witness->context(), "complete_unimodular_row");
    if (witness->rows() != n || witness->cols() != 1)
      fail(ErrorKind::DimensionMismatch, "witness shape does not match the row");
    if (!(v * *witness).is_identity())
      fail(ErrorKind::NotUnimodular, "supplied witness does not satisfy v*w = 1");
    w = *witness;
  } else {
    w = find_witness(v, config);
  }

  // E = w*v is idempotent of rank 1; the presentation rows of a free basis
  // of I - E are the missing n-1 rows of the completion.
  const EquivalenceCert<MultiPoly> rank_one = make_idempotent(w, v);
  const PolyMat complement = PolyMat::identity(ctx, n) - rank_one.E;
  const EquivalenceCert<MultiPoly> free_cert =
      quillen_suslin_free_basis(complement, config);

  const PolyMat completed = v.vstack(free_cert.B);
  const PolyMat inverse = w.hstack(free_cert.A);
  if (!(completed * inverse).is_identity())
    fail(ErrorKind::Internal, "completion is not invertible");
  return completed;
}

}  // namespace qs
