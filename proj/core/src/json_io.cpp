#include "qs/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qs/error.hpp"
#include "qs/rational.hpp"

namespace qs {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& detail) {
  fail(ErrorKind::ParseError, what + ": " + detail);
}

const Json& field(const Json& j, const char* name, const std::string& what) {
  if (!j.is_object()) bad(what, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(what, std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const Json& j, const char* name, const std::string& what) {
  const Json& v = field(j, name, what);
  if (!v.is_string()) bad(what, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::size_t size_field(const Json& j, const char* name, const std::string& what) {
  const Json& v = field(j, name, what);
  if (!v.is_number_unsigned())
    bad(what, std::string("field '") + name + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

VarContextPtr context_from_json(const Json& j, const std::string& what) {
  const Json& vars = field(j, "vars", what);
  if (!vars.is_array()) bad(what, "'vars' must be an array of names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  names.reserve(vars.size());
  for (const Json& v : vars) {
    if (!v.is_string() || v.get<std::string>().empty())
      bad(what, "'vars' must be an array of nonempty strings");
    if (!seen.insert(v.get<std::string>()).second)
      bad(what, "duplicate variable '" + v.get<std::string>() + "'");
    names.push_back(v.get<std::string>());
  }
  return VarContext::make(std::move(names));
}

void check_context(const Json& j, const VarContextPtr& expect, const std::string& what) {
  const VarContextPtr found = context_from_json(j, what);
  if (found->names() != expect->names())
    bad(what, "variable list does not match the surrounding document");
}

MultiPoly poly_in_context(const Json& j, const VarContextPtr& ctx,
                          const std::string& what) {
  const Json& terms = field(j, "terms", what);
  if (!terms.is_array()) bad(what, "'terms' must be an array");
  MultiPoly f(ctx);
  std::set<Exponents, DescLex> seen;
  for (const Json& term : terms) {
    const std::string coeff_text = string_field(term, "c", what);
    const Rational coeff = rational_from_string(coeff_text);
    if (coeff == 0) bad(what, "zero coefficient in term list");
    const Json& exps = field(term, "e", what);
    if (!exps.is_array() || exps.size() != ctx->size())
      bad(what, "'e' must list one exponent per variable");
    Exponents e;
    e.reserve(exps.size());
    for (const Json& x : exps) {
      if (!x.is_number_unsigned() ||
          x.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
        bad(what, "exponents must be small nonnegative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    if (!seen.insert(e).second) bad(what, "duplicate exponent vector in term list");
    f.add_term(e, coeff);
  }
  return f;
}

std::size_t var_index(const std::string& name, const VarContextPtr& ctx,
                      const std::string& what) {
  if (!ctx->has(name)) bad(what, "unknown variable '" + name + "'");
  return ctx->index_of(name);
}

MonicFraction fraction_in_context(const Json& j, const VarContextPtr& ctx,
                                  const std::string& what) {
  // A bare polynomial object is accepted as the fraction with denominator 1.
  if (j.is_object() && !j.contains("num")) {
    check_context(j, ctx, what);
    return MonicFraction(poly_in_context(j, ctx, what));
  }
  const Json& num = field(j, "num", what);
  const Json& den = field(j, "den", what);
  check_context(num, ctx, what + " numerator");
  check_context(den, ctx, what + " denominator");
  const std::size_t var = var_index(string_field(j, "var", what), ctx, what);
  MultiPoly d = poly_in_context(den, ctx, what + " denominator");
  if (d.is_zero()) bad(what, "zero denominator");
  return MonicFraction(poly_in_context(num, ctx, what + " numerator"), d, var);
}

template <class T, class EntryParser>
Mat<T> mat_in_context(const Json& j, const VarContextPtr& ctx, const std::string& what,
                      EntryParser parse_entry) {
  const std::size_t rows = size_field(j, "rows", what);
  const std::size_t cols = size_field(j, "cols", what);
  const Json& entries = field(j, "entries", what);
  if (!entries.is_array() || entries.size() != rows * cols)
    bad(what, "'entries' must hold rows*cols items in row-major order");
  Mat<T> m(ctx, rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_entry(entries[k++], ctx, what);
  return m;
}

VarContextPtr matrix_context(const Json& j, const std::string& what) {
  const Json& entries = field(j, "entries", what);
  if (!entries.is_array() || entries.empty())
    bad(what, "cannot infer variables: no entries");
  const Json& first = entries[0];
  if (first.is_object() && first.contains("num"))
    return context_from_json(field(first, "num", what), what);
  return context_from_json(first, what);
}

MultiPoly poly_entry(const Json& j, const VarContextPtr& ctx, const std::string& what) {
  if (j.is_object() && j.contains("num"))
    bad(what, "expected a polynomial entry, found a fraction");
  check_context(j, ctx, what);
  return poly_in_context(j, ctx, what);
}

MonicFraction frac_entry(const Json& j, const VarContextPtr& ctx,
                         const std::string& what) {
  return fraction_in_context(j, ctx, what);
}

}  // namespace

Json poly_to_json(const MultiPoly& f) {
  Json j;
  j["vars"] = f.context()->names();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json term;
    term["c"] = rational_to_string(c);
    term["e"] = e;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json fraction_to_json(const MonicFraction& f) {
  Json j;
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  j["var"] = f.num().context()->name(f.var());
  return j;
}

Json point_ideal_to_json(const PointIdeal& ideal) {
  Json point = Json::object();
  for (const auto& [v, a] : ideal.point())
    point[ideal.context()->name(v)] = rational_to_string(a);
  Json j;
  j["point"] = std::move(point);
  return j;
}

namespace {

template <class T, class EntrySerializer>
Json mat_to_json_impl(const Mat<T>& m, EntrySerializer serialize) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(serialize(m.at(i, c)));
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace

Json mat_to_json(const PolyMat& m) {
  return mat_to_json_impl(m, [](const MultiPoly& f) { return poly_to_json(f); });
}

Json mat_to_json(const FracMat& m) {
  return mat_to_json_impl(m, [](const MonicFraction& f) { return fraction_to_json(f); });
}

namespace {

template <class T>
Json cert_to_json_impl(const EquivalenceCert<T>& cert) {
  Json j;
  j["E"] = mat_to_json(cert.E);
  j["F"] = mat_to_json(cert.F);
  j["A"] = mat_to_json(cert.A);
  j["B"] = mat_to_json(cert.B);
  return j;
}

}  // namespace

Json cert_to_json(const EquivalenceCert<MultiPoly>& cert) {
  return cert_to_json_impl(cert);
}

Json cert_to_json(const EquivalenceCert<MonicFraction>& cert) {
  return cert_to_json_impl(cert);
}

Json translation_cert_to_json(const TranslationCertificate& cert) {
  Json j;
  j["E"] = mat_to_json(cert.E);
  j["j"] = poly_to_json(cert.j);
  j["A"] = mat_to_json(cert.A);
  j["B"] = mat_to_json(cert.B);
  j["var"] = cert.E.context()->name(cert.var);
  j["aux"] = cert.E.context()->name(cert.aux);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

MultiPoly poly_from_json(const Json& j) {
  return poly_in_context(j, context_from_json(j, "polynomial"), "polynomial");
}

MultiPoly poly_from_json(const Json& j, const VarContextPtr& expect) {
  check_context(j, expect, "polynomial");
  return poly_in_context(j, expect, "polynomial");
}

MonicFraction fraction_from_json(const Json& j) {
  const VarContextPtr ctx =
      context_from_json(field(j, "num", "fraction"), "fraction numerator");
  return fraction_in_context(j, ctx, "fraction");
}

MonicFraction fraction_from_json(const Json& j, const VarContextPtr& expect) {
  return fraction_in_context(j, expect, "fraction");
}

PointIdeal point_ideal_from_json(const Json& j, const VarContextPtr& ctx) {
  const Json& point = field(j, "point", "point ideal");
  if (!point.is_object()) bad("point ideal", "'point' must be an object");
  std::map<std::size_t, Rational> assigns;
  for (const auto& [name, value] : point.items()) {
    const std::size_t v = var_index(name, ctx, "point ideal");
    if (!value.is_string()) bad("point ideal", "values must be rational strings");
    assigns.emplace(v, rational_from_string(value.get<std::string>()));
  }
  return PointIdeal(ctx, std::move(assigns));
}

PolyMat polymat_from_json(const Json& j) {
  return mat_in_context<MultiPoly>(j, matrix_context(j, "matrix"), "matrix",
                                   poly_entry);
}

PolyMat polymat_from_json(const Json& j, const VarContextPtr& expect) {
  return mat_in_context<MultiPoly>(j, expect, "matrix", poly_entry);
}

FracMat fracmat_from_json(const Json& j) {
  return mat_in_context<MonicFraction>(j, matrix_context(j, "matrix"), "matrix",
                                       frac_entry);
}

FracMat fracmat_from_json(const Json& j, const VarContextPtr& expect) {
  return mat_in_context<MonicFraction>(j, expect, "matrix", frac_entry);
}

EquivalenceCert<MultiPoly> poly_cert_from_json(const Json& j) {
  PolyMat E = polymat_from_json(field(j, "E", "certificate"));
  // Copy: E is moved into the aggregate before the later fields are parsed.
  const VarContextPtr ctx = E.context();
  return {std::move(E), polymat_from_json(field(j, "F", "certificate"), ctx),
          polymat_from_json(field(j, "A", "certificate"), ctx),
          polymat_from_json(field(j, "B", "certificate"), ctx)};
}

EquivalenceCert<MonicFraction> frac_cert_from_json(const Json& j) {
  FracMat E = fracmat_from_json(field(j, "E", "certificate"));
  const VarContextPtr ctx = E.context();
  return {std::move(E), fracmat_from_json(field(j, "F", "certificate"), ctx),
          fracmat_from_json(field(j, "A", "certificate"), ctx),
          fracmat_from_json(field(j, "B", "certificate"), ctx)};
}

TranslationCertificate translation_cert_from_json(const Json& j) {
  PolyMat E = polymat_from_json(field(j, "E", "translation certificate"));
  const VarContextPtr ctx = E.context();
  TranslationCertificate cert{
      std::move(E), poly_from_json(field(j, "j", "translation certificate"), ctx),
      polymat_from_json(field(j, "A", "translation certificate"), ctx),
      polymat_from_json(field(j, "B", "translation certificate"), ctx), 0, 0};
  cert.var = var_index(string_field(j, "var", "translation certificate"), ctx,
                       "translation certificate");
  cert.aux = var_index(string_field(j, "aux", "translation certificate"), ctx,
                       "translation certificate");
  return cert;
}

HorrocksInput horrocks_input_from_json(const Json& input, const Json& point) {
  PolyMat E = polymat_from_json(field(input, "E", "Horrocks input"));
  const VarContextPtr ctx = E.context();
  FracMat A = fracmat_from_json(field(input, "A", "Horrocks input"), ctx);
  FracMat B = fracmat_from_json(field(input, "B", "Horrocks input"), ctx);
  PointIdeal ideal = point_ideal_from_json(point, ctx);
  const std::size_t var =
      var_index(string_field(input, "var", "Horrocks input"), ctx, "Horrocks input");
  return {std::move(E), std::move(A), std::move(B), std::move(ideal), var};
}

Cover cover_from_json(const Json& j, const VarContextPtr& ctx) {
  const Json& entries = field(j, "entries", "cover");
  if (!entries.is_array()) bad("cover", "'entries' must be an array");
  Cover cover;
  for (const Json& e : entries) {
    // The entry itself carries the standard {"point": {...}} encoding.
    cover.entries.push_back(
        CoverEntry{point_ideal_from_json(e, ctx),
                   fracmat_from_json(field(e, "A", "cover entry"), ctx),
                   fracmat_from_json(field(e, "B", "cover entry"), ctx)});
  }
  const Json& coeffs = field(j, "coefficients", "cover");
  if (!coeffs.is_array()) bad("cover", "'coefficients' must be an array");
  for (const Json& c : coeffs) cover.coefficients.push_back(poly_from_json(c, ctx));
  return cover;
}

SolverConfig config_from_json(const Json& j) {
  if (!j.is_object()) bad("config", "expected an object");
  SolverConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "max_point_height") {
      if (!value.is_number_unsigned())
        bad("config", "'max_point_height' must be a nonnegative integer");
      config.max_point_height = value.get<long>();
    } else if (key == "degree_escalation_ceiling") {
      if (!value.is_number_unsigned())
        bad("config", "'degree_escalation_ceiling' must be a nonnegative integer");
      config.degree_escalation_ceiling = value.get<unsigned>();
    } else if (key == "trace") {
      if (!value.is_boolean()) bad("config", "'trace' must be a boolean");
      config.trace = value.get<bool>();
    } else {
      bad("config", "unknown key '" + key + "'");
    }
  }
  return config;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

}  // namespace qs
