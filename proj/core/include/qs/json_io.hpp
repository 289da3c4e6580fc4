#ifndef QS_JSON_IO_HPP
#define QS_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "qs/certificate.hpp"
#include "qs/fraction.hpp"
#include "qs/horrocks.hpp"
#include "qs/matrix.hpp"
#include "qs/multipoly.hpp"
#include "qs/patching.hpp"
#include "qs/point_ideal.hpp"
#include "qs/solver.hpp"

namespace qs {

// Order-preserving JSON type: serialization emits fields in the documented
// order, so identical data always produces byte-identical text.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Serialization.  All output is canonical: polynomial terms in descending
// lexicographic exponent order, coefficients as exact "p/q" strings, matrix
// entries row-major.
// ---------------------------------------------------------------------------

// {"vars": ["x","y"], "terms": [{"c": "3/2", "e": [2,0]}, ...]}
Json poly_to_json(const MultiPoly& f);

// {"num": <poly>, "den": <poly>, "var": "x"}
Json fraction_to_json(const MonicFraction& f);

// {"point": {"y": "0"}}
Json point_ideal_to_json(const PointIdeal& ideal);

// {"rows": r, "cols": c, "entries": [<poly or fraction>, ...]}
Json mat_to_json(const PolyMat& m);
Json mat_to_json(const FracMat& m);

// {"E": <mat>, "F": <mat>, "A": <mat>, "B": <mat>}
Json cert_to_json(const EquivalenceCert<MultiPoly>& cert);
Json cert_to_json(const EquivalenceCert<MonicFraction>& cert);

// {"E": <mat>, "j": <poly>, "A": <mat>, "B": <mat>, "var": "x", "aux": "y"}
Json translation_cert_to_json(const TranslationCertificate& cert);

// Renders with two-space indentation and a trailing newline; the textual
// form is a pure function of the data.
std::string dump_json(const Json& j);

// ---------------------------------------------------------------------------
// Parsing.  Structural problems (missing fields, wrong types, unknown or
// mismatched variable lists, malformed literals, duplicate terms) raise
// ParseError; semantic violations surface through the library's own error
// kinds.  The `expect` overloads additionally require the object's variable
// list to match an already-known context.
// ---------------------------------------------------------------------------

MultiPoly poly_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j, const VarContextPtr& expect);

MonicFraction fraction_from_json(const Json& j);
MonicFraction fraction_from_json(const Json& j, const VarContextPtr& expect);

// The context cannot be inferred from a bare point file, so it is supplied.
PointIdeal point_ideal_from_json(const Json& j, const VarContextPtr& ctx);

PolyMat polymat_from_json(const Json& j);
PolyMat polymat_from_json(const Json& j, const VarContextPtr& expect);
FracMat fracmat_from_json(const Json& j);
FracMat fracmat_from_json(const Json& j, const VarContextPtr& expect);

EquivalenceCert<MultiPoly> poly_cert_from_json(const Json& j);
EquivalenceCert<MonicFraction> frac_cert_from_json(const Json& j);

TranslationCertificate translation_cert_from_json(const Json& j);

// {"E": <polymat>, "A": <fracmat>, "B": <fracmat>, "var": "x"} plus a
// separate point file; the ideal is bound to E's context.
HorrocksInput horrocks_input_from_json(const Json& input, const Json& point);

// {"entries": [{"point": {...}, "A": <fracmat>, "B": <fracmat>}, ...],
//  "coefficients": [<poly>, ...]} over a caller-supplied context.
Cover cover_from_json(const Json& j, const VarContextPtr& ctx);

// {"max_point_height": 100, "degree_escalation_ceiling": 10, "trace": false}
// Every key optional; unknown keys rejected.
SolverConfig config_from_json(const Json& j);

// Reads a whole file as JSON; nonexistent files and syntax errors raise
// ParseError.
Json load_json_file(const std::string& path);

}  // namespace qs

#endif  // QS_JSON_IO_HPP
