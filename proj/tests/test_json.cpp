// Tests for JSON serialization and parsing: canonical output shape,
// round-trips through text, and rejection of malformed documents.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "qs/certificate.hpp"
#include "qs/error.hpp"
#include "qs/json_io.hpp"
#include "qs/matrix.hpp"
#include "qs/multipoly.hpp"
#include "qs/parse.hpp"
#include "qs/patching.hpp"
#include "qs/point_ideal.hpp"
#include "qs/solver.hpp"
#include "support.hpp"

using namespace qs;
using namespace qs::testing;

TEST_CASE("polynomial serialization is canonical") {
  auto c = ctx({"x", "y"});

  SUBCASE("the documented shape, exactly") {
    Json j = poly_to_json(p(c, "3/2*x^2"));
    Json expect = Json::parse(R"({"vars":["x","y"],"terms":[{"c":"3/2","e":[2,0]}]})");
    CHECK(j == expect);
    // Field and term order are part of the contract: byte-compare the dump.
    CHECK(dump_json(j) ==
          "{\n  \"vars\": [\n    \"x\",\n    \"y\"\n  ],\n  \"terms\": [\n    {\n"
          "      \"c\": \"3/2\",\n      \"e\": [\n        2,\n        0\n      ]\n"
          "    }\n  ]\n}\n");
  }

  SUBCASE("terms come out in descending lexicographic exponent order") {
    Json j = poly_to_json(p(c, "y^2+x+1"));
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["e"] == Json::parse("[1,0]"));
    CHECK(j["terms"][1]["e"] == Json::parse("[0,2]"));
    CHECK(j["terms"][2]["e"] == Json::parse("[0,0]"));
  }

  SUBCASE("the zero polynomial has an empty term list") {
    Json j = poly_to_json(MultiPoly(c));
    CHECK(j["terms"].is_array());
    CHECK(j["terms"].empty());
    CHECK(poly_from_json(j, c).is_zero());
  }

  SUBCASE("negative and fractional coefficients round-trip as strings") {
    MultiPoly f = p(c, "-7/3*x*y+5*y-1/2");
    CHECK(poly_from_json(poly_to_json(f)) == f);
  }
}

TEST_CASE("polynomial parsing rejects malformed documents") {
  auto c = ctx({"x", "y"});
  auto parse_text = [](const char* text) { return poly_from_json(Json::parse(text)); };

  CHECK(error_kind_of([&] { parse_text(R"({"terms":[]})"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] { parse_text(R"({"vars":["x","x"],"terms":[]})"); }) ==
        ErrorKind::ParseError);
  CHECK(error_kind_of([&] { parse_text(R"({"vars":["x",3],"terms":[]})"); }) ==
        ErrorKind::ParseError);
  CHECK(error_kind_of([&] { parse_text(R"({"vars":["x"],"terms":{}})"); }) ==
        ErrorKind::ParseError);
  // Exponent list must match the variable count.
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x","y"],"terms":[{"c":"1","e":[1]}]})");
        }) == ErrorKind::ParseError);
  // Exponents must be nonnegative integers.
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x"],"terms":[{"c":"1","e":[-1]}]})");
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x"],"terms":[{"c":"1","e":[1.5]}]})");
        }) == ErrorKind::ParseError);
  // Coefficients are canonical rational strings, never numbers or zero.
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x"],"terms":[{"c":1,"e":[1]}]})");
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x"],"terms":[{"c":"1/0","e":[1]}]})");
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x"],"terms":[{"c":"0","e":[1]}]})");
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] {
          parse_text(R"({"vars":["x"],"terms":[{"c":"a","e":[1]}]})");
        }) == ErrorKind::ParseError);
  // Duplicate exponent vectors are not canonical.
  CHECK(error_kind_of([&] {
          parse_text(
              R"({"vars":["x"],"terms":[{"c":"1","e":[1]},{"c":"2","e":[1]}]})");
        }) == ErrorKind::ParseError);
  // The expect-context overload enforces the variable list.
  CHECK(error_kind_of([&] {
          poly_from_json(Json::parse(R"({"vars":["x"],"terms":[]})"), c);
        }) == ErrorKind::ParseError);
}

TEST_CASE("fractions round-trip and validate") {
  auto c = ctx({"x", "y"});

  SUBCASE("shape and round trip") {
    MonicFraction f = frac(c, "y", "x+2");
    Json j = fraction_to_json(f);
    CHECK(j["var"] == "x");
    CHECK(fraction_from_json(j) == f);
    CHECK(fraction_from_json(j, c) == f);
  }

  SUBCASE("normalization happens on parse, as in the constructor") {
    // 2x/2 normalizes to x/1.
    Json j = Json::parse(
        R"({"num":{"vars":["x"],"terms":[{"c":"2","e":[1]}]},
            "den":{"vars":["x"],"terms":[{"c":"2","e":[0]}]},
            "var":"x"})");
    MonicFraction f = fraction_from_json(j);
    CHECK(f.is_polynomial());
    CHECK(f.to_poly() == p(ctx({"x"}), "x"));
  }

  SUBCASE("a bare polynomial is accepted where a fraction is expected") {
    Json j = poly_to_json(p(c, "x*y"));
    MonicFraction f = fraction_from_json(j, c);
    CHECK(f.is_polynomial());
    CHECK(f.to_poly() == p(c, "x*y"));
  }

  SUBCASE("malformed fractions") {
    auto with = [&](const char* text) {
      return error_kind_of([&] { fraction_from_json(Json::parse(text), c); });
    };
    CHECK(with(R"({"num":{"vars":["x","y"],"terms":[]},"var":"x"})") ==
          ErrorKind::ParseError);
    // Zero denominator.
    CHECK(with(R"({"num":{"vars":["x","y"],"terms":[]},
                   "den":{"vars":["x","y"],"terms":[]},"var":"x"})") ==
          ErrorKind::ParseError);
    // Unknown localization variable.
    CHECK(with(R"({"num":{"vars":["x","y"],"terms":[]},
                   "den":{"vars":["x","y"],"terms":[{"c":"1","e":[0,0]}]},
                   "var":"z"})") == ErrorKind::ParseError);
    // Mismatched variable lists between numerator and denominator.
    CHECK(with(R"({"num":{"vars":["x","y"],"terms":[]},
                   "den":{"vars":["x"],"terms":[{"c":"1","e":[0]}]},
                   "var":"x"})") == ErrorKind::ParseError);
  }
}

TEST_CASE("point ideals round-trip") {
  auto c = ctx({"x", "y"});
  PointIdeal at(c, {{1, Rational(0)}});
  Json j = point_ideal_to_json(at);
  CHECK(j == Json::parse(R"({"point":{"y":"0"}})"));
  PointIdeal back = point_ideal_from_json(j, c);
  CHECK(back.assigns(1));
  CHECK_FALSE(back.assigns(0));
  CHECK(back.point().at(1) == Rational(0));

  PointIdeal two(c, {{0, rat(-1, 2)}, {1, Rational(3)}});
  CHECK(point_ideal_to_json(two) == Json::parse(R"({"point":{"x":"-1/2","y":"3"}})"));
  CHECK(point_ideal_from_json(point_ideal_to_json(two), c).point() == two.point());

  CHECK(point_ideal_from_json(Json::parse(R"({"point":{}})"), c).is_trivial());
  CHECK(error_kind_of([&] {
          point_ideal_from_json(Json::parse(R"({"point":{"z":"0"}})"), c);
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] {
          point_ideal_from_json(Json::parse(R"({"point":{"x":0}})"), c);
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] { point_ideal_from_json(Json::parse(R"({})"), c); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("matrices round-trip in row-major order") {
  auto c = ctx({"x", "y"});

  SUBCASE("polynomial matrices") {
    PolyMat m(c, 2, 3);
    m.at(0, 0) = p(c, "1+x*y");
    m.at(0, 2) = p(c, "-y");
    m.at(1, 1) = p(c, "x^2");
    Json j = mat_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    REQUIRE(j["entries"].size() == 6);
    // Row-major: entry (1,1) sits at index 4.
    CHECK(j["entries"][4] == poly_to_json(p(c, "x^2")));
    CHECK(polymat_from_json(j) == m);
    CHECK(polymat_from_json(j, c) == m);
  }

  SUBCASE("fraction matrices") {
    FracMat m(c, 2, 2);
    m.at(0, 0) = frac(c, "1", "x");
    m.at(0, 1) = frac(c, "-y", "x");
    m.at(1, 1) = MonicFraction(p(c, "1"));
    Json j = mat_to_json(m);
    CHECK(fracmat_from_json(j) == m);
    CHECK(fracmat_from_json(j, c) == m);
  }

  SUBCASE("malformed matrices") {
    auto kind_of_text = [&](const char* text) {
      return error_kind_of([&] { polymat_from_json(Json::parse(text)); });
    };
    CHECK(kind_of_text(R"({"rows":1,"cols":2,"entries":[]})") == ErrorKind::ParseError);
    CHECK(kind_of_text(R"({"rows":-1,"cols":2,"entries":[]})") == ErrorKind::ParseError);
    CHECK(kind_of_text(R"({"rows":0,"cols":0,"entries":[]})") == ErrorKind::ParseError);
    // Entries with differing variable lists.
    CHECK(kind_of_text(
              R"({"rows":1,"cols":2,"entries":[
                 {"vars":["x"],"terms":[]},{"vars":["y"],"terms":[]}]})") ==
          ErrorKind::ParseError);
    // A fraction where a polynomial is required.
    CHECK(kind_of_text(
              R"({"rows":1,"cols":1,"entries":[
                 {"num":{"vars":["x"],"terms":[]},
                  "den":{"vars":["x"],"terms":[{"c":"1","e":[0]}]},"var":"x"}]})") ==
          ErrorKind::ParseError);
  }
}

TEST_CASE("certificates round-trip") {
  auto c = ctx({"x", "y"});
  PolyMat w(c, 2, 1), v(c, 1, 2);
  w.at(0, 0) = p(c, "1");
  w.at(1, 0) = p(c, "-y");
  v.at(0, 0) = p(c, "1+x*y");
  v.at(0, 1) = p(c, "x");
  EquivalenceCert<MultiPoly> cert = make_idempotent(w, v);
  REQUIRE(verify_certificate(cert).pass);

  Json j = cert_to_json(cert);
  EquivalenceCert<MultiPoly> back = poly_cert_from_json(j);
  CHECK(back.E == cert.E);
  CHECK(back.F == cert.F);
  CHECK(back.A == cert.A);
  CHECK(back.B == cert.B);
  CHECK(verify_certificate(back).pass);

  SUBCASE("fraction certificates too") {
    EquivalenceCert<MonicFraction> fcert{to_fractions(cert.E), to_fractions(cert.F),
                                         to_fractions(cert.A), to_fractions(cert.B)};
    EquivalenceCert<MonicFraction> fback = frac_cert_from_json(cert_to_json(fcert));
    CHECK(fback.E == fcert.E);
    CHECK(verify_certificate(fback).pass);
  }

  SUBCASE("parsing is syntactic: corrupted certificates load, then fail verify") {
    Json bad = j;
    bad["A"]["entries"][0]["terms"][0]["c"] = "2";
    EquivalenceCert<MultiPoly> loaded = poly_cert_from_json(bad);
    VerifyReport report = verify_certificate(loaded);
    CHECK_FALSE(report.pass);
    CHECK(report.first_failure == "B*A = F");
  }

  SUBCASE("missing field") {
    Json bad = j;
    bad.erase("F");
    CHECK(error_kind_of([&] { poly_cert_from_json(bad); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("translation certificates round-trip") {
  auto c = ctx({"x", "z", "y"});
  // A transvection-style certificate: E = I_2, A/B shear by +/- j*y.
  TranslationCertificate cert{PolyMat::identity(c, 2), p(c, "z+1"),
                              PolyMat::identity(c, 2), PolyMat::identity(c, 2), 0, 2};
  cert.A.at(0, 1) = p(c, "z*y+y");
  cert.B.at(0, 1) = p(c, "-z*y-y");
  REQUIRE(verify_translation(cert).pass);

  Json j = translation_cert_to_json(cert);
  CHECK(j["var"] == "x");
  CHECK(j["aux"] == "y");
  TranslationCertificate back = translation_cert_from_json(j);
  CHECK(back.E == cert.E);
  CHECK(back.j == cert.j);
  CHECK(back.A == cert.A);
  CHECK(back.B == cert.B);
  CHECK(back.var == cert.var);
  CHECK(back.aux == cert.aux);
  CHECK(verify_translation(back).pass);

  Json bad = j;
  bad["aux"] = "w";
  CHECK(error_kind_of([&] { translation_cert_from_json(bad); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("solver configuration parsing") {
  SolverConfig def = config_from_json(Json::parse("{}"));
  CHECK(def.max_point_height == 100);
  CHECK(def.degree_escalation_ceiling == 10);
  CHECK_FALSE(def.trace);

  SolverConfig full = config_from_json(
      Json::parse(R"({"max_point_height":7,"degree_escalation_ceiling":3,"trace":true})"));
  CHECK(full.max_point_height == 7);
  CHECK(full.degree_escalation_ceiling == 3);
  CHECK(full.trace);

  CHECK(error_kind_of([&] { config_from_json(Json::parse(R"({"bogus":1})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_kind_of([&] {
          config_from_json(Json::parse(R"({"max_point_height":-3})"));
        }) == ErrorKind::ParseError);
  CHECK(error_kind_of([&] { config_from_json(Json::parse(R"({"trace":"yes"})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_kind_of([&] { config_from_json(Json::parse("[]")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("covers parse against a supplied context") {
  auto c = ctx({"x", "z"});
  Json cover_json = Json::parse(R"({
    "entries": [
      {"point": {"z": "0"},
       "A": {"rows":1,"cols":1,"entries":[{"vars":["x","z"],"terms":[{"c":"1","e":[0,0]}]}]},
       "B": {"rows":1,"cols":1,"entries":[{"vars":["x","z"],"terms":[{"c":"1","e":[0,0]}]}]}}
    ],
    "coefficients": [{"vars":["x","z"],"terms":[{"c":"1","e":[0,0]}]}]
  })");
  Cover cover = cover_from_json(cover_json, c);
  REQUIRE(cover.entries.size() == 1);
  CHECK(cover.entries[0].ideal.point().at(1) == Rational(0));
  CHECK(cover.entries[0].A.at(0, 0).is_one());
  REQUIRE(cover.coefficients.size() == 1);
  CHECK(cover.coefficients[0].is_one());

  Json bad = cover_json;
  bad.erase("coefficients");
  CHECK(error_kind_of([&] { cover_from_json(bad, c); }) == ErrorKind::ParseError);
}

TEST_CASE("file loading") {
  CHECK(error_kind_of([&] { load_json_file("/nonexistent/path.json"); }) ==
        ErrorKind::ParseError);

  const std::string path = "test_json_scratch.json";
  {
    std::ofstream out(path);
    out << "{\"rows\": 1";
  }
  CHECK(error_kind_of([&] { load_json_file(path); }) == ErrorKind::ParseError);
  {
    std::ofstream out(path);
    out << R"({"vars":["x"],"terms":[{"c":"1","e":[2]}]})";
  }
  CHECK(poly_from_json(load_json_file(path)) == p(ctx({"x"}), "x^2"));
  std::remove(path.c_str());
}

TEST_CASE("serialization is a pure function of the data") {
  auto c = ctx({"x", "y"});
  std::mt19937 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    MultiPoly f = random_poly(rng, c, 5, 3);
    Json a = poly_to_json(f);
    Json b = poly_to_json(poly_from_json(a));
    CHECK(dump_json(a) == dump_json(b));
  }
}
