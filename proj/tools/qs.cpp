// qs: freeness certificates for idempotent matrices over Q[x1..xn].
//
// Subcommands:
//   solve <E.json> [--config c.json] [--cover cover.json] [-o cert.json]
//   horrocks --input <in.json> --point <p.json> [--config c.json] [--trace] [-o ...]
//   patch --certs <c1.json> [<c2.json> ...] --bezout <u.json> [-o ...]
//   complete-row <v.json> [--config c.json] [--witness w.json] [-o ...]
//   verify <cert.json>
//
// Exit codes: 0 success, 1 verification failure, 2 unsupported input,
// 3 parse error.  Output is deterministic: identical inputs produce
// byte-identical bytes.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qs/certificate.hpp"
#include "qs/error.hpp"
#include "qs/horrocks.hpp"
#include "qs/json_io.hpp"
#include "qs/matrix.hpp"
#include "qs/patching.hpp"
#include "qs/solver.hpp"

namespace {

using qs::ErrorKind;
using qs::Json;

void emit(const std::string& out_path, const Json& j) {
  const std::string text = qs::dump_json(j);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) qs::fail(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
  out << text;
}

qs::SolverConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  return qs::config_from_json(qs::load_json_file(path));
}

int cmd_solve(const std::string& input, const std::string& config_path,
              const std::string& cover_path, const std::string& out_path) {
  const qs::PolyMat E = qs::polymat_from_json(qs::load_json_file(input));
  const qs::SolverConfig config = load_config(config_path);
  std::optional<qs::Cover> cover;
  if (!cover_path.empty())
    cover = qs::cover_from_json(qs::load_json_file(cover_path), E.context());
  std::vector<std::string> log;
  const qs::EquivalenceCert<qs::MultiPoly> cert = qs::quillen_suslin_free_basis(
      E, config, cover ? &*cover : nullptr, config.trace ? &log : nullptr);
  for (const std::string& line : log) std::cerr << line << "\n";
  emit(out_path, qs::cert_to_json(cert));
  return 0;
}

int cmd_horrocks(const std::string& input_path, const std::string& point_path,
                 const std::string& config_path, bool trace,
                 const std::string& out_path) {
  const qs::HorrocksInput input = qs::horrocks_input_from_json(
      qs::load_json_file(input_path), qs::load_json_file(point_path));
  const qs::SolverConfig config = load_config(config_path);
  qs::HorrocksTrace trace_data;
  const qs::EquivalenceCert<qs::MonicFraction> cert = qs::horrocks_free_basis(
      input, config.degree_escalation_ceiling, trace ? &trace_data : nullptr);
  if (trace) {
    Json t;
    t["Ebar"] = qs::mat_to_json(trace_data.Ebar);
    t["Chat"] = qs::mat_to_json(trace_data.Chat);
    t["Dhat"] = qs::mat_to_json(trace_data.Dhat);
    t["U_target"] = qs::mat_to_json(trace_data.U_target);
    t["factor_count"] = trace_data.factor_count;
    t["Aprime"] = qs::mat_to_json(trace_data.Aprime);
    t["Bprime"] = qs::mat_to_json(trace_data.Bprime);
    t["Fprime"] = qs::mat_to_json(trace_data.Fprime);
    t["V"] = qs::mat_to_json(trace_data.V);
    t["detV"] = qs::fraction_to_json(trace_data.detV);
    t["det_check"] = trace_data.det_check;
    t["Bsecond"] = qs::mat_to_json(trace_data.Bsecond);
    t["Gsecond"] = qs::mat_to_json(trace_data.Gsecond);
    t["Asecond"] = qs::mat_to_json(trace_data.Asecond);
    std::cerr << qs::dump_json(t);
  }
  emit(out_path, qs::cert_to_json(cert));
  return 0;
}

int cmd_patch(const std::vector<std::string>& cert_paths, const std::string& bezout_path,
              const std::string& out_path) {
  std::vector<qs::TranslationCertificate> certs;
  certs.reserve(cert_paths.size());
  for (const std::string& path : cert_paths)
    certs.push_back(qs::translation_cert_from_json(qs::load_json_file(path)));
  const Json bezout = qs::load_json_file(bezout_path);
  if (!bezout.is_object() || !bezout.contains("coefficients"))
    qs::fail(ErrorKind::ParseError, "Bezout file: missing field 'coefficients'");
  if (!bezout["coefficients"].is_array())
    qs::fail(ErrorKind::ParseError, "Bezout file: 'coefficients' must be an array");
  std::vector<qs::MultiPoly> coefficients;
  for (const Json& c : bezout["coefficients"])
    coefficients.push_back(qs::poly_from_json(c, certs.front().E.context()));
  const qs::TranslationCertificate combined = qs::bezout_combine(certs, coefficients);
  emit(out_path, qs::translation_cert_to_json(combined));
  return 0;
}

int cmd_complete_row(const std::string& input, const std::string& config_path,
                     const std::string& witness_path, const std::string& out_path) {
  const qs::PolyMat v = qs::polymat_from_json(qs::load_json_file(input));
  const qs::SolverConfig config = load_config(config_path);
  std::optional<qs::PolyMat> witness;
  if (!witness_path.empty())
    witness = qs::polymat_from_json(qs::load_json_file(witness_path), v.context());
  const qs::PolyMat completed =
      qs::complete_unimodular_row(v, config, witness ? &*witness : nullptr);
  emit(out_path, qs::mat_to_json(completed));
  return 0;
}

int cmd_verify(const std::string& input) {
  const Json j = qs::load_json_file(input);
  qs::VerifyReport report;
  if (j.is_object() && j.contains("j")) {
    report = qs::verify_translation(qs::translation_cert_from_json(j));
  } else {
    const bool fraction_entries =
        j.is_object() && j.contains("E") && j["E"].is_object() &&
        j["E"].contains("entries") && j["E"]["entries"].is_array() &&
        !j["E"]["entries"].empty() && j["E"]["entries"][0].is_object() &&
        j["E"]["entries"][0].contains("num");
    report = fraction_entries
                 ? qs::verify_certificate(qs::frac_cert_from_json(j))
                 : qs::verify_certificate(qs::poly_cert_from_json(j));
  }
  if (report.pass) {
    std::cout << "certificate verified\n";
    return 0;
  }
  std::cout << "certificate INVALID: " << report.first_failure << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freeness certificates for idempotent matrices over Q[x1..xn]"};
  app.require_subcommand(1);

  std::string in_file, out_file, config_file, cover_file, point_file, witness_file,
      bezout_file;
  std::vector<std::string> cert_files;
  bool trace = false;

  CLI::App* solve = app.add_subcommand("solve", "free basis of an idempotent matrix");
  solve->add_option("E", in_file, "idempotent matrix JSON")->required();
  solve->add_option("--config", config_file, "solver configuration JSON");
  solve->add_option("--cover", cover_file, "local trivialization cover JSON");
  solve->add_option("-o,--output", out_file, "certificate output path");

  CLI::App* horrocks =
      app.add_subcommand("horrocks", "drop denominators from a local trivialization");
  horrocks->add_option("--input", in_file, "E, A, B, var JSON")->required();
  horrocks->add_option("--point", point_file, "point ideal JSON")->required();
  horrocks->add_option("--config", config_file, "solver configuration JSON");
  horrocks->add_flag("--trace", trace, "dump intermediate matrices to stderr");
  horrocks->add_option("-o,--output", out_file, "certificate output path");

  CLI::App* patch =
      app.add_subcommand("patch", "Bezout-combine translation certificates");
  patch->add_option("--certs", cert_files, "translation certificate JSON files")
      ->required()
      ->expected(-1);
  patch->add_option("--bezout", bezout_file, "Bezout coefficients JSON")->required();
  patch->add_option("-o,--output", out_file, "combined certificate output path");

  CLI::App* complete =
      app.add_subcommand("complete-row", "complete a unimodular row to a square matrix");
  complete->add_option("v", in_file, "single-row matrix JSON")->required();
  complete->add_option("--config", config_file, "solver configuration JSON");
  complete->add_option("--witness", witness_file, "witness column JSON");
  complete->add_option("-o,--output", out_file, "completed matrix output path");

  CLI::App* verify = app.add_subcommand("verify", "check a certificate's identities");
  verify->add_option("cert", in_file, "certificate JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(in_file, config_file, cover_file, out_file);
    if (*horrocks)
      return cmd_horrocks(in_file, point_file, config_file, trace, out_file);
    if (*patch) return cmd_patch(cert_files, bezout_file, out_file);
    if (*complete)
      return cmd_complete_row(in_file, config_file, witness_file, out_file);
    if (*verify) return cmd_verify(in_file);
  } catch (const qs::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
