/*
   Copyright 2026 The dunford authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dunford/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dunford/decomposition.hpp"
#include "dunford/errors.hpp"
#include "dunford/io.hpp"
#include "dunford/realroots.hpp"

namespace dunford::cli {

namespace {

using io::json;

std::string read_input(const CliConfig& config, std::istream& in) {
  if (!config.input_path) return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(*config.input_path, std::ios::binary);
  if (!file) throw ParseError(1, 1, "cannot open input file '" + *config.input_path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void write_report_text(std::ostream& out, const VerificationReport& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "verification:\n"
      << "  sum_ok: " << b(r.sum_ok) << '\n'
      << "  commute_ok: " << b(r.commute_ok) << '\n'
      << "  nilpotent_ok: " << b(r.nilpotent_ok) << '\n'
      << "  semisimple_ok: " << b(r.semisimple_ok) << '\n'
      << "  commutes_with_A: " << b(r.commutes_with_a) << '\n'
      << "  generator_ok: " << (r.generator_ok ? b(*r.generator_ok) : "n/a") << '\n'
      << "  all_ok: " << b(r.all()) << '\n';
}

void check_config(const CliConfig& config) {
  if (config.command == Command::decompose) {
    if (config.method == Method::spectral && config.spectrum.empty()) {
      throw PreconditionError(ErrorKind::SpectrumMismatch, "--method spectral requires at least one --eigen");
    }
    if (config.method != Method::spectral && !config.spectrum.empty()) {
      throw PreconditionError(ErrorKind::SpectrumMismatch,
                              std::string("--eigen is only valid with --method spectral, not ") +
                                  to_string(config.method));
    }
  }
  if (config.command == Command::projectors && config.spectrum.empty()) {
    throw PreconditionError(ErrorKind::SpectrumMismatch, "projectors requires at least one --eigen");
  }
  if (config.interval && !(config.interval->first < config.interval->second)) {
    throw PreconditionError(ErrorKind::EmptyInterval, "--interval requires a < b");
  }
  if (config.command == Command::verify && !config.result_path) {
    throw PreconditionError(ErrorKind::LengthMismatch, "verify requires --result");
  }
}

void run_decompose(const CliConfig& config, const RationalMatrix& a, std::ostream& out) {
  DunfordResult<Rational> result;
  switch (config.method) {
    case Method::newton: result = dunford_newton(a); break;
    case Method::chevalley: result = dunford_chevalley(a); break;
    case Method::spectral: result = dunford_spectral(a, config.spectrum); break;
  }
  const auto report = verify_decomposition(a, result);
  if (config.output_format == OutputFormat::json) {
    write_json(out, io::to_json(result, report));
    return;
  }
  out << "method: " << to_string(result.method) << '\n'
      << "iterations: " << result.iterations << '\n'
      << "D:\n"
      << io::format_matrix(result.diagonalizable) << "N:\n"
      << io::format_matrix(result.nilpotent);
  if (result.generator) {
    out << "generator: " << io::format_polynomial(*result.generator) << '\n'
        << "generator (expanded): " << io::pretty_polynomial(*result.generator) << '\n';
  } else {
    out << "generator: none\n";
  }
  write_report_text(out, report);
}

void run_projectors(const CliConfig& config, const RationalMatrix& a, std::ostream& out) {
  const auto projectors = spectral_projectors(a, config.spectrum);
  if (config.output_format == OutputFormat::json) {
    json list = json::array();
    for (std::size_t i = 0; i < projectors.size(); ++i) {
      list.push_back({{"eigenvalue", config.spectrum[i].value.to_string()},
                      {"multiplicity", config.spectrum[i].multiplicity},
                      {"projector", io::to_json(projectors[i])}});
    }
    write_json(out, {{"projectors", list}});
    return;
  }
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    out << "projector " << i + 1 << " (eigenvalue " << config.spectrum[i].value << ", multiplicity "
        << config.spectrum[i].multiplicity << "):\n"
        << io::format_matrix(projectors[i]);
  }
}

void run_check_real_diag(const CliConfig& config, const RationalMatrix& a, std::ostream& out) {
  const auto report = is_diagonalizable_over_reals(a);
  if (config.output_format == OutputFormat::json) {
    write_json(out, {{"diagonalizable_over_reals", report.diagonalizable_over_reals},
                     {"squarefree_part", io::to_json(report.squarefree)},
                     {"cauchy_bound", report.cauchy_bound.to_string()},
                     {"real_root_count", report.real_root_count},
                     {"degree", report.degree}});
    return;
  }
  out << "diagonalizable over R: " << (report.diagonalizable_over_reals ? "true" : "false") << '\n'
      << "squarefree part: " << io::format_polynomial(report.squarefree) << '\n'
      << "cauchy bound: " << report.cauchy_bound << '\n'
      << "real roots: " << report.real_root_count << '\n'
      << "degree: " << report.degree << '\n';
}

void run_roots(const CliConfig& config, const RationalPolynomial& p, std::ostream& out) {
  json j;
  std::size_t count = 0;
  if (config.interval) {
    count = count_real_roots(p, config.interval->first, config.interval->second);
    j["interval"] = {config.interval->first.to_string(), config.interval->second.to_string()};
  } else {
    const Rational m = cauchy_bound(p);
    count = count_real_roots(p, -m, m);
    j["cauchy_bound"] = m.to_string();
  }
  if (config.output_format == OutputFormat::json) {
    j["count"] = count;
    write_json(out, j);
  } else {
    out << count << '\n';
  }
}

void run_charpoly(const CliConfig& config, const RationalMatrix& a, std::ostream& out) {
  const auto chi = characteristic_polynomial(a);
  if (config.output_format == OutputFormat::json) {
    write_json(out, {{"charpoly", io::to_json(chi)}});
  } else {
    out << io::format_polynomial(chi) << '\n';
  }
}

void run_verify(const CliConfig& config, const RationalMatrix& a, std::ostream& out) {
  std::ifstream file(*config.result_path, std::ios::binary);
  if (!file) throw ParseError(1, 1, "cannot open result file '" + *config.result_path + "'");
  const std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.byte, std::string("result file is not valid JSON"));
  }
  const auto result = io::result_from_json(j);
  const auto report = verify_decomposition(a, result);
  if (config.output_format == OutputFormat::json) {
    write_json(out, {{"verification", io::to_json(report)}});
  } else {
    write_report_text(out, report);
  }
}

Eigenvalue<Rational> parse_eigen(const std::string& spec) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos) throw ParseError(1, 1, "--eigen expects value:multiplicity, got '" + spec + "'");
  const Rational value = io::parse_rational(spec.substr(0, colon));
  const Rational mult = io::parse_rational(spec.substr(colon + 1));
  if (!mult.is_integer() || mult.sign() <= 0) {
    throw ParseError(1, colon + 2, "multiplicity must be a positive integer in '" + spec + "'");
  }
  return {value, static_cast<std::size_t>(mult.numerator().get_ui())};
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    const std::string input = read_input(config, in);
    // Buffer the output so a failing command writes nothing to `out`.
    std::ostringstream buffer;
    switch (config.command) {
      case Command::decompose: run_decompose(config, io::parse_matrix(input), buffer); break;
      case Command::projectors: run_projectors(config, io::parse_matrix(input), buffer); break;
      case Command::check_real_diag: run_check_real_diag(config, io::parse_matrix(input), buffer); break;
      case Command::roots: run_roots(config, io::parse_polynomial(input), buffer); break;
      case Command::charpoly: run_charpoly(config, io::parse_matrix(input), buffer); break;
      case Command::verify: run_verify(config, io::parse_matrix(input), buffer); break;
    }
    out << buffer.str();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InternalError& e) {
    err << "internal error (" << to_string(e.kind()) << "): " << e.what()
        << "\nthis state is proven unreachable; please report it as a bug\n";
    return kExitInternal;
  } catch (const PreconditionError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitPrecondition;
  }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jordan-Chevalley (Dunford) decomposition of rational matrices"};
  app.require_subcommand(1);

  CliConfig config;
  std::optional<std::string> input_path;
  std::string format = "text";
  std::string method = "chevalley";
  std::vector<std::string> eigen;
  std::vector<std::string> interval;
  std::string result_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input_path, "Input file (default: stdin)");
    sub->add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* decompose = app.add_subcommand("decompose", "Compute D and N with A = D + N");
  common(decompose);
  decompose->add_option("-m,--method", method, "Decomposition method")
      ->check(CLI::IsMember({"newton", "chevalley", "spectral"}));
  decompose->add_option("--eigen", eigen, "Eigenvalue as value:multiplicity (spectral method)");

  auto* projectors = app.add_subcommand("projectors", "Spectral projectors for a known rational spectrum");
  common(projectors);
  projectors->add_option("--eigen", eigen, "Eigenvalue as value:multiplicity")->required();

  auto* real_diag = app.add_subcommand("check-real-diag", "Is the semisimple part diagonalizable over R?");
  common(real_diag);

  auto* roots = app.add_subcommand("roots", "Count distinct real roots of a polynomial");
  common(roots);
  roots->add_option("--interval", interval, "Open interval a b (default: whole line)")->expected(2)->allow_extra_args(false);

  auto* charpoly = app.add_subcommand("charpoly", "Monic characteristic polynomial det(xI - A)");
  common(charpoly);

  auto* verify = app.add_subcommand("verify", "Check a decomposition result (JSON) against A");
  common(verify);
  verify->add_option("-r,--result", result_path, "Decomposition JSON produced by 'decompose --format json'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (decompose->parsed()) config.command = Command::decompose;
    if (projectors->parsed()) config.command = Command::projectors;
    if (real_diag->parsed()) config.command = Command::check_real_diag;
    if (roots->parsed()) config.command = Command::roots;
    if (charpoly->parsed()) config.command = Command::charpoly;
    if (verify->parsed()) {
      config.command = Command::verify;
      config.result_path = result_path;
    }
    config.input_path = input_path;
    config.output_format = format == "json" ? OutputFormat::json : OutputFormat::text;
    config.method = method == "newton" ? Method::newton : (method == "spectral" ? Method::spectral : Method::chevalley);
    for (const auto& e : eigen) config.spectrum.push_back(parse_eigen(e));
    if (!interval.empty()) config.interval = std::pair{io::parse_rational(interval[0]), io::parse_rational(interval[1])};
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  return run(config, in, out, err);
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dunford"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace dunford::cli
