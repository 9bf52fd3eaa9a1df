// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "braidq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidq/evaluator.hpp"
#include "braidq/oracle.hpp"
#include "braidq/qsim.hpp"

namespace braidq::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;
constexpr int kVerifyPoints = 10;
constexpr double kMirrorTolerance = 1e-10;
constexpr double kQsimTolerance = 1e-12;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<bool> parse_flips(const std::string &bits, int pairs) {
  if (static_cast<int>(bits.size()) != pairs ||
      bits.find_first_not_of("01") != std::string::npos)
    throw Error(ErrorKind::SyntaxError,
                "--flips needs " + std::to_string(pairs) + " bits of 0/1, got '" + bits + "'");
  std::vector<bool> out;
  for (char c : bits)
    out.push_back(c == '1');
  return out;
}

BraidWord load_word(const std::string &path, const RunConfig &config) {
  BraidWord word = parse_braid(read_file(path));
  if (config.flips)
    word.flips = parse_flips(*config.flips, word.pairs());
  return word;
}

json coefficients(const LaurentPoly &p) {
  json c = json::object();
  for (const auto &[e, v] : p.terms())
    c[std::to_string(e)] = v.get_str();
  return c;
}

std::string fixed(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

double point_from_config(const RunConfig &config) {
  if (config.theta && config.root_order)
    throw Error(ErrorKind::InvalidArgument, "give either --theta or --root-order, not both");
  if (config.theta)
    return *config.theta;
  const int r = config.root_order.value_or(5);
  if (r < 5)
    throw Error(ErrorKind::DegenerateQ,
                "root order " + std::to_string(r) + " is below 5; q-numbers degenerate");
  return 2 * kPi / r;
}

int cmd_eval(const std::string &path, const RunConfig &config, std::ostream &out) {
  const BraidWord word = load_word(path, config);
  JonesOptions options;
  options.samples = config.samples;
  options.window = config.window;
  options.fit.tolerance = config.tolerance;
  const JonesResult r = jones(word, options);
  const CompiledProgram program = compile_word(word);
  const int samples = static_cast<int>(r.thetas.size());

  if (config.json) {
    json j;
    j["word"] = format_braid(word);
    j["n"] = word.pairs();
    j["flips"] = to_string(r.flips);
    j["writhe"] = r.writhe;
    j["pattern"] = program.pattern();
    j["operator_count"] = r.operator_count;
    j["polynomial"] = {{"variable", "x = q^{1/2}"},
                       {"text", r.poly.to_string("q")},
                       {"coeffs", coefficients(r.poly)}};
    j["residual"] = r.residual;
    j["window"] = {r.window.first, r.window.second};
    j["samples"] = samples;
    j["normalization"] = r.normalization;
    out << j.dump(2) << '\n';
  } else {
    out << "word:          " << format_braid(word) << '\n'
        << "flips:         " << to_string(r.flips) << '\n'
        << "writhe:        " << r.writhe << '\n'
        << "pattern:       " << program.pattern() << '\n'
        << "operators:     " << r.operator_count << '\n'
        << "window:        [" << r.window.first << ", " << r.window.second << "] in q^{1/2}, "
        << samples << " samples\n"
        << "normalization: " << r.normalization << '\n'
        << "V(q) =         " << r.poly.to_string("q") << '\n'
        << "residual:      " << fixed(r.residual, 3) << '\n';
  }
  return kOk;
}

int cmd_prob(const std::string &path, const RunConfig &config, std::ostream &out) {
  const BraidWord word = load_word(path, config);
  const double theta = point_from_config(config);
  const SimulationResult sim = run(compile_word(word), QPoint(theta));
  const cplx amp = sim.state.amplitudes(0);
  const double pk = std::norm(amp);

  if (config.json) {
    json j;
    j["word"] = format_braid(word);
    j["n"] = word.pairs();
    j["theta"] = theta;
    if (config.root_order || !config.theta)
      j["root_order"] = config.root_order.value_or(5);
    j["amplitude"] = {{"re", amp.real()}, {"im", amp.imag()}};
    j["p_k"] = pk;
    j["im_amplitude"] = amp.imag();
    j["norm_drift"] = sim.max_norm_drift;
    j["operator_count"] = sim.steps;
    out << j.dump(2) << '\n';
  } else {
    out << "word:      " << format_braid(word) << '\n'
        << "theta:     " << fixed(theta) << '\n'
        << "amplitude: " << fixed(amp.real()) << (amp.imag() < 0 ? " - " : " + ")
        << fixed(std::abs(amp.imag())) << "i\n"
        << "P_K:       " << fixed(pk) << '\n'
        << "Im:        " << fixed(amp.imag()) << '\n';
  }
  return kOk;
}

int cmd_oracle(const std::string &path, const RunConfig &config, std::ostream &out) {
  const BraidWord word = load_word(path, config);
  const PlanarDiagram diagram = plat_diagram(word);
  const LaurentPoly bracket = kauffman_bracket(diagram, config.max_crossings);
  const LaurentPoly v = jones_exact(word, config.max_crossings);
  const int w = writhe(orient(word).annotated);
  const int lo = bracket.is_zero() ? 0 : bracket.min_degree();
  const int hi = bracket.is_zero() ? 0 : bracket.max_degree();

  if (config.json) {
    json j;
    j["word"] = format_braid(word);
    j["n"] = word.pairs();
    j["crossings"] = static_cast<int>(diagram.crossings.size());
    j["writhe"] = w;
    j["oracle_polynomial"] = {{"variable", "x = t^{1/2}"},
                              {"text", v.to_string("t")},
                              {"coeffs", coefficients(v)}};
    j["bracket"] = {{"variable", "A"}, {"min", lo}, {"max", hi}, {"coeffs", coefficients(bracket)}};
    out << j.dump(2) << '\n';
  } else {
    out << "word:    " << format_braid(word) << '\n'
        << "writhe:  " << w << '\n'
        << "bracket: A^" << lo << " .. A^" << hi << '\n'
        << "V(t) =   " << v.to_string("t") << '\n';
  }
  return kOk;
}

struct VerifyCase {
  std::string name;
  BraidWord word;
  std::optional<std::string> expected_pattern;
};

struct CaseReport {
  std::string pattern;
  double oracle = 0.0;
  double mirror = 0.0;
  double qsim = 0.0;
  bool pattern_ok = true;
  std::string error;

  bool pass(double tolerance) const {
    return error.empty() && pattern_ok && oracle <= tolerance && mirror <= kMirrorTolerance &&
           qsim <= kQsimTolerance;
  }
};

std::optional<std::string> pattern_directive(const std::string &text) {
  const std::string key = "# pattern:";
  const auto pos = text.find(key);
  if (pos == std::string::npos)
    return std::nullopt;
  auto end = text.find('\n', pos);
  std::string p = text.substr(pos + key.size(), end == std::string::npos ? end : end - pos - key.size());
  p.erase(0, p.find_first_not_of(' '));
  p.erase(p.find_last_not_of(" \r") + 1);
  return p;
}

CaseReport check_case(const VerifyCase &c, const RunConfig &config) {
  CaseReport r;
  try {
    const CompiledProgram program = compile_word(c.word);
    r.pattern = program.pattern();
    if (c.expected_pattern)
      r.pattern_ok = *c.expected_pattern == r.pattern;
    const LaurentPoly v = jones_exact(c.word, config.max_crossings);
    const int n = c.word.pairs();
    for (int k = 0; k < kVerifyPoints; ++k) {
      const double theta = max_unitary_theta(n) * (0.05 + 0.9 * k / (kVerifyPoints - 1));
      const QPoint point(theta);
      const cplx amp = evaluate(program, point);
      const double lhs = std::abs(amp) * std::pow(q_number(2, point), n - 1);
      const double rhs = std::abs(laurent_eval(v, point));
      r.oracle = std::max(r.oracle, std::abs(lhs - rhs) / std::max(1.0, rhs));
      r.mirror = std::max(r.mirror, mirror_symmetry_check(c.word, theta));
      const double pk = std::norm(run(program, point).state.amplitudes(0));
      r.qsim = std::max(r.qsim, std::abs(pk - std::norm(amp)));
    }
  } catch (const Error &e) {
    r.error = e.what();
  }
  return r;
}

int cmd_verify(const std::string &dir, int random_count, const RunConfig &config,
               std::ostream &out) {
  std::vector<VerifyCase> cases;
  if (!dir.empty()) {
    if (!fs::is_directory(dir))
      throw Error(ErrorKind::InvalidArgument, dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".braid")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto &f : files) {
      const std::string text = read_file(f.string());
      BraidWord w = parse_braid(text);
      if (config.flips)
        w.flips = parse_flips(*config.flips, w.pairs());
      cases.push_back({f.filename().string(), std::move(w), pattern_directive(text)});
    }
  }
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < random_count; ++i) {
    const int strands = std::uniform_int_distribution<int>(0, 1)(rng) ? 6 : 4;
    cases.push_back({"random-" + std::to_string(i + 1), random_word(rng, {strands, 1, 6, 3, 10}),
                     std::nullopt});
  }

  std::vector<CaseReport> reports;
  for (const auto &c : cases)
    reports.push_back(check_case(c, config));

  int passed = 0;
  double worst_oracle = 0.0, worst_mirror = 0.0, worst_qsim = 0.0;
  for (const auto &r : reports) {
    passed += r.pass(config.tolerance) ? 1 : 0;
    worst_oracle = std::max(worst_oracle, r.oracle);
    worst_mirror = std::max(worst_mirror, r.mirror);
    worst_qsim = std::max(worst_qsim, r.qsim);
  }
  const bool all = passed == static_cast<int>(cases.size());

  if (config.json) {
    json j;
    j["seed"] = config.seed;
    j["tolerance"] = config.tolerance;
    json list = json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto &r = reports[i];
      json e;
      e["name"] = cases[i].name;
      e["word"] = format_braid(cases[i].word);
      e["n"] = cases[i].word.pairs();
      e["pattern"] = r.pattern;
      if (cases[i].expected_pattern)
        e["expected_pattern"] = *cases[i].expected_pattern;
      e["deviations"] = {{"oracle_modulus", r.oracle}, {"mirror", r.mirror}, {"qsim", r.qsim}};
      if (!r.error.empty())
        e["error"] = r.error;
      e["pass"] = r.pass(config.tolerance);
      list.push_back(std::move(e));
    }
    j["cases"] = std::move(list);
    j["summary"] = {{"cases", static_cast<int>(cases.size())},
                    {"passed", passed},
                    {"worst_oracle_modulus", worst_oracle},
                    {"worst_mirror", worst_mirror},
                    {"worst_qsim", worst_qsim}};
    j["pass"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << "seed " << config.seed << ", " << cases.size() << " cases\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto &r = reports[i];
      out << (r.pass(config.tolerance) ? "PASS  " : "FAIL  ") << std::left << std::setw(18)
          << cases[i].name << " oracle " << std::setw(10) << fixed(r.oracle, 3) << " mirror "
          << std::setw(10) << fixed(r.mirror, 3) << " qsim " << std::setw(10) << fixed(r.qsim, 3)
          << " pattern " << r.pattern;
      if (!r.pattern_ok)
        out << " (expected " << *cases[i].expected_pattern << ")";
      if (!r.error.empty())
        out << "  " << r.error;
      out << '\n';
    }
    out << passed << "/" << cases.size() << " passed; worst oracle " << fixed(worst_oracle, 3)
        << ", mirror " << fixed(worst_mirror, 3) << ", qsim " << fixed(worst_qsim, 3) << '\n';
  }
  return all ? kOk : kFailure;
}

} // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SyntaxError:
  case ErrorKind::IndexOutOfRange:
  case ErrorKind::ZeroPower:
    return kParseError;
  case ErrorKind::CapMismatch:
    return kCapMismatch;
  case ErrorKind::ResidualTooLarge:
    return kResidualTooLarge;
  case ErrorKind::NegativeRadicand:
  case ErrorKind::DegenerateQ:
    return kBadPoint;
  case ErrorKind::TooManyCrossings:
    return kTooManyCrossings;
  case ErrorKind::AnnotationConflict:
    return kAnnotationConflict;
  default:
    return kFailure;
  }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Jones polynomials of plat-closed braids via q-Racah recoupling"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::vector<int> window;
  app.add_option("--tolerance", config.tolerance, "Fit residual and verify tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", config.samples, "Sample count for the fit")->check(CLI::Range(16, 1 << 16));
  app.add_option("--root-order", config.root_order, "Evaluate at theta = 2 pi / r");
  app.add_option("--theta", config.theta, "Evaluate at this phase");
  app.add_option("--window", window, "Degree window dmin,dmax in q^{1/2}")
      ->expected(2)
      ->delimiter(',');
  app.add_option("--flips", config.flips, "Cup flip bits, one per cup");
  app.add_flag("--json", config.json, "Machine-readable output");
  app.add_option("--seed", config.seed, "Seed for random words");
  app.add_option("--max-crossings", config.max_crossings, "Crossing limit for the oracle")
      ->check(CLI::PositiveNumber);

  std::string file, dir;
  int random_count = 0;
  auto *eval = app.add_subcommand("eval", "Reconstruct the Jones polynomial");
  eval->add_option("file", file, "Braid word file")->required();
  auto *prob = app.add_subcommand("prob", "Quantum-algorithm probability P_K");
  prob->add_option("file", file, "Braid word file")->required();
  auto *oracle = app.add_subcommand("oracle", "Exact Jones polynomial by state sum");
  oracle->add_option("file", file, "Braid word file")->required();
  auto *verify = app.add_subcommand("verify", "Check the evaluator against the oracle and the simulator");
  verify->add_option("dir", dir, "Corpus directory of .braid files");
  verify->add_option("--random", random_count, "Number of seeded random words")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }
  if (!window.empty())
    config.window = std::pair{window[0], window[1]};

  try {
    if (*eval)
      return cmd_eval(file, config, out);
    if (*prob)
      return cmd_prob(file, config, out);
    if (*oracle)
      return cmd_oracle(file, config, out);
    return cmd_verify(dir, random_count, config, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

} // namespace braidq::cli
