// sliceq: worked examples, verification suites and point evaluation for
// slice regular functions.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sliceq/boundary.hpp"
#include "sliceq/error.hpp"
#include "sliceq/expr.hpp"
#include "sliceq/json_io.hpp"
#include "sliceq/suites.hpp"

using namespace sliceq;

namespace {

struct Globals {
  std::size_t truncation = kDefaultTruncation;
  std::uint64_t seed = 0;
  double tol_eq = 1e-8;
};

Quaternion parse_point(const std::string& s) {
  std::vector<double> xs;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw SliceError(ErrorKind::ParseError, "bad coordinate '" + part + "' in --at");
    }
  }
  if (xs.size() != 4) throw SliceError(ErrorKind::ParseError, "--at needs four comma-separated reals");
  return {xs[0], xs[1], xs[2], xs[3]};
}

int report_error(const std::exception& e) {
  if (const auto* se = dynamic_cast<const SliceError*>(&e); se && is_hypothesis_error(se->kind())) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
  } else {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}

int cmd_examples(const Globals& g) {
  int status = 0;
  for (const auto& row : example_rows(g.truncation)) {
    const bool ok = row.pass();
    std::printf("%-28s computed %-58s expected %-14s %s\n", (row.label + ":").c_str(),
                to_string(row.computed).c_str(), row.expected_text.c_str(), ok ? "PASS" : "FAIL");
    if (!ok) status = 1;
  }
  return status;
}

struct VerifyArgs {
  std::string suite;
  std::size_t samples = 1000;
  std::size_t maps = 100;
  std::vector<double> k_values;
  std::string fn;
  double gamma = 0.5;
  unsigned workers = 1;
  int k_radial = 24;
  std::string out;
  bool json = false;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  SampleConfig cfg;
  cfg.seed = g.seed;
  cfg.count = a.samples;
  cfg.maps = a.maps;
  cfg.truncation = g.truncation;
  cfg.tol_eq = g.tol_eq;
  cfg.K_radial = a.k_radial;
  cfg.workers = a.workers;

  SuiteOptions opt;
  opt.gamma = a.gamma;
  if (!a.k_values.empty()) opt.k_values = a.k_values;
  if (!a.fn.empty()) {
    if (a.suite == "all" || a.suite == "paper_examples" || a.suite == "boundary_schwarz") {
      throw SliceError(ErrorKind::InvalidArgument, "--fn is not supported by suite " + a.suite);
    }
    const FunctionSpec spec = parse_function(a.fn);
    if (a.suite == "halfspace" || a.suite == "rigidity") {
      opt.half_fn = halfspace_function(spec, g.truncation);
    } else {
      opt.ball_fn = ball_function(spec, g.truncation);
    }
  }

  const Report r = run_suite(a.suite, cfg, opt);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw SliceError(ErrorKind::IoError, "cannot write " + a.out);
    f << to_json(r) << "\n";
  }
  if (a.json) {
    std::cout << to_json(r) << "\n";
  } else {
    std::cout << to_text(r);
  }
  return r.pass() ? 0 : 1;
}

struct EvalArgs {
  std::string fn;
  std::string at;
  bool jet = false;
  std::size_t order = 2;
  bool half = false;
  std::string dump;
};

int cmd_eval(const Globals& g, const EvalArgs& a) {
  const FunctionSpec spec = parse_function(a.fn);
  const Quaternion q = parse_point(a.at);
  if (a.half) {
    const SliceMap f = halfspace_function(spec, g.truncation);
    std::cout << "f(q) = " << f(q) << "\n";
    std::cout << "f'(q) = " << f.derivative(q) << "\n";
    if (a.jet || !a.dump.empty()) {
      throw SliceError(ErrorKind::InvalidArgument, "--jet and --dump-coeffs need a ball function");
    }
    return 0;
  }
  const RegularSeries f = ball_function(spec, g.truncation);
  std::cout << "f(q) = " << f(q) << "\n";
  std::cout << "f'(q) = " << derivative(f)(q) << "\n";
  if (a.jet) std::cout << "jet = " << jet_to_json(spherical_jet(f, q, a.order)) << "\n";
  if (!a.dump.empty()) save_coeffs(f, a.dump);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice regular functions: worked examples, verification suites, evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--truncation", g.truncation, "Series truncation order")->capture_default_str();
  app.add_option("--seed", g.seed, "Sampling seed")->capture_default_str();
  app.add_option("--tol-eq", g.tol_eq, "Tolerance for equality cases")->capture_default_str();

  auto* examples = app.add_subcommand("examples", "Reproduce the two worked examples");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(kSuiteNames));
  verify->add_option("--samples", va.samples, "Sample points per function")->capture_default_str();
  verify->add_option("--maps", va.maps, "Generated functions per suite")->capture_default_str();
  verify->add_option("--k", va.k_values, "Orisphere parameters for the julia suite");
  verify->add_option("--fn", va.fn, "Function expression replacing the generated corpus");
  verify->add_option("--gamma", va.gamma, "Cone aperture for half-space suites")->capture_default_str();
  verify->add_option("--workers", va.workers, "Worker threads (results do not depend on it)")
      ->capture_default_str();
  verify->add_option("--k-radial", va.k_radial, "Last level of the radial path")->capture_default_str();
  verify->add_option("--out", va.out, "Also write the JSON report to this file");
  verify->add_flag("--json", va.json, "Print the JSON report instead of text");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a function at a point");
  eval->add_option("--fn", ea.fn, "Function expression")->required();
  eval->add_option("--at", ea.at, "Point a,b,c,d")->required();
  eval->add_flag("--jet", ea.jet, "Print the spherical jet at the point");
  eval->add_option("--order", ea.order, "Jet order")->capture_default_str();
  eval->add_flag("--half", ea.half, "Read the expression as a half-space map");
  eval->add_option("--dump-coeffs", ea.dump, "Write the coefficients to a JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*examples) return cmd_examples(g);
    if (*verify) return cmd_verify(g, va);
    if (*eval) return cmd_eval(g, ea);
  } catch (const std::exception& e) {
    return report_error(e);
  }
  return 2;
}
