// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

// spinstat: run verification suites or compute a single transition amplitude.
//
//   spinstat --suite exchange-factor --two-s 1 --trials 50 --out report.json
//   spinstat amplitude bra.json ket.json --method standard --verbose
//
// Exit codes: 0 all cases pass, 1 some case failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "spinstat/amplitudes.hpp"
#include "spinstat/errors.hpp"
#include "spinstat/fixtures.hpp"
#include "spinstat/verify.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string format_complex(spinstat::Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

void dump_terms(std::ostream& os, const spinstat::Superposition& state) {
  for (std::size_t k = 0; k < state.size(); ++k) {
    const auto& term = state.terms()[k];
    os << "  [" << k << "] coeff " << format_complex(term.coeff) << "  m:";
    for (const auto& slot : term.slots) os << ' ' << spinstat::to_string(slot.spin.m());
    os << "  chi:";
    for (const auto& slot : term.slots) os << ' ' << slot.chi.radians();
    os << '\n';
  }
}

void write_json(const std::string& path, const spinstat::Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

// Unset leaves the built-in cap; anything but a positive integer is a usage error.
std::size_t max_particles_from_env() {
  const char* raw = std::getenv("SPINSTAT_MAX_N");
  if (raw == nullptr || *raw == '\0') return spinstat::kDefaultMaxParticles;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0) throw CLI::ValidationError("SPINSTAT_MAX_N", std::string("not a positive integer: ") + raw);
  return value;
}

struct AmplitudeArgs {
  std::string bra_path;
  std::string ket_path;
  std::string method = "feynman";
  std::string stats = "spin";
  std::string json_path;
};

int run_amplitude(const AmplitudeArgs& args, spinstat::RotationSense sense, std::size_t max_n, bool verbose) {
  using namespace spinstat;
  Superposition bra = load_fixture(args.bra_path);
  Superposition ket = load_fixture(args.ket_path);
  if (!(bra.shape() == ket.shape()))
    throw ShapeError("bra " + to_string(bra.shape()) + " and ket " + to_string(ket.shape()) + " differ in shape");

  AmplitudeResult result;
  if (args.method == "feynman") {
    result = feynman_amplitude(bra, ket, sense, max_n);
  } else {
    Statistics stats = Statistics::spin_derived(bra.shape().two_s);
    if (args.stats == "bose") stats = Statistics::bose();
    if (args.stats == "fermi") stats = Statistics::fermi();
    result = standard_amplitude(bra, ket, stats, max_n);
  }

  std::cout << "method  " << to_string(result.method) << '\n'
            << "f       " << format_complex(result.f) << '\n'
            << "|f|^2   " << result.probability << '\n';
  if (verbose) {
    std::cout << "term cases:\n";
    for (const auto& c : result.cases)
      std::cout << "  bra[" << c.bra_term << "] ket[" << c.ket_term << "] " << to_string(c.kind) << '\n';
    std::cout << "summed bra (" << to_string(sense) << "):\n";
    dump_terms(std::cout, build_superposed_general(bra, sense, max_n));
  }
  if (!args.json_path.empty()) {
    Json cases = Json::array();
    for (const auto& c : result.cases)
      cases.push_back({{"bra_term", c.bra_term}, {"ket_term", c.ket_term}, {"kind", to_string(c.kind)}});
    write_json(args.json_path, Json{{"method", to_string(result.method)},
                                    {"sense", to_string(sense)},
                                    {"f", complex_to_json(result.f)},
                                    {"probability", result.probability},
                                    {"cases", std::move(cases)},
                                    {"version", verify::kVersion}});
  }
  return 0;
}

int run_suites(const spinstat::verify::SuiteConfig& cfg, bool verbose) {
  using namespace spinstat::verify;
  const VerificationReport report = run_suite(cfg);
  if (verbose) {
    for (const auto& c : report.cases)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  actual=" << c.actual.dump() << '\n';
  } else {
    for (const auto& c : report.cases)
      if (!c.pass) std::cout << "FAIL " << c.name << "  expected=" << c.expected.dump() << " actual=" << c.actual.dump() << '\n';
  }
  std::cout << report.suite << ": " << report.summary.passed << "/" << report.summary.total << " passed\n";
  if (!cfg.out_path.empty()) write_json(cfg.out_path, to_json(report, cfg.timestamp));
  return report.all_passed() ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  using spinstat::RotationSense;
  spinstat::verify::SuiteConfig cfg;
  bool verbose = false;

  CLI::App app{
      "Spin-statistics verification harness.\n"
      "Default tolerances: 1e-10 for amplitude comparisons, 1e-12 for exact-phase identities (--tol overrides both).\n"
      "SPINSTAT_MAX_N overrides the permutation enumeration cap (default 7)."};
  app.fallthrough();
  app.set_version_flag("--version", std::string(spinstat::verify::kVersion));

  std::string suites_help = "Suite to run:";
  for (auto name : spinstat::verify::suite_names()) suites_help += " " + std::string(name);
  const std::map<std::string, RotationSense> senses{{"ccw", RotationSense::counterclockwise},
                                                    {"cw", RotationSense::clockwise}};

  app.add_option("--suite", cfg.suite, suites_help)->capture_default_str();
  app.add_option("--particles,-n", cfg.particles, "Particle count N")->capture_default_str();
  app.add_option("--two-s", cfg.two_s, "Twice the spin, 2s")->capture_default_str();
  app.add_option("--orbital-dim,-D", cfg.orbital_dim, "Orbital dimension D")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials per suite")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Base seed; trial t uses seed xor t")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Tolerance override (> 0)");
  app.add_option("--sense", cfg.sense, "Rotation sense: ccw or cw")
      ->transform(CLI::CheckedTransformer(senses, CLI::ignore_case))
      ->default_str("ccw");
  app.add_option("--out", cfg.out_path, "Write the JSON report to FILE");
  app.add_flag("--timestamp", cfg.timestamp, "Include a wall-clock timestamp in the report");
  app.add_flag("--verbose,-v", verbose, "Print every case, or the summed bra for amplitude");

  AmplitudeArgs amp;
  auto* amplitude = app.add_subcommand("amplitude", "Compute f and |f|^2 between two fixture files");
  amplitude->add_option("bra", amp.bra_path, "Bra fixture (JSON)")->required()->check(CLI::ExistingFile);
  amplitude->add_option("ket", amp.ket_path, "Ket fixture (JSON)")->required()->check(CLI::ExistingFile);
  amplitude->add_option("--method", amp.method, "feynman or standard")
      ->check(CLI::IsMember({"feynman", "standard"}))
      ->capture_default_str();
  amplitude->add_option("--stats", amp.stats, "Standard method statistics: spin, bose or fermi")
      ->check(CLI::IsMember({"spin", "bose", "fermi"}))
      ->capture_default_str();
  amplitude->add_option("--json", amp.json_path, "Write the result as JSON to FILE");

  try {
    app.parse(argc, argv);
    cfg.max_particles = max_particles_from_env();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (amplitude->parsed()) return run_amplitude(amp, cfg.sense, cfg.max_particles, verbose);
    return run_suites(cfg, verbose);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
