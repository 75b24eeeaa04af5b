// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Named verification suites and their machine-readable reports.
 *
 * Every suite is deterministic given its SuiteConfig: trial t draws from its
 * own generator seeded with seed ^ t, and cases are recorded in trial order.
 *
 *   projectors        S and A are Hermitian idempotents (dense check)
 *   exchange-factor   a transposition of equal-m slots yields (-1)^(2s)
 *   sense-invariance  clockwise and counterclockwise rotations agree
 *   equivalence       Feynman amplitude == standard amplitude for equal m
 *   chi-independence  |f|^2 survives redrawing every chi and flipping sense
 *   exclusion         duplicate slots vanish under antisymmetrization
 *   case-analysis     zero / all-distinct / mixed classification of T terms
 *   breakdown         eta-weighted "projector" is not idempotent for mixed m
 *   chained           amplitude sums through intermediate states
 *   all               every suite above
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinstat/exchange.hpp"
#include "spinstat/fixtures.hpp"
#include "spinstat/permutation.hpp"

namespace spinstat::verify {

inline constexpr double kAmplitudeTolerance = 1e-10;
inline constexpr double kPhaseTolerance = 1e-12;
/// Minimum idempotence violation the breakdown suite must observe.
inline constexpr double kBreakdownThreshold = 1e-6;

inline constexpr std::string_view kVersion = "spinstat 0.1.0";

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string suite = "all";
  std::size_t particles = 2;
  int two_s = 1;
  std::size_t orbital_dim = 2;
  std::size_t trials = 50;
  std::uint64_t seed = 20081021;
  /// Unset: each suite uses kPhaseTolerance or kAmplitudeTolerance.
  std::optional<double> tolerance;
  RotationSense sense = RotationSense::counterclockwise;
  std::string out_path;
  std::size_t max_particles = kDefaultMaxParticles;
  /// Adds a wall-clock timestamp to the report, which breaks byte-identity.
  bool timestamp = false;
};

struct CaseRecord {
  std::string name;
  Json params;
  Json expected;
  Json actual;
  bool pass = false;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::string suite;
  Json config;
  std::vector<CaseRecord> cases;
  Summary summary;

  bool all_passed() const { return summary.failed == 0; }
};

std::span<const std::string_view> suite_names();

/// Throws ConfigError for an unknown suite or out-of-range parameters.
void validate(const SuiteConfig& cfg);

VerificationReport run_suite(const SuiteConfig& cfg);

Json to_json(const VerificationReport& report, bool with_timestamp = false);

}  // namespace spinstat::verify
