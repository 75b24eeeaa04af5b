// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/symmetrization.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "spinstat/errors.hpp"

namespace spinstat {

StatisticsKind Statistics::reduced() const {
  if (kind != StatisticsKind::spin_derived) return kind;
  return exchange_factor_F(two_s) == 1 ? StatisticsKind::bose : StatisticsKind::fermi;
}

Superposition symmetrize_prime(const ProductState& state, std::size_t max_n) {
  Superposition out(shape_of(state));
  for (const auto& p : enumerate_all(state.slots.size(), max_n)) out.push_back(apply_params_only(p, state));
  return out;
}

Superposition build_superposed(const ProductState& state, RotationSense sense, std::size_t max_n) {
  Superposition out(shape_of(state));
  for (const auto& p : enumerate_all(state.slots.size(), max_n)) {
    EtaResult e = eta(p, state, sense);
    e.state.coeff *= e.eta;
    out.push_back(std::move(e.state));
  }
  return out;
}

Superposition build_superposed_general(const Superposition& state, RotationSense sense, std::size_t max_n) {
  Superposition out(state.shape());
  // enumerate once up front so the cap is enforced even for empty input
  const auto perms = enumerate_all(state.shape().particles, max_n);
  for (const auto& term : state.terms()) {
    for (const auto& p : perms) {
      EtaResult e = eta(p, term, sense);
      e.state.coeff *= e.eta;
      out.push_back(std::move(e.state));
    }
  }
  return out;
}

Superposition apply_projector(const Superposition& state, Projector which, std::size_t max_n) {
  const auto perms = enumerate_all(state.shape().particles, max_n);
  const double norm = 1.0 / static_cast<double>(perms.size());
  Superposition out(state.shape());
  for (const auto& term : state.terms()) {
    for (const auto& p : perms) {
      ProductState moved = apply_full(p, term);
      const double weight = which == Projector::symmetrizer ? 1.0 : static_cast<double>(sign(p));
      moved.coeff *= weight * norm;
      out.push_back(std::move(moved));
    }
  }
  return out;
}

PhaseExtraction extract_overall_phase(const Superposition& state) {
  if (state.empty()) throw ShapeError("cannot extract a phase from the zero superposition");
  const int two_m = state.terms().front().slots.front().spin.two_m();
  for (const auto& term : state.terms())
    for (const auto& slot : term.slots)
      if (slot.spin.two_m() != two_m)
        throw SpinError("overall phase extraction needs all slots to share one m; found 2m=" +
                        std::to_string(two_m) + " and 2m=" + std::to_string(slot.spin.two_m()));

  auto angle_phase = [two_m](const ProductState& term) {
    Complex acc{1.0, 0.0};
    for (const auto& slot : term.slots) acc *= phase_factor(two_m, slot.chi);
    return acc;
  };

  PhaseExtraction out{angle_phase(state.terms().front()), Superposition(state.shape())};
  for (const auto& term : state.terms()) {
    ProductState reduced = term;
    reduced.coeff = term.coeff * angle_phase(term) / out.phase;
    for (auto& slot : reduced.slots) slot.chi = Chi(0.0);
    out.reduced.push_back(std::move(reduced));
  }
  return out;
}

namespace {

// Product probes covering every m-pattern that can occur after permuting the
// terms. A nonzero difference is orthogonal to a random orbital probe with
// probability zero, so a few probes per pattern suffice.
std::vector<ProductState> spanning_probes(const Superposition& state) {
  std::set<std::vector<int>> patterns;
  for (const auto& term : state.terms()) {
    std::vector<int> pattern;
    for (const auto& slot : term.slots) pattern.push_back(slot.spin.two_m());
    std::sort(pattern.begin(), pattern.end());
    do {
      patterns.insert(pattern);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
  }

  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  constexpr int kProbesPerPattern = 3;

  std::vector<ProductState> probes;
  const Shape& shape = state.shape();
  for (const auto& pattern : patterns) {
    for (int k = 0; k < kProbesPerPattern; ++k) {
      ProductState probe;
      for (int two_m : pattern) {
        SingleParticleState slot{std::vector<Complex>(shape.orbital_dim), SpinLabel(shape.two_s, two_m),
                                 Chi(angle(rng))};
        for (auto& amp : slot.orbital) amp = {gauss(rng), gauss(rng)};
        probe.slots.push_back(std::move(slot));
      }
      probes.push_back(std::move(probe));
    }
  }
  return probes;
}

double magnitude_bound(const Superposition& state) {
  double total = 0.0;
  for (const auto& term : state.terms()) {
    double mag = std::abs(term.coeff);
    for (const auto& slot : term.slots) {
      double sq = 0.0;
      for (const auto& amp : slot.orbital) sq += std::norm(amp);
      mag *= std::sqrt(sq);
    }
    total += mag;
  }
  return total;
}

bool has_exchange_symmetry(const Superposition& state, bool antisymmetric, double tol, std::size_t max_n) {
  const auto perms = enumerate_all(state.shape().particles, max_n);
  if (state.empty()) return true;
  const auto probes = spanning_probes(state);

  const double scale = std::max(1.0, magnitude_bound(state));
  std::vector<double> probe_scale;
  std::vector<Complex> reference;
  for (const auto& probe : probes) {
    const auto bra = Superposition::of(probe);
    probe_scale.push_back(magnitude_bound(bra));
    reference.push_back(superposition_inner(bra, state));
  }

  for (const auto& p : perms) {
    if (p.is_identity()) continue;
    const Superposition moved = apply_full(p, state);
    const double expected_sign = antisymmetric ? static_cast<double>(sign(p)) : 1.0;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Complex lhs = superposition_inner(Superposition::of(probes[k]), moved);
      if (std::abs(lhs - expected_sign * reference[k]) > tol * scale * probe_scale[k]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_symmetric(const Superposition& state, double tol, std::size_t max_n) {
  return has_exchange_symmetry(state, false, tol, max_n);
}

bool is_antisymmetric(const Superposition& state, double tol, std::size_t max_n) {
  return has_exchange_symmetry(state, true, tol, max_n);
}

}  // namespace spinstat
