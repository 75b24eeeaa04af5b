// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinstat/errors.hpp"

namespace spinstat {

const char* to_string(AmplitudeMethod method) { return method == AmplitudeMethod::feynman ? "feynman" : "standard"; }

const char* to_string(TermCaseKind kind) {
  switch (kind) {
    case TermCaseKind::all_equal_m: return "all_equal_m";
    case TermCaseKind::all_distinct_m: return "all_distinct_m";
    case TermCaseKind::mixed: return "mixed";
    case TermCaseKind::zero: return "zero";
  }
  return "unknown";
}

namespace {

std::vector<int> m_values(const ProductState& state) {
  std::vector<int> out;
  out.reserve(state.slots.size());
  for (const auto& slot : state.slots) out.push_back(slot.spin.two_m());
  return out;
}

void require_same_shape(const Superposition& a, const Superposition& b) {
  if (a.shape() != b.shape())
    throw ShapeError("incompatible superpositions " + to_string(a.shape()) + " and " + to_string(b.shape()));
}

std::vector<TermCase> classify_all(const Superposition& bra, const Superposition& ket) {
  std::vector<TermCase> cases;
  cases.reserve(bra.size() * ket.size());
  for (std::size_t b = 0; b < bra.size(); ++b)
    for (std::size_t k = 0; k < ket.size(); ++k)
      cases.push_back({b, k, classify(bra.terms()[b], ket.terms()[k])});
  return cases;
}

}  // namespace

TermCaseKind classify(const ProductState& bra, const ProductState& ket) {
  if (bra.slots.size() != ket.slots.size()) throw ShapeError("particle counts differ");
  auto bra_m = m_values(bra);
  auto ket_m = m_values(ket);
  std::sort(bra_m.begin(), bra_m.end());
  std::sort(ket_m.begin(), ket_m.end());
  if (bra_m != ket_m) return TermCaseKind::zero;
  if (bra_m.front() == bra_m.back()) return TermCaseKind::all_equal_m;
  if (std::adjacent_find(bra_m.begin(), bra_m.end()) == bra_m.end()) return TermCaseKind::all_distinct_m;
  return TermCaseKind::mixed;
}

TTerm t_term(const ProductState& bra, const ProductState& ket, RotationSense sense, std::size_t max_n) {
  if (shape_of(bra) != shape_of(ket))
    throw ShapeError("incompatible product terms " + to_string(shape_of(bra)) + " and " + to_string(shape_of(ket)));

  TTerm out;
  out.kind = classify(bra, ket);
  const auto perms = enumerate_all(bra.slots.size(), max_n);
  if (out.kind == TermCaseKind::zero) return out;

  const auto ket_m = m_values(ket);
  for (const auto& p : perms) {
    bool matches = true;
    for (std::size_t i = 0; i < bra.slots.size() && matches; ++i)
      matches = bra.slots[i].spin.two_m() == ket_m[p[i]];
    if (!matches) continue;

    const EtaResult e = eta(p, bra, sense);
    Complex overlap{1.0, 0.0};
    for (std::size_t i = 0; i < ket.slots.size(); ++i) overlap *= single_inner(e.state.slots[i], ket.slots[i]);

    SurvivingMember member{p, parity(p).transpositions, e.eta, std::conj(e.eta) * overlap};
    out.value += member.contribution;
    out.members.push_back(std::move(member));
  }
  return out;
}

AmplitudeResult feynman_amplitude(const Superposition& bra, const Superposition& ket, RotationSense sense,
                                  std::size_t max_n) {
  require_same_shape(bra, ket);
  AmplitudeResult out;
  out.method = AmplitudeMethod::feynman;
  out.f = superposition_inner(build_superposed_general(bra, sense, max_n), ket);
  out.probability = std::norm(out.f);
  out.cases = classify_all(bra, ket);
  return out;
}

AmplitudeResult standard_amplitude(const Superposition& bra, const Superposition& ket, Statistics stats,
                                   std::size_t max_n) {
  require_same_shape(bra, ket);
  const StatisticsKind kind = stats.reduced();
  if (kind == StatisticsKind::general_eta)
    throw std::invalid_argument("the standard amplitude exists only for bose or fermi statistics");
  const Projector which = kind == StatisticsKind::bose ? Projector::symmetrizer : Projector::antisymmetrizer;

  double factorial = 1.0;
  for (std::size_t k = 2; k <= bra.shape().particles; ++k) factorial *= static_cast<double>(k);
  const Complex root{std::sqrt(factorial), 0.0};

  AmplitudeResult out;
  out.method = AmplitudeMethod::standard;
  out.f = superposition_inner(root * apply_projector(bra, which, max_n), root * apply_projector(ket, which, max_n));
  out.probability = std::norm(out.f);
  out.cases = classify_all(bra, ket);
  return out;
}

Complex chained_amplitude(const Superposition& bra, std::span<const Superposition> intermediates,
                          const Superposition& ket, RotationSense sense, Observation observation,
                          std::size_t max_n) {
  if (intermediates.empty()) throw std::invalid_argument("chained amplitude needs at least one intermediate state");
  require_same_shape(bra, ket);
  for (std::size_t l = 0; l < intermediates.size(); ++l) {
    require_same_shape(bra, intermediates[l]);
    const double norm = norm_squared(intermediates[l]);
    if (std::abs(norm - 1.0) > 1e-10)
      throw std::invalid_argument("intermediate " + std::to_string(l) + " is not unit-norm (|l|^2 = " +
                                  std::to_string(norm) + ")");
  }

  const Superposition bra_sym = build_superposed_general(bra, sense, max_n);
  Complex total{0.0, 0.0};
  for (const auto& l : intermediates) {
    const Complex in = superposition_inner(bra_sym, l);
    const Complex out = superposition_inner(l, ket);
    total += observation == Observation::unobserved ? in * out : Complex{std::norm(in) * std::norm(out), 0.0};
  }
  return total;
}

}  // namespace spinstat
