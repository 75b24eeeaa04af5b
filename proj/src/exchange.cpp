// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/exchange.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinstat/errors.hpp"

namespace spinstat {

const char* to_string(RotationSense sense) {
  return sense == RotationSense::counterclockwise ? "ccw" : "cw";
}

RotationResult rotate_chi(const SingleParticleState& s, Chi target, RotationSense sense, ZeroPath zero_path) {
  const double from = s.chi.radians();
  const double to = target.radians();

  double path = 0.0;
  int winding = 0;
  if (from == to) {
    if (zero_path == ZeroPath::full_turn) {
      path = kTwoPi;
      winding = 1;
    }
  } else if (sense == RotationSense::counterclockwise) {
    // increasing angle; passes 2pi -> 0 iff the target lies below the source
    winding = to < from ? 1 : 0;
    path = to - from + winding * kTwoPi;
  } else {
    winding = to > from ? 1 : 0;
    path = from - to + winding * kTwoPi;
  }

  const double signed_angle = (sense == RotationSense::counterclockwise ? 1.0 : -1.0) * 0.5 *
                              s.spin.two_m() * path;
  RotationResult out{s, {std::cos(signed_angle), std::sin(signed_angle)}, winding, path};
  out.state.chi = target;
  return out;
}

PairExchange transpose_pair(const ProductState& state, std::size_t i, std::size_t j, RotationSense sense) {
  const std::size_t n = state.slots.size();
  if (i >= n || j >= n) throw std::out_of_range("transpose_pair slot out of range");
  if (i == j) throw std::invalid_argument("transpose_pair needs two distinct slots, got " + std::to_string(i) + " twice");
  shape_of(state);

  const SingleParticleState& a = state.slots[i];
  const SingleParticleState& b = state.slots[j];

  // parameters exchanged, angles still in place
  const SingleParticleState b_at_i{b.orbital, b.spin, a.chi};
  const SingleParticleState a_at_j{a.orbital, a.spin, b.chi};

  const RotationResult first = rotate_chi(b_at_i, b.chi, sense, ZeroPath::stay);
  const RotationResult second = rotate_chi(a_at_j, a.chi, sense, ZeroPath::full_turn);

  PairExchange out;
  out.state = state;
  out.state.slots[i] = first.state;
  out.state.slots[j] = second.state;
  out.factor = Complex{1.0, 0.0} / (first.factor * second.factor);
  out.path_first = first.path;
  out.path_second = second.path;
  return out;
}

int exchange_factor_F(int two_s) {
  if (two_s < 0) throw SpinError("total spin must be non-negative, got 2s=" + std::to_string(two_s));
  return two_s % 2 == 0 ? 1 : -1;
}

Complex exchange_factor_Fchi(int two_s, int two_m_a, int two_m_b, Chi chi_a, Chi chi_b) {
  SpinLabel(two_s, two_m_a);
  SpinLabel(two_s, two_m_b);
  const double angle = -0.5 * (two_m_a - two_m_b) * (chi_a.radians() - chi_b.radians());
  return static_cast<double>(exchange_factor_F(two_s)) * Complex{std::cos(angle), std::sin(angle)};
}

EtaResult eta_along(const TranspositionSeq& steps, const ProductState& state, RotationSense sense, EtaFrame frame) {
  const std::size_t n = state.slots.size();
  EtaResult out;
  out.step_factors.reserve(steps.size());

  ProductState evolving = state;
  for (const auto& [i, j] : steps) {
    PairExchange step = transpose_pair(evolving, i, j, sense);
    out.eta *= step.factor;
    out.step_factors.push_back(step.factor);
    if (frame == EtaFrame::slot_angles)
      evolving = apply_params_only(Permutation::transposition(n, i, j), evolving);
    else
      evolving = std::move(step.state);
  }
  out.state = apply_full(recompose(steps, n), state);
  return out;
}

EtaResult eta(const Permutation& p, const ProductState& state, RotationSense sense, EtaFrame frame) {
  if (p.size() != state.slots.size())
    throw ShapeError("permutation on " + std::to_string(p.size()) + " slots applied to a state with " +
                     std::to_string(state.slots.size()) + " slots");
  return eta_along(decompose_canonical(p), state, sense, frame);
}

}  // namespace spinstat
