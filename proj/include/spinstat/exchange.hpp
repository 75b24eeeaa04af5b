// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file exchange.hpp
 * @brief Sense-controlled chi rotations and the exchange factors built on them.
 *
 * The exchange of two slots swaps their orbital and m parameters directly but
 * carries the spin angles over by rotation about the quantization axis. For
 * half-integral m the rotated value depends on the path, so every rotation in
 * a computation runs in the one RotationSense passed explicitly to each call.
 *
 * Rotation paths are derived from exact comparisons of the stored angles,
 * never from phases: exp(i m chi) alone cannot tell the two sheets apart.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "spinstat/permutation.hpp"
#include "spinstat/state.hpp"

namespace spinstat {

enum class RotationSense { counterclockwise, clockwise };

const char* to_string(RotationSense sense);

/// What a rotation does when target == source.
enum class ZeroPath {
  stay,       ///< traverse nothing
  full_turn,  ///< traverse one full turn (2pi), crossing the seam once
};

struct RotationResult {
  SingleParticleState state;  ///< input with chi replaced by the target
  Complex factor;             ///< exp(i m delta) for ccw, exp(-i m delta) for cw
  int winding = 0;            ///< 1 iff the path crossed the 0 / 2pi seam
  double path = 0.0;          ///< delta, the unsigned path length in [0, 2pi]
};

/// Rotates the spin part from s.chi to target along the given sense.
/// factor == phase_factor(m, target) / phase_factor(m, source) * (-1)^(2m winding).
RotationResult rotate_chi(const SingleParticleState& s, Chi target, RotationSense sense,
                          ZeroPath zero_path = ZeroPath::stay);

struct PairExchange {
  ProductState state;          ///< slots i and j fully exchanged (orbital, m, chi)
  Complex factor;              ///< params-only term == factor * state
  double path_first = 0.0;     ///< rotation of the content arriving in slot i
  double path_second = 0.0;    ///< rotation of the content arriving in slot j
};

/// Exchanges slots i and j: swaps the parameters with the angles held fixed,
/// then rotates slot i from chi_i to chi_j and slot j from chi_j to chi_i.
/// The two paths always sum to 2pi; for chi_i == chi_j the first is 0 and the
/// second a full turn. Throws std::invalid_argument for i == j.
PairExchange transpose_pair(const ProductState& state, std::size_t i, std::size_t j, RotationSense sense);

/// (-1)^(2s). Throws SpinError for two_s < 0.
int exchange_factor_F(int two_s);

/// (-1)^(2s) exp(-i (m_a - m_b)(chi_a - chi_b)). Throws SpinError if either m
/// is not allowed for s.
Complex exchange_factor_Fchi(int two_s, int two_m_a, int two_m_b, Chi chi_a, Chi chi_b);

/// Which angles a transposition sees when a permutation is built step by step.
enum class EtaFrame {
  /// Angles stay with the slots, as in the params-only term; each step's
  /// factor uses the m now in the slot and the slot's own chi. The product is
  /// independent of the decomposition.
  slot_angles,
  /// Angles travel with the contents (each step acts on the fully exchanged
  /// state of the previous one). Depends on the decomposition for mixed m;
  /// kept for diagnostics.
  carried_angles,
};

struct EtaResult {
  Complex eta{1.0, 0.0};
  ProductState state;                 ///< apply_full(p, input)
  std::vector<Complex> step_factors;  ///< one per transposition
};

/// Product of transposition factors over decompose_canonical(p).
EtaResult eta(const Permutation& p, const ProductState& state, RotationSense sense,
              EtaFrame frame = EtaFrame::slot_angles);

/// Same product over an arbitrary swap sequence; used to probe decomposition
/// dependence.
EtaResult eta_along(const TranspositionSeq& steps, const ProductState& state, RotationSense sense,
                    EtaFrame frame = EtaFrame::slot_angles);

}  // namespace spinstat
