// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symmetrization.hpp
 * @brief Permutation sums over product states.
 *
 * Two families live here. The rotation-based sums (symmetrize_prime,
 * build_superposed) are unnormalized and weight each permuted term by the
 * exchange factor produced by chi rotations. The standard projectors S and A
 * carry 1/N! and fixed +1 / parity weights and involve no rotations.
 */

#pragma once

#include <cstddef>

#include "spinstat/exchange.hpp"
#include "spinstat/permutation.hpp"
#include "spinstat/state.hpp"

namespace spinstat {

enum class StatisticsKind { bose, fermi, spin_derived, general_eta };

struct Statistics {
  StatisticsKind kind = StatisticsKind::bose;
  int two_s = 0;  ///< only meaningful for spin_derived

  static Statistics bose() { return {StatisticsKind::bose, 0}; }
  static Statistics fermi() { return {StatisticsKind::fermi, 0}; }
  static Statistics spin_derived(int two_s) { return {StatisticsKind::spin_derived, two_s}; }
  static Statistics general_eta() { return {StatisticsKind::general_eta, 0}; }

  /// bose / fermi / general_eta; spin_derived reduces by the parity of 2s.
  StatisticsKind reduced() const;
};

enum class Projector { symmetrizer, antisymmetrizer };

/// sum_alpha P_alpha psi with parameters permuted and angles left in place.
/// N! unit-weight terms in enumeration order.
Superposition symmetrize_prime(const ProductState& state, std::size_t max_n = kDefaultMaxParticles);

/// sum_alpha eta_alpha apply_full(P_alpha, psi). For equal m the weights are
/// exactly (-1)^(2s k_alpha).
Superposition build_superposed(const ProductState& state, RotationSense sense,
                               std::size_t max_n = kDefaultMaxParticles);

/// build_superposed applied to each term, concatenated; term coefficients are
/// carried through.
Superposition build_superposed_general(const Superposition& state, RotationSense sense,
                                       std::size_t max_n = kDefaultMaxParticles);

/// (1/N!) sum_alpha w_alpha apply_full(P_alpha, .) termwise, w = 1 for S and
/// the parity sign for A.
Superposition apply_projector(const Superposition& state, Projector which,
                              std::size_t max_n = kDefaultMaxParticles);

struct PhaseExtraction {
  Complex phase;          ///< exp(i m sum chi) of the first term
  Superposition reduced;  ///< chi-free terms with phase * reduced == input
};

/// Draws exp(i m sum_k chi_k) out of an equal-m superposition. Terms whose
/// angle sum differs from the first term's keep the relative phase in their
/// coefficient. Throws SpinError if the slots do not all share one m, and
/// ShapeError for an empty superposition.
PhaseExtraction extract_overall_phase(const Superposition& state);

/// apply_full(p, state) == sign * state for every p. Both sides are compared
/// through overlaps with fixed pseudo-random product probes, three for every
/// m pattern reachable by permuting the terms; tol is relative to the summed
/// term magnitudes.
bool is_symmetric(const Superposition& state, double tol = 1e-10, std::size_t max_n = kDefaultMaxParticles);
bool is_antisymmetric(const Superposition& state, double tol = 1e-10,
                      std::size_t max_n = kDefaultMaxParticles);

}  // namespace spinstat
