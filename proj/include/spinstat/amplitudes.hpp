// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file amplitudes.hpp
 * @brief Transition amplitudes between superpositions.
 *
 * The Feynman form sums over permutations of the bra only, weighted by the
 * rotation-derived exchange factors, and applies no normalization. The
 * standard form projects both sides with S or A and rescales by sqrt(N!).
 * For equal m the two agree; for mixed m only |f|^2 is frame- and
 * sense-independent, so nothing phase-level is promised across chi changes.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spinstat/exchange.hpp"
#include "spinstat/symmetrization.hpp"

namespace spinstat {

enum class AmplitudeMethod { feynman, standard };

const char* to_string(AmplitudeMethod method);

/// Classification of a bra/ket product-term pair by its m values.
enum class TermCaseKind {
  all_equal_m,     ///< every slot has the same m
  all_distinct_m,  ///< all m different; one permutation survives
  mixed,           ///< some equal, some different
  zero,            ///< the m multisets differ; nothing survives
};

const char* to_string(TermCaseKind kind);

struct TermCase {
  std::size_t bra_term = 0;
  std::size_t ket_term = 0;
  TermCaseKind kind = TermCaseKind::zero;
};

struct AmplitudeResult {
  Complex f;
  double probability = 0.0;
  AmplitudeMethod method = AmplitudeMethod::feynman;
  std::vector<TermCase> cases;
};

/// Exact comparison of two_m values; coefficients and orbitals are ignored.
TermCaseKind classify(const ProductState& bra, const ProductState& ket);

/// A permutation whose slotwise m values all match the ket.
struct SurvivingMember {
  Permutation perm;
  std::size_t transpositions = 0;  ///< k_alpha
  Complex eta;                     ///< eta_alpha of the bra term
  Complex contribution;            ///< conj(eta) prod_i <(P bra)_i | ket_i>
};

struct TTerm {
  Complex value;  ///< sum of member contributions; coefficients excluded
  TermCaseKind kind = TermCaseKind::zero;
  std::vector<SurvivingMember> members;
};

/// sum_alpha conj(eta_alpha) prod_i <(P_alpha bra)_i | ket_i>, restricted to
/// the permutations that match every m. Coefficients of both terms are not
/// included.
TTerm t_term(const ProductState& bra, const ProductState& ket, RotationSense sense,
             std::size_t max_n = kDefaultMaxParticles);

/// f = <build_superposed_general(bra), ket>.
AmplitudeResult feynman_amplitude(const Superposition& bra, const Superposition& ket, RotationSense sense,
                                  std::size_t max_n = kDefaultMaxParticles);

/// f = <sqrt(N!) P bra, sqrt(N!) P ket> with P = S for bose, A for fermi.
/// Throws std::invalid_argument for general_eta statistics.
AmplitudeResult standard_amplitude(const Superposition& bra, const Superposition& ket, Statistics stats,
                                   std::size_t max_n = kDefaultMaxParticles);

enum class Observation { unobserved, observed };

/// Unobserved: sum_l <bra_S, l><l, ket>. Observed: sum_l |<bra_S, l>|^2 |<l, ket>|^2.
/// Intermediates must be non-empty and each of unit norm (within 1e-10);
/// otherwise std::invalid_argument.
Complex chained_amplitude(const Superposition& bra, std::span<const Superposition> intermediates,
                          const Superposition& ket, RotationSense sense, Observation observation,
                          std::size_t max_n = kDefaultMaxParticles);

}  // namespace spinstat
