// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random instances for the verification suites.
//
// Orbitals are complex Gaussian vectors normalized to one, chi is uniform on
// [0, 2pi) and m is uniform over the 2s+1 allowed values.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spinstat/state.hpp"

namespace spinstat::sampling {

using Rng = std::mt19937_64;

/// Independent stream per trial: seed xor trial index.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(seed ^ trial); }

std::vector<Complex> random_orbital(Rng& rng, std::size_t dim);
Chi random_chi(Rng& rng);
int random_two_m(Rng& rng, int two_s);

/// One slot per entry of two_ms, all with unit orbitals and random chi.
ProductState random_product(Rng& rng, std::size_t orbital_dim, int two_s, std::span<const int> two_ms);

/// All slots share one random m.
ProductState random_equal_m(Rng& rng, std::size_t particles, std::size_t orbital_dim, int two_s);

/// An m pattern that is not constant; needs particles >= 2 and two_s >= 1.
std::vector<int> random_mixed_pattern(Rng& rng, std::size_t particles, int two_s);

/// Same orbitals and m values, every chi redrawn.
ProductState resample_chi(Rng& rng, ProductState state);

/// Random permutation of a pattern (same multiset).
std::vector<int> shuffled(Rng& rng, std::vector<int> pattern);

}  // namespace spinstat::sampling
