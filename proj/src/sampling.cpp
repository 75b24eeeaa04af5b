// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinstat::sampling {

std::vector<Complex> random_orbital(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> v(dim);
  double sq = 0.0;
  for (auto& amp : v) {
    amp = {gauss(rng), gauss(rng)};
    sq += std::norm(amp);
  }
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& amp : v) amp *= inv;
  return v;
}

Chi random_chi(Rng& rng) { return Chi(std::uniform_real_distribution<double>(0.0, kTwoPi)(rng)); }

int random_two_m(Rng& rng, int two_s) {
  const auto allowed = allowed_two_m(two_s);
  std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
  return allowed[pick(rng)];
}

ProductState random_product(Rng& rng, std::size_t orbital_dim, int two_s, std::span<const int> two_ms) {
  ProductState out;
  for (int two_m : two_ms) {
    auto orbital = random_orbital(rng, orbital_dim);
    out.slots.push_back({std::move(orbital), SpinLabel(two_s, two_m), random_chi(rng)});
  }
  return out;
}

ProductState random_equal_m(Rng& rng, std::size_t particles, std::size_t orbital_dim, int two_s) {
  const std::vector<int> pattern(particles, random_two_m(rng, two_s));
  return random_product(rng, orbital_dim, two_s, pattern);
}

std::vector<int> random_mixed_pattern(Rng& rng, std::size_t particles, int two_s) {
  if (particles < 2 || two_s < 1) throw std::invalid_argument("mixed m needs N >= 2 and s >= 1/2");
  std::vector<int> pattern(particles);
  do {
    for (auto& m : pattern) m = random_two_m(rng, two_s);
  } while (std::all_of(pattern.begin(), pattern.end(), [&](int m) { return m == pattern.front(); }));
  return pattern;
}

ProductState resample_chi(Rng& rng, ProductState state) {
  for (auto& slot : state.slots) slot.chi = random_chi(rng);
  return state;
}

std::vector<int> shuffled(Rng& rng, std::vector<int> pattern) {
  std::shuffle(pattern.begin(), pattern.end(), rng);
  return pattern;
}

}  // namespace spinstat::sampling
