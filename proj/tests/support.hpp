// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

// Builders and hand-rolled generators shared by the test binaries.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "spinstat/permutation.hpp"
#include "spinstat/state.hpp"

namespace spinstat::testing {

inline constexpr double kPi = std::numbers::pi;

inline SingleParticleState slot(std::vector<Complex> orbital, int two_s, int two_m, double chi) {
  return {std::move(orbital), SpinLabel(two_s, two_m), Chi(chi)};
}

/// Unit basis vector e_k in dimension d.
inline std::vector<Complex> unit(std::size_t d, std::size_t k) {
  std::vector<Complex> v(d);
  v[k] = 1.0;
  return v;
}

inline ProductState product(std::vector<SingleParticleState> slots, Complex coeff = 1.0) {
  return {coeff, std::move(slots)};
}

inline double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
  return out;
}

/// Random instances for property checks. Each property runs a fixed number of
/// cases from its own seed, so a failure names a reproducible case index.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t size(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex() {
    std::normal_distribution<double> g;
    return {g(rng_), g(rng_)};
  }

  std::vector<Complex> orbital(std::size_t d) {
    std::vector<Complex> v(d);
    double sq = 0.0;
    for (auto& x : v) {
      x = complex();
      sq += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(sq);
    return v;
  }

  double chi() { return real(0.0, 2.0 * kPi); }

  int two_m(int two_s) { return -two_s + 2 * integer(0, two_s); }

  SingleParticleState slot_with(std::size_t d, int two_s, int two_m) {
    return {orbital(d), SpinLabel(two_s, two_m), Chi(chi())};
  }

  ProductState product_with(std::size_t d, int two_s, const std::vector<int>& two_ms) {
    ProductState p;
    for (int m : two_ms) p.slots.push_back(slot_with(d, two_s, m));
    return p;
  }

  ProductState equal_m(std::size_t n, std::size_t d, int two_s) {
    return product_with(d, two_s, std::vector<int>(n, two_m(two_s)));
  }

  ProductState any(std::size_t n, std::size_t d, int two_s) {
    std::vector<int> ms(n);
    for (auto& m : ms) m = two_m(two_s);
    return product_with(d, two_s, ms);
  }

  std::vector<int> mixed_pattern(std::size_t n, int two_s) {
    std::vector<int> ms(n);
    do {
      for (auto& m : ms) m = two_m(two_s);
    } while (std::all_of(ms.begin(), ms.end(), [&](int m) { return m == ms.front(); }));
    return ms;
  }

  std::vector<int> shuffle(std::vector<int> v) {
    std::shuffle(v.begin(), v.end(), rng_);
    return v;
  }

  Permutation permutation(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t k = 0; k < n; ++k) images[k] = k;
    std::shuffle(images.begin(), images.end(), rng_);
    return Permutation::from_images(std::move(images));
  }

  Superposition superposition(std::size_t terms, std::size_t n, std::size_t d, int two_s) {
    Superposition out(Shape{n, d, two_s});
    for (std::size_t k = 0; k < terms; ++k) {
      ProductState p = any(n, d, two_s);
      p.coeff = complex();
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace spinstat::testing
