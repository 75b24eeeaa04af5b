// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state.hpp
 * @brief Exact half-integer spin labels and the finite-dimensional state model.
 *
 * A single-particle state is an orbital amplitude vector over an abstract
 * orthonormal basis of dimension D, a spin label (s, m) and an azimuthal spin
 * angle chi. Its numeric value is orbital (x) exp(i m chi) |s, m>; the chi
 * phase is carried as a parameter and never folded into the orbital vector.
 *
 * All angles live in one global reference frame per computation. Comparing
 * angles that were measured from different reference directions is undefined.
 */

#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace spinstat {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Integer or half-odd-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

std::string to_string(HalfInt h);

/// Total spin s and its component m along the common quantization axis.
class SpinLabel {
 public:
  SpinLabel() = default;
  /// Throws SpinError unless two_s >= 0, |two_m| <= two_s and two_m == two_s (mod 2).
  SpinLabel(int two_s, int two_m);

  HalfInt s() const { return HalfInt::from_twice(two_s_); }
  HalfInt m() const { return HalfInt::from_twice(two_m_); }
  int two_s() const { return two_s_; }
  int two_m() const { return two_m_; }

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;

 private:
  int two_s_ = 0;
  int two_m_ = 0;
};

/// The 2s+1 allowed values of two_m for a given two_s, ascending.
std::vector<int> allowed_two_m(int two_s);

/// Azimuthal spin angle, canonical in [0, 2pi). 2pi is identified with 0.
class Chi {
 public:
  Chi() = default;
  explicit Chi(double radians);

  double radians() const { return radians_; }

  friend bool operator==(const Chi&, const Chi&) = default;
  friend auto operator<=>(const Chi&, const Chi&) = default;

 private:
  double radians_ = 0.0;
};

struct SingleParticleState {
  std::vector<Complex> orbital;
  SpinLabel spin;
  Chi chi;

  friend bool operator==(const SingleParticleState&, const SingleParticleState&) = default;
};

/// coeff * psi(slot 0) psi(slot 1) ... psi(slot N-1).
struct ProductState {
  Complex coeff{1.0, 0.0};
  std::vector<SingleParticleState> slots;

  friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// Tensor space a state lives in: N slots of dimension D * (2s+1).
struct Shape {
  std::size_t particles = 0;
  std::size_t orbital_dim = 0;
  int two_s = 0;

  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& shape);

/// Validates slot consistency and returns the space of a product state.
/// Throws ShapeError for an empty slot list, an empty orbital vector or slots
/// that disagree on D or two_s.
Shape shape_of(const ProductState& state);

/// Complex-weighted sum of product terms sharing one Shape. No term merging.
class Superposition {
 public:
  explicit Superposition(Shape shape);
  static Superposition of(ProductState term);

  const Shape& shape() const { return shape_; }
  std::span<const ProductState> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Throws ShapeError if the term does not live in shape().
  void push_back(ProductState term);
  /// Concatenates the term lists (vector addition).
  Superposition& operator+=(const Superposition& other);

  friend bool operator==(const Superposition&, const Superposition&) = default;

 private:
  Shape shape_;
  std::vector<ProductState> terms_;
};

Superposition operator+(Superposition lhs, const Superposition& rhs);
Superposition operator*(Complex scale, Superposition rhs);

/// exp(i (two_m / 2) chi).
Complex phase_factor(int two_m, Chi chi);

/// <bra|ket>, conjugate-linear in bra. Zero when the two m differ.
Complex single_inner(const SingleParticleState& bra, const SingleParticleState& ket);

/// conj(bra.coeff) ket.coeff prod_i <bra_i|ket_i>.
Complex product_inner(const ProductState& bra, const ProductState& ket);

/// Bilinear expansion over all term pairs.
Complex superposition_inner(const Superposition& bra, const Superposition& ket);

double norm_squared(const Superposition& state);

/// Merges terms with identical slot contents by adding coefficients and drops
/// terms whose merged coefficient is exactly zero. Term order follows first
/// occurrence.
Superposition compact(const Superposition& state);

}  // namespace spinstat
