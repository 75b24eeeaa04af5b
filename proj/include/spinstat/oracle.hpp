// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Deliberately naive reference implementations for verification.
 *
 * Nothing here calls into the main state/permutation/exchange arithmetic. The
 * oracle reads the plain data members of states and recomputes every phase,
 * permutation action and parity on its own, so that agreement between the two
 * paths means something.
 *
 * Dense basis ordering: slot-major (slot 0 most significant); within a slot
 * the orbital index is major and the spin index minor, with spin index
 * (2s - 2m) / 2, i.e. m = s first.
 */

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spinstat/exchange.hpp"
#include "spinstat/state.hpp"
#include "spinstat/symmetrization.hpp"

namespace spinstat::oracle {

/// Largest dense dimension (D (2s+1))^N any oracle routine will build.
inline constexpr std::size_t kDefaultDenseCap = 4096;

struct DenseVector {
  Shape shape;
  std::vector<Complex> amplitudes;
};

class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Dimension (D (2s+1))^N of the dense space; throws CapacityError above cap.
std::size_t dense_dimension(const Shape& shape, std::size_t cap = kDefaultDenseCap);

/// Sum over terms of coeff * (x)_slots [orbital (x) exp(i m chi) e_m].
DenseVector densify(const Superposition& state, std::size_t cap = kDefaultDenseCap);

/// <a|b>, conjugate-linear in a.
Complex dot(const DenseVector& a, const DenseVector& b);

/// Moves the content of slot i to slot images[i] in the dense basis.
DenseMatrix dense_permutation(std::span<const std::size_t> images, const Shape& shape,
                              std::size_t cap = kDefaultDenseCap);

/// (1/N!) sum_alpha (+-1)^k_alpha P_alpha, parity from inversion counting.
DenseMatrix dense_projector(Projector which, std::size_t particles, std::size_t orbital_dim, int two_s,
                            std::size_t cap = kDefaultDenseCap);

/// scale * sum_k weight_k P_k for arbitrary per-permutation weights.
DenseMatrix dense_weighted_sum(std::span<const std::pair<std::vector<std::size_t>, Complex>> terms,
                               const Shape& shape, Complex scale, std::size_t cap = kDefaultDenseCap);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);
DenseVector apply(const DenseMatrix& a, const DenseVector& v);
Complex trace(const DenseMatrix& a);
/// max_ij |a_ij - b_ij|
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Product over `steps` equal sub-rotations along a path of the given length,
/// each approximated by a sixth-order Taylor step of exp(+-i m delta); + for
/// ccw, - for cw. Converges to the exact factor as steps grow.
Complex incremental_rotation_path(int two_m, double path, RotationSense sense, std::size_t steps);

/// Walks the sense-respecting path from source to target in equal steps. A
/// coincident source and target is a zero-length path.
Complex incremental_rotation(int two_m, Chi source, Chi target, RotationSense sense, std::size_t steps);

}  // namespace spinstat::oracle
