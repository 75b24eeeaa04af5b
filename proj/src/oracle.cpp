// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spinstat/errors.hpp"

namespace spinstat::oracle {

namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::size_t base, std::size_t count) {
  std::vector<std::size_t> digits(count);
  for (std::size_t k = count; k-- > 0;) {
    digits[k] = index % base;
    index /= base;
  }
  return digits;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t base) {
  std::size_t index = 0;
  for (auto d : digits) index = index * base + d;
  return index;
}

std::size_t inversions(const std::vector<std::size_t>& images) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (images[a] > images[b]) ++count;
  return count;
}

}  // namespace

std::size_t dense_dimension(const Shape& shape, std::size_t cap) {
  const std::size_t local = shape.orbital_dim * static_cast<std::size_t>(shape.two_s + 1);
  std::size_t dim = 1;
  for (std::size_t k = 0; k < shape.particles; ++k) {
    dim *= local;
    if (dim > cap)
      throw CapacityError("dense dimension of " + to_string(shape) + " exceeds the cap of " + std::to_string(cap));
  }
  return dim;
}

DenseVector densify(const Superposition& state, std::size_t cap) {
  const Shape& shape = state.shape();
  const std::size_t dim = dense_dimension(shape, cap);
  const std::size_t spin_dim = static_cast<std::size_t>(shape.two_s) + 1;
  const std::size_t local = shape.orbital_dim * spin_dim;

  DenseVector out{shape, std::vector<Complex>(dim)};
  for (const auto& term : state.terms()) {
    // one local vector per slot: orbital (x) exp(i m chi) e_m
    std::vector<std::vector<Complex>> factors;
    for (const auto& slot : term.slots) {
      std::vector<Complex> v(local);
      const std::size_t spin_index = static_cast<std::size_t>((shape.two_s - slot.spin.two_m()) / 2);
      const Complex phase = std::exp(Complex{0.0, slot.spin.two_m() * slot.chi.radians() / 2.0});
      for (std::size_t orb = 0; orb < shape.orbital_dim; ++orb) v[orb * spin_dim + spin_index] = slot.orbital[orb] * phase;
      factors.push_back(std::move(v));
    }
    for (std::size_t index = 0; index < dim; ++index) {
      const auto digits = digits_of(index, local, shape.particles);
      Complex amp = term.coeff;
      for (std::size_t k = 0; k < shape.particles; ++k) amp *= factors[k][digits[k]];
      out.amplitudes[index] += amp;
    }
  }
  return out;
}

Complex dot(const DenseVector& a, const DenseVector& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw ShapeError("dense vectors differ in dimension");
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < a.amplitudes.size(); ++k) acc += std::conj(a.amplitudes[k]) * b.amplitudes[k];
  return acc;
}

DenseMatrix dense_permutation(std::span<const std::size_t> images, const Shape& shape, std::size_t cap) {
  if (images.size() != shape.particles) throw ShapeError("permutation size does not match the particle count");
  const std::size_t dim = dense_dimension(shape, cap);
  const std::size_t local = shape.orbital_dim * static_cast<std::size_t>(shape.two_s + 1);
  DenseMatrix out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto from = digits_of(col, local, shape.particles);
    std::vector<std::size_t> to(shape.particles);
    for (std::size_t i = 0; i < shape.particles; ++i) to[images[i]] = from[i];
    out(index_of(to, local), col) = 1.0;
  }
  return out;
}

DenseMatrix dense_weighted_sum(std::span<const std::pair<std::vector<std::size_t>, Complex>> terms,
                               const Shape& shape, Complex scale, std::size_t cap) {
  const std::size_t dim = dense_dimension(shape, cap);
  const std::size_t local = shape.orbital_dim * static_cast<std::size_t>(shape.two_s + 1);
  DenseMatrix out(dim);
  for (const auto& [images, weight] : terms) {
    if (images.size() != shape.particles) throw ShapeError("permutation size does not match the particle count");
    for (std::size_t col = 0; col < dim; ++col) {
      const auto from = digits_of(col, local, shape.particles);
      std::vector<std::size_t> to(shape.particles);
      for (std::size_t i = 0; i < shape.particles; ++i) to[images[i]] = from[i];
      out(index_of(to, local), col) += scale * weight;
    }
  }
  return out;
}

DenseMatrix dense_projector(Projector which, std::size_t particles, std::size_t orbital_dim, int two_s,
                            std::size_t cap) {
  if (particles == 0 || orbital_dim == 0 || two_s < 0) throw std::invalid_argument("invalid dense projector shape");
  const Shape shape{particles, orbital_dim, two_s};
  dense_dimension(shape, cap);

  std::vector<std::pair<std::vector<std::size_t>, Complex>> terms;
  std::vector<std::size_t> images(particles);
  std::iota(images.begin(), images.end(), std::size_t{0});
  double count = 0.0;
  do {
    const double w = which == Projector::antisymmetrizer && inversions(images) % 2 == 1 ? -1.0 : 1.0;
    terms.emplace_back(images, Complex{w, 0.0});
    count += 1.0;
  } while (std::next_permutation(images.begin(), images.end()));
  return dense_weighted_sum(terms, shape, Complex{1.0 / count, 0.0}, cap);
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("matrix dimensions differ");
  const std::size_t n = a.dim();
  // operands here are mostly permutation sums, so walk only nonzeros of b
  std::vector<std::vector<std::size_t>> b_cols(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (b(k, j) != Complex{}) b_cols[k].push_back(j);
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j : b_cols[k]) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  DenseMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

DenseVector apply(const DenseMatrix& a, const DenseVector& v) {
  if (a.dim() != v.amplitudes.size()) throw ShapeError("matrix and vector dimensions differ");
  DenseVector out{v.shape, std::vector<Complex>(v.amplitudes.size())};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.amplitudes[i] += a(i, j) * v.amplitudes[j];
  return out;
}

Complex trace(const DenseMatrix& a) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a(i, i);
  return acc;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("matrix dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

Complex incremental_rotation_path(int two_m, double path, RotationSense sense, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("incremental rotation needs at least one step");
  const double direction = sense == RotationSense::counterclockwise ? 1.0 : -1.0;
  const double theta = direction * 0.5 * two_m * path / static_cast<double>(steps);

  // sixth-order Taylor polynomial of exp(i theta) for one sub-rotation
  constexpr int kOrder = 6;
  Complex step{1.0, 0.0};
  Complex power{1.0, 0.0};
  for (int k = 1; k <= kOrder; ++k) {
    power *= Complex{0.0, theta} / static_cast<double>(k);
    step += power;
  }

  Complex acc{1.0, 0.0};
  for (std::size_t k = 0; k < steps; ++k) acc *= step;
  return acc;
}

Complex incremental_rotation(int two_m, Chi source, Chi target, RotationSense sense, std::size_t steps) {
  const double full = 2.0 * std::acos(-1.0);
  const double raw = sense == RotationSense::counterclockwise ? target.radians() - source.radians()
                                                              : source.radians() - target.radians();
  const double path = raw < 0.0 ? raw + full : raw;
  return incremental_rotation_path(two_m, path, sense, steps);
}

}  // namespace spinstat::oracle
