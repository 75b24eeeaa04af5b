// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "spinstat/errors.hpp"

namespace spinstat {

std::string to_string(HalfInt h) {
  if (h.is_integral()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

SpinLabel::SpinLabel(int two_s, int two_m) : two_s_(two_s), two_m_(two_m) {
  if (two_s < 0) throw SpinError("total spin must be non-negative, got 2s=" + std::to_string(two_s));
  if (std::abs(two_m) > two_s)
    throw SpinError("|m| exceeds s: 2m=" + std::to_string(two_m) + ", 2s=" + std::to_string(two_s));
  if ((two_s - two_m) % 2 != 0)
    throw SpinError("s and m must be both integral or both half-integral: 2m=" + std::to_string(two_m) +
                    ", 2s=" + std::to_string(two_s));
}

std::vector<int> allowed_two_m(int two_s) {
  if (two_s < 0) throw SpinError("total spin must be non-negative");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(two_s) + 1);
  for (int two_m = -two_s; two_m <= two_s; two_m += 2) out.push_back(two_m);
  return out;
}

Chi::Chi(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  radians_ = r;
}

std::string to_string(const Shape& shape) {
  return "(N=" + std::to_string(shape.particles) + ", D=" + std::to_string(shape.orbital_dim) +
         ", 2s=" + std::to_string(shape.two_s) + ")";
}

Shape shape_of(const ProductState& state) {
  if (state.slots.empty()) throw ShapeError("product state has no slots");
  const auto& first = state.slots.front();
  if (first.orbital.empty()) throw ShapeError("orbital vector must have dimension >= 1");
  Shape shape{state.slots.size(), first.orbital.size(), first.spin.two_s()};
  for (const auto& slot : state.slots) {
    if (slot.orbital.size() != shape.orbital_dim)
      throw ShapeError("slots disagree on orbital dimension");
    if (slot.spin.two_s() != shape.two_s) throw ShapeError("slots disagree on total spin");
  }
  return shape;
}

Superposition::Superposition(Shape shape) : shape_(shape) {
  if (shape.particles == 0 || shape.orbital_dim == 0)
    throw ShapeError("superposition shape needs N >= 1 and D >= 1");
  if (shape.two_s < 0) throw SpinError("total spin must be non-negative");
}

Superposition Superposition::of(ProductState term) {
  Superposition out(shape_of(term));
  out.terms_.push_back(std::move(term));
  return out;
}

void Superposition::push_back(ProductState term) {
  if (shape_of(term) != shape_)
    throw ShapeError("term shape " + to_string(shape_of(term)) + " does not match superposition " +
                     to_string(shape_));
  terms_.push_back(std::move(term));
}

Superposition& Superposition::operator+=(const Superposition& other) {
  if (other.shape_ != shape_)
    throw ShapeError("cannot add superpositions of shapes " + to_string(shape_) + " and " +
                     to_string(other.shape_));
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

Superposition operator+(Superposition lhs, const Superposition& rhs) {
  lhs += rhs;
  return lhs;
}

Superposition operator*(Complex scale, Superposition rhs) {
  Superposition out(rhs.shape());
  for (auto term : rhs.terms()) {
    term.coeff *= scale;
    out.push_back(std::move(term));
  }
  return out;
}

Complex phase_factor(int two_m, Chi chi) {
  const double angle = 0.5 * two_m * chi.radians();
  return {std::cos(angle), std::sin(angle)};
}

Complex single_inner(const SingleParticleState& bra, const SingleParticleState& ket) {
  if (bra.orbital.size() != ket.orbital.size())
    throw ShapeError("orbital dimensions differ: " + std::to_string(bra.orbital.size()) + " vs " +
                     std::to_string(ket.orbital.size()));
  if (bra.spin.two_s() != ket.spin.two_s()) throw ShapeError("total spins differ");
  if (bra.spin.two_m() != ket.spin.two_m()) return {0.0, 0.0};

  Complex overlap{0.0, 0.0};
  for (std::size_t k = 0; k < bra.orbital.size(); ++k) overlap += std::conj(bra.orbital[k]) * ket.orbital[k];
  const int two_m = ket.spin.two_m();
  return std::conj(phase_factor(two_m, bra.chi)) * phase_factor(two_m, ket.chi) * overlap;
}

Complex product_inner(const ProductState& bra, const ProductState& ket) {
  if (bra.slots.size() != ket.slots.size())
    throw ShapeError("particle counts differ: " + std::to_string(bra.slots.size()) + " vs " +
                     std::to_string(ket.slots.size()));
  Complex acc = std::conj(bra.coeff) * ket.coeff;
  for (std::size_t i = 0; i < bra.slots.size(); ++i) acc *= single_inner(bra.slots[i], ket.slots[i]);
  return acc;
}

Complex superposition_inner(const Superposition& bra, const Superposition& ket) {
  if (bra.shape() != ket.shape())
    throw ShapeError("incompatible superpositions " + to_string(bra.shape()) + " and " + to_string(ket.shape()));
  Complex acc{0.0, 0.0};
  for (const auto& b : bra.terms())
    for (const auto& k : ket.terms()) acc += product_inner(b, k);
  return acc;
}

double norm_squared(const Superposition& state) { return superposition_inner(state, state).real(); }

namespace {

bool same_slots(const ProductState& a, const ProductState& b) { return a.slots == b.slots; }

}  // namespace

Superposition compact(const Superposition& state) {
  std::vector<ProductState> merged;
  for (const auto& term : state.terms()) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const ProductState& m) { return same_slots(m, term); });
    if (it == merged.end())
      merged.push_back(term);
    else
      it->coeff += term.coeff;
  }
  Superposition out(state.shape());
  for (auto& term : merged)
    if (term.coeff != Complex{}) out.push_back(std::move(term));
  return out;
}

}  // namespace spinstat
