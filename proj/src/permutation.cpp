// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spinstat/errors.hpp"

namespace spinstat {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
  std::vector<bool> hit(images.size(), false);
  for (auto image : images) {
    if (image >= images.size() || hit[image])
      throw std::invalid_argument("not a bijection on {0.." + std::to_string(images.size()) + "-1}");
    hit[image] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw std::out_of_range("transposition slot out of range");
  if (i == j) throw std::invalid_argument("a transposition needs two distinct slots");
  auto p = identity(n);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw ShapeError("cannot compose permutations of different size");
  std::vector<std::size_t> images(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) images[i] = outer[inner[i]];
  return Permutation::from_images(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::vector<Permutation> enumerate_all(std::size_t n, std::size_t max_n) {
  if (n == 0) throw std::invalid_argument("enumeration needs at least one slot");
  if (n > max_n)
    throw CapacityError("N=" + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(max_n));
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

ParityInfo parity(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t x = start; !seen[x]; x = p[x]) seen[x] = true;
  }
  const std::size_t k = p.size() - cycles;
  return {k % 2 == 0 ? Parity::even : Parity::odd, k};
}

int sign(const Permutation& p) { return parity(p).parity == Parity::even ? 1 : -1; }

TranspositionSeq decompose_canonical(const Permutation& p) {
  TranspositionSeq steps;
  std::vector<bool> seen(p.size(), false);
  // scanning starts in increasing order, so each cycle is entered at its minimum
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    for (std::size_t x = p[start]; x != start; x = p[x]) {
      seen[x] = true;
      steps.push_back({start, x});
    }
  }
  return steps;
}

Permutation recompose(const TranspositionSeq& steps, std::size_t n) {
  // where[c] is the slot currently holding the content that started in slot c
  std::vector<std::size_t> where(n);
  std::iota(where.begin(), where.end(), std::size_t{0});
  std::vector<std::size_t> holder = where;  // holder[slot] = original content index
  for (const auto& [i, j] : steps) {
    if (i >= n || j >= n || i == j) throw std::invalid_argument("invalid transposition in sequence");
    std::swap(holder[i], holder[j]);
    where[holder[i]] = i;
    where[holder[j]] = j;
  }
  return Permutation::from_images(std::move(where));
}

namespace {

void require_slots(const Permutation& p, std::size_t n) {
  if (p.size() != n)
    throw ShapeError("permutation on " + std::to_string(p.size()) + " slots applied to a state with " +
                     std::to_string(n) + " slots");
}

}  // namespace

ProductState apply_full(const Permutation& p, const ProductState& state) {
  require_slots(p, state.slots.size());
  ProductState out{state.coeff, std::vector<SingleParticleState>(state.slots.size())};
  for (std::size_t i = 0; i < state.slots.size(); ++i) out.slots[p[i]] = state.slots[i];
  return out;
}

Superposition apply_full(const Permutation& p, const Superposition& state) {
  Superposition out(state.shape());
  for (const auto& term : state.terms()) out.push_back(apply_full(p, term));
  return out;
}

ProductState apply_params_only(const Permutation& p, const ProductState& state) {
  require_slots(p, state.slots.size());
  shape_of(state);
  ProductState out = state;
  for (std::size_t i = 0; i < state.slots.size(); ++i) {
    out.slots[p[i]].orbital = state.slots[i].orbital;
    out.slots[p[i]].spin = state.slots[i].spin;
  }
  return out;
}

}  // namespace spinstat
