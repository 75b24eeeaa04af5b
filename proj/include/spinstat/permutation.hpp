// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file permutation.hpp
 * @brief Symmetric-group machinery acting on the slots of product states.
 *
 * A Permutation stores the image of every slot: the content of slot i is
 * moved to slot p[i]. Composition follows function composition, so
 * apply_full(p, apply_full(q, x)) == apply_full(compose(p, q), x).
 *
 * Permutations exchange the parameters held by fixed slots; slots themselves
 * are never relabelled.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spinstat/state.hpp"

namespace spinstat {

/// Default cap on N for anything that enumerates all N! permutations.
inline constexpr std::size_t kDefaultMaxParticles = 7;

class Permutation {
 public:
  static Permutation identity(std::size_t n);
  /// Throws std::invalid_argument unless images is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<std::size_t> images);
  /// Swap of slots i and j in an n-slot system; i != j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return images_.size(); }
  std::size_t operator[](std::size_t slot) const { return images_[slot]; }
  std::span<const std::size_t> images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {}
  std::vector<std::size_t> images_;
};

/// (outer o inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// One-line image notation, e.g. "[1,2,0]".
std::string to_string(const Permutation& p);

/// All n! permutations, identity first, in lexicographic order of images.
/// Throws CapacityError when n > max_n and std::invalid_argument for n == 0.
std::vector<Permutation> enumerate_all(std::size_t n, std::size_t max_n = kDefaultMaxParticles);

enum class Parity { even, odd };

struct ParityInfo {
  Parity parity = Parity::even;
  /// Minimal transposition count, n - (number of cycles).
  std::size_t transpositions = 0;
};

ParityInfo parity(const Permutation& p);

/// (-1)^k as +1 / -1.
int sign(const Permutation& p);

struct Transposition {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// Slot swaps applied left to right to a state.
using TranspositionSeq = std::vector<Transposition>;

/// Cycle walk: cycles in increasing order of their minimum element c0, each
/// emitting (c0, p(c0)), (c0, p(p(c0))), ... Applying the swaps in order
/// reproduces p.
TranspositionSeq decompose_canonical(const Permutation& p);

/// Permutation produced by applying the swaps in order to n slots.
Permutation recompose(const TranspositionSeq& steps, std::size_t n);

/// Moves whole slot contents (orbital, m and chi). Coefficient unchanged.
ProductState apply_full(const Permutation& p, const ProductState& state);
Superposition apply_full(const Permutation& p, const Superposition& state);

/// Moves orbital vectors and m values; every chi stays with its slot.
ProductState apply_params_only(const Permutation& p, const ProductState& state);

}  // namespace spinstat
