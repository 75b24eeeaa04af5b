// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace spinstat {

/// States or operators that do not live in the same tensor space
/// (particle count, orbital dimension or total spin differ).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spin quantum numbers that violate |m| <= s or the s/m parity rule.
class SpinError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brute-force enumeration or dense expansion above the configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace spinstat
