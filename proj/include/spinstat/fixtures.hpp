// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

// JSON fixture format for states.
//
//   ProductState:  {"coeff":[re,im],
//                   "slots":[{"orbital":[[re,im],...],"two_s":int,"two_m":int,"chi":float},...]}
//   Superposition: {"terms":[ProductState,...]}
//
// Angles are radians and are canonicalized to [0, 2pi) on load. An empty
// "terms" list needs explicit "particles", "orbital_dim" and "two_s" keys.

#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "spinstat/state.hpp"

namespace spinstat {

using Json = nlohmann::ordered_json;

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ProductState& state);
Json to_json(const Superposition& state);

ProductState product_from_json(const Json& j);
/// Accepts either layout; a bare ProductState becomes a one-term superposition.
Superposition superposition_from_json(const Json& j);

Superposition load_fixture(const std::filesystem::path& path);
void save_fixture(const std::filesystem::path& path, const Superposition& state);

}  // namespace spinstat
