// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinstat/fixtures.hpp"

#include <fstream>
#include <string>

#include "spinstat/errors.hpp"

namespace spinstat {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FixtureError("expected a complex number as [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ProductState& state) {
  Json slots = Json::array();
  for (const auto& slot : state.slots) {
    Json orbital = Json::array();
    for (const auto& amp : slot.orbital) orbital.push_back(complex_to_json(amp));
    slots.push_back({{"orbital", std::move(orbital)},
                     {"two_s", slot.spin.two_s()},
                     {"two_m", slot.spin.two_m()},
                     {"chi", slot.chi.radians()}});
  }
  return {{"coeff", complex_to_json(state.coeff)}, {"slots", std::move(slots)}};
}

Json to_json(const Superposition& state) {
  Json terms = Json::array();
  for (const auto& term : state.terms()) terms.push_back(to_json(term));
  Json out{{"terms", std::move(terms)}};
  if (state.empty()) {
    out["particles"] = state.shape().particles;
    out["orbital_dim"] = state.shape().orbital_dim;
    out["two_s"] = state.shape().two_s;
  }
  return out;
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FixtureError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw FixtureError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

ProductState product_from_json(const Json& j) {
  ProductState out;
  if (j.contains("coeff")) out.coeff = complex_from_json(j.at("coeff"));
  const Json& slots = require(j, "slots");
  if (!slots.is_array() || slots.empty()) throw FixtureError("\"slots\" must be a non-empty array");
  try {
    for (const auto& s : slots) {
      SingleParticleState slot;
      const Json& orbital = require(s, "orbital");
      if (!orbital.is_array()) throw FixtureError("\"orbital\" must be an array");
      for (const auto& amp : orbital) slot.orbital.push_back(complex_from_json(amp));
      slot.spin = SpinLabel(require_int(s, "two_s"), require_int(s, "two_m"));
      const Json& chi = require(s, "chi");
      if (!chi.is_number()) throw FixtureError("\"chi\" must be a number");
      slot.chi = Chi(chi.get<double>());
      out.slots.push_back(std::move(slot));
    }
    shape_of(out);
  } catch (const SpinError& e) {
    throw FixtureError(std::string("invalid spin label: ") + e.what());
  } catch (const ShapeError& e) {
    throw FixtureError(std::string("inconsistent slots: ") + e.what());
  }
  return out;
}

Superposition superposition_from_json(const Json& j) {
  if (!j.is_object()) throw FixtureError("fixture must be a JSON object");
  if (!j.contains("terms")) return Superposition::of(product_from_json(j));

  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw FixtureError("\"terms\" must be an array");
  if (terms.empty()) {
    try {
      return Superposition(Shape{static_cast<std::size_t>(require_int(j, "particles")),
                                 static_cast<std::size_t>(require_int(j, "orbital_dim")), require_int(j, "two_s")});
    } catch (const std::invalid_argument& e) {
      throw FixtureError(std::string("invalid shape for empty superposition: ") + e.what());
    }
  }
  Superposition out = Superposition::of(product_from_json(terms.front()));
  for (std::size_t k = 1; k < terms.size(); ++k) {
    try {
      out.push_back(product_from_json(terms[k]));
    } catch (const ShapeError& e) {
      throw FixtureError("term " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

Superposition load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FixtureError(path.string() + ": " + e.what());
  }
  try {
    return superposition_from_json(j);
  } catch (const FixtureError& e) {
    throw FixtureError(path.string() + ": " + e.what());
  }
}

void save_fixture(const std::filesystem::path& path, const Superposition& state) {
  std::ofstream out(path);
  if (!out) throw FixtureError("cannot write fixture " + path.string());
  out << to_json(state).dump(2) << '\n';
}

}  // namespace spinstat
