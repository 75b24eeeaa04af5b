// Copyright 2026 The spinstat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "../support.hpp"
#include "spinstat/errors.hpp"
#include "spinstat/oracle.hpp"

using namespace spinstat;
using namespace spinstat::testing;

TEST_CASE("HalfInt keeps twice the value") {
  const HalfInt h = HalfInt::from_twice(3);
  CHECK(h.twice() == 3);
  CHECK(h.value() == 1.5);
  CHECK_FALSE(h.is_integral());
  CHECK(HalfInt::from_twice(-4).is_integral());
  CHECK(to_string(h) == "3/2");
  CHECK(to_string(HalfInt::from_twice(-1)) == "-1/2");
  CHECK(to_string(HalfInt::from_twice(4)) == "2");
  CHECK(HalfInt::from_twice(1) < HalfInt::from_twice(3));
}

TEST_CASE("SpinLabel validates s and m") {
  CHECK_NOTHROW(SpinLabel(1, -1));
  CHECK_NOTHROW(SpinLabel(0, 0));
  CHECK_NOTHROW(SpinLabel(4, 2));
  CHECK_THROWS_AS(SpinLabel(1, 0), SpinError);   // parity mismatch
  CHECK_THROWS_AS(SpinLabel(1, 3), SpinError);   // |m| > s
  CHECK_THROWS_AS(SpinLabel(-1, -1), SpinError); // negative s
  CHECK(SpinLabel(3, -3).m().value() == -1.5);
}

TEST_CASE("allowed_two_m lists 2s+1 values ascending") {
  CHECK(allowed_two_m(0) == std::vector<int>{0});
  CHECK(allowed_two_m(1) == std::vector<int>{-1, 1});
  CHECK(allowed_two_m(4) == std::vector<int>{-4, -2, 0, 2, 4});
}

TEST_CASE("Chi is canonical in [0, 2pi)") {
  CHECK(Chi(0.0).radians() == 0.0);
  CHECK(Chi(2.0 * kPi).radians() == doctest::Approx(0.0));
  CHECK(Chi(-0.5).radians() == doctest::Approx(2.0 * kPi - 0.5));
  CHECK(Chi(7.0).radians() == doctest::Approx(7.0 - 2.0 * kPi));
  for (double x : {-100.0, -1e-18, 6.283185307179586, 1e6}) {
    const double r = Chi(x).radians();
    CHECK(r >= 0.0);
    CHECK(r < 2.0 * kPi);
  }
}

TEST_CASE("phase_factor") {
  CHECK(std::abs(phase_factor(1, Chi(0.0)) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(phase_factor(0, Chi(1.234)) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(phase_factor(1, Chi(kPi)) - Complex{0.0, 1.0}) < 1e-15);
  // same value through a 100-step rotation from chi = 0
  const Complex stepped = oracle::incremental_rotation(1, Chi(0.0), Chi(kPi), RotationSense::counterclockwise, 100);
  CHECK(std::abs(phase_factor(1, Chi(kPi)) - stepped) < 1e-9);
}

TEST_CASE("single_inner") {
  const auto e1 = unit(2, 0);
  SUBCASE("different m are orthogonal") {
    CHECK(single_inner(slot(e1, 1, 1, 0.3), slot(e1, 1, -1, 0.3)) == Complex{});
  }
  SUBCASE("normalized state with itself") {
    const auto s = slot({{0.6, 0.0}, {0.0, 0.8}}, 1, 1, 2.2);
    CHECK(std::abs(single_inner(s, s) - 1.0) < 1e-15);
  }
  SUBCASE("angle difference enters as exp(i m (chi_ket - chi_bra))") {
    const Complex got = single_inner(slot(e1, 1, 1, kPi / 2), slot(e1, 1, 1, 0.0));
    CHECK(std::abs(got - std::exp(Complex{0.0, -kPi / 4})) < 1e-15);
    const auto dense_bra = oracle::densify(Superposition::of(product({slot(e1, 1, 1, kPi / 2)})));
    const auto dense_ket = oracle::densify(Superposition::of(product({slot(e1, 1, 1, 0.0)})));
    CHECK(std::abs(oracle::dot(dense_bra, dense_ket) - got) < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(single_inner(slot(unit(2, 0), 1, 1, 0.0), slot(unit(3, 0), 1, 1, 0.0)), ShapeError);
    CHECK_THROWS_AS(single_inner(slot(e1, 1, 1, 0.0), slot(e1, 3, 1, 0.0)), ShapeError);
  }
}

TEST_CASE("shape_of") {
  const auto p = product({slot(unit(3, 0), 2, 0, 0.0), slot(unit(3, 1), 2, 2, 1.0)});
  CHECK(shape_of(p) == Shape{2, 3, 2});
  CHECK(to_string(shape_of(p)) == "(N=2, D=3, 2s=2)");
  CHECK_THROWS_AS(shape_of(ProductState{}), ShapeError);
  CHECK_THROWS_AS(shape_of(product({slot(unit(3, 0), 2, 0, 0.0), slot(unit(2, 1), 2, 0, 0.0)})), ShapeError);
  CHECK_THROWS_AS(shape_of(product({slot({}, 0, 0, 0.0)})), ShapeError);
}

TEST_CASE("product_inner") {
  Gen gen(11);
  SUBCASE("one m mismatch kills the product") {
    auto a = gen.equal_m(3, 2, 1);
    auto b = a;
    b.slots[1].spin = SpinLabel(1, -a.slots[1].spin.two_m());
    CHECK(product_inner(a, b) == Complex{});
  }
  SUBCASE("self overlap is |coeff|^2") {
    auto a = gen.any(3, 2, 2);
    a.coeff = {0.3, -1.2};
    CHECK(std::abs(product_inner(a, a) - std::norm(a.coeff)) < 1e-12);
  }
  SUBCASE("matches the dense oracle") {
    for (int k = 0; k < 10; ++k) {
      const auto a = gen.any(3, 2, 1);
      const auto b = gen.any(3, 2, 1);
      const Complex dense = oracle::dot(oracle::densify(Superposition::of(a)), oracle::densify(Superposition::of(b)));
      CHECK(std::abs(product_inner(a, b) - dense) < 1e-12);
    }
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(product_inner(gen.any(2, 2, 1), gen.any(3, 2, 1)), ShapeError);
  }
}

TEST_CASE("Superposition") {
  Gen gen(12);
  const Shape shape{2, 2, 1};
  Superposition empty(shape);
  CHECK(empty.empty());
  CHECK_THROWS_AS(Superposition(Shape{0, 2, 1}), ShapeError);
  CHECK_THROWS_AS(empty.push_back(gen.any(3, 2, 1)), ShapeError);

  const Superposition x = gen.superposition(3, 2, 2, 1);
  const Superposition y = gen.superposition(2, 2, 2, 1);
  SUBCASE("zero bra gives zero") { CHECK(superposition_inner(empty, y) == Complex{}); }
  SUBCASE("singletons reduce to product_inner") {
    CHECK(superposition_inner(Superposition::of(x.terms()[0]), Superposition::of(y.terms()[1])) ==
          product_inner(x.terms()[0], y.terms()[1]));
  }
  SUBCASE("3-term vs 2-term against the dense oracle") {
    CHECK(std::abs(superposition_inner(x, y) - oracle::dot(oracle::densify(x), oracle::densify(y))) < 1e-12);
  }
  SUBCASE("sums and scaling") {
    const Superposition z = Complex{0.0, 2.0} * (x + y);
    CHECK(z.size() == 5);
    CHECK(std::abs(superposition_inner(x, z) - Complex{0.0, 2.0} * (superposition_inner(x, x) + superposition_inner(x, y))) <
          1e-12);
    CHECK_THROWS_AS(x + Superposition::of(gen.any(3, 2, 1)), ShapeError);
  }
  SUBCASE("norm_squared matches the dense vector") {
    const auto v = oracle::densify(x);
    CHECK(std::abs(norm_squared(x) - oracle::dot(v, v).real()) < 1e-12);
  }
}

TEST_CASE("compact merges equal terms and drops exact zeros") {
  Gen gen(13);
  const ProductState a = gen.any(2, 2, 1);
  const ProductState b = gen.any(2, 2, 1);
  ProductState neg_a = a;
  neg_a.coeff = -a.coeff;
  ProductState twice_b = b;
  twice_b.coeff = 2.0 * b.coeff;

  Superposition s = Superposition::of(a);
  s.push_back(b);
  s.push_back(neg_a);
  s.push_back(twice_b);
  const Superposition c = compact(s);
  REQUIRE(c.size() == 1);
  CHECK(c.terms()[0].slots == b.slots);
  CHECK(c.terms()[0].coeff == 3.0 * b.coeff);
  CHECK(compact(Superposition(s.shape())).empty());
}
