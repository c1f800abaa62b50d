/*
Copyright 2026 The quadsep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <numbers>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "quadsep/numbers.hpp"
#include "quadsep/quadric.hpp"

using namespace quadsep;

namespace {

double scale_of(const QuadricMatrix& q, const Vec4& x) { return q.max_abs() * dot(x, x); }

oracle::M4 materialize(const Mat4& t) {
  oracle::M4 m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = t(i, j);
  }
  return m;
}

}  // namespace

TEST_CASE("evaluate examples") {
  const QuadricMatrix unit = sphere(1.0);
  CHECK(evaluate(unit, HomogeneousPoint(1, 0, 0, 1)) == 0.0);
  CHECK(evaluate(unit, HomogeneousPoint(0, 0, 0, 1)) == -1.0);
  // 9/4 - 1 by direct substitution into x²/a² + y²/b² + z²/c² - 1.
  CHECK(evaluate(ellipsoid(2, 1, 1), HomogeneousPoint(3, 0, 0, 1)) == 1.25);
}

TEST_CASE("evaluate matches the materialized quadratic form") {
  testing::Gen gen(21);
  for (int n = 0; n < 500; ++n) {
    const QuadricMatrix q = gen.quadric(-3, 3);
    const Vec4 x{gen.uniform(-5, 5), gen.uniform(-5, 5), gen.uniform(-5, 5), gen.uniform(-5, 5)};
    const Vec4 y{gen.uniform(-5, 5), gen.uniform(-5, 5), gen.uniform(-5, 5), gen.uniform(-5, 5)};
    const oracle::M4 m = oracle::symmetric(q.to_array());
    CHECK(std::abs(evaluate(q, x) - oracle::quad_form(m, x, x)) <= 1e-13 * scale_of(q, x));
    CHECK(std::abs(bilinear(q, x, y) - oracle::quad_form(m, x, y)) <=
          1e-13 * q.max_abs() * std::sqrt(dot(x, x) * dot(y, y)) * 4);
    const Vec4 qx = q.apply(x);
    const Vec4 naive = oracle::mat_vec(m, x);
    for (int i = 0; i < 4; ++i) CHECK(qx[i] == doctest::Approx(naive[i]).epsilon(1e-14));
  }
}

TEST_CASE("materialized matrix is exactly symmetric") {
  testing::Gen gen(22);
  for (int n = 0; n < 100; ++n) {
    const Mat4 m = gen.quadric(-2, 2).to_mat4();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(m(i, j) == m(j, i));
    }
  }
}

TEST_CASE("evaluate scales quadratically with the homogeneous coordinate") {
  testing::Gen gen(23);
  for (int n = 0; n < 1000; ++n) {
    const QuadricMatrix q = gen.quadric(-2, 2);
    const HomogeneousPoint x(gen.uniform(-10, 10), gen.uniform(-10, 10), gen.uniform(-10, 10),
                             gen.uniform(-10, 10) + 20.0);
    const double lambda = std::exp(gen.uniform(std::log(1e-3), std::log(1e3)));
    const double lhs = evaluate(q, x.scaled(lambda));
    const double rhs = lambda * lambda * evaluate(q, x);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * lambda * lambda * scale_of(q, x.as_vec4()) * 4);
  }
}

TEST_CASE("catalog matrices") {
  CHECK(sphere(1).to_array() == std::array<double, 10>{1, 1, 1, -1, 0, 0, 0, 0, 0, 0});
  CHECK(sphere(3).coefficients().a44 == -9.0);
  CHECK(ellipsoid(2, 1, 1).to_array() == std::array<double, 10>{0.25, 1, 1, -1, 0, 0, 0, 0, 0, 0});
  CHECK(one_sheet_hyperboloid(1, 2, 4).to_array() ==
        std::array<double, 10>{1, 0.25, -0.0625, -1, 0, 0, 0, 0, 0, 0});
  const auto hp = hyperbolic_paraboloid(1, 1).coefficients();
  CHECK(hp.a11 == 1.0);
  CHECK(hp.a22 == -1.0);
  CHECK(hp.a33 == 0.0);
  CHECK(hp.a44 == 0.0);
  CHECK(hp.a34 == -1.0);
  CHECK(hyperbolic_paraboloid(1, 1).to_mat4()(3, 2) == -1.0);

  CHECK_THROWS_AS(sphere(0), GeometryError);
  CHECK_THROWS_AS(sphere(-1), GeometryError);
  CHECK_THROWS_AS(ellipsoid(1, 0, 1), GeometryError);
  CHECK_THROWS_AS(one_sheet_hyperboloid(1, 1, -2), GeometryError);
  CHECK_THROWS_AS(hyperbolic_paraboloid(0, 1), GeometryError);
  CHECK_THROWS_AS(QuadricMatrix(QuadricMatrix::Coefficients{}), GeometryError);
  CHECK_THROWS_AS(QuadricMatrix::from_array({std::numeric_limits<double>::quiet_NaN()}),
                  GeometryError);
}

TEST_CASE("catalog surfaces satisfy their implicit equations") {
  testing::Gen gen(24);
  constexpr double pi = std::numbers::pi;
  for (int n = 0; n < 1000; ++n) {
    const double a = gen.uniform(0.1, 5), b = gen.uniform(0.1, 5), c = gen.uniform(0.1, 5);
    const double th = gen.uniform(0, pi), ph = gen.uniform(0, 2 * pi);
    const double u = gen.uniform(-2, 2), v = gen.uniform(0, 2 * pi);
    const double p = gen.uniform(-3, 3), q = gen.uniform(-3, 3);

    const struct {
      QuadricMatrix m;
      Vec4 x;
    } samples[] = {
        {sphere(a), {a * std::sin(th) * std::cos(ph), a * std::sin(th) * std::sin(ph),
                     a * std::cos(th), 1}},
        {ellipsoid(a, b, c), {a * std::sin(th) * std::cos(ph), b * std::sin(th) * std::sin(ph),
                              c * std::cos(th), 1}},
        {one_sheet_hyperboloid(a, b, c),
         {a * std::cosh(u) * std::cos(v), b * std::cosh(u) * std::sin(v), c * std::sinh(u), 1}},
        {hyperbolic_paraboloid(a, b), {a * p, b * q, (p * p - q * q) / 2, 1}},
    };
    for (const auto& s : samples) {
      CHECK(std::abs(evaluate(s.m, s.x)) <= 1e-10 * scale_of(s.m, s.x));
    }
  }
}

TEST_CASE("transform") {
  const QuadricMatrix e = ellipsoid(2, 3, 4);
  CHECK(transform(e, Mat4::identity()) == e);

  const QuadricMatrix moved = transform(sphere(1), translation({2, 0, 0}));
  CHECK(evaluate(moved, HomogeneousPoint(3, 0, 0, 1)) == 0.0);
  CHECK(evaluate(moved, HomogeneousPoint(2, 0, 0, 1)) == -1.0);
  // (x - 2)² + y² + z² - 1 expanded: a11 = 1, a14 = -2, a44 = 3.
  CHECK(moved.coefficients().a14 == -2.0);
  CHECK(moved.coefficients().a44 == 3.0);
}

TEST_CASE("transform is a change of variables") {
  testing::Gen gen(25);
  for (int n = 0; n < 1000; ++n) {
    const QuadricMatrix q0 = gen.quadric(-2, 2);
    const Mat4 t = gen.rigid(20);
    const Vec4 x{gen.uniform(-20, 20), gen.uniform(-20, 20), gen.uniform(-20, 20), 1.0};
    const Vec4 tx = oracle::mat_vec(materialize(t), x);
    const double expected = oracle::quad_form(oracle::symmetric(q0.to_array()), tx, tx);
    const QuadricMatrix q = transform(q0, t);
    const double got = evaluate(q, x);
    // Relative to the magnitude of the terms summed on either side.
    CHECK(std::abs(got - expected) <= 1e-12 * std::max(scale_of(q0, tx), scale_of(q, x)));
  }
}

TEST_CASE("transform by T then T inverse restores the coefficients") {
  testing::Gen gen(26);
  for (int n = 0; n < 1000; ++n) {
    const QuadricMatrix q0 = gen.quadric(-2, 2);
    const Mat4 t = gen.rigid(5);
    const QuadricMatrix there = transform(q0, t);
    const auto back = transform(there, rigid_inverse(t)).to_array();
    const auto orig = q0.to_array();
    for (std::size_t i = 0; i < orig.size(); ++i) {
      CHECK(std::abs(back[i] - orig[i]) <= 1e-12 * there.max_abs());
    }
  }
}

TEST_CASE("serialization order and round trip") {
  CHECK(serialize(sphere(2)) == "1 1 1 -4 0 0 0 0 0 0");
  CHECK(serialize(QuadricMatrix({.a11 = 1, .a22 = 2, .a33 = 3, .a44 = 4, .a12 = 5, .a13 = 6,
                                 .a23 = 7, .a14 = 8, .a24 = 9, .a34 = 10})) ==
        "1 2 3 4 5 6 7 8 9 10");

  testing::Gen gen(27);
  for (int n = 0; n < 200; ++n) {
    const QuadricMatrix q = gen.quadric(-1e3, 1e3);
    std::istringstream in(serialize(q));
    std::array<double, 10> parsed{};
    std::string token;
    for (double& v : parsed) {
      in >> token;
      v = parse_double(token).value();
    }
    CHECK(QuadricMatrix::from_array(parsed) == q);
  }
}

TEST_CASE("kind dispatch") {
  CHECK(fundamental_matrix(Sphere{2}) == sphere(2));
  CHECK(fundamental_matrix(Ellipsoid{1, 2, 3}) == ellipsoid(1, 2, 3));
  CHECK(fundamental_matrix(OneSheetHyperboloid{1, 2, 3}) == one_sheet_hyperboloid(1, 2, 3));
  CHECK(fundamental_matrix(HyperbolicParaboloid{1, 2}) == hyperbolic_paraboloid(1, 2));
  const QuadricMatrix raw({.a11 = 1, .a34 = 0.5});
  CHECK(fundamental_matrix(General{raw}) == raw);
  CHECK(kind_name(Sphere{1}) == "sphere");
  CHECK(kind_name(General{raw}) == "quadric");
}
