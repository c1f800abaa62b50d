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

#include "quadsep/quadric.hpp"

#include <algorithm>
#include <cmath>

#include "quadsep/numbers.hpp"

namespace quadsep {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw GeometryError(std::string(what) + ": shape parameter must be positive");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

QuadricMatrix::QuadricMatrix(const Coefficients& c) : c_(c) {
  const auto a = to_array();
  if (!std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); })) {
    throw GeometryError("QuadricMatrix: non-finite coefficient");
  }
  if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; })) {
    throw GeometryError("QuadricMatrix: zero matrix");
  }
}

QuadricMatrix QuadricMatrix::from_array(const std::array<double, 10>& a) {
  return QuadricMatrix(Coefficients{a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8], a[9]});
}

std::array<double, 10> QuadricMatrix::to_array() const {
  return {c_.a11, c_.a22, c_.a33, c_.a44, c_.a12, c_.a13, c_.a23, c_.a14, c_.a24, c_.a34};
}

double QuadricMatrix::operator()(int i, int j) const {
  if (i > j) std::swap(i, j);
  switch (i * 4 + j) {
    case 0: return c_.a11;
    case 1: return c_.a12;
    case 2: return c_.a13;
    case 3: return c_.a14;
    case 5: return c_.a22;
    case 6: return c_.a23;
    case 7: return c_.a24;
    case 10: return c_.a33;
    case 11: return c_.a34;
    case 15: return c_.a44;
    default: throw std::out_of_range("QuadricMatrix: index out of range");
  }
}

Mat4 QuadricMatrix::to_mat4() const {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

Vec4 QuadricMatrix::apply(const Vec4& v) const {
  const auto& c = c_;
  return {c.a11 * v[0] + c.a12 * v[1] + c.a13 * v[2] + c.a14 * v[3],
          c.a12 * v[0] + c.a22 * v[1] + c.a23 * v[2] + c.a24 * v[3],
          c.a13 * v[0] + c.a23 * v[1] + c.a33 * v[2] + c.a34 * v[3],
          c.a14 * v[0] + c.a24 * v[1] + c.a34 * v[2] + c.a44 * v[3]};
}

double QuadricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : to_array()) m = std::max(m, std::abs(v));
  return m;
}

double evaluate(const QuadricMatrix& q, const Vec4& p) {
  const auto& c = q.coefficients();
  const double x = p[0], y = p[1], z = p[2], w = p[3];
  return c.a11 * x * x + c.a22 * y * y + c.a33 * z * z + c.a44 * w * w +
         2.0 * (c.a12 * x * y + c.a13 * x * z + c.a23 * y * z +
                c.a14 * x * w + c.a24 * y * w + c.a34 * z * w);
}

double bilinear(const QuadricMatrix& q, const Vec4& u, const Vec4& v) {
  const auto& c = q.coefficients();
  return c.a11 * u[0] * v[0] + c.a22 * u[1] * v[1] + c.a33 * u[2] * v[2] +
         c.a44 * u[3] * v[3] + c.a12 * (u[0] * v[1] + u[1] * v[0]) +
         c.a13 * (u[0] * v[2] + u[2] * v[0]) + c.a23 * (u[1] * v[2] + u[2] * v[1]) +
         c.a14 * (u[0] * v[3] + u[3] * v[0]) + c.a24 * (u[1] * v[3] + u[3] * v[1]) +
         c.a34 * (u[2] * v[3] + u[3] * v[2]);
}

QuadricMatrix sphere(double r) {
  require_positive(r, "sphere");
  return QuadricMatrix({.a11 = 1, .a22 = 1, .a33 = 1, .a44 = -r * r});
}

QuadricMatrix ellipsoid(double a, double b, double c) {
  require_positive(a, "ellipsoid");
  require_positive(b, "ellipsoid");
  require_positive(c, "ellipsoid");
  return QuadricMatrix(
      {.a11 = 1.0 / (a * a), .a22 = 1.0 / (b * b), .a33 = 1.0 / (c * c), .a44 = -1.0});
}

QuadricMatrix one_sheet_hyperboloid(double a, double b, double c) {
  require_positive(a, "one_sheet_hyperboloid");
  require_positive(b, "one_sheet_hyperboloid");
  require_positive(c, "one_sheet_hyperboloid");
  return QuadricMatrix(
      {.a11 = 1.0 / (a * a), .a22 = 1.0 / (b * b), .a33 = -1.0 / (c * c), .a44 = -1.0});
}

QuadricMatrix hyperbolic_paraboloid(double a, double b) {
  require_positive(a, "hyperbolic_paraboloid");
  require_positive(b, "hyperbolic_paraboloid");
  return QuadricMatrix({.a11 = 1.0 / (a * a), .a22 = -1.0 / (b * b), .a34 = -1.0});
}

QuadricMatrix transform(const QuadricMatrix& q0, const Mat4& t) {
  const Mat4 m = compose(transpose(t), compose(q0.to_mat4(), t));
  const auto sym = [&m](int i, int j) { return 0.5 * (m(i, j) + m(j, i)); };
  return QuadricMatrix({.a11 = m(0, 0),
                        .a22 = m(1, 1),
                        .a33 = m(2, 2),
                        .a44 = m(3, 3),
                        .a12 = sym(0, 1),
                        .a13 = sym(0, 2),
                        .a23 = sym(1, 2),
                        .a14 = sym(0, 3),
                        .a24 = sym(1, 3),
                        .a34 = sym(2, 3)});
}

QuadricMatrix fundamental_matrix(const QuadricKind& kind) {
  return std::visit(
      Overloaded{
          [](const Sphere& s) { return sphere(s.r); },
          [](const Ellipsoid& e) { return ellipsoid(e.a, e.b, e.c); },
          [](const OneSheetHyperboloid& h) { return one_sheet_hyperboloid(h.a, h.b, h.c); },
          [](const HyperbolicParaboloid& p) { return hyperbolic_paraboloid(p.a, p.b); },
          [](const General& g) { return g.q; },
      },
      kind);
}

std::string_view kind_name(const QuadricKind& kind) {
  static constexpr std::string_view names[] = {"sphere", "ellipsoid", "hyperboloid1",
                                               "hparaboloid", "quadric"};
  return names[kind.index()];
}

std::string serialize(const QuadricMatrix& q) {
  std::string out;
  for (double v : q.to_array()) {
    if (!out.empty()) out += ' ';
    out += format_double(v);
  }
  return out;
}

}  // namespace quadsep
