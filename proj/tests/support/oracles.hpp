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

#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: matrices are materialized as plain 4x4 arrays and
// multiplied with naive loops.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

namespace quadsep::oracle {

using M4 = std::array<std::array<double, 4>, 4>;
using V4 = std::array<double, 4>;
using V3 = std::array<double, 3>;

inline V3 cross(const V3& u, const V3& v) {
  // Cofactor expansion of det[i j k; u; v].
  return {u[1] * v[2] - u[2] * v[1], -(u[0] * v[2] - u[2] * v[0]), u[0] * v[1] - u[1] * v[0]};
}

inline double dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline V4 mat_vec(const M4& a, const V4& v) {
  V4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) out[i] += a[i][k] * v[k];
  }
  return out;
}

inline M4 mat_mul(const M4& a, const M4& b) {
  M4 c{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline double quad_form(const M4& q, const V4& u, const V4& v) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sum += u[i] * q[i][j] * v[j];
  }
  return sum;
}

// Symmetric matrix from coefficients in serialization order
// a11 a22 a33 a44 a12 a13 a23 a14 a24 a34.
inline M4 symmetric(const std::array<double, 10>& c) {
  return {{{c[0], c[4], c[5], c[7]},
           {c[4], c[1], c[6], c[8]},
           {c[5], c[6], c[2], c[9]},
           {c[7], c[8], c[9], c[3]}}};
}

// x ⊗ s - s ⊗ x.
inline M4 outer_r(const V4& x, const V4& s) {
  M4 r{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r[i][j] = x[i] * s[j] - s[i] * x[j];
  }
  return r;
}

struct Abc {
  double a, b, c;
  double d() const { return b * b - a * c; }
};

// Half-b quadratic coefficients of xᵀQx along x + t s, from the full matrix.
inline Abc naive_coefficients(const M4& q, const V4& x, const V4& s) {
  return {quad_form(q, s, s), quad_form(q, s, x), quad_form(q, x, x)};
}

// Geometric line-sphere intersection: foot of the perpendicular from the
// centre, then Pythagoras. Returns the two line parameters, if any.
inline std::optional<std::pair<double, double>> geometric_sphere_hits(const V3& origin,
                                                                      const V3& dir,
                                                                      const V3& center,
                                                                      double r) {
  const V3 oc{center[0] - origin[0], center[1] - origin[1], center[2] - origin[2]};
  const double dd = dot3(dir, dir);
  const double t_foot = dot3(oc, dir) / dd;
  const V3 foot{origin[0] + t_foot * dir[0] - center[0], origin[1] + t_foot * dir[1] - center[1],
                origin[2] + t_foot * dir[2] - center[2]};
  const double dist_sq = dot3(foot, foot);
  if (dist_sq > r * r) return std::nullopt;
  const double half = std::sqrt((r * r - dist_sq) / dd);
  return std::pair{t_foot - half, t_foot + half};
}

// Literal quotient form of the quadratic roots, fine at benign inputs.
inline std::pair<double, double> literal_roots(double a, double b, double c) {
  const double root = std::sqrt(b * b - a * c);
  double t1 = (-b - root) / a;
  double t2 = (-b + root) / a;
  if (t2 < t1) std::swap(t1, t2);
  return {t1, t2};
}

inline double relative_error(double got, double expected, double floor = 1.0) {
  return std::abs(got - expected) / std::max({floor, std::abs(got), std::abs(expected)});
}

}  // namespace quadsep::oracle
