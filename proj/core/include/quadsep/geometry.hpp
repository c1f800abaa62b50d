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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadsep {

// Thrown when a value violates a geometric precondition at a construction
// boundary (non-finite input, point at infinity, degenerate line, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vec4 = std::array<double, 4>;

// Plain Euclidean 3-vector. Arithmetic on it is unchecked; values entering
// the library from outside go through Vec3::checked().
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Vec3 checked(double x, double y, double z);

  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator*(double k, const Vec3& v) { return v * k; }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Throws GeometryError on a zero vector.
Vec3 normalized(const Vec3& v);

constexpr double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// Row-major 3x3.
struct Mat3 {
  std::array<double, 9> m{};

  static constexpr Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

  constexpr double operator()(int row, int col) const { return m[row * 3 + col]; }
  constexpr double& operator()(int row, int col) { return m[row * 3 + col]; }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  bool finite() const;

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 transpose(const Mat3& a);
Mat3 compose(const Mat3& a, const Mat3& b);

// True when a·aᵀ = I entrywise within `tolerance` and det(a) > 0.
bool is_rotation(const Mat3& a, double tolerance = 1e-8);

// Antisymmetric K with K·v = w × v.
Mat3 cross_matrix(const Vec3& w);

// Row-major 4x4.
struct Mat4 {
  std::array<double, 16> m{};

  static constexpr Mat4 identity() {
    return {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}};
  }

  constexpr double operator()(int row, int col) const { return m[row * 4 + col]; }
  constexpr double& operator()(int row, int col) { return m[row * 4 + col]; }

  bool finite() const;

  friend constexpr bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 compose(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
Vec4 mat_vec(const Mat4& a, const Vec4& v);

// Identity with fourth column (-c, 1): maps the point c to the origin and
// leaves directions (w = 0) untouched.
Mat4 translation(const Vec3& c);

// World-to-local map of a body whose local frame is rotated by `rotation`
// (local-to-world) and placed at `center`: x_local = Rᵀ(x_world - center).
Mat4 world_to_local(const Mat3& rotation, const Vec3& center);

// Inverse of a rotation+translation matrix.
Mat4 rigid_inverse(const Mat4& t);

// Projective point [x, y, z, w] with w != 0.
class HomogeneousPoint {
 public:
  HomogeneousPoint(double x, double y, double z, double w = 1.0);
  static HomogeneousPoint from_euclidean(const Vec3& p) { return {p.x, p.y, p.z, 1.0}; }

  double x() const { return v_[0]; }
  double y() const { return v_[1]; }
  double z() const { return v_[2]; }
  double w() const { return v_[3]; }

  Vec3 xyz() const { return {v_[0], v_[1], v_[2]}; }
  const Vec4& as_vec4() const { return v_; }

  HomogeneousPoint scaled(double lambda) const;

  friend bool operator==(const HomogeneousPoint&, const HomogeneousPoint&) = default;

 private:
  Vec4 v_;
};

// Line direction [sx, sy, sz, sw]; sw = 0 for a Euclidean direction.
class HomogeneousDirection {
 public:
  HomogeneousDirection(double sx, double sy, double sz, double sw = 0.0);
  static HomogeneousDirection from_euclidean(const Vec3& d) { return {d.x, d.y, d.z, 0.0}; }

  // s = b - a componentwise, including w.
  static HomogeneousDirection between(const HomogeneousPoint& a, const HomogeneousPoint& b);

  double sx() const { return v_[0]; }
  double sy() const { return v_[1]; }
  double sz() const { return v_[2]; }
  double sw() const { return v_[3]; }

  Vec3 xyz() const { return {v_[0], v_[1], v_[2]}; }
  const Vec4& as_vec4() const { return v_; }

  HomogeneousDirection scaled(double mu) const;
  HomogeneousDirection reversed() const { return scaled(-1.0); }

  friend bool operator==(const HomogeneousDirection&, const HomogeneousDirection&) = default;

 private:
  Vec4 v_;
};

Vec3 to_euclidean(const HomogeneousPoint& p);

}  // namespace quadsep
