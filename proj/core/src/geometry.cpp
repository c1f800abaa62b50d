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

#include "quadsep/geometry.hpp"

#include <algorithm>

namespace quadsep {
namespace {

bool all_finite(const double* first, const double* last) {
  return std::all_of(first, last, [](double v) { return std::isfinite(v); });
}

void require_finite(const Vec4& v, const char* what) {
  if (!all_finite(v.data(), v.data() + v.size())) {
    throw GeometryError(std::string(what) + ": non-finite component");
  }
}

}  // namespace

Vec3 Vec3::checked(double x, double y, double z) {
  Vec3 v{x, y, z};
  if (!v.finite()) throw GeometryError("Vec3: non-finite component");
  return v;
}

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw GeometryError("normalized: zero-length vector");
  return v * (1.0 / n);
}

bool Mat3::finite() const { return all_finite(m.data(), m.data() + m.size()); }
bool Mat4::finite() const { return all_finite(m.data(), m.data() + m.size()); }

Mat3 transpose(const Mat3& a) {
  Mat3 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t(i, j) = a(j, i);
  }
  return t;
}

Mat3 compose(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return c;
}

bool is_rotation(const Mat3& a, double tolerance) {
  if (!a.finite()) return false;
  const Mat3 g = compose(a, transpose(a));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g(i, j) - expected) > tolerance) return false;
    }
  }
  const Vec3 r0{a(0, 0), a(0, 1), a(0, 2)};
  const Vec3 r1{a(1, 0), a(1, 1), a(1, 2)};
  const Vec3 r2{a(2, 0), a(2, 1), a(2, 2)};
  return dot(cross(r0, r1), r2) > 0.0;
}

Mat3 cross_matrix(const Vec3& w) {
  Mat3 k;
  k(0, 1) = -w.z;
  k(0, 2) = w.y;
  k(1, 2) = -w.x;
  k(1, 0) = -k(0, 1);
  k(2, 0) = -k(0, 2);
  k(2, 1) = -k(1, 2);
  return k;
}

Mat4 compose(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

Mat4 transpose(const Mat4& a) {
  Mat4 t;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t(i, j) = a(j, i);
  }
  return t;
}

Vec4 mat_vec(const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (int i = 0; i < 4; ++i) {
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += a(i, k) * v[k];
    out[i] = sum;
  }
  return out;
}

Mat4 translation(const Vec3& c) {
  Mat4 t = Mat4::identity();
  t(0, 3) = -c.x;
  t(1, 3) = -c.y;
  t(2, 3) = -c.z;
  return t;
}

Mat4 world_to_local(const Mat3& rotation, const Vec3& center) {
  const Mat3 rt = transpose(rotation);
  const Vec3 shift = -(rt * center);
  Mat4 t = Mat4::identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t(i, j) = rt(i, j);
  }
  t(0, 3) = shift.x;
  t(1, 3) = shift.y;
  t(2, 3) = shift.z;
  return t;
}

Mat4 rigid_inverse(const Mat4& t) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r(i, j) = t(i, j);
  }
  const Mat3 rt = transpose(r);
  const Vec3 shift = -(rt * Vec3{t(0, 3), t(1, 3), t(2, 3)});
  Mat4 inv = Mat4::identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) inv(i, j) = rt(i, j);
  }
  inv(0, 3) = shift.x;
  inv(1, 3) = shift.y;
  inv(2, 3) = shift.z;
  return inv;
}

HomogeneousPoint::HomogeneousPoint(double x, double y, double z, double w)
    : v_{x, y, z, w} {
  require_finite(v_, "HomogeneousPoint");
  if (w == 0.0) throw GeometryError("HomogeneousPoint: point at infinity");
}

HomogeneousPoint HomogeneousPoint::scaled(double lambda) const {
  return {v_[0] * lambda, v_[1] * lambda, v_[2] * lambda, v_[3] * lambda};
}

HomogeneousDirection::HomogeneousDirection(double sx, double sy, double sz, double sw)
    : v_{sx, sy, sz, sw} {
  require_finite(v_, "HomogeneousDirection");
  if (sx == 0.0 && sy == 0.0 && sz == 0.0 && sw == 0.0) {
    throw GeometryError("HomogeneousDirection: zero vector");
  }
}

HomogeneousDirection HomogeneousDirection::between(const HomogeneousPoint& a,
                                                   const HomogeneousPoint& b) {
  return {b.x() - a.x(), b.y() - a.y(), b.z() - a.z(), b.w() - a.w()};
}

HomogeneousDirection HomogeneousDirection::scaled(double mu) const {
  return {v_[0] * mu, v_[1] * mu, v_[2] * mu, v_[3] * mu};
}

Vec3 to_euclidean(const HomogeneousPoint& p) {
  // The constructor already guarantees w != 0.
  return {p.x() / p.w(), p.y() / p.w(), p.z() / p.w()};
}

}  // namespace quadsep
