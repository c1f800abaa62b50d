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

#include "quadsep/separated.hpp"

#include <algorithm>
#include <cmath>

namespace quadsep {
namespace {

// Relative size below which every entry of R counts as zero.
constexpr double kDegenerateLine = 1e-12;

bool degenerate(const RMatrix& r, const Vec4& x, const Vec4& s) {
  const double largest = std::max({std::abs(r.r12), std::abs(r.r13), std::abs(r.r14),
                                   std::abs(r.r23), std::abs(r.r24), std::abs(r.r34)});
  return largest * largest <= kDegenerateLine * kDegenerateLine * dot(x, x) * dot(s, s);
}

void require_positive_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeometryError("sphere radius must be positive");
  }
}

}  // namespace

double RMatrix::operator()(int i, int j) const {
  if (i == j) return 0.0;
  const bool upper = i < j;
  if (!upper) std::swap(i, j);
  double v = 0.0;
  switch (i * 4 + j) {
    case 1: v = r12; break;
    case 2: v = r13; break;
    case 3: v = r14; break;
    case 6: v = r23; break;
    case 7: v = r24; break;
    case 11: v = r34; break;
    default: throw std::out_of_range("RMatrix: index out of range");
  }
  return upper ? v : -v;
}

Mat4 RMatrix::to_mat4() const {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

RMatrix r_from_point_dir(const HomogeneousPoint& x_a, const HomogeneousDirection& s) {
  const Vec4& x = x_a.as_vec4();
  const Vec4& d = s.as_vec4();
  const auto entry = [&](int i, int j) { return x[i] * d[j] - d[i] * x[j]; };
  RMatrix r{.r12 = entry(0, 1),
            .r13 = entry(0, 2),
            .r14 = entry(0, 3),
            .r23 = entry(1, 2),
            .r24 = entry(1, 3),
            .r34 = entry(2, 3)};
#ifdef QUADSEP_FAULT_FLIP_R_SIGN
  // Mutation build only: flips the sign of R's last column.
  r.r14 = -r.r14;
  r.r24 = -r.r24;
  r.r34 = -r.r34;
#endif
  return r;
}

RMatrix r_from_two_points(const HomogeneousPoint& x_a, const HomogeneousPoint& x_b) {
  if (x_a == x_b) throw GeometryError("degenerate line: coincident points");
  const auto s = HomogeneousDirection::between(x_a, x_b);
  RMatrix r = r_from_point_dir(x_a, s);
  if (degenerate(r, x_a.as_vec4(), x_b.as_vec4())) {
    throw GeometryError("degenerate line: points are projectively equal");
  }
  return r;
}

RMatrix r_from_subdeterminants(const MMatrix& m) {
  const Vec4& top = m.first.as_vec4();
  const Vec4& bottom = m.second.as_vec4();
  Vec4 reduced{};
  for (int k = 0; k < 4; ++k) reduced[k] = bottom[k] - top[k];

  const auto minor = [&](int i, int j) { return top[i] * reduced[j] - reduced[i] * top[j]; };
  RMatrix r{.r12 = minor(0, 1),
            .r13 = minor(0, 2),
            .r14 = minor(0, 3),
            .r23 = minor(1, 2),
            .r24 = minor(1, 3),
            .r34 = minor(2, 3)};
#ifdef QUADSEP_FAULT_FLIP_R_SIGN
  r.r14 = -r.r14;
  r.r24 = -r.r24;
  r.r34 = -r.r34;
#endif
  if (r.is_zero() || degenerate(r, top, bottom)) {
    throw GeometryError("degenerate line: rank-deficient M");
  }
  return r;
}

RayCache::RayCache(const HomogeneousPoint& x_a, const HomogeneousDirection& s)
    : x_a_(x_a),
      s_(s),
      sigma_(s.xyz()),
      xi_(x_a.xyz()),
      moment_(cross(sigma_, xi_)),
      sigma_sq_(dot(sigma_, sigma_)),
      r_(r_from_point_dir(x_a, s)),
      s_norm_sq_(dot(s.as_vec4(), s.as_vec4())),
      x_norm_sq_(dot(x_a.as_vec4(), x_a.as_vec4())) {
  if (degenerate(r_, x_a.as_vec4(), s.as_vec4())) {
    throw GeometryError("degenerate line: direction proportional to the point");
  }
}

double discriminant_separated(const QuadricMatrix& q, const RayCache& ray) {
  const Vec4 u = q.apply(ray.direction().as_vec4());
  const Vec4 v = q.apply(ray.point().as_vec4());
  return dot(u, ray.r().apply(v));
}

double sphere_discriminant(const Vec3& center, double r, const RayCache& ray) {
  require_positive_radius(r);
  const Vec3 m = ray.moment() - cross(ray.sigma(), center);
  return r * r * ray.sigma_sq() - dot(m, m);
}

// Division-free: the code path below only adds, subtracts and multiplies.
QuadraticCoeffs sphere_coefficients_projective(const Vec3& center, double r,
                                               const HomogeneousPoint& x_a,
                                               const HomogeneousDirection& s) {
  require_positive_radius(r);
  const double w_a = x_a.w();
  if (w_a == 0.0) throw GeometryError("point at infinity");
  const double s_w = s.sw();
  const double r_sq = r * r;
  const Vec3 sigma = s.xyz() - s_w * center;
  const Vec3 delta = x_a.xyz() - w_a * center;
  return {.a = dot(sigma, sigma) - r_sq * s_w * s_w,
          .b = dot(sigma, delta) - r_sq * s_w * w_a,
          .c = dot(delta, delta) - r_sq * w_a * w_a};
}

double sphere_discriminant_projective(const Vec3& center, double r,
                                      const HomogeneousPoint& x_a,
                                      const HomogeneousDirection& s) {
  return sphere_coefficients_projective(center, r, x_a, s).discriminant();
}

IntersectionResult intersect_separated(const QuadricMatrix& q, const RayCache& ray,
                                       KernelProbe* probe) {
  const Vec4& x = ray.point().as_vec4();
  const Vec4& s = ray.direction().as_vec4();
  const Vec4 u = q.apply(s);
  const Vec4 v = q.apply(x);
  const double d = dot(u, ray.r().apply(v));
  if (probe) ++probe->discriminants;

  if (d < 0.0) {
    // U bounds max(b², |ac|) from above: b² <= |s|²|v|², and
    // |ac| <= |s||u||x||v| <= max(|s|²|u|², |x|²|v|²).
    const double uu = dot(u, u);
    const double vv = dot(v, v);
    const double bound = std::max({ray.s_norm_sq() * vv, ray.s_norm_sq() * uu,
                                   ray.x_norm_sq() * vv});
    const double a = dot(s, u);
    const bool quadratic = std::abs(a) > kLinearEpsilon * q.max_abs() * ray.s_norm_sq();
    if (quadratic && d < -kTangentEpsilon * bound) return Miss{d};
  }

  if (probe) ++probe->root_solves;
  return solve_with_discriminant(coefficients(q, ray.point(), ray.direction()), d);
}

}  // namespace quadsep
