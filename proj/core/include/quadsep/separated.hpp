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

#include <cstdint>

#include "quadsep/classical.hpp"
#include "quadsep/geometry.hpp"
#include "quadsep/quadric.hpp"

namespace quadsep {

// Antisymmetric line matrix R = x_A sᵀ - s x_Aᵀ, i.e.
//   r_ij = x_i s_j - s_i x_j.
// Only the six entries above the diagonal are stored, so R = -Rᵀ and the
// null diagonal hold by construction. For a Euclidean ray (w_A = 1, s_w = 0)
// the upper-left 3x3 block is B and the last column is -σ.
class RMatrix {
 public:
  double r12 = 0, r13 = 0, r14 = 0, r23 = 0, r24 = 0, r34 = 0;

  // Materialized entry (i, j), zero-based.
  double operator()(int i, int j) const;
  Mat4 to_mat4() const;

  // R·v.
  Vec4 apply(const Vec4& v) const {
    return {r12 * v[1] + r13 * v[2] + r14 * v[3],
            -r12 * v[0] + r23 * v[2] + r24 * v[3],
            -r13 * v[0] - r23 * v[1] + r34 * v[3],
            -r14 * v[0] - r24 * v[1] - r34 * v[2]};
  }

  bool is_zero() const {
    return r12 == 0 && r13 == 0 && r14 == 0 && r23 == 0 && r24 == 0 && r34 == 0;
  }

  friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

RMatrix r_from_point_dir(const HomogeneousPoint& x_a, const HomogeneousDirection& s);

// Same as r_from_point_dir(x_a, x_b - x_a). Throws GeometryError
// ("degenerate line") when the points are projectively equal.
RMatrix r_from_two_points(const HomogeneousPoint& x_a, const HomogeneousPoint& x_b);

// 2x4 matrix whose rows are two homogeneous points of a line.
struct MMatrix {
  HomogeneousPoint first;
  HomogeneousPoint second;
};

// R from the 2x2 minors M_ij = det[column i | column j] of M. Minors are
// unchanged by subtracting the first row from the second, and they are
// evaluated on that reduced matrix, so the result matches
// r_from_two_points bit for bit. Throws GeometryError for rank-deficient M.
RMatrix r_from_subdeterminants(const MMatrix& m);

// Everything about a ray that does not depend on the surface it is tested
// against. Immutable once built.
class RayCache {
 public:
  // Throws GeometryError when s is projectively proportional to x_A (no line).
  RayCache(const HomogeneousPoint& x_a, const HomogeneousDirection& s);

  const HomogeneousPoint& point() const { return x_a_; }
  const HomogeneousDirection& direction() const { return s_; }
  const Vec3& sigma() const { return sigma_; }
  const Vec3& xi() const { return xi_; }
  double w_a() const { return x_a_.w(); }
  double s_w() const { return s_.sw(); }
  // σ × ξ_A.
  const Vec3& moment() const { return moment_; }
  // σ·σ.
  double sigma_sq() const { return sigma_sq_; }
  const RMatrix& r() const { return r_; }

  // |s|² and |x_A|² over all four components.
  double s_norm_sq() const { return s_norm_sq_; }
  double x_norm_sq() const { return x_norm_sq_; }

  bool euclidean() const { return x_a_.w() == 1.0 && s_.sw() == 0.0; }

 private:
  HomogeneousPoint x_a_;
  HomogeneousDirection s_;
  Vec3 sigma_;
  Vec3 xi_;
  Vec3 moment_;
  double sigma_sq_;
  RMatrix r_;
  double s_norm_sq_;
  double x_norm_sq_;
};

// sᵀ Qᵀ R Q x_A: u = Q s, v = Q x_A, then uᵀ (R v). Equals b² - a c.
double discriminant_separated(const QuadricMatrix& q, const RayCache& ray);

// Detection only: true when D >= 0.
inline bool detect_separated(const QuadricMatrix& q, const RayCache& ray) {
  return discriminant_separated(q, ray) >= 0.0;
}

// Sphere of radius r centred at `center`, against a Euclidean ray
// (w_A = 1, s_w = 0): r²(σ·σ) - |m|², m = σ×ξ_A - σ×center = σ×δ_A.
// Throws GeometryError when r <= 0.
double sphere_discriminant(const Vec3& center, double r, const RayCache& ray);

// Half-b coefficients of the sphere quadric along an arbitrary projective
// line, computed without a single division:
//   σ' = σ - s_w c,  δ = ξ_A - w_A c
//   a' = σ'·σ' - r² s_w²,  b' = σ'·δ - r² s_w w_A,  c' = δ·δ - r² w_A².
// Throws GeometryError when w_A = 0 (cannot happen for a HomogeneousPoint)
// or r <= 0.
QuadraticCoeffs sphere_coefficients_projective(const Vec3& center, double r,
                                               const HomogeneousPoint& x_a,
                                               const HomogeneousDirection& s);

// b'² - a'c' from sphere_coefficients_projective. Its sign matches the
// Euclidean classification of the same line; for s_w = 0 it equals
// w_A²·μ²·D for s = μ·(σ, 0).
double sphere_discriminant_projective(const Vec3& center, double r,
                                      const HomogeneousPoint& x_a,
                                      const HomogeneousDirection& s);

// Counts root extractions so tests and benchmarks can observe the
// detection-only early exit. Owned by the caller.
struct KernelProbe {
  std::uint64_t discriminants = 0;
  std::uint64_t root_solves = 0;
};

// D from the separated form. A clear miss returns before any quadratic
// coefficient is formed; otherwise classification and roots follow
// intersect_classical, reporting the separated D.
IntersectionResult intersect_separated(const QuadricMatrix& q, const RayCache& ray,
                                       KernelProbe* probe = nullptr);

}  // namespace quadsep
