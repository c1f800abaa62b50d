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

#include "quadsep/classical.hpp"

#include <algorithm>
#include <cmath>

namespace quadsep {

std::optional<double> discriminant(const IntersectionResult& r) {
  switch (classify(r)) {
    case HitClass::kMiss: return std::get<Miss>(r).d;
    case HitClass::kTangent: return std::get<Tangent>(r).d;
    case HitClass::kTwo: return std::get<Two>(r).d;
    default: return std::nullopt;
  }
}

const char* to_string(HitClass c) {
  switch (c) {
    case HitClass::kMiss: return "miss";
    case HitClass::kTangent: return "tangent";
    case HitClass::kTwo: return "two";
    case HitClass::kLinearHit: return "linear";
    case HitClass::kDegenerate: return "degenerate";
  }
  return "?";
}

QuadraticCoeffs coefficients(const QuadricMatrix& q, const HomogeneousPoint& x_a,
                             const HomogeneousDirection& s) {
  const Vec4& x = x_a.as_vec4();
  const Vec4& d = s.as_vec4();
  return {.a = evaluate(q, d),
          .b = bilinear(q, d, x),
          .c = evaluate(q, x),
          .a_scale = q.max_abs() * dot(d, d)};
}

IntersectionResult solve_with_discriminant(const QuadraticCoeffs& k, double d) {
  const double a_ref =
      k.a_scale > 0.0 ? k.a_scale : std::max({std::abs(k.a), std::abs(k.b), std::abs(k.c)});
  if (std::abs(k.a) <= kLinearEpsilon * a_ref) {
    if (std::abs(k.b) > kLinearEpsilon * std::max(a_ref, std::abs(k.c))) {
      return LinearHit{-k.c / (2.0 * k.b)};
    }
    return Degenerate{};
  }

  const double scale = std::max(k.b * k.b, std::abs(k.a * k.c));
  if (std::abs(d) <= kTangentEpsilon * scale) return Tangent{-k.b / k.a, d};
  if (d < 0.0) return Miss{d};

  // q shares the sign of -b, so the sum never cancels.
  const double q = -(k.b + std::copysign(std::sqrt(d), k.b));
  double t1 = q / k.a;
  double t2 = k.c / q;
  if (t2 < t1) std::swap(t1, t2);
  return Two{t1, t2, d};
}

IntersectionResult solve(const QuadraticCoeffs& coeffs) {
  return solve_with_discriminant(coeffs, coeffs.discriminant());
}

IntersectionResult intersect_classical(const QuadricMatrix& q, const HomogeneousPoint& x_a,
                                       const HomogeneousDirection& s) {
  return solve(coefficients(q, x_a, s));
}

}  // namespace quadsep
