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

#include <optional>
#include <variant>

#include "quadsep/geometry.hpp"
#include "quadsep/quadric.hpp"

namespace quadsep {

// Relative threshold below which the leading coefficient is treated as zero.
inline constexpr double kLinearEpsilon = 1e-12;
// Relative discriminant band classified as tangency.
inline constexpr double kTangentEpsilon = 1e-10;

// a t² + 2 b t + c = 0 (half-b convention), so D = b² - a c.
//
// `a_scale` is the magnitude `a` is compared against when deciding the
// equation has degenerated to linear: ‖Q‖·‖s‖² when built by
// coefficients(). A value of 0 falls back to max(|a|, |b|, |c|).
struct QuadraticCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double a_scale = 0.0;

  double discriminant() const { return b * b - a * c; }
};

struct Miss {
  double d;
};
struct Tangent {
  double t;
  double d;
};
struct Two {
  double t1;
  double t2;
  double d;
};
// a ≈ 0: the single root of 2 b t + c = 0.
struct LinearHit {
  double t;
};
// a ≈ 0 and b ≈ 0.
struct Degenerate {};

using IntersectionResult = std::variant<Miss, Tangent, Two, LinearHit, Degenerate>;

enum class HitClass { kMiss, kTangent, kTwo, kLinearHit, kDegenerate };

inline HitClass classify(const IntersectionResult& r) {
  return static_cast<HitClass>(r.index());
}

std::optional<double> discriminant(const IntersectionResult& r);

const char* to_string(HitClass c);

QuadraticCoeffs coefficients(const QuadricMatrix& q, const HomogeneousPoint& x_a,
                             const HomogeneousDirection& s);

IntersectionResult solve(const QuadraticCoeffs& coeffs);

// Classifies `coeffs` using a caller-supplied discriminant. solve() is
// solve_with_discriminant(coeffs, coeffs.discriminant()).
IntersectionResult solve_with_discriminant(const QuadraticCoeffs& coeffs, double d);

IntersectionResult intersect_classical(const QuadricMatrix& q, const HomogeneousPoint& x_a,
                                       const HomogeneousDirection& s);

}  // namespace quadsep
