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
#include <string>
#include <string_view>
#include <variant>

#include "quadsep/geometry.hpp"

namespace quadsep {

// Symmetric 4x4 quadric matrix stored as its 10 independent coefficients.
// The implicit surface is
//   a11 x² + a22 y² + a33 z² + a44 w²
//     + 2 (a12 xy + a13 xz + a23 yz + a14 xw + a24 yw + a34 zw) = 0.
// Serialization order is a11 a22 a33 a44 a12 a13 a23 a14 a24 a34.
class QuadricMatrix {
 public:
  struct Coefficients {
    double a11 = 0, a22 = 0, a33 = 0, a44 = 0;
    double a12 = 0, a13 = 0, a23 = 0;
    double a14 = 0, a24 = 0, a34 = 0;

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
  };

  // Throws GeometryError on non-finite or all-zero coefficients.
  explicit QuadricMatrix(const Coefficients& c);

  // Coefficients in serialization order.
  static QuadricMatrix from_array(const std::array<double, 10>& a);
  std::array<double, 10> to_array() const;

  const Coefficients& coefficients() const { return c_; }

  // Materialized entry (i, j), zero-based; (i, j) and (j, i) read the same slot.
  double operator()(int i, int j) const;
  Mat4 to_mat4() const;

  // Q·v.
  Vec4 apply(const Vec4& v) const;

  // Largest coefficient magnitude.
  double max_abs() const;

  friend bool operator==(const QuadricMatrix&, const QuadricMatrix&) = default;

 private:
  Coefficients c_;
};

// xᵀQx via the 10-coefficient expansion.
double evaluate(const QuadricMatrix& q, const Vec4& x);
inline double evaluate(const QuadricMatrix& q, const HomogeneousPoint& x) {
  return evaluate(q, x.as_vec4());
}

// uᵀQv via the 10-coefficient expansion.
double bilinear(const QuadricMatrix& q, const Vec4& u, const Vec4& v);

// Fundamental-position catalog. All shape parameters must be > 0.
QuadricMatrix sphere(double r);
QuadricMatrix ellipsoid(double a, double b, double c);
QuadricMatrix one_sheet_hyperboloid(double a, double b, double c);
// x²/a² - y²/b² - 2z = 0; the only catalog entry with an off-diagonal term.
QuadricMatrix hyperbolic_paraboloid(double a, double b);

// Tᵀ Q0 T, re-symmetrized by averaging the (i, j) and (j, i) products.
QuadricMatrix transform(const QuadricMatrix& q0, const Mat4& t);

struct Sphere {
  double r;
  friend bool operator==(const Sphere&, const Sphere&) = default;
};
struct Ellipsoid {
  double a, b, c;
  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;
};
struct OneSheetHyperboloid {
  double a, b, c;
  friend bool operator==(const OneSheetHyperboloid&, const OneSheetHyperboloid&) = default;
};
struct HyperbolicParaboloid {
  double a, b;
  friend bool operator==(const HyperbolicParaboloid&, const HyperbolicParaboloid&) = default;
};
// Raw coefficients; never classified.
struct General {
  QuadricMatrix q;
  friend bool operator==(const General&, const General&) = default;
};

using QuadricKind =
    std::variant<Sphere, Ellipsoid, OneSheetHyperboloid, HyperbolicParaboloid, General>;

QuadricMatrix fundamental_matrix(const QuadricKind& kind);

std::string_view kind_name(const QuadricKind& kind);

// Whitespace-separated, shortest round-trip decimal form.
std::string serialize(const QuadricMatrix& q);

}  // namespace quadsep
