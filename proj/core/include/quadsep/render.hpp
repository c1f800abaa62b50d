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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadsep/geometry.hpp"
#include "quadsep/quadric.hpp"
#include "quadsep/scene.hpp"
#include "quadsep/separated.hpp"

namespace quadsep {

enum class Method { kClassical, kSeparated };

std::optional<Method> parse_method(std::string_view name);
const char* to_string(Method m);

struct Ray {
  HomogeneousPoint origin;
  HomogeneousDirection direction;
};

// A scene object with its world-frame matrix computed once. Spheres also
// keep center and radius for the fast path.
struct PreparedObject {
  QuadricMatrix world;
  std::optional<Vec3> sphere_center;
  double sphere_radius = 0.0;
};

std::vector<PreparedObject> prepare(const Scene& scene);

// Detection discriminant of one ray-object pair.
//   classical: b² - ac from the quadratic coefficients
//   separated: the sphere fast path for spheres, sᵀQᵀRQx_A otherwise
double classical_discriminant(const PreparedObject& obj, const Ray& ray);
double separated_discriminant(const PreparedObject& obj, const RayCache& ray);

// Unit-length primary rays through pixel centres.
class PinholeCamera {
 public:
  explicit PinholeCamera(const Camera& cam);

  Ray primary_ray(int px, int py) const;
  // Distance from the eye to the look-at point; normalizes pixel shading.
  double focus_distance() const { return focus_; }

 private:
  Vec3 origin_;
  Vec3 forward_;
  Vec3 right_;
  Vec3 up_;
  double half_height_;
  double half_width_;
  int width_;
  int height_;
  double focus_;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const Image&, const Image&) = default;
};

// One primary ray per pixel. A pixel is 0 unless some object is detected
// (D >= 0 by `method`) and has a root t > 0; otherwise it shades the
// nearest such hit at distance d as clamp(round(255·L/(L + d)), 1, 255)
// with L = focus_distance(). Roots come from the shared classical solve so
// both methods differ only where detection itself differs.
// Rows are split across `workers` threads; output does not depend on it.
Image render_detection(const Scene& scene, Method method, unsigned workers = 1);

// Pixels where some object's classical discriminant satisfies
// |D| < band·max(b², |ac|), i.e. where the methods may legitimately disagree.
std::vector<bool> tangency_band_mask(const Scene& scene, double band = 1e-9);

// Binary PGM (P5, maxval 255).
std::string encode_pgm(const Image& image);
void write_pgm(const Image& image, const std::string& path);

}  // namespace quadsep
