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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadsep/geometry.hpp"
#include "quadsep/quadric.hpp"

namespace quadsep {

struct Camera {
  Vec3 origin;
  Vec3 look_at;
  Vec3 up;
  double vfov_deg = 60.0;
  int width = 1;
  int height = 1;

  friend bool operator==(const Camera&, const Camera&) = default;
};

// A catalog surface placed in the world: its local frame is rotated by
// `rotation` (local-to-world, row-major) and translated to `center`.
// General quadrics are already in world coordinates and ignore both.
struct SceneObject {
  QuadricKind kind;
  Vec3 center;
  std::optional<Mat3> rotation;

  QuadricMatrix world_matrix() const;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

struct Scene {
  Camera camera;
  std::vector<SceneObject> objects;

  friend bool operator==(const Scene&, const Scene&) = default;
};

class ParseError : public std::runtime_error {
 public:
  // line is 1-based; 0 for whole-file problems (missing camera, no objects).
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented format, '#' starts a comment:
//   camera ox oy oz  lx ly lz  ux uy uz  vfov_deg width height
//   sphere cx cy cz r
//   ellipsoid cx cy cz a b c
//   hyperboloid1 cx cy cz a b c
//   hparaboloid cx cy cz a b
//   quadric a11 a22 a33 a44 a12 a13 a23 a14 a24 a34
//   xform r00 r01 r02 r10 r11 r12 r20 r21 r22   (rotates the previous catalog object)
Scene parse_scene(std::string_view text);
std::string serialize_scene(const Scene& scene);

Scene load_scene(const std::string& path);
void save_scene(const Scene& scene, const std::string& path);

// Checks the scene invariants; throws ParseError(0, ...) on violation.
void validate(const Scene& scene);

struct KindMix {
  // Probability that a generated object is an ellipsoid instead of a sphere.
  double ellipsoid_fraction = 0.25;
};

// Deterministic scene from XorShift64Star(seed). Per object, in order:
//   kind = unit() < ellipsoid_fraction ? ellipsoid : sphere
//   cx, cy, cz = uniform(-10, 10)
//   sphere: r = uniform(0.1, 2); ellipsoid: a, b, c = uniform(0.1, 2)
// Objects are axis-aligned. The camera is fixed (see default_camera()).
Scene generate_scene(std::uint64_t seed, int n_objects, KindMix mix = {});

// origin (0, 0, 30), looking at the origin, +y up, 45° vertical fov, 256x256.
Camera default_camera();

}  // namespace quadsep
