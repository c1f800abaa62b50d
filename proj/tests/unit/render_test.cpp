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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <numbers>

#include "doctest.h"
#include "quadsep/render.hpp"

using namespace quadsep;

namespace {

// Unit sphere seen from distance 5 with a 60° field: angular radius asin(0.2).
constexpr const char* kDisc =
    "camera 0 0 5  0 0 0  0 1 0  60 101 101\n"
    "sphere 0 0 0 1\n";

int count_differences(const Image& a, const Image& b, const std::vector<bool>* skip = nullptr) {
  int n = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    if (skip && (*skip)[i]) continue;
    if (a.pixels[i] != b.pixels[i]) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("method names") {
  CHECK(parse_method("classical") == Method::kClassical);
  CHECK(parse_method("separated") == Method::kSeparated);
  CHECK_FALSE(parse_method("both"));
  CHECK(std::string(to_string(Method::kSeparated)) == "separated");
}

TEST_CASE("disc radius matches the projected sphere") {
  const Scene scene = parse_scene(kDisc);
  const double expected = 50.5 * std::tan(std::asin(0.2)) / std::tan(std::numbers::pi / 6);
  for (Method m : {Method::kClassical, Method::kSeparated}) {
    const Image img = render_detection(scene, m);
    int row = 0, col = 0, area = 0;
    for (int i = 0; i < 101; ++i) {
      row += img.at(i, 50) != 0;
      col += img.at(50, i) != 0;
    }
    for (std::uint8_t p : img.pixels) area += p != 0;
    CHECK(std::abs(row / 2.0 - expected) <= 1.0);
    CHECK(std::abs(col / 2.0 - expected) <= 1.0);
    CHECK(std::abs(std::sqrt(area / std::numbers::pi) - expected) <= 1.0);
    // Centre ray hits at t = 4: round(255·5/9) = 142.
    CHECK(img.at(50, 50) == 142);
    CHECK(img.at(0, 0) == 0);
  }
}

TEST_CASE("objects behind the camera are not drawn") {
  const Scene scene = parse_scene(
      "camera 0 0 10  0 0 20  0 1 0  60 33 33\n"
      "sphere 0 0 0 2\n");
  for (Method m : {Method::kClassical, Method::kSeparated}) {
    const Image img = render_detection(scene, m);
    CHECK(std::all_of(img.pixels.begin(), img.pixels.end(), [](auto p) { return p == 0; }));
  }
}

TEST_CASE("camera inside a sphere sees its far wall") {
  const Scene scene = parse_scene(
      "camera 0 0 0  0 0 -1  0 1 0  60 9 9\n"
      "sphere 0 0 0 5\n");
  const Image img = render_detection(scene, Method::kSeparated);
  // focus 1, d = 5: round(255/6) = 43 at the centre.
  CHECK(img.at(4, 4) == 43);
  CHECK(std::all_of(img.pixels.begin(), img.pixels.end(), [](auto p) { return p != 0; }));
}

TEST_CASE("methods agree outside the tangency band") {
  Scene generated = generate_scene(3, 60, {0.5});
  generated.camera.width = 96;
  generated.camera.height = 96;

  const Scene mixed = parse_scene(
      "camera 3 4 25  0 0 0  0 1 0  50 96 96\n"
      "sphere 0 0 0 3\n"
      "ellipsoid 5 -3 2 1 2 3\n"
      "xform 0.36 0.48 -0.8 -0.8 0.6 0 0.48 0.64 0.6\n"
      "hyperboloid1 -6 2 -4 1 1.5 2\n"
      "hparaboloid 6 6 -10 2 3\n"
      "xform 1 0 0 0 0 -1 0 1 0\n"
      "quadric 1 1 -1 -1 0 0 0 0 0 0\n");

  for (const Scene* scene : {static_cast<const Scene*>(&generated), &mixed}) {
    const Image a = render_detection(*scene, Method::kClassical);
    const Image b = render_detection(*scene, Method::kSeparated);
    const std::vector<bool> band = tangency_band_mask(*scene);
    CHECK(count_differences(a, b, &band) == 0);
    CHECK(std::count_if(a.pixels.begin(), a.pixels.end(), [](auto p) { return p != 0; }) > 100);
  }
}

TEST_CASE("output does not depend on the worker count") {
  Scene scene = generate_scene(11, 80);
  scene.camera.width = 70;
  scene.camera.height = 53;
  for (Method m : {Method::kClassical, Method::kSeparated}) {
    const Image one = render_detection(scene, m, 1);
    CHECK(render_detection(scene, m, 4) == one);
    CHECK(render_detection(scene, m, 7) == one);
    CHECK(render_detection(scene, m, 200) == one);
  }
}

TEST_CASE("primary rays") {
  const PinholeCamera cam(parse_scene(kDisc).camera);
  CHECK(cam.focus_distance() == 5.0);
  const Ray centre = cam.primary_ray(50, 50);
  CHECK(centre.origin == HomogeneousPoint(0, 0, 5, 1));
  CHECK(centre.direction == HomogeneousDirection(0, 0, -1, 0));
  for (int px : {0, 17, 100}) {
    const Ray r = cam.primary_ray(px, 3);
    CHECK(norm(r.direction.xyz()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.direction.sw() == 0.0);
  }
  // Top row looks up, left column looks left.
  CHECK(cam.primary_ray(50, 0).direction.sy() > 0.0);
  CHECK(cam.primary_ray(0, 50).direction.sx() < 0.0);
}

TEST_CASE("golden unit sphere scene") {
  const Scene file = load_scene(QUADSEP_GOLDEN_DIR "/unit_sphere.scene");
  CHECK(file == parse_scene(kDisc));
  std::ifstream in(QUADSEP_GOLDEN_DIR "/unit_sphere.pgm", std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  CHECK(encode_pgm(render_detection(file, Method::kClassical)) == golden.str());
  CHECK(encode_pgm(render_detection(file, Method::kSeparated)) == golden.str());
}

TEST_CASE("pgm encoding") {
  const Image img{2, 1, {7, 255}};
  CHECK(encode_pgm(img) == std::string("P5\n2 1\n255\n\x07\xff", 13));
}
