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

#include "quadsep/scene.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "quadsep/numbers.hpp"
#include "quadsep/rng.hpp"

namespace quadsep {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

class LineReader {
 public:
  LineReader(int line, std::vector<std::string_view> tokens)
      : line_(line), tokens_(std::move(tokens)) {}

  void expect_arity(std::size_t n) const {
    if (tokens_.size() - 1 != n) {
      fail("'" + std::string(tokens_[0]) + "' expects " + std::to_string(n) +
           " values, got " + std::to_string(tokens_.size() - 1));
    }
  }

  double number(std::size_t i) const {
    const auto v = parse_double(tokens_[i]);
    if (!v) fail("malformed number '" + std::string(tokens_[i]) + "'");
    return *v;
  }

  int integer(std::size_t i) const {
    const auto v = parse_integer(tokens_[i]);
    if (!v || *v < 1 || *v > 1 << 16) {
      fail("image size must be an integer in [1, 65536], got '" + std::string(tokens_[i]) +
           "'");
    }
    return static_cast<int>(*v);
  }

  Vec3 vec3(std::size_t i) const { return {number(i), number(i + 1), number(i + 2)}; }

  double positive(std::size_t i, const char* what) const {
    const double v = number(i);
    if (!(v > 0.0)) fail(std::string("non-positive ") + what);
    return v;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

 private:
  int line_;
  std::vector<std::string_view> tokens_;
};

void append_numbers(std::string& out, std::initializer_list<double> values) {
  for (double v : values) {
    out += ' ';
    out += format_double(v);
  }
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

QuadricMatrix SceneObject::world_matrix() const {
  if (const auto* g = std::get_if<General>(&kind)) return g->q;
  return transform(fundamental_matrix(kind),
                   world_to_local(rotation.value_or(Mat3::identity()), center));
}

void validate(const Scene& scene) {
  const Camera& cam = scene.camera;
  if (scene.objects.empty()) throw ParseError(0, "scene has no objects");
  if (cam.width < 1 || cam.height < 1) throw ParseError(0, "image size must be at least 1x1");
  if (cam.origin == cam.look_at) throw ParseError(0, "camera origin equals look-at point");
  if (!(cam.vfov_deg > 0.0 && cam.vfov_deg < 180.0)) {
    throw ParseError(0, "vertical field of view must be in (0, 180) degrees");
  }
  if (norm(cross(cam.look_at - cam.origin, cam.up)) == 0.0) {
    throw ParseError(0, "camera up vector is parallel to the view direction");
  }
}

Scene parse_scene(std::string_view text) {
  std::optional<Camera> camera;
  std::vector<SceneObject> objects;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split(line);
    if (tokens.empty()) continue;
    const std::string_view directive = tokens[0];
    const LineReader in(line_no, std::move(tokens));

    if (directive == "camera") {
      in.expect_arity(12);
      if (camera) in.fail("duplicate camera");
      Camera cam{.origin = in.vec3(1),
                 .look_at = in.vec3(4),
                 .up = in.vec3(7),
                 .vfov_deg = in.number(10),
                 .width = in.integer(11),
                 .height = in.integer(12)};
      if (cam.origin == cam.look_at) in.fail("camera origin equals look-at point");
      camera = cam;
    } else if (directive == "sphere") {
      in.expect_arity(4);
      objects.push_back({Sphere{in.positive(4, "radius")}, in.vec3(1), std::nullopt});
    } else if (directive == "ellipsoid") {
      in.expect_arity(6);
      objects.push_back({Ellipsoid{in.positive(4, "semi-axis"), in.positive(5, "semi-axis"),
                                   in.positive(6, "semi-axis")},
                         in.vec3(1), std::nullopt});
    } else if (directive == "hyperboloid1") {
      in.expect_arity(6);
      objects.push_back(
          {OneSheetHyperboloid{in.positive(4, "semi-axis"), in.positive(5, "semi-axis"),
                               in.positive(6, "semi-axis")},
           in.vec3(1), std::nullopt});
    } else if (directive == "hparaboloid") {
      in.expect_arity(5);
      objects.push_back(
          {HyperbolicParaboloid{in.positive(4, "shape parameter"),
                                in.positive(5, "shape parameter")},
           in.vec3(1), std::nullopt});
    } else if (directive == "quadric") {
      in.expect_arity(10);
      std::array<double, 10> a{};
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = in.number(i + 1);
      try {
        objects.push_back({General{QuadricMatrix::from_array(a)}, Vec3{}, std::nullopt});
      } catch (const GeometryError& e) {
        in.fail(e.what());
      }
    } else if (directive == "xform") {
      in.expect_arity(9);
      if (objects.empty()) in.fail("xform without a preceding object");
      SceneObject& target = objects.back();
      if (std::holds_alternative<General>(target.kind)) {
        in.fail("xform cannot follow a world-frame quadric");
      }
      if (target.rotation) in.fail("object already has an xform");
      Mat3 r;
      for (std::size_t i = 0; i < 9; ++i) r.m[i] = in.number(i + 1);
      if (!is_rotation(r)) in.fail("xform is not a proper rotation (orthonormal, det +1)");
      target.rotation = r;
    } else {
      in.fail("unknown directive '" + std::string(directive) + "'");
    }
  }

  if (!camera) throw ParseError(0, "missing camera");
  Scene scene{*camera, std::move(objects)};
  validate(scene);
  return scene;
}

std::string serialize_scene(const Scene& scene) {
  const Camera& c = scene.camera;
  std::string out = "camera";
  append_numbers(out, {c.origin.x, c.origin.y, c.origin.z, c.look_at.x, c.look_at.y,
                       c.look_at.z, c.up.x, c.up.y, c.up.z, c.vfov_deg});
  out += ' ' + std::to_string(c.width) + ' ' + std::to_string(c.height) + '\n';

  for (const SceneObject& obj : scene.objects) {
    out += kind_name(obj.kind);
    const Vec3& p = obj.center;
    if (const auto* s = std::get_if<Sphere>(&obj.kind)) {
      append_numbers(out, {p.x, p.y, p.z, s->r});
    } else if (const auto* e = std::get_if<Ellipsoid>(&obj.kind)) {
      append_numbers(out, {p.x, p.y, p.z, e->a, e->b, e->c});
    } else if (const auto* h = std::get_if<OneSheetHyperboloid>(&obj.kind)) {
      append_numbers(out, {p.x, p.y, p.z, h->a, h->b, h->c});
    } else if (const auto* hp = std::get_if<HyperbolicParaboloid>(&obj.kind)) {
      append_numbers(out, {p.x, p.y, p.z, hp->a, hp->b});
    } else {
      out += ' ' + serialize(std::get<General>(obj.kind).q);
    }
    out += '\n';
    if (obj.rotation) {
      out += "xform";
      for (double v : obj.rotation->m) append_numbers(out, {v});
      out += '\n';
    }
  }
  return out;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

void save_scene(const Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write scene file '" + path + "'");
  out << serialize_scene(scene);
}

Camera default_camera() {
  return {.origin = {0, 0, 30},
          .look_at = {0, 0, 0},
          .up = {0, 1, 0},
          .vfov_deg = 45.0,
          .width = 256,
          .height = 256};
}

Scene generate_scene(std::uint64_t seed, int n_objects, KindMix mix) {
  if (n_objects < 1) throw std::invalid_argument("generate_scene: need at least one object");
  XorShift64Star rng(seed);
  Scene scene{default_camera(), {}};
  scene.objects.reserve(static_cast<std::size_t>(n_objects));
  for (int i = 0; i < n_objects; ++i) {
    const bool is_ellipsoid = rng.unit() < mix.ellipsoid_fraction;
    const double cx = rng.uniform(-10.0, 10.0);
    const double cy = rng.uniform(-10.0, 10.0);
    const double cz = rng.uniform(-10.0, 10.0);
    SceneObject obj{Sphere{1.0}, {cx, cy, cz}, std::nullopt};
    if (is_ellipsoid) {
      const double a = rng.uniform(0.1, 2.0);
      const double b = rng.uniform(0.1, 2.0);
      const double c = rng.uniform(0.1, 2.0);
      obj.kind = Ellipsoid{a, b, c};
    } else {
      obj.kind = Sphere{rng.uniform(0.1, 2.0)};
    }
    scene.objects.push_back(std::move(obj));
  }
  return scene;
}

}  // namespace quadsep
