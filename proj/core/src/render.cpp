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

#include "quadsep/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "quadsep/classical.hpp"

namespace quadsep {
namespace {

std::optional<double> nearest_positive_root(const IntersectionResult& r) {
  switch (classify(r)) {
    case HitClass::kTwo: {
      const auto& two = std::get<Two>(r);
      if (two.t1 > 0.0) return two.t1;
      if (two.t2 > 0.0) return two.t2;
      return std::nullopt;
    }
    case HitClass::kTangent: {
      const double t = std::get<Tangent>(r).t;
      return t > 0.0 ? std::optional(t) : std::nullopt;
    }
    case HitClass::kLinearHit: {
      const double t = std::get<LinearHit>(r).t;
      return t > 0.0 ? std::optional(t) : std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Runs body(first, last) over [0, count) split into contiguous chunks.
template <class Body>
void parallel_chunks(int count, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    body(0, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const int first = static_cast<int>(static_cast<long long>(count) * w / workers);
    const int last = static_cast<int>(static_cast<long long>(count) * (w + 1) / workers);
    pool.emplace_back([=] { body(first, last); });
  }
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  if (name == "classical") return Method::kClassical;
  if (name == "separated") return Method::kSeparated;
  return std::nullopt;
}

const char* to_string(Method m) {
  return m == Method::kClassical ? "classical" : "separated";
}

std::vector<PreparedObject> prepare(const Scene& scene) {
  std::vector<PreparedObject> out;
  out.reserve(scene.objects.size());
  for (const SceneObject& obj : scene.objects) {
    PreparedObject p{obj.world_matrix(), std::nullopt, 0.0};
    if (const auto* s = std::get_if<Sphere>(&obj.kind)) {
      p.sphere_center = obj.center;
      p.sphere_radius = s->r;
    }
    out.push_back(p);
  }
  return out;
}

double classical_discriminant(const PreparedObject& obj, const Ray& ray) {
  return coefficients(obj.world, ray.origin, ray.direction).discriminant();
}

double separated_discriminant(const PreparedObject& obj, const RayCache& ray) {
  if (obj.sphere_center && ray.euclidean()) {
    return sphere_discriminant(*obj.sphere_center, obj.sphere_radius, ray);
  }
  return discriminant_separated(obj.world, ray);
}

PinholeCamera::PinholeCamera(const Camera& cam)
    : origin_(cam.origin),
      forward_(normalized(cam.look_at - cam.origin)),
      right_(normalized(cross(forward_, cam.up))),
      up_(cross(right_, forward_)),
      half_height_(std::tan(cam.vfov_deg * std::numbers::pi / 360.0)),
      half_width_(half_height_ * cam.width / cam.height),
      width_(cam.width),
      height_(cam.height),
      focus_(norm(cam.look_at - cam.origin)) {}

Ray PinholeCamera::primary_ray(int px, int py) const {
  const double u = (2.0 * (px + 0.5) / width_ - 1.0) * half_width_;
  const double v = (1.0 - 2.0 * (py + 0.5) / height_) * half_height_;
  const Vec3 dir = normalized(forward_ + u * right_ + v * up_);
  return {HomogeneousPoint::from_euclidean(origin_), HomogeneousDirection::from_euclidean(dir)};
}

Image render_detection(const Scene& scene, Method method, unsigned workers) {
  validate(scene);
  const PinholeCamera camera(scene.camera);
  const std::vector<PreparedObject> objects = prepare(scene);
  const int width = scene.camera.width;
  const int height = scene.camera.height;
  const double focus = camera.focus_distance();

  Image image{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height)};

  parallel_chunks(height, workers, [&](int row_first, int row_last) {
    for (int py = row_first; py < row_last; ++py) {
      for (int px = 0; px < width; ++px) {
        const Ray ray = camera.primary_ray(px, py);
        const std::optional<RayCache> cache =
            method == Method::kSeparated ? std::optional<RayCache>(std::in_place, ray.origin,
                                                                   ray.direction)
                                         : std::nullopt;
        std::optional<double> nearest;
        for (const PreparedObject& obj : objects) {
          const double d = method == Method::kSeparated ? separated_discriminant(obj, *cache)
                                                        : classical_discriminant(obj, ray);
          if (d < 0.0) continue;
          const auto t = nearest_positive_root(
              solve(coefficients(obj.world, ray.origin, ray.direction)));
          if (t && (!nearest || *t < *nearest)) nearest = t;
        }
        std::uint8_t value = 0;
        if (nearest) {
          const double shade = 255.0 * focus / (focus + *nearest);
          value = static_cast<std::uint8_t>(std::clamp(std::lround(shade), 1L, 255L));
        }
        image.pixels[static_cast<std::size_t>(py) * width + px] = value;
      }
    }
  });
  return image;
}

std::vector<bool> tangency_band_mask(const Scene& scene, double band) {
  validate(scene);
  const PinholeCamera camera(scene.camera);
  const std::vector<PreparedObject> objects = prepare(scene);
  const int width = scene.camera.width;
  std::vector<bool> mask(static_cast<std::size_t>(width) * scene.camera.height, false);
  for (int py = 0; py < scene.camera.height; ++py) {
    for (int px = 0; px < width; ++px) {
      const Ray ray = camera.primary_ray(px, py);
      for (const PreparedObject& obj : objects) {
        const QuadraticCoeffs k = coefficients(obj.world, ray.origin, ray.direction);
        const double scale = std::max(k.b * k.b, std::abs(k.a * k.c));
        if (std::abs(k.discriminant()) < band * scale) {
          mask[static_cast<std::size_t>(py) * width + px] = true;
        }
      }
    }
  }
  return mask;
}

std::string encode_pgm(const Image& image) {
  std::string out = "P5\n" + std::to_string(image.width) + ' ' + std::to_string(image.height) +
                    "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

void write_pgm(const Image& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write image '" + path + "'");
  const std::string bytes = encode_pgm(image);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace quadsep
