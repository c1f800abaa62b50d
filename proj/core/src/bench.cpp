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

#include "quadsep/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "quadsep/rng.hpp"

namespace quadsep {
namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  std::uint64_t hits = 0;
  std::uint64_t checksum = 0;
};

std::uint64_t elapsed_ns(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

std::uint64_t median(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

template <class Body>
std::vector<Tally> run_partitioned(std::size_t count, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::vector<Tally> tallies(workers);
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t first = count * w / workers;
    const std::size_t last = count * (w + 1) / workers;
    if (workers == 1) {
      tallies[w] = body(first, last);
    } else {
      pool.emplace_back([&tallies, &body, w, first, last] { tallies[w] = body(first, last); });
    }
  }
  pool.clear();  // joins
  return tallies;
}

}  // namespace

std::vector<Ray> generate_rays(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("generate_rays: need at least one ray");
  XorShift64Star rng(seed ^ kRaySeedSalt);
  std::vector<Ray> rays;
  rays.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double ox = rng.uniform(-10.0, 10.0);
    const double oy = rng.uniform(-10.0, 10.0);
    const Vec3 origin{ox, oy, 30.0};
    const double tx = rng.uniform(-10.0, 10.0);
    const double ty = rng.uniform(-10.0, 10.0);
    const double tz = rng.uniform(-10.0, 10.0);
    rays.push_back({HomogeneousPoint::from_euclidean(origin),
                    HomogeneousDirection::from_euclidean(Vec3{tx, ty, tz} - origin)});
  }
  return rays;
}

BenchStats run_benchmark(const Scene& scene, const std::vector<Ray>& rays, Method method,
                         int reps, unsigned workers) {
  if (rays.empty()) throw std::invalid_argument("run_benchmark: need at least one ray");
  if (reps < 1) throw std::invalid_argument("run_benchmark: need at least one repetition");
  const std::vector<PreparedObject> objects = prepare(scene);
  const std::uint64_t n_objects = objects.size();

  std::vector<std::uint64_t> precompute_times;
  std::vector<std::uint64_t> detect_times;
  Tally total;

  for (int rep = 0; rep < reps; ++rep) {
    std::vector<Tally> tallies;
    if (method == Method::kClassical) {
      const auto start = Clock::now();
      tallies = run_partitioned(rays.size(), workers, [&](std::size_t first, std::size_t last) {
        Tally t;
        for (std::size_t i = first; i < last; ++i) {
          for (std::uint64_t k = 0; k < n_objects; ++k) {
            if (classical_discriminant(objects[k], rays[i]) >= 0.0) {
              ++t.hits;
              t.checksum += mix64(i * n_objects + k);
            }
          }
        }
        return t;
      });
      detect_times.push_back(elapsed_ns(start));
      precompute_times.push_back(0);
    } else {
      std::vector<std::optional<RayCache>> caches(rays.size());
      auto start = Clock::now();
      run_partitioned(rays.size(), workers, [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
          caches[i].emplace(rays[i].origin, rays[i].direction);
        }
        return Tally{};
      });
      precompute_times.push_back(elapsed_ns(start));

      start = Clock::now();
      tallies = run_partitioned(rays.size(), workers, [&](std::size_t first, std::size_t last) {
        Tally t;
        for (std::size_t i = first; i < last; ++i) {
          const RayCache& cache = *caches[i];
          for (std::uint64_t k = 0; k < n_objects; ++k) {
            if (separated_discriminant(objects[k], cache) >= 0.0) {
              ++t.hits;
              t.checksum += mix64(i * n_objects + k);
            }
          }
        }
        return t;
      });
      detect_times.push_back(elapsed_ns(start));
    }
    total = {};
    for (const Tally& t : tallies) {
      total.hits += t.hits;
      total.checksum += t.checksum;
    }
  }

  BenchStats stats;
  stats.method = to_string(method);
  stats.objects = n_objects;
  stats.rays = rays.size();
  stats.detections = n_objects * rays.size();
  stats.hits = total.hits;
  stats.precompute_ns_total = median(precompute_times);
  stats.detect_ns_total = median(detect_times);
  stats.detect_ns_per_test =
      static_cast<double>(stats.detect_ns_total) / static_cast<double>(stats.detections);
  stats.checksum = total.checksum;
  return stats;
}

std::string csv_header() {
  return "method,objects,rays,detections,hits,precompute_ns_total,detect_ns_total,"
         "detect_ns_per_test,checksum";
}

std::string csv_row(const BenchStats& s, bool omit_timing) {
  char per_test[64];
  const double value = omit_timing ? 0.0 : s.detect_ns_per_test;
  const auto [end, ec] =
      std::to_chars(per_test, per_test + sizeof(per_test), value, std::chars_format::fixed, 3);
  const std::string per_test_text = ec == std::errc{} ? std::string(per_test, end) : "0.000";

  return s.method + ',' + std::to_string(s.objects) + ',' + std::to_string(s.rays) + ',' +
         std::to_string(s.detections) + ',' + std::to_string(s.hits) + ',' +
         std::to_string(omit_timing ? 0 : s.precompute_ns_total) + ',' +
         std::to_string(omit_timing ? 0 : s.detect_ns_total) + ',' + per_test_text + ',' +
         std::to_string(s.checksum);
}

}  // namespace quadsep
