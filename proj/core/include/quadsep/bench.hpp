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
#include <string>
#include <vector>

#include "quadsep/render.hpp"
#include "quadsep/scene.hpp"

namespace quadsep {

struct BenchStats {
  std::string method;
  std::uint64_t objects = 0;
  std::uint64_t rays = 0;
  std::uint64_t detections = 0;
  std::uint64_t hits = 0;
  std::uint64_t precompute_ns_total = 0;
  std::uint64_t detect_ns_total = 0;
  double detect_ns_per_test = 0.0;
  std::uint64_t checksum = 0;
};

// Deterministic benchmark rays from XorShift64Star(seed ^ kRaySeedSalt):
// per ray, origin = (uniform(-10, 10), uniform(-10, 10), 30) and
// direction = (uniform(-10, 10) x3) - origin.
inline constexpr std::uint64_t kRaySeedSalt = 0xD1B54A32D192ED03ULL;
std::vector<Ray> generate_rays(std::uint64_t seed, int count);

// Detection-only sweep of every ray against every object, repeated `reps`
// times; timings are the median over repetitions (steady clock). The
// separated method builds one RayCache per ray first and reports that
// stage as precompute; the classical method has no per-ray stage.
// The checksum is the wrapping sum of mix64(ray * objects + object) over
// detected pairs, so it is independent of traversal order and worker count.
BenchStats run_benchmark(const Scene& scene, const std::vector<Ray>& rays, Method method,
                         int reps, unsigned workers = 1);

std::string csv_header();
// With omit_timing the three timing columns are written as 0 so the row is
// reproducible byte for byte.
std::string csv_row(const BenchStats& stats, bool omit_timing = false);

}  // namespace quadsep
