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

namespace quadsep {

// Relative tolerance of the separated-vs-classical comparison:
// |D_sep - D_cls| <= kOracleTolerance·max(1, |D|, b², |ac|).
inline constexpr double kOracleTolerance = 1e-9;

struct OracleFailure {
  std::uint64_t index = 0;
  double d_separated = 0.0;
  double d_classical = 0.0;
  double relative_error = 0.0;
  std::string reason;
};

struct OracleReport {
  std::uint64_t seed = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t failure_count = 0;
  std::vector<OracleFailure> failures;  // first kMaxListed
  double max_relative_error = 0.0;

  static constexpr std::size_t kMaxListed = 10;

  bool passed() const { return failure_count == 0; }
};

// Draws `cases` random (Q, ray) pairs from XorShift64Star(seed): the ten
// coefficients of Q uniform in [-2, 2], ray point and direction components
// uniform in [-10, 10]. Even cases are Euclidean (w_A = 1, s_w = 0), odd
// cases also draw w_A and s_w from [-10, 10]. Each case compares the
// separated discriminant with b² - ac, and intersect_separated with
// intersect_classical (classification and roots).
OracleReport oracle_check(std::uint64_t seed, std::uint64_t cases);

std::string format_report(const OracleReport& report);

}  // namespace quadsep
