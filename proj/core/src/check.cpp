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

#include "quadsep/check.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "quadsep/classical.hpp"
#include "quadsep/numbers.hpp"
#include "quadsep/rng.hpp"
#include "quadsep/separated.hpp"

namespace quadsep {
namespace {

struct Case {
  QuadricMatrix q;
  HomogeneousPoint x_a;
  HomogeneousDirection s;
};

double nonzero(XorShift64Star& rng, double lo, double hi) {
  for (;;) {
    const double v = rng.uniform(lo, hi);
    if (std::abs(v) >= 1e-3) return v;
  }
}

Case draw_case(XorShift64Star& rng, bool projective) {
  std::array<double, 10> a{};
  for (double& v : a) v = rng.uniform(-2.0, 2.0);
  const double x = rng.uniform(-10.0, 10.0);
  const double y = rng.uniform(-10.0, 10.0);
  const double z = rng.uniform(-10.0, 10.0);
  const double sx = rng.uniform(-10.0, 10.0);
  const double sy = rng.uniform(-10.0, 10.0);
  const double sz = rng.uniform(-10.0, 10.0);
  double w = 1.0;
  double sw = 0.0;
  if (projective) {
    w = nonzero(rng, -10.0, 10.0);
    sw = rng.uniform(-10.0, 10.0);
  }
  return {QuadricMatrix::from_array(a), HomogeneousPoint(x, y, z, w),
          HomogeneousDirection(sx, sy, sz, sw)};
}

std::optional<std::string> compare_roots(const IntersectionResult& sep,
                                         const IntersectionResult& cls) {
  if (classify(sep) != classify(cls)) {
    return std::string("classification ") + to_string(classify(sep)) + " vs " +
           to_string(classify(cls));
  }
  const auto close = [](double p, double q) {
    return std::abs(p - q) <= kOracleTolerance * std::max({1.0, std::abs(p), std::abs(q)});
  };
  bool ok = true;
  if (const auto* t = std::get_if<Two>(&sep)) {
    const auto& u = std::get<Two>(cls);
    ok = close(t->t1, u.t1) && close(t->t2, u.t2);
  } else if (const auto* t = std::get_if<Tangent>(&sep)) {
    ok = close(t->t, std::get<Tangent>(cls).t);
  } else if (const auto* t = std::get_if<LinearHit>(&sep)) {
    ok = close(t->t, std::get<LinearHit>(cls).t);
  }
  if (!ok) return std::string("roots differ");
  return std::nullopt;
}

}  // namespace

OracleReport oracle_check(std::uint64_t seed, std::uint64_t cases) {
  OracleReport report;
  report.seed = seed;
  XorShift64Star rng(seed);

  for (std::uint64_t i = 0; i < cases; ++i) {
    const Case c = draw_case(rng, i % 2 == 1);
    const RayCache cache(c.x_a, c.s);
    const QuadraticCoeffs k = coefficients(c.q, c.x_a, c.s);
    const double d_cls = k.discriminant();
    const double d_sep = discriminant_separated(c.q, cache);
    const double scale = std::max({1.0, std::abs(d_cls), k.b * k.b, std::abs(k.a * k.c)});
    const double rel = std::abs(d_sep - d_cls) / scale;
    report.max_relative_error = std::max(report.max_relative_error, rel);
    ++report.comparisons;

    std::optional<std::string> reason;
    if (!(rel <= kOracleTolerance)) {
      reason = "discriminant mismatch";
    } else {
      reason = compare_roots(intersect_separated(c.q, cache), solve(k));
    }
    if (reason) {
      ++report.failure_count;
      if (report.failures.size() < OracleReport::kMaxListed) {
        report.failures.push_back({i, d_sep, d_cls, rel, *reason});
      }
    }
  }
  return report;
}

std::string format_report(const OracleReport& r) {
  std::ostringstream out;
  out << "oracle check: seed=" << r.seed << " comparisons=" << r.comparisons
      << " failures=" << r.failure_count
      << " max_relative_error=" << format_double(r.max_relative_error)
      << " tolerance=" << format_double(kOracleTolerance) << '\n';
  for (const OracleFailure& f : r.failures) {
    out << "  case " << f.index << ": " << f.reason << " (separated D="
        << format_double(f.d_separated) << ", classical D=" << format_double(f.d_classical)
        << ", relative error=" << format_double(f.relative_error) << ")\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace quadsep
