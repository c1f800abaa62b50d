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

// quadsep: command-line harness for the line-quadric intersection kernels.
//
//   quadsep render <scene-file> --method {classical|separated} -o <out.pgm>
//   quadsep bench --seed S --objects N --rays M --method {classical|separated|both}
//                 --reps R -o <out.csv>
//   quadsep check --seed S --cases N
//   quadsep gen --seed S --objects N -o <scene-file>
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 oracle-check failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadsep/bench.hpp"
#include "quadsep/check.hpp"
#include "quadsep/render.hpp"
#include "quadsep/scene.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitOracle = 3;

struct RenderArgs {
  std::string scene_path;
  std::string method = "separated";
  std::string output;
  unsigned workers = 1;
};

struct BenchArgs {
  std::uint64_t seed = 1;
  int objects = 1000;
  int rays = 10000;
  std::string method = "both";
  int reps = 5;
  std::string output;
  unsigned workers = 1;
  double ellipsoid_fraction = quadsep::KindMix{}.ellipsoid_fraction;
  bool omit_timing = false;
};

struct CheckArgs {
  std::uint64_t seed = 42;
  std::uint64_t cases = 100000;
};

struct GenArgs {
  std::uint64_t seed = 1;
  int objects = 100;
  std::string output;
  double ellipsoid_fraction = quadsep::KindMix{}.ellipsoid_fraction;
};

int run_render(const RenderArgs& args) {
  const auto method = quadsep::parse_method(args.method);
  if (!method) {
    std::cerr << "render: unknown method '" << args.method << "'\n";
    return kExitUsage;
  }
  quadsep::Scene scene;
  try {
    scene = quadsep::load_scene(args.scene_path);
  } catch (const quadsep::ParseError& e) {
    std::cerr << args.scene_path << ": " << e.what() << '\n';
    return kExitParse;
  }
  const quadsep::Image image = quadsep::render_detection(scene, *method, args.workers);
  quadsep::write_pgm(image, args.output);
  return kExitOk;
}

int run_bench(const BenchArgs& args) {
  std::vector<quadsep::Method> methods;
  if (args.method == "both") {
    methods = {quadsep::Method::kClassical, quadsep::Method::kSeparated};
  } else if (const auto m = quadsep::parse_method(args.method)) {
    methods = {*m};
  } else {
    std::cerr << "bench: unknown method '" << args.method << "'\n";
    return kExitUsage;
  }

  const quadsep::Scene scene =
      quadsep::generate_scene(args.seed, args.objects, {args.ellipsoid_fraction});
  const auto rays = quadsep::generate_rays(args.seed, args.rays);

  std::string csv = quadsep::csv_header() + '\n';
  for (const quadsep::Method m : methods) {
    const quadsep::BenchStats stats =
        quadsep::run_benchmark(scene, rays, m, args.reps, args.workers);
    csv += quadsep::csv_row(stats, args.omit_timing) + '\n';
    std::cout << stats.method << ": " << stats.hits << '/' << stats.detections
              << " hits, " << stats.detect_ns_per_test << " ns/test, precompute "
              << stats.precompute_ns_total << " ns, checksum " << stats.checksum << '\n';
  }

  if (args.output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) {
      std::cerr << "bench: cannot write '" << args.output << "'\n";
      return kExitUsage;
    }
    out << csv;
  }
  return kExitOk;
}

int run_check(const CheckArgs& args) {
  const quadsep::OracleReport report = quadsep::oracle_check(args.seed, args.cases);
  std::cout << quadsep::format_report(report);
  return report.passed() ? kExitOk : kExitOracle;
}

int run_gen(const GenArgs& args) {
  const quadsep::Scene scene =
      quadsep::generate_scene(args.seed, args.objects, {args.ellipsoid_fraction});
  if (args.output.empty()) {
    std::cout << quadsep::serialize_scene(scene);
  } else {
    quadsep::save_scene(scene, args.output);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-quadric intersection harness: classical vs separated discriminant"};
  app.require_subcommand(1);

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Render a detection image (binary PGM)");
  render_cmd->add_option("scene", render.scene_path, "Scene file")->required();
  render_cmd->add_option("--method", render.method, "classical or separated")
      ->check(CLI::IsMember({"classical", "separated"}));
  render_cmd->add_option("-o,--output", render.output, "Output .pgm")->required();
  render_cmd->add_option("--workers", render.workers, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark detection kernels, write CSV");
  bench_cmd->add_option("--seed", bench.seed, "Scene and ray seed");
  bench_cmd->add_option("--objects", bench.objects, "Object count")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--rays", bench.rays, "Ray count")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--method", bench.method, "classical, separated or both")
      ->check(CLI::IsMember({"classical", "separated", "both"}));
  bench_cmd->add_option("--reps", bench.reps, "Repetitions (median reported)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench.output, "Output .csv (stdout if omitted)");
  bench_cmd->add_option("--workers", bench.workers, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  bench_cmd->add_option("--ellipsoid-fraction", bench.ellipsoid_fraction,
                        "Share of generated objects that are ellipsoids")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_flag("--omit-timing", bench.omit_timing,
                      "Write 0 in the timing columns (reproducible CSV)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Randomized separated-vs-classical oracle check");
  check_cmd->add_option("--seed", check.seed, "Seed");
  check_cmd->add_option("--cases", check.cases, "Number of random cases")
      ->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a deterministic random scene");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--objects", gen.objects, "Object count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen.output, "Output scene file (stdout if omitted)");
  gen_cmd->add_option("--ellipsoid-fraction", gen.ellipsoid_fraction,
                      "Share of generated objects that are ellipsoids")
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*render_cmd) return run_render(render);
    if (*bench_cmd) return run_bench(bench);
    if (*check_cmd) return run_check(check);
    if (*gen_cmd) return run_gen(gen);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
