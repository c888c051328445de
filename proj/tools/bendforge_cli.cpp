// Copyright 2026 The BendForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bendforge command-line driver.
//
// Exit codes: 0 success, 1 other failure, 2 bad usage or configuration,
// 3 dataset stratum starvation, 4 invalid design or construction failure.
// Failures print one JSON object {"error": {...}} on stderr.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bendforge/dataset.hpp"
#include "bendforge/geom/overlap.hpp"

namespace {

using namespace bendforge;
using nlohmann::json;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kStarved = 3, kConstruction = 4 };

struct Common {
  std::string config;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::string out;
  int workers = 0;
  bool quiet = false;
};

struct Failure {
  int code;
  json error;
};

[[noreturn]] void fail(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  extra["kind"] = kind;
  extra["message"] = message;
  throw Failure{code, extra};
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "Run configuration JSON");
  app->add_option("--set", c.overrides, "Override a config key, KEY=VALUE (repeatable)");
  app->add_option("--seed", c.seed, "Master seed");
  app->add_option("--out", c.out, "Output directory");
  app->add_option("--workers", c.workers, "Worker threads (default: BENDFORGE_WORKERS or all cores)");
  app->add_flag("-q,--quiet", c.quiet, "Suppress progress output");
  app->add_flag("-v,--verbose", [&c](std::int64_t) { c.quiet = false; }, "Progress output (default)");
}

RunConfig load_config(const Common& c) {
  RunConfig cfg = load_run_config(c.config, c.overrides);
  if (c.seed) cfg.seed = *c.seed;
  if (!c.out.empty()) cfg.output_dir = c.out;
  return cfg;
}

int worker_count(const Common& c) {
  if (c.workers > 0) return c.workers;
  if (const char* env = std::getenv("BENDFORGE_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    fail(kUsage, "usage", std::string("BENDFORGE_WORKERS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PartDesign load_valid_design(const std::string& path) {
  if (!fs::is_regular_file(path)) fail(kUsage, "io", "cannot open " + path);
  PartDesign d = load_design(path);
  if (d.id.empty()) d.id = fs::path(path).stem().string();
  const std::vector<Violation> v = validate(d);
  if (!v.empty()) {
    json list = json::array();
    for (const Violation& x : v) list.push_back({{"bend", x.bend_index}, {"code", x.code}, {"message", x.message}});
    fail(kConstruction, "invalid_design", "design violates " + std::to_string(v.size()) + " constraint(s)",
         {{"violations", list}});
  }
  return d;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_gen(const Common& c) {
  const RunConfig cfg = load_config(c);
  BuildOptions opt;
  opt.workers = worker_count(c);
  if (!c.quiet) {
    opt.progress = [&](std::size_t parts, std::uint64_t draws) {
      std::fprintf(stderr, "accepted %zu parts after %llu draws\n", parts, static_cast<unsigned long long>(draws));
    };
  }
  const DatasetManifest m = build_subset(cfg, opt);
  const fs::path dir = fs::path(cfg.output_dir) / cfg.subset.name;
  json out{{"subset", m.subset},
           {"parts", m.rows.size()},
           {"complete", m.complete},
           {"config_hash", m.config_hash},
           {"manifest", (dir / "manifest.jsonl").string()}};
  print(out);
  if (!m.complete) {
    json starved = json::array();
    for (const StratumTally& t : m.tallies) {
      if (t.starved) starved.push_back({{"n_bends", t.n_bends}, {"positives", t.positives}, {"negatives", t.negatives}});
    }
    fail(kStarved, "starvation", "strata unfilled within the draw budget; manifest is partial",
         {{"strata", starved}});
  }
  return kOk;
}

int cmd_label(const Common& c, const std::string& path) {
  const RunConfig cfg = load_config(c);
  const PartDesign d = load_valid_design(path);
  const LabelSet L = label_part(d, cfg.gen.tooling, cfg.gen.labeling);
  print({{"id", d.id}, {"labels", labels_to_json(L)}, {"reorientation", reorientation_to_json(L.reorientation)}});
  return kOk;
}

int cmd_unfold(const Common& c, const std::string& path) {
  const RunConfig cfg = load_config(c);
  const PartDesign d = load_valid_design(path);
  const UnfoldedPattern p = unfold(d, cfg.gen.labeling.arc_step_deg);
  const UnfoldOverlap ov = unfold_overlap(p, d, cfg.gen.labeling);
  const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
  fs::create_directories(dir);
  const fs::path mesh = dir / (d.id + ".flat.stl");
  write_stl(mesh.string(), pattern_mesh(p), d.id + "_flat");
  json pairs = json::array();
  for (const auto& [a, b] : ov.pairs) pairs.push_back({to_string(a), to_string(b)});
  print({{"id", d.id},
         {"overlap", ov.overlap},
         {"pairs", pairs},
         {"bbox_area_cm2", pattern_bbox_area(p) * 1e-2},
         {"mesh", mesh.string()}});
  return kOk;
}

int cmd_sweep(const Common& c, const std::string& path, int bend) {
  const RunConfig cfg = load_config(c);
  const PartDesign d = load_valid_design(path);
  if (bend < 0 || bend >= static_cast<int>(d.bends.size())) {
    fail(kUsage, "usage", "--bend must name a bend of the design (0-based)");
  }
  const LabelingOptions& lo = cfg.gen.labeling;
  const fs::path dir = c.out.empty() ? fs::path("sweep_" + d.id) : fs::path(c.out);
  fs::create_directories(dir);
  const PartGeometry geometry = build_part_geometry(d, lo.arc_step_deg);
  AngleAssignment angles(d.bends.size(), 0.0);
  for (int j = 0; j < bend; ++j) angles[j] = d.bends[j].angle;

  json steps = json::array();
  for (double theta : sweep_angles(d.bends[bend].angle, lo.sweep_step_deg)) {
    angles[bend] = theta;
    const FormedState state = form(d, geometry, angles);
    const TriMesh part = realize(d, geometry, state, lo.arc_step_deg).merged();
    const MeshIndex part_index(part);
    char tag[32];
    std::snprintf(tag, sizeof tag, "%07.3f", theta);
    write_stl((dir / (std::string("part_") + tag + ".stl")).string(), part, "part");
    for (Alignment al : kAlignments) {
      json row{{"angle_deg", theta}, {"alignment", to_string(al)}};
      for (const char* tool : {"punch", "die"}) {
        const bool punch = std::string(tool) == "punch";
        try {
          const TriMesh m = punch ? build_punch(state.sections[bend], al, cfg.gen.tooling)
                                  : build_die(state.sections[bend], al, cfg.gen.tooling);
          row[tool] = mesh_overlap(MeshIndex(m), part_index, lo.pen_tol).overlaps;
          write_stl((dir / (std::string(tool) + "_" + to_string(al) + "_" + tag + ".stl")).string(), m, tool);
        } catch (const ConstructionError& e) {
          row[tool] = true;
          row[std::string(tool) + "_error"] = e.reason();
        }
      }
      steps.push_back(row);
    }
  }
  const BendCollisionRecord rec = check_bend(d, bend, cfg.gen.tooling, lo);
  print({{"id", d.id}, {"bend", bend}, {"steps", steps}, {"record", collision_record_to_json(rec)},
         {"meshes", dir.string()}});
  return kOk;
}

int cmd_stats(const std::string& path) {
  print(stats_to_json(compute_stats(read_manifest(path))));
  return kOk;
}

int cmd_validate(const std::string& path) {
  const PartDesign d = load_valid_design(path);
  print({{"id", d.id}, {"ok", true}, {"bends", d.bends.size()}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bendforge: sheet-metal bending simulator and dataset generator"};
  app.require_subcommand(1);
  Common common;
  std::string input;
  int bend = -1;

  auto* gen = app.add_subcommand("gen", "Build a balanced dataset subset");
  add_common(gen, common);
  auto* label = app.add_subcommand("label", "Print every label of a design");
  label->add_option("design", input, "Design JSON")->required();
  add_common(label, common);
  auto* unfold_cmd = app.add_subcommand("unfold", "Write the flat-pattern mesh and report overlaps");
  unfold_cmd->add_option("design", input, "Design JSON")->required();
  add_common(unfold_cmd, common);
  auto* sweep = app.add_subcommand("sweep", "Per-step tool collision table plus part and tool meshes");
  sweep->add_option("design", input, "Design JSON")->required();
  sweep->add_option("--bend", bend, "Bend index (0-based)")->required();
  add_common(sweep, common);
  auto* stats = app.add_subcommand("stats", "Balance report and null baselines of a manifest");
  stats->add_option("manifest", input, "manifest.jsonl")->required();
  add_common(stats, common);
  auto* validate_cmd = app.add_subcommand("validate", "Check a design against every model invariant");
  validate_cmd->add_option("design", input, "Design JSON")->required();
  add_common(validate_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(common);
    if (*label) return cmd_label(common, input);
    if (*unfold_cmd) return cmd_unfold(common, input);
    if (*sweep) return cmd_sweep(common, input, bend);
    if (*stats) return cmd_stats(input);
    if (*validate_cmd) return cmd_validate(input);
  } catch (const Failure& f) {
    std::cerr << json{{"error", f.error}}.dump() << "\n";
    return f.code;
  } catch (const ConfigError& e) {
    std::cerr << json{{"error", {{"kind", "config"}, {"message", e.what()}}}}.dump() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << json{{"error", {{"kind", "schema"}, {"message", e.what()}}}}.dump() << "\n";
    return kUsage;
  } catch (const ConstructionError& e) {
    std::cerr << json{{"error", {{"kind", "construction"}, {"message", e.what()}, {"bend", e.bend_index()}}}}.dump()
              << "\n";
    return kConstruction;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return kFailure;
  }
  return kUsage;
}
