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

#include "bendforge/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace bendforge {

using nlohmann::json;
namespace fs = std::filesystem;

// ---- Part records ---------------------------------------------------------

json part_to_json(const PartRecord& r) {
  json j = design_to_json(r.design);
  j["schema"] = kPartSchema;
  j["config_hash"] = r.config_hash;
  j["labels"] = labels_to_json(r.labels);
  j["reorientation"] = reorientation_to_json(r.labels.reorientation);
  j["provenance"] = provenance_to_json(r.provenance);
  j["files"] = {{"metadata", r.files.metadata}, {"folded", r.files.folded}, {"unfolded", r.files.unfolded}};
  return j;
}

PartRecord part_from_json(const json& j) {
  if (!j.is_object() || !j.contains("schema")) throw SchemaError("part metadata has no schema tag");
  const json& tag = j.at("schema");
  if (!tag.is_string() || tag.get<std::string>() != kPartSchema) {
    throw SchemaError("unsupported part schema " + tag.dump() + ", expected \"" + kPartSchema + "\"");
  }
  PartRecord r;
  r.design = design_from_json(j);
  try {
    r.config_hash = j.at("config_hash").get<std::string>();
    const json& f = j.at("files");
    r.files = {f.at("metadata").get<std::string>(), f.at("folded").get<std::string>(),
               f.at("unfolded").get<std::string>()};
  } catch (const json::exception& e) {
    throw SchemaError(std::string("part metadata: ") + e.what());
  }
  r.labels = labels_from_json(j.at("labels"), j.at("reorientation"));
  r.provenance = provenance_from_json(j.at("provenance"));
  return r;
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

void write_part(const std::string& dir, const PartRecord& r, double arc_step_deg) {
  const fs::path root(dir);
  for (const std::string& rel : {r.files.metadata, r.files.folded, r.files.unfolded}) {
    fs::create_directories((root / rel).parent_path());
  }
  write_text(root / r.files.metadata, part_to_json(r).dump(2) + "\n");
  write_stl((root / r.files.folded).string(), realize(r.design, final_angles(r.design), arc_step_deg).merged(),
            r.design.id);
  write_stl((root / r.files.unfolded).string(), pattern_mesh(unfold(r.design, arc_step_deg)),
            r.design.id + "_flat");
}

PartRecord read_part(const std::string& metadata_path) {
  json j;
  try {
    j = json::parse(read_text(metadata_path));
  } catch (const json::parse_error& e) {
    throw SchemaError(metadata_path + ": " + e.what());
  }
  return part_from_json(j);
}

// ---- Subset construction --------------------------------------------------

namespace {

struct Outcome {
  int n_bends = 0;
  std::optional<SampledPart> part;
  LabelSet labels;
  std::string failure;
};

std::string part_id(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "part_%06d", index);
  return buf;
}

ManifestRow make_row(int index, const PartRecord& r, bool positive) {
  ManifestRow row;
  row.index = index;
  row.id = r.design.id;
  row.seed = r.design.seed;
  row.n_bends = static_cast<int>(r.design.bends.size());
  row.positive = positive;
  row.files = r.files;
  const LabelSet& L = r.labels;
  row.has_tool_collision = L.has_tool_collision.value;
  row.n_colliding_bends = L.n_colliding_bends.value;
  row.unfold_overlap = L.unfold_overlap.value;
  row.n_flips = L.n_flips.value;
  row.total_distance_mm = L.total_distance_mm.value;
  row.total_angle_deg = L.total_angle_deg.value;
  row.unfolded_bbox_area_cm2 = L.unfolded_bbox_area_cm2.value;
  row.solid_volume_cm3 = L.solid_volume_cm3.value;
  row.bbox_volume_cm3 = L.bbox_volume_cm3.value;
  row.mass_kg = L.mass_kg.value;
  return row;
}

void run_parallel(int workers, int count, const std::function<void(int)>& job) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) job(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

DatasetManifest build_subset(const RunConfig& config, const BuildOptions& options) {
  const SubsetSpec& spec = config.subset;
  check_gen_config(config.gen);
  DatasetManifest m;
  m.subset = spec.name;
  m.config_hash = config_hash(config);
  m.master_seed = config.seed;
  m.quota = spec.quota;
  m.balance = to_string(spec.balance);
  std::map<int, StratumTally> tally;
  for (int n = spec.min_bends; n <= spec.max_bends; ++n) tally[n].n_bends = n;
  const auto budget = static_cast<std::uint64_t>(std::ceil(spec.starvation_factor * spec.quota));
  const auto is_open = [&](const StratumTally& t) {
    return !t.starved && (t.positives < spec.quota || t.negatives < spec.quota);
  };

  const fs::path dir = fs::path(config.output_dir) / spec.name;
  if (options.write_files) fs::create_directories(dir / "parts");

  std::uint64_t draws = 0;
  for (int base = 0;; base += kBatchSize) {
    std::vector<int> open;
    for (const auto& [n, t] : tally) {
      if (is_open(t)) open.push_back(n);
    }
    if (open.empty()) break;

    std::vector<Outcome> batch(kBatchSize);
    run_parallel(options.workers, kBatchSize, [&](int slot) {
      const int index = base + slot;
      const std::uint64_t seed = derive_part_seed(config.seed, static_cast<std::uint64_t>(index));
      Outcome& o = batch[slot];
      o.n_bends = open[splitmix64(seed) % open.size()];
      try {
        SampledPart p = sample_part(seed, config.gen, o.n_bends);
        p.design.id = part_id(index);
        o.labels = label_part(p.design, config.gen.tooling, config.gen.labeling);
        o.part = std::move(p);
      } catch (const SampleAborted& e) {
        o.failure = "sample:" + e.stage();
      } catch (const std::exception& e) {
        o.failure = std::string("label:") + e.what();
      }
    });

    for (int slot = 0; slot < kBatchSize; ++slot) {
      Outcome& o = batch[slot];
      StratumTally& t = tally[o.n_bends];
      if (!is_open(t)) continue;
      ++t.draws;
      ++draws;
      if (!o.part) {
        ++t.aborted;
      } else if (spec.require_no_unfold_overlap && o.labels.unfold_overlap.value) {
        ++t.filtered;
      } else {
        const bool positive = spec.balance == BalanceLabel::tool_collision ? o.labels.has_tool_collision.value
                                                                           : o.labels.unfold_overlap.value;
        int& count = positive ? t.positives : t.negatives;
        if (count < spec.quota) {
          ++count;
          PartRecord r;
          r.design = o.part->design;
          r.labels = o.labels;
          r.provenance = o.part->provenance;
          r.config_hash = m.config_hash;
          const std::string id = r.design.id;
          r.files = {"parts/" + id + ".json", "parts/" + id + ".stl", "parts/" + id + ".flat.stl"};
          if (options.write_files) write_part(dir.string(), r, config.gen.labeling.arc_step_deg);
          m.rows.push_back(make_row(base + slot, r, positive));
        }
      }
      if (is_open(t) && t.draws >= budget) t.starved = true;
    }
    if (options.progress) options.progress(m.rows.size(), draws);
  }

  m.complete = true;
  for (const auto& [n, t] : tally) {
    m.tallies.push_back(t);
    m.complete = m.complete && !t.starved;
  }
  if (options.write_files) {
    write_text(dir / "manifest.jsonl", manifest_jsonl(m));
    write_text(dir / "summary.csv", summary_csv(m));
  }
  return m;
}

// ---- Manifest I/O ---------------------------------------------------------

std::string manifest_jsonl(const DatasetManifest& m) {
  std::string out;
  out += json{{"type", "header"},
              {"schema", kManifestSchema},
              {"subset", m.subset},
              {"config_hash", m.config_hash},
              {"master_seed", m.master_seed},
              {"quota", m.quota},
              {"balance", m.balance}}
             .dump();
  out += '\n';
  for (const ManifestRow& r : m.rows) {
    out += json{{"type", "part"},
                {"index", r.index},
                {"id", r.id},
                {"seed", r.seed},
                {"n_bends", r.n_bends},
                {"positive", r.positive},
                {"files", {{"metadata", r.files.metadata}, {"folded", r.files.folded}, {"unfolded", r.files.unfolded}}},
                {"has_tool_collision", r.has_tool_collision},
                {"n_colliding_bends", r.n_colliding_bends},
                {"unfold_overlap", r.unfold_overlap},
                {"n_flips", r.n_flips},
                {"total_distance_mm", r.total_distance_mm},
                {"total_angle_deg", r.total_angle_deg},
                {"unfolded_bbox_area_cm2", r.unfolded_bbox_area_cm2},
                {"solid_volume_cm3", r.solid_volume_cm3},
                {"bbox_volume_cm3", r.bbox_volume_cm3},
                {"mass_kg", r.mass_kg}}
               .dump();
    out += '\n';
  }
  json strata = json::array();
  for (const StratumTally& t : m.tallies) {
    strata.push_back({{"n_bends", t.n_bends},
                      {"positives", t.positives},
                      {"negatives", t.negatives},
                      {"draws", t.draws},
                      {"aborted", t.aborted},
                      {"filtered", t.filtered},
                      {"starved", t.starved}});
  }
  out += json{{"type", "tallies"}, {"complete", m.complete}, {"strata", strata}}.dump();
  out += '\n';
  return out;
}

DatasetManifest parse_manifest(const std::string& jsonl) {
  DatasetManifest m;
  std::istringstream in(jsonl);
  std::string line;
  bool header = false;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (j.at("schema").get<std::string>() != kManifestSchema) {
          throw SchemaError("unsupported manifest schema " + j.at("schema").dump());
        }
        m.subset = j.at("subset").get<std::string>();
        m.config_hash = j.at("config_hash").get<std::string>();
        m.master_seed = j.at("master_seed").get<std::uint64_t>();
        m.quota = j.at("quota").get<int>();
        m.balance = j.at("balance").get<std::string>();
        header = true;
      } else if (type == "part") {
        ManifestRow r;
        r.index = j.at("index").get<int>();
        r.id = j.at("id").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.n_bends = j.at("n_bends").get<int>();
        r.positive = j.at("positive").get<bool>();
        const json& f = j.at("files");
        r.files = {f.at("metadata").get<std::string>(), f.at("folded").get<std::string>(),
                   f.at("unfolded").get<std::string>()};
        r.has_tool_collision = j.at("has_tool_collision").get<bool>();
        r.n_colliding_bends = j.at("n_colliding_bends").get<int>();
        r.unfold_overlap = j.at("unfold_overlap").get<bool>();
        r.n_flips = j.at("n_flips").get<int>();
        r.total_distance_mm = j.at("total_distance_mm").get<double>();
        r.total_angle_deg = j.at("total_angle_deg").get<double>();
        r.unfolded_bbox_area_cm2 = j.at("unfolded_bbox_area_cm2").get<double>();
        r.solid_volume_cm3 = j.at("solid_volume_cm3").get<double>();
        r.bbox_volume_cm3 = j.at("bbox_volume_cm3").get<double>();
        r.mass_kg = j.at("mass_kg").get<double>();
        m.rows.push_back(r);
      } else if (type == "tallies") {
        m.complete = j.at("complete").get<bool>();
        for (const json& s : j.at("strata")) {
          StratumTally t;
          t.n_bends = s.at("n_bends").get<int>();
          t.positives = s.at("positives").get<int>();
          t.negatives = s.at("negatives").get<int>();
          t.draws = s.at("draws").get<std::uint64_t>();
          t.aborted = s.at("aborted").get<std::uint64_t>();
          t.filtered = s.at("filtered").get<std::uint64_t>();
          t.starved = s.at("starved").get<bool>();
          m.tallies.push_back(t);
        }
      } else {
        throw SchemaError("unknown manifest line type " + type);
      }
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("manifest: ") + e.what());
  }
  if (!header) throw SchemaError("manifest has no header line");
  return m;
}

DatasetManifest read_manifest(const std::string& path) { return parse_manifest(read_text(path)); }

std::string summary_csv(const DatasetManifest& m) {
  std::string out =
      "index,id,seed,n_bends,positive,has_tool_collision,n_colliding_bends,unfold_overlap,n_flips,"
      "total_distance_mm,total_angle_deg,unfolded_bbox_area_cm2,solid_volume_cm3,bbox_volume_cm3,mass_kg\n";
  char buf[512];
  for (const ManifestRow& r : m.rows) {
    std::snprintf(buf, sizeof buf, "%d,%s,%llu,%d,%d,%d,%d,%d,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.index,
                  r.id.c_str(), static_cast<unsigned long long>(r.seed), r.n_bends, r.positive ? 1 : 0,
                  r.has_tool_collision ? 1 : 0, r.n_colliding_bends, r.unfold_overlap ? 1 : 0, r.n_flips,
                  r.total_distance_mm, r.total_angle_deg, r.unfolded_bbox_area_cm2, r.solid_volume_cm3,
                  r.bbox_volume_cm3, r.mass_kg);
    out += buf;
  }
  return out;
}

}  // namespace bendforge
