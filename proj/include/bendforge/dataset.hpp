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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bendforge/config.hpp"
#include "bendforge/labels_json.hpp"

namespace bendforge {

constexpr const char* kPartSchema = "bendfm/1";
constexpr const char* kManifestSchema = "bendfm-manifest/1";

// ---- Meshes ---------------------------------------------------------------

/// ASCII STL, one solid, "%.6f" coordinates with negative zero printed as 0.
std::string stl_string(const TriMesh& m, const std::string& name);
void write_stl(const std::string& path, const TriMesh& m, const std::string& name);
/// Triangle soup from an ASCII STL (vertices not shared).
TriMesh read_stl(const std::string& path);

// ---- Part records ---------------------------------------------------------

struct PartFiles {
  std::string metadata;  // relative to the subset directory
  std::string folded;
  std::string unfolded;
  bool operator==(const PartFiles&) const = default;
};

struct PartRecord {
  PartDesign design;
  LabelSet labels;
  std::vector<ProvenanceEntry> provenance;
  std::string config_hash;
  PartFiles files;
};

nlohmann::json part_to_json(const PartRecord& r);
/// Throws SchemaError on a missing or different "schema" tag.
PartRecord part_from_json(const nlohmann::json& j);

/// Writes metadata JSON plus folded and unfolded STL under dir using
/// record.files (relative paths).
void write_part(const std::string& dir, const PartRecord& record, double arc_step_deg = kDefaultArcStepDeg);
PartRecord read_part(const std::string& metadata_path);

// ---- Subset construction --------------------------------------------------

struct ManifestRow {
  int index = 0;           // draw index; the part seed derives from it
  std::string id;
  std::uint64_t seed = 0;
  int n_bends = 0;
  bool positive = false;   // class under the balancing label
  PartFiles files;
  bool has_tool_collision = false;
  int n_colliding_bends = 0;
  bool unfold_overlap = false;
  int n_flips = 0;
  double total_distance_mm = 0.0;
  double total_angle_deg = 0.0;
  double unfolded_bbox_area_cm2 = 0.0;
  double solid_volume_cm3 = 0.0;
  double bbox_volume_cm3 = 0.0;
  double mass_kg = 0.0;
};

struct StratumTally {
  int n_bends = 0;
  int positives = 0;
  int negatives = 0;
  std::uint64_t draws = 0;    // part seeds spent on this bend count
  std::uint64_t aborted = 0;  // sampler gave up
  std::uint64_t filtered = 0; // rejected by subset filters
  bool starved = false;
};

struct DatasetManifest {
  std::string subset;
  std::string config_hash;
  std::uint64_t master_seed = 0;
  int quota = 0;
  std::string balance;
  std::vector<ManifestRow> rows;
  std::vector<StratumTally> tallies;
  bool complete = false;
};

struct BuildOptions {
  int workers = 1;
  bool write_files = true;
  /// Called after every batch with (accepted parts, draws so far).
  std::function<void(std::size_t, std::uint64_t)> progress;
};

/// Number of draws evaluated together; fixed so results do not depend on the
/// worker count.
constexpr int kBatchSize = 32;

/// Generate-label-filter loop over part indices, with an index-ordered
/// reduction into (bend count, class) strata. When files are written, they go
/// to <output_dir>/<subset>/.
DatasetManifest build_subset(const RunConfig& config, const BuildOptions& options = {});

std::string manifest_jsonl(const DatasetManifest& m);
DatasetManifest parse_manifest(const std::string& jsonl);
DatasetManifest read_manifest(const std::string& path);
std::string summary_csv(const DatasetManifest& m);

// ---- Statistics -----------------------------------------------------------

struct RegressionBaseline {
  std::string label;
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // population
  double mae = 0.0;
  double rmse = 0.0;
  double mape = 0.0;      // percent, over samples with y != 0
  std::size_t mape_n = 0;
};

struct ClassifierBaseline {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  double positive_rate = 0.0;
  double accuracy = 0.0;  // percent
  double f1 = 0.0;
  double auc = 0.0;
};

/// Mean predictor: every sample is predicted as the set mean.
RegressionBaseline mean_predictor(const std::string& label, const std::vector<double>& y);

/// Uninformed classifier: a constant score for every sample. AUC is computed
/// by the rank statistic (ties count half); accuracy and F1 use the expected
/// confusion matrix of a uniform coin flip.
ClassifierBaseline null_classifier(const std::vector<bool>& y);

struct StatsReport {
  std::vector<StratumTally> strata;
  ClassifierBaseline classifier;
  std::vector<RegressionBaseline> regression;
};

StatsReport compute_stats(const DatasetManifest& m);
nlohmann::json stats_to_json(const StatsReport& r);

}  // namespace bendforge
