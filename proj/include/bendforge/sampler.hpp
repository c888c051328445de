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

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bendforge/labeling.hpp"
#include "bendforge/model_json.hpp"
#include "bendforge/rng.hpp"

namespace bendforge {

struct GenConfig {
  double sheet_dim_min = 150.0;  // mm, length and width
  double sheet_dim_max = 300.0;
  double thickness_min = 2.0;    // mm
  double thickness_max = 6.0;
  std::vector<double> angles{45, 60, 90, 120, 135};
  std::vector<double> angle_weights{0.125, 0.125, 0.5, 0.125, 0.125};
  double radius_factor_min = 1.0;  // x thickness
  double radius_factor_max = 1.5;
  double flange_height_min = 75.0;  // mm
  double flange_height_max = 0.0;   // mm; 0 means the larger base dimension
  double partial_width_p = 0.2;
  double width_fraction_min = 0.5;
  double width_fraction_max = 0.75;
  double relief_width_factor = 1.0;  // notch width = factor * t
  double relief_depth_factor = 1.0;  // notch depth = r + factor * t
  double weight_rectangular = 0.6;
  double weight_slanted = 0.25;
  double weight_rounded = 0.15;
  double slant_min = 5.0;            // degrees
  double slant_max = 20.0;
  double symmetry_p = 0.3;
  double up_p = 0.5;
  double feasible_fraction = 0.4;
  int max_attempts = 25;
  double depth_decay = 0.5;
  double k_factor = 0.4;
  double density = 7850.0;           // kg/m^3
  bool randomize_plane = false;
  ToolingSpec tooling;
  LabelingOptions labeling;
};

/// Throws std::invalid_argument naming the first bad field.
void check_gen_config(const GenConfig& c);

struct ProvenanceEntry {
  int bend = 0;
  EdgeRef edge;
  double edge_weight = 0.0;
  int attempts = 0;
  bool quota = false;                        // bend had to pass the insertion check
  std::optional<bool> insertion_clear;       // result of that check, when run
  std::optional<int> mirrored_from;
  bool operator==(const ProvenanceEntry&) const = default;
};

nlohmann::json provenance_to_json(const std::vector<ProvenanceEntry>& p);
std::vector<ProvenanceEntry> provenance_from_json(const nlohmann::json& j);

struct SampledPart {
  PartDesign design;
  std::vector<ProvenanceEntry> provenance;
};

/// Generation gave up. stage is "edge" (no edge could host a valid bend) or
/// "quota" (a quota bend never passed its insertion check).
class SampleAborted : public std::runtime_error {
 public:
  SampleAborted(std::string stage, int bend_index, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)), bend_(bend_index) {}
  const std::string& stage() const { return stage_; }
  int bend_index() const { return bend_; }

 private:
  std::string stage_;
  int bend_;
};

/// Seeded design with exactly n_bends bends, or SampleAborted.
SampledPart sample_part(std::uint64_t seed, const GenConfig& config, int n_bends);

/// Sampling weight of an edge.
inline double edge_weight(double length, int depth, double decay) { return length * std::pow(decay, depth); }

}  // namespace bendforge
