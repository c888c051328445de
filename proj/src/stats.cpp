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

#include <algorithm>
#include <cmath>

#include "bendforge/dataset.hpp"

namespace bendforge {

using nlohmann::json;

RegressionBaseline mean_predictor(const std::string& label, const std::vector<double>& y) {
  RegressionBaseline r;
  r.label = label;
  r.n = y.size();
  if (y.empty()) return r;
  double sum = 0;
  for (double v : y) sum += v;
  r.mean = sum / static_cast<double>(y.size());
  double abs_sum = 0, sq_sum = 0, pct_sum = 0;
  for (double v : y) {
    const double e = v - r.mean;
    abs_sum += std::abs(e);
    sq_sum += e * e;
    if (v != 0) {
      pct_sum += std::abs(e) / std::abs(v);
      ++r.mape_n;
    }
  }
  const double n = static_cast<double>(y.size());
  r.mae = abs_sum / n;
  r.variance = sq_sum / n;
  r.rmse = std::sqrt(r.variance);
  r.mape = r.mape_n ? 100.0 * pct_sum / static_cast<double>(r.mape_n) : 0.0;
  return r;
}

ClassifierBaseline null_classifier(const std::vector<bool>& y) {
  ClassifierBaseline c;
  for (bool v : y) (v ? c.positives : c.negatives)++;
  const double p = static_cast<double>(c.positives);
  const double n = static_cast<double>(c.negatives);
  if (y.empty()) return c;
  c.positive_rate = p / (p + n);

  // Expected confusion of a fair coin: half of each class is called positive.
  const double tp = p / 2, fp = n / 2, tn = n / 2;
  c.accuracy = 100.0 * (tp + tn) / (p + n);
  const double precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  const double recall = p > 0 ? tp / p : 0.0;
  c.f1 = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;

  // Rank statistic over a constant score: every (pos, neg) pair is a tie.
  if (c.positives && c.negatives) {
    const std::vector<double> score(y.size(), 0.5);
    double wins = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!y[i]) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j]) continue;
        wins += score[i] > score[j] ? 1.0 : score[i] == score[j] ? 0.5 : 0.0;
      }
    }
    c.auc = wins / (p * n);
  }
  return c;
}

StatsReport compute_stats(const DatasetManifest& m) {
  StatsReport r;
  r.strata = m.tallies;
  std::vector<bool> cls;
  std::vector<double> flips, area, dist, angle, volume, mass;
  for (const ManifestRow& row : m.rows) {
    cls.push_back(row.positive);
    flips.push_back(row.n_flips);
    area.push_back(row.unfolded_bbox_area_cm2);
    dist.push_back(row.total_distance_mm);
    angle.push_back(row.total_angle_deg);
    volume.push_back(row.solid_volume_cm3);
    mass.push_back(row.mass_kg);
  }
  r.classifier = null_classifier(cls);
  r.regression = {mean_predictor("n_flips", flips),
                  mean_predictor("unfolded_bbox_area_cm2", area),
                  mean_predictor("total_distance_mm", dist),
                  mean_predictor("total_angle_deg", angle),
                  mean_predictor("solid_volume_cm3", volume),
                  mean_predictor("mass_kg", mass)};
  return r;
}

json stats_to_json(const StatsReport& r) {
  json strata = json::array();
  for (const StratumTally& t : r.strata) {
    strata.push_back({{"n_bends", t.n_bends},
                      {"positives", t.positives},
                      {"negatives", t.negatives},
                      {"draws", t.draws},
                      {"aborted", t.aborted},
                      {"filtered", t.filtered},
                      {"starved", t.starved}});
  }
  json reg = json::object();
  for (const RegressionBaseline& b : r.regression) {
    reg[b.label] = {{"n", b.n},     {"mean", b.mean}, {"variance", b.variance}, {"mae", b.mae},
                    {"rmse", b.rmse}, {"mape_pct", b.mape}, {"mape_n", b.mape_n}};
  }
  const ClassifierBaseline& c = r.classifier;
  return {{"strata", strata},
          {"null_classifier",
           {{"positives", c.positives},
            {"negatives", c.negatives},
            {"positive_rate", c.positive_rate},
            {"accuracy_pct", c.accuracy},
            {"f1", c.f1},
            {"auc", c.auc}}},
          {"mean_predictor", reg}};
}

}  // namespace bendforge
