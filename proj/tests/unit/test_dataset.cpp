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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bendforge/dataset.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bendforge;
using Catch::Approx;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

RunConfig small_run(const std::string& out) {
  RunConfig c;
  c.subset.name = "tiny";
  c.subset.min_bends = 2;
  c.subset.max_bends = 3;
  c.subset.quota = 2;
  c.seed = 11;
  c.output_dir = out;
  return c;
}

PartRecord record_of(const PartDesign& d, const std::string& id) {
  PartRecord r;
  r.design = d;
  r.design.id = id;
  r.labels = label_part(r.design, ToolingSpec{}, LabelingOptions{});
  r.config_hash = config_hash(RunConfig{});
  r.files = {"parts/" + id + ".json", "parts/" + id + ".stl", "parts/" + id + ".flat.stl"};
  return r;
}

}  // namespace

TEST_CASE("STL text round trip keeps geometry", "[dataset]") {
  TempDir tmp("bendforge_test_stl");
  const TriMesh folded = realize(fixtures::single_bend(), {90.0}).merged();
  const fs::path p = tmp.path / "a.stl";
  write_stl(p.string(), folded, "a");
  const TriMesh back = read_stl(p.string());
  REQUIRE(back.triangles.size() == folded.triangles.size());
  CHECK(oracle::volume(back) == Approx(oracle::volume(folded)).epsilon(1e-6));
  const std::string text = stl_string(folded, "a");
  CHECK(text.rfind("solid a", 0) == 0);
  CHECK(text.find("-0.000000") == std::string::npos);
  CHECK(slurp(p) == text);
  CHECK_THROWS(read_stl((tmp.path / "missing.stl").string()));
}

TEST_CASE("part records survive write and read", "[dataset]") {
  TempDir tmp("bendforge_test_part");
  const PartRecord r = record_of(fixtures::single_bend(), "part_000001");
  write_part(tmp.path.string(), r);
  for (const std::string& rel : {r.files.metadata, r.files.folded, r.files.unfolded}) {
    CHECK(fs::is_regular_file(tmp.path / rel));
  }
  const PartRecord back = read_part((tmp.path / r.files.metadata).string());
  CHECK(back.design.id == r.design.id);
  CHECK(back.files == r.files);
  CHECK(back.config_hash == r.config_hash);
  CHECK(design_to_json(back.design) == design_to_json(r.design));
  CHECK(labels_to_json(back.labels) == labels_to_json(r.labels));
  CHECK(part_to_json(back) == part_to_json(r));

  const TriMesh flat = read_stl((tmp.path / r.files.unfolded).string());
  double area = 0;
  for (const auto& t : flat.triangles) {
    const Vec3 a = flat.vertices[t[0]], b = flat.vertices[t[1]], c = flat.vertices[t[2]];
    area += 0.5 * norm(cross(b - a, c - a));
  }
  // The flat mesh is a thin slab; its largest faces dominate the surface.
  CHECK(area > 2 * 200 * (150 + 75));
}

TEST_CASE("part schema mismatches are rejected", "[dataset]") {
  json j = part_to_json(record_of(fixtures::flat_sheet(), "p"));
  j["schema"] = "bendfm/0";
  CHECK_THROWS_AS(part_from_json(j), SchemaError);
  j.erase("schema");
  CHECK_THROWS_AS(part_from_json(j), SchemaError);

  TempDir tmp("bendforge_test_schema");
  std::ofstream(tmp.path / "bad.json") << "{ not json";
  CHECK_THROWS_AS(read_part((tmp.path / "bad.json").string()), SchemaError);
}

TEST_CASE("flat sheet metadata labels", "[dataset]") {
  const PartRecord r = record_of(fixtures::flat_sheet(), "flat");
  const json j = part_to_json(r);
  const json back = part_to_json(part_from_json(j));
  CHECK(back == j);
  CHECK(r.labels.mass_kg.value == Approx(0.7065).epsilon(1e-9));
  CHECK(r.labels.unfolded_bbox_area_cm2.value == Approx(300.0).epsilon(1e-12));
  CHECK_FALSE(r.labels.has_tool_collision.value);
  CHECK(r.labels.n_flips.value == 0);
}

TEST_CASE("subset build is balanced and worker independent", "[dataset][slow]") {
  TempDir a("bendforge_test_subset_a");
  TempDir b("bendforge_test_subset_b");
  const RunConfig ca = small_run(a.path.string());
  const RunConfig cb = small_run(b.path.string());
  const DatasetManifest ma = build_subset(ca, {1, true, {}});
  const DatasetManifest mb = build_subset(cb, {3, true, {}});

  REQUIRE(ma.complete);
  CHECK(manifest_jsonl(ma) == manifest_jsonl(mb));
  CHECK(slurp(a.path / "tiny" / "manifest.jsonl") == slurp(b.path / "tiny" / "manifest.jsonl"));
  CHECK(slurp(a.path / "tiny" / "summary.csv") == slurp(b.path / "tiny" / "summary.csv"));

  REQUIRE(ma.tallies.size() == 2);
  for (const StratumTally& t : ma.tallies) {
    CHECK(t.positives == 2);
    CHECK(t.negatives == 2);
    CHECK_FALSE(t.starved);
    CHECK(t.draws >= 4);
  }
  REQUIRE(ma.rows.size() == 8);
  for (const ManifestRow& row : ma.rows) {
    CHECK_FALSE(row.unfold_overlap);
    CHECK(row.positive == row.has_tool_collision);
    CHECK(row.seed == derive_part_seed(ca.seed, static_cast<std::uint64_t>(row.index)));
    const PartRecord rec = read_part((a.path / "tiny" / row.files.metadata).string());
    CHECK(static_cast<int>(rec.design.bends.size()) == row.n_bends);
    CHECK(rec.config_hash == ma.config_hash);
    // Relabelling the stored design reproduces the stored labels.
    const LabelSet again = label_part(rec.design, ca.gen.tooling, ca.gen.labeling);
    CHECK(labels_to_json(again) == labels_to_json(rec.labels));
    // Regenerating from the seed reproduces the stored design.
    PartDesign regen = sample_part(row.seed, ca.gen, row.n_bends).design;
    regen.id = rec.design.id;
    CHECK(design_to_json(regen) == design_to_json(rec.design));
  }

  const DatasetManifest parsed = parse_manifest(manifest_jsonl(ma));
  CHECK(manifest_jsonl(parsed) == manifest_jsonl(ma));
  const DatasetManifest read = read_manifest((a.path / "tiny" / "manifest.jsonl").string());
  CHECK(read.rows.size() == ma.rows.size());
  CHECK(read.complete);
}

TEST_CASE("a tiny draw budget starves strata", "[dataset]") {
  RunConfig c = small_run("unused");
  c.subset.min_bends = 2;
  c.subset.max_bends = 2;
  c.subset.quota = 50;
  c.subset.starvation_factor = 0.1;  // five draws
  const DatasetManifest m = build_subset(c, {1, false, {}});
  CHECK_FALSE(m.complete);
  REQUIRE(m.tallies.size() == 1);
  CHECK(m.tallies[0].starved);
  CHECK(m.tallies[0].draws == 5);
  CHECK(m.rows.size() <= 5);
  CHECK_FALSE(parse_manifest(manifest_jsonl(m)).complete);
}

TEST_CASE("manifest parsing rejects foreign documents", "[dataset]") {
  CHECK_THROWS_AS(parse_manifest(""), SchemaError);
  CHECK_THROWS_AS(parse_manifest(R"({"type":"header","schema":"other/1"})"), SchemaError);
}

TEST_CASE("null classifier baselines are exact", "[dataset][stats]") {
  const ClassifierBaseline c = null_classifier({true, false, true, false, false, true});
  CHECK(c.positives == 3);
  CHECK(c.negatives == 3);
  CHECK(c.accuracy == 50.0);
  CHECK(c.auc == 0.5);
  CHECK(c.positive_rate == 0.5);
  // Coin flip on a 1:3 set: TP = 0.5, FP = 1.5, FN = 0.5.
  const ClassifierBaseline u = null_classifier({true, false, false, false});
  CHECK(u.accuracy == 50.0);
  CHECK(u.auc == 0.5);
  CHECK(u.f1 == Approx(2 * 0.5 / (2 * 0.5 + 1.5 + 0.5)));
}

TEST_CASE("mean predictor matches direct recomputation", "[dataset][stats]") {
  const std::vector<double> y{1, 2, 0, 4, 8};
  const RegressionBaseline r = mean_predictor("x", y);
  const double mean = 3.0;
  double ae = 0, se = 0, ape = 0;
  for (double v : y) {
    ae += std::abs(v - mean);
    se += (v - mean) * (v - mean);
    if (v != 0) ape += std::abs(v - mean) / std::abs(v);
  }
  CHECK(r.n == 5);
  CHECK(r.mean == Approx(mean).epsilon(1e-15));
  CHECK(r.variance == Approx(se / 5).epsilon(1e-12));
  CHECK(r.mae == Approx(ae / 5).epsilon(1e-12));
  CHECK(r.rmse == Approx(std::sqrt(se / 5)).epsilon(1e-12));
  CHECK(r.mape_n == 4);
  CHECK(r.mape == Approx(100 * ape / 4).epsilon(1e-12));
}

TEST_CASE("stats report covers every stratum", "[dataset][stats]") {
  DatasetManifest m;
  m.tallies = {{2, 1, 1, 3, 0, 1, false}};
  ManifestRow pos, neg;
  pos.positive = true;
  pos.n_flips = 2;
  neg.n_flips = 0;
  m.rows = {pos, neg};
  const StatsReport s = compute_stats(m);
  CHECK(s.strata.size() == 1);
  CHECK(s.classifier.accuracy == 50.0);
  CHECK_FALSE(s.regression.empty());
  const json j = stats_to_json(s);
  CHECK(j.is_object());
}
