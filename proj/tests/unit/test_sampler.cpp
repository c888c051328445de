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
#include <map>
#include <unordered_set>

#include "bendforge/sampler.hpp"

using namespace bendforge;
using Catch::Approx;

namespace {

// Reference PCG32 (XSH-RR) with the canonical two-word seeding.
struct Pcg32 {
  std::uint64_t state = 0, inc = 0;
  Pcg32(std::uint64_t initstate, std::uint64_t initseq) {
    inc = (initseq << 1u) | 1u;
    next();
    state += initstate;
    next();
  }
  std::uint32_t next() {
    const std::uint64_t old = state;
    state = old * 6364136223846793005ULL + inc;
    const std::uint32_t xs = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const std::uint32_t rot = old >> 59u;
    return (xs >> rot) | (xs << ((-rot) & 31));
  }
};

// Reference splitmix64 generator step (Vigna), state advanced by the gamma.
std::uint64_t splitmix_next(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GenConfig quick() {
  GenConfig g;
  g.feasible_fraction = 0;
  return g;
}

template <class F>
int sample_many(int count, std::uint64_t master, const GenConfig& g, int n_bends, F visit) {
  int ok = 0;
  for (std::uint64_t i = 0; ok < count && i < static_cast<std::uint64_t>(count) * 4; ++i) {
    try {
      visit(sample_part(derive_part_seed(master, i), g, n_bends));
      ++ok;
    } catch (const SampleAborted&) {
    }
  }
  return ok;
}

}  // namespace

TEST_CASE("splitmix64 matches the reference generator") {
  std::uint64_t s = 0;
  CHECK(splitmix_next(s) == 0xe220a8397b1dcdafULL);
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xffffffffffffffffULL}) {
    std::uint64_t st = seed;
    CHECK(splitmix64(seed) == splitmix_next(st));
  }
}

TEST_CASE("rng stream is PCG32 seeded through splitmix64") {
  Pcg32 ref(42, 54);
  CHECK(ref.next() == 0xa15c02b7u);
  CHECK(ref.next() == 0x7b47f409u);
  CHECK(ref.next() == 0xba1d3330u);
  for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
    std::uint64_t s = seed;
    const std::uint64_t init_state = splitmix_next(s);
    const std::uint64_t init_seq = splitmix_next(s);
    Pcg32 expect(init_state, init_seq);
    RngStream rng(seed);
    for (int k = 0; k < 100; ++k) CHECK(rng.next_u32() == expect.next());
  }
}

TEST_CASE("rng draws stay in range") {
  RngStream rng(9);
  for (int k = 0; k < 10000; ++k) {
    const double u = rng.uniform01();
    CHECK((u >= 0 && u < 1));
    CHECK(rng.index(7) < 7);
  }
  const std::vector<double> w{0, 1, 0};
  for (int k = 0; k < 100; ++k) CHECK(rng.weighted(w) == 1);
  CHECK_THROWS(rng.index(0));
}

TEST_CASE("derived part seeds are pure and distinct") {
  CHECK(derive_part_seed(7, 3) == derive_part_seed(7, 3));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2000000);
  for (std::uint64_t i = 0; i < 1000000; ++i) seen.insert(derive_part_seed(0x5eed, i));
  CHECK(seen.size() == 1000000);
}

TEST_CASE("sampling is deterministic") {
  const GenConfig g;
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    std::string a, b;
    try {
      a = design_to_json(sample_part(seed, g, 4).design).dump();
    } catch (const SampleAborted& e) {
      a = e.what();
    }
    try {
      b = design_to_json(sample_part(seed, g, 4).design).dump();
    } catch (const SampleAborted& e) {
      b = e.what();
    }
    CHECK(a == b);
  }
}

TEST_CASE("forced symmetry mirrors the first bend") {
  GenConfig g = quick();
  g.symmetry_p = 1.0;
  g.sheet_dim_min = g.sheet_dim_max = 200;
  int mirrored = 0;
  const int n = sample_many(40, 11, g, 2, [&](const SampledPart& p) {
    const BendSpec& a = p.design.bends[0];
    const BendSpec& b = p.design.bends[1];
    if (b.mirror_of != 0) return;
    ++mirrored;
    CHECK(b.angle == a.angle);
    CHECK(b.radius == a.radius);
    CHECK(b.direction == a.direction);
    CHECK(b.width == Approx(a.width).epsilon(1e-12));
    CHECK(b.flange_type == a.flange_type);
    CHECK(b.parent_face == a.parent_face);
    CHECK(p.provenance[1].mirrored_from == 0);
  });
  CHECK(n == 40);
  // Bend 0 always lands on the base, whose opposite edge is free and equal.
  CHECK(mirrored >= 30);
}

TEST_CASE("forced partial width draws reliefs and the width band") {
  GenConfig g = quick();
  g.partial_width_p = 1.0;
  g.symmetry_p = 0.0;
  sample_many(60, 12, g, 3, [&](const SampledPart& p) {
    for (std::size_t i = 0; i < p.design.bends.size(); ++i) {
      const BendSpec& b = p.design.bends[i];
      const double len = eligible_edges(p.design, i).at({b.parent_face, b.parent_edge}).length;
      CHECK(b.width >= 0.5 * len - 1e-9);
      CHECK(b.width <= 0.75 * len + 1e-9);
      CHECK(b.relief.has_value());
    }
  });
}

TEST_CASE("sampled parameters follow the configured distributions") {
  const GenConfig g = quick();
  std::map<double, int> angles;
  int bends = 0;
  sample_many(2600, 13, g, 4, [&](const SampledPart& p) {
    const PartDesign& d = p.design;
    CHECK((d.sheet.length >= 150 && d.sheet.length <= 300));
    CHECK((d.sheet.width >= 150 && d.sheet.width <= 300));
    CHECK((d.material.thickness >= 2 && d.material.thickness <= 6));
    CHECK(validate(d).empty());
    for (const BendSpec& b : d.bends) {
      if (b.mirror_of) continue;  // copies of an earlier draw
      ++angles[b.angle];
      ++bends;
      const double ratio = b.radius / d.material.thickness;
      CHECK((ratio >= 1.0 && ratio <= 1.5));
    }
  });
  REQUIRE(bends >= 8000);
  for (std::size_t k = 0; k < g.angles.size(); ++k) {
    const double p = g.angle_weights[k];
    const double sigma = std::sqrt(bends * p * (1 - p));
    CHECK(std::abs(angles[g.angles[k]] - bends * p) <= 3 * sigma);
  }
}

TEST_CASE("quota bends passed their insertion check") {
  const GenConfig g;
  int parts = 0;
  for (std::uint64_t i = 0; parts < 15 && i < 60; ++i) {
    const int n = 2 + static_cast<int>(i % 4);
    try {
      const SampledPart p = sample_part(derive_part_seed(21, i), g, n);
      ++parts;
      CHECK(validate(p.design).empty());
      CHECK(static_cast<int>(p.design.bends.size()) == n);
      int clear = 0;
      for (const ProvenanceEntry& e : p.provenance) {
        if (e.quota) {
          REQUIRE(e.insertion_clear.has_value());
          clear += *e.insertion_clear ? 1 : 0;
        }
      }
      CHECK(clear >= static_cast<int>(std::ceil(0.4 * n - 1e-9)));
    } catch (const SampleAborted& e) {
      CHECK((e.stage() == "edge" || e.stage() == "quota"));
    }
  }
  CHECK(parts >= 10);
}

TEST_CASE("gen config validation") {
  GenConfig g;
  CHECK_NOTHROW(check_gen_config(g));
  g.symmetry_p = 1.5;
  CHECK_THROWS_AS(check_gen_config(g), std::invalid_argument);
  g = {};
  g.angle_weights.pop_back();
  CHECK_THROWS_AS(check_gen_config(g), std::invalid_argument);
  CHECK_THROWS_AS(sample_part(1, GenConfig{}, 0), std::invalid_argument);
}

TEST_CASE("edge weight decays with depth") {
  CHECK(edge_weight(200, 0, 0.5) == 200);
  CHECK(edge_weight(200, 2, 0.5) == 50);
}
