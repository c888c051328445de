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

// Structured values cross the boundary as JSON text; the Python package
// decodes them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bendforge/dataset.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace bendforge;

namespace {

PartDesign design_of(const std::string& text) { return design_from_json(json::parse(text)); }

RunConfig config_of(const std::string& text, const std::vector<std::string>& overrides) {
  json doc = text.empty() ? json::object() : json::parse(text);
  for (const std::string& o : overrides) apply_override(doc, o);
  return run_config_from_json(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bendforge native core";

  static py::exception<ConstructionError> construction_error(m, "ConstructionError", PyExc_ValueError);
  static py::exception<SchemaError> schema_error(m, "SchemaError", PyExc_ValueError);
  static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
  static py::exception<SampleAborted> sample_aborted(m, "SampleAborted", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConstructionError& e) {
      py::set_error(construction_error, e.what());
    } catch (const SchemaError& e) {
      py::set_error(schema_error, e.what());
    } catch (const ConfigError& e) {
      py::set_error(config_error, e.what());
    } catch (const SampleAborted& e) {
      py::set_error(sample_aborted, e.what());
    } catch (const json::exception& e) {
      py::set_error(schema_error, e.what());
    }
  });

  m.def("bend_allowance", &bend_allowance, py::arg("angle_deg"), py::arg("radius"), py::arg("k_factor"),
        py::arg("thickness"));
  m.def("derive_part_seed", &derive_part_seed, py::arg("master"), py::arg("index"));

  m.def("default_config", [] { return run_config_to_json(RunConfig{}).dump(); });
  m.def(
      "config_hash",
      [](const std::string& config, const std::vector<std::string>& overrides) {
        return config_hash(config_of(config, overrides));
      },
      py::arg("config") = "", py::arg("overrides") = std::vector<std::string>{});

  m.def("validate", [](const std::string& design) {
    json out = json::array();
    for (const Violation& v : validate(design_of(design))) {
      out.push_back({{"bend", v.bend_index}, {"code", v.code}, {"message", v.message}});
    }
    return out.dump();
  });

  m.def(
      "label",
      [](const std::string& design, const std::string& config) {
        const RunConfig c = config_of(config, {});
        LabelSet L;
        {
          py::gil_scoped_release release;
          L = label_part(design_of(design), c.gen.tooling, c.gen.labeling);
        }
        return json{{"labels", labels_to_json(L)}, {"reorientation", reorientation_to_json(L.reorientation)}}.dump();
      },
      py::arg("design"), py::arg("config") = "");

  m.def(
      "unfold",
      [](const std::string& design, const std::string& config) {
        const RunConfig c = config_of(config, {});
        const PartDesign d = design_of(design);
        const UnfoldedPattern p = unfold(d, c.gen.labeling.arc_step_deg);
        const UnfoldOverlap ov = unfold_overlap(p, d, c.gen.labeling);
        json pairs = json::array();
        for (const auto& [a, b] : ov.pairs) pairs.push_back({to_string(a), to_string(b)});
        return json{{"overlap", ov.overlap},
                    {"pairs", pairs},
                    {"bbox_area_mm2", pattern_bbox_area(p)},
                    {"stl", stl_string(pattern_mesh(p), "flat")}}
            .dump();
      },
      py::arg("design"), py::arg("config") = "");

  m.def(
      "folded_stl",
      [](const std::string& design, double arc_step_deg) {
        const PartDesign d = design_of(design);
        return stl_string(realize(d, final_angles(d), arc_step_deg).merged(), "part");
      },
      py::arg("design"), py::arg("arc_step_deg") = kDefaultArcStepDeg);

  m.def(
      "sample_part",
      [](std::uint64_t seed, int n_bends, const std::string& config) {
        const RunConfig c = config_of(config, {});
        SampledPart s = sample_part(seed, c.gen, n_bends);
        return json{{"design", design_to_json(s.design)}, {"provenance", provenance_to_json(s.provenance)}}.dump();
      },
      py::arg("seed"), py::arg("n_bends"), py::arg("config") = "");

  m.def(
      "build_subset",
      [](const std::string& config, const std::vector<std::string>& overrides, int workers, bool write_files) {
        const RunConfig c = config_of(config, overrides);
        BuildOptions opt;
        opt.workers = workers;
        opt.write_files = write_files;
        DatasetManifest man;
        {
          py::gil_scoped_release release;
          man = build_subset(c, opt);
        }
        return manifest_jsonl(man);
      },
      py::arg("config") = "", py::arg("overrides") = std::vector<std::string>{}, py::arg("workers") = 1,
      py::arg("write_files") = true);

  m.def("stats", [](const std::string& manifest_jsonl_text) {
    return stats_to_json(compute_stats(parse_manifest(manifest_jsonl_text))).dump();
  });
}
