// Copyright 2026 The ratescore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ratescore/encoder.h"
#include "ratescore/engine.h"
#include "ratescore/errors.h"
#include "ratescore/preprocess.h"
#include "ratescore/scorer.h"
#include "ratescore/stats.h"
#include "ratescore/types.h"

namespace py = pybind11;

namespace ratescore {
namespace {

EngineConfig make_config(const std::string& gazetteer, const std::string& negation,
                         const std::string& encoder, const std::string& table,
                         std::size_t dim, const std::string& params) {
  EngineConfig config;
  config.gazetteer_path = gazetteer;
  config.negation_path = negation;
  config.encoder = encoder;
  config.table_path = table;
  config.hash_dimension = dim;
  config.params_path = params;
  return config;
}

py::dict score_dict(const RateScore& r) {
  py::dict d;
  d["ratescore"] = r.score;
  d["S_forward"] = r.forward;
  d["S_backward"] = r.backward;
  return d;
}

}  // namespace
}  // namespace ratescore

PYBIND11_MODULE(_core, m) {
  using namespace ratescore;
  m.doc() = "Entity-aware radiology report scoring.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Engine>(m, "Session")
      .def(py::init([](const std::string& gazetteer, const std::string& negation,
                       const std::string& encoder, const std::string& table, std::size_t dim,
                       const std::string& params) {
             return Engine::load(make_config(gazetteer, negation, encoder, table, dim, params));
           }),
           py::arg("gazetteer") = "", py::arg("negation") = "", py::arg("encoder") = "hash",
           py::arg("table") = "", py::arg("dim") = HashEncoder::kDefaultDimension,
           py::arg("params") = "")
      .def(
          "score",
          [](const Engine& e, const std::string& ref, const std::string& cand) {
            py::gil_scoped_release release;
            return e.score(ref, cand).score;
          },
          py::arg("reference"), py::arg("candidate"))
      .def(
          "score_details",
          [](const Engine& e, const std::string& ref, const std::string& cand) {
            RateScore r;
            {
              py::gil_scoped_release release;
              r = e.score(ref, cand);
            }
            return score_dict(r);
          },
          py::arg("reference"), py::arg("candidate"))
      .def(
          "score_corpus",
          [](const Engine& e, const std::vector<std::pair<std::string, std::string>>& pairs,
             std::size_t threads) {
            std::vector<RateScore> results;
            {
              py::gil_scoped_release release;
              results = e.score_corpus(pairs, false, threads);
            }
            std::vector<double> out;
            out.reserve(results.size());
            for (const auto& r : results) out.push_back(r.score);
            return out;
          },
          py::arg("pairs"), py::arg("threads") = 0)
      .def_property_readonly("params",
                             [](const Engine& e) { return format_params(e.params()); });

  m.def("load_params", [](const std::string& path) { return format_params(load_params(path)); },
        py::arg("path"), "Validates a params file and returns it in canonical form.");
  m.def("normalize_name", [](const std::string& s) { return normalize_name(s); });
  m.def("split_sentences", [](const std::string& text) {
    std::vector<std::string> out;
    for (const auto& s : split_sentences(text)) out.push_back(s.text);
    return out;
  });
  m.def("tokenize", [](const std::string& text) { return tokenize(text); });
  m.def("hash_encode", [](const std::string& name, std::size_t dim) {
    const auto e = hash_encode(name, dim);
    return std::vector<double>(e.values().begin(), e.values().end());
  }, py::arg("name"), py::arg("dim") = HashEncoder::kDefaultDimension);
  m.def("pearson", [](const std::vector<double>& a, const std::vector<double>& b) {
    return pearson(a, b);
  });
  m.def("kendall_tau_b", [](const std::vector<double>& a, const std::vector<double>& b) {
    return kendall_tau_b(a, b);
  });
  m.def("spearman", [](const std::vector<double>& a, const std::vector<double>& b) {
    return spearman(a, b);
  });
  m.def("bleu", [](const std::string& ref, const std::string& cand) { return bleu(ref, cand); });
  m.def("rouge_l", [](const std::string& ref, const std::string& cand) {
    return rouge_l(ref, cand);
  });
}
