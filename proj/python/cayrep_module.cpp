// Copyright 2026 The cayrep Authors
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

#include "cayrep/cayley.hpp"
#include "cayrep/dbase.hpp"
#include "cayrep/error.hpp"
#include "cayrep/graph_io.hpp"

namespace py = pybind11;
using namespace cayrep;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

PairSet normalized(PairSet edges, std::size_t n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void check_size(std::size_t n, int p, int k) {
  if (AbstractGroupD(p, k).order() != n) {
    throw Error(ErrorCode::kMalformedInput, "vertex count must be p^(k+1)");
  }
}

}  // namespace

PYBIND11_MODULE(_cayrep, m) {
  m.doc() = "Cayley representations over C_p x C_{p^k}";

  py::register_exception<Error>(m, "CayrepError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("parse", &Permutation::parse, py::arg("text"), py::arg("n"))
      .def_property_readonly("images", &Permutation::images)
      .def("order", [](const Permutation& g) { return element_order(g); })
      .def("inverse", &Permutation::inverse)
      .def("__mul__", &Permutation::operator*)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__len__", &Permutation::size)
      .def("__getitem__", [](const Permutation& g, int x) {
        if (x < 0 || static_cast<std::size_t>(x) >= g.size()) throw py::index_error();
        return g[x];
      })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& g) { return "Permutation('" + g.to_string() + "')"; });

  py::class_<CoherentConfiguration>(m, "CoherentConfiguration")
      .def_property_readonly("degree", &CoherentConfiguration::degree)
      .def_property_readonly("rank", &CoherentConfiguration::rank)
      .def_property_readonly("fibers", &CoherentConfiguration::fibers)
      .def("color", &CoherentConfiguration::color, py::arg("a"), py::arg("b"))
      .def("is_automorphism", [](const CoherentConfiguration& x, const Permutation& f) {
        return is_automorphism(f, x);
      })
      .def("to_json", [](const CoherentConfiguration& x) { return to_python(x.to_json()); });

  m.def("cc_from_graph",
        [](std::size_t n, PairSet edges) { return cc_from_graph(n, normalized(std::move(edges), n)); },
        py::arg("n"), py::arg("edges"), "Coherent closure of a directed graph.");

  m.def("parse_graph",
        [](const std::string& text) {
          auto g = parse_graph_text(text);
          return py::make_tuple(g.n, g.edges, g.directed);
        },
        py::arg("text"), "Parse an edge list; returns (n, edges, directed).");

  m.def("dbase",
        [](std::size_t n, PairSet edges, int p, int k, std::uint64_t seed) {
          check_size(n, p, k);
          nlohmann::json j;
          {
            py::gil_scoped_release release;
            auto report = main_dbase_report(cc_from_graph(n, normalized(std::move(edges), n)), p, k, seed);
            j = dbase_report_json(report, n, p, k, seed);
          }
          return to_python(j);
        },
        py::arg("n"), py::arg("edges"), py::arg("p"), py::arg("k"), py::arg("seed") = 0,
        "D-base report of the automorphism group of the graph.");

  m.def("represent",
        [](std::size_t n, PairSet edges, int p, int k, std::uint64_t seed) {
          std::vector<nlohmann::json> reps;
          {
            py::gil_scoped_release release;
            for (const auto& r : crg(n, normalized(std::move(edges), n), p, k, seed)) reps.push_back(r.to_json());
          }
          py::list out;
          for (const auto& r : reps) out.append(to_python(r));
          return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("p"), py::arg("k"), py::arg("seed") = 0,
        "Pairwise non-equivalent Cayley representations over D.");

  m.def("recognize",
        [](std::size_t n, PairSet edges, int p, int k, std::uint64_t seed) {
          return cgrec(n, normalized(std::move(edges), n), p, k, seed);
        },
        py::arg("n"), py::arg("edges"), py::arg("p"), py::arg("k"), py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());

  m.def("cgi",
        [](int p, int k, std::vector<DElement> connection, std::size_t n, PairSet edges,
           std::uint64_t seed) {
          return cgi(AbstractGroupD(p, k), connection, n, normalized(std::move(edges), n), seed);
        },
        py::arg("p"), py::arg("k"), py::arg("connection"), py::arg("n"), py::arg("edges"),
        py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>(),
        "Is Cay(D, connection) isomorphic to the graph.");

  m.def("cayley_isomorphic",
        [](int p, int k, std::vector<DElement> x1, std::vector<DElement> x2) {
          return cayley_isomorphic(AbstractGroupD(p, k), std::move(x1), std::move(x2));
        },
        py::arg("p"), py::arg("k"), py::arg("x1"), py::arg("x2"));

  m.def("cayley_graph_edges",
        [](int p, int k, std::vector<DElement> connection) {
          return cayley_graph_edges(AbstractGroupD(p, k), connection);
        },
        py::arg("p"), py::arg("k"), py::arg("connection"));

  m.def("scheme_info",
        [](std::size_t n, PairSet edges) {
          return to_python(scheme_info_json(cc_from_graph(n, normalized(std::move(edges), n))));
        },
        py::arg("n"), py::arg("edges"));
}
