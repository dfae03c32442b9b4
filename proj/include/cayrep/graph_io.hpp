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

#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cayrep/cayley.hpp"
#include "cayrep/classify.hpp"
#include "cayrep/cohcfg.hpp"
#include "cayrep/dbase.hpp"

namespace cayrep {

struct GraphInput {
  std::size_t n = 0;
  PairSet edges;  // sorted, unique, undirected input expanded to both orientations
  bool directed = true;
};

// "n m [directed|undirected]" then m lines "u v"; lines starting with '#' are skipped.
GraphInput parse_graph(std::istream& in);
GraphInput parse_graph_text(const std::string& text);
GraphInput read_graph_file(const std::string& path);
std::string format_graph(const GraphInput& g);

struct CayleySpec {
  int p = 0;
  int k = 0;
  std::vector<DElement> connection;
};

// "p k" then one "i j" pair per line.
CayleySpec parse_cayley_spec(std::istream& in);
CayleySpec parse_cayley_text(const std::string& text);
CayleySpec read_cayley_file(const std::string& path);

nlohmann::json dbase_report_json(const PipelineReport& report, std::size_t n, int p, int k,
                                 std::uint64_t seed);
nlohmann::json scheme_info_json(const CoherentConfiguration& x);

}  // namespace cayrep
