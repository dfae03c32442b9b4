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

#include "cayrep/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cayrep/error.hpp"

namespace cayrep {

namespace {

// Non-empty, non-comment lines.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

// Exactly `count` integers on the line, with an optional trailing word.
std::vector<long long> read_ints(const std::string& line, std::size_t count, std::string* word) {
  std::istringstream ss(line);
  std::vector<long long> v(count);
  for (auto& x : v) {
    if (!(ss >> x)) malformed("expected " + std::to_string(count) + " integers: " + line);
  }
  std::string rest;
  if (ss >> rest) {
    if (!word || !word->empty()) malformed("unexpected token: " + rest);
    *word = rest;
    if (ss >> rest) malformed("unexpected token: " + rest);
  }
  return v;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  return in;
}

}  // namespace

GraphInput parse_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) malformed("empty graph file");
  std::string kind;
  auto header = read_ints(lines[0], 2, &kind);
  if (header[0] < 1 || header[1] < 0) malformed("bad header: " + lines[0]);
  GraphInput g;
  g.n = static_cast<std::size_t>(header[0]);
  if (kind.empty() || kind == "directed") {
    g.directed = true;
  } else if (kind == "undirected") {
    g.directed = false;
  } else {
    malformed("unknown graph kind: " + kind);
  }
  if (lines.size() != static_cast<std::size_t>(header[1]) + 1) {
    malformed("edge count does not match header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto e = read_ints(lines[i], 2, nullptr);
    for (auto v : e) {
      if (v < 0 || v >= header[0]) malformed("vertex out of range: " + lines[i]);
    }
    int u = static_cast<int>(e[0]);
    int v = static_cast<int>(e[1]);
    g.edges.emplace_back(u, v);
    if (!g.directed) g.edges.emplace_back(v, u);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

GraphInput parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphInput read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_graph(in);
}

std::string format_graph(const GraphInput& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << " directed\n";
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

CayleySpec parse_cayley_spec(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) malformed("empty cayley file");
  auto header = read_ints(lines[0], 2, nullptr);
  if (header[0] != 2 && header[0] != 3) malformed("p must be 2 or 3");
  if (header[1] < 1 || header[1] > 12) malformed("k out of range");
  CayleySpec spec;
  spec.p = static_cast<int>(header[0]);
  spec.k = static_cast<int>(header[1]);
  AbstractGroupD d(spec.p, spec.k);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto e = read_ints(lines[i], 2, nullptr);
    DElement x{static_cast<int>(e[0]), static_cast<int>(e[1])};
    if (e[0] != x.first || e[1] != x.second || !d.is_valid(x)) {
      malformed("element out of range: " + lines[i]);
    }
    spec.connection.push_back(x);
  }
  std::sort(spec.connection.begin(), spec.connection.end());
  spec.connection.erase(std::unique(spec.connection.begin(), spec.connection.end()),
                        spec.connection.end());
  return spec;
}

CayleySpec parse_cayley_text(const std::string& text) {
  std::istringstream in(text);
  return parse_cayley_spec(in);
}

CayleySpec read_cayley_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_cayley_spec(in);
}

nlohmann::json dbase_report_json(const PipelineReport& report, std::size_t n, int p, int k,
                                 std::uint64_t seed) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& g : report.base.subgroups) {
    auto [c, b] = d_generators(g, p, k);
    classes.push_back({{"c", c.to_string()}, {"b", b.to_string()}});
  }
  nlohmann::json iterations = nlohmann::json::array();
  for (const auto& s : report.iterations) {
    iterations.push_back({{"lower_class_size", s.lower_class_size},
                          {"upper_class_size", s.upper_class_size},
                          {"rank_before", s.rank_before},
                          {"rank_after", s.rank_after},
                          {"singular_sections_before", s.singular_sections_before},
                          {"carried_sections_after", s.carried_sections_after},
                          {"singular_sections_after", s.singular_sections_after},
                          {"feasible_after", s.feasible_after}});
  }
  return nlohmann::json{{"n", n},
                        {"p", p},
                        {"k", k},
                        {"seed", seed},
                        {"b_D", report.base.subgroups.size()},
                        {"classes", classes},
                        {"exit_step", report.exit_step},
                        {"final_rank", report.final_rank},
                        {"aut_order", report.aut_order.str()},
                        {"sylow_order", report.sylow_order.str()},
                        {"candidates", report.candidates},
                        {"iterations", iterations}};
}

nlohmann::json scheme_info_json(const CoherentConfiguration& x) {
  nlohmann::json fibers = nlohmann::json::array();
  for (const auto& f : x.fibers()) fibers.push_back(f);
  bool homogeneous = x.is_homogeneous();
  nlohmann::json out{{"n", x.degree()},
                     {"rank", x.rank()},
                     {"fibers", fibers},
                     {"homogeneous", homogeneous},
                     {"feasible", is_feasible(x)}};
  if (homogeneous) {
    out["primitive"] = is_primitive(x);
    out["commutative"] = is_commutative(x);
    bool quasinormal = false;
    for (int p : {2, 3}) quasinormal = quasinormal || is_quasinormal(x, p);
    out["quasinormal"] = quasinormal;
  }
  nlohmann::json pairs = nlohmann::json::array();
  bool singular = false;
  if (homogeneous && out["feasible"].get<bool>()) {
    if (auto sd = singular_data(x)) {
      singular = true;
      for (const auto& pr : sd->all_pairs) {
        pairs.push_back({{"lower", pr.lower.labels()}, {"upper", pr.upper.labels()}});
      }
    }
  }
  out["singular"] = singular;
  out["singular_pairs"] = pairs;
  return out;
}

}  // namespace cayrep
