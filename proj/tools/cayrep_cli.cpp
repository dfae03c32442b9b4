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

// cayrep command-line tool.
//
//   cayrep dbase       --graph G --p P --k K [--seed S] [--timing]
//   cayrep represent   --graph G --p P --k K [--seed S]
//   cayrep recognize   --graph G --p P --k K [--seed S]
//   cayrep cgi         --cayley C --graph G [--seed S]
//   cayrep scheme-info --graph G
//
// JSON goes to stdout and a short summary to stderr. Exit codes: 0 success
// or yes, 1 no, 2 malformed input.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cayrep/cayley.hpp"
#include "cayrep/dbase.hpp"
#include "cayrep/error.hpp"
#include "cayrep/graph_io.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kMalformed = 2;

struct Options {
  std::string graph;
  std::string cayley;
  int p = 0;
  int k = 0;
  std::uint64_t seed = 0;
  bool timing = false;
};

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void check_size(const cayrep::GraphInput& g, int p, int k) {
  cayrep::AbstractGroupD d(p, k);
  if (d.order() != g.n) {
    throw cayrep::Error(cayrep::ErrorCode::kMalformedInput,
                        "graph has " + std::to_string(g.n) + " vertices, expected p^(k+1) = " +
                            std::to_string(d.order()));
  }
}

int run_dbase(const Options& o) {
  auto g = cayrep::read_graph_file(o.graph);
  check_size(g, o.p, o.k);
  auto start = std::chrono::steady_clock::now();
  auto report = cayrep::main_dbase_report(cayrep::cc_from_graph(g.n, g.edges), o.p, o.k, o.seed);
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  auto j = cayrep::dbase_report_json(report, g.n, o.p, o.k, o.seed);
  if (o.timing) j["elapsed_ms"] = elapsed.count();
  emit(j);
  std::cerr << "b_D = " << report.base.subgroups.size() << " (exit step " << report.exit_step
            << ", " << report.iterations.size() << " resolve steps, " << elapsed.count()
            << " ms)\n";
  return kYes;
}

int run_represent(const Options& o) {
  auto g = cayrep::read_graph_file(o.graph);
  check_size(g, o.p, o.k);
  auto reps = cayrep::crg(g.n, g.edges, o.p, o.k, o.seed);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reps) arr.push_back(r.to_json());
  emit({{"n", g.n}, {"p", o.p}, {"k", o.k}, {"representations", arr}});
  std::cerr << reps.size() << " non-equivalent representation(s)\n";
  return kYes;
}

int run_recognize(const Options& o) {
  auto g = cayrep::read_graph_file(o.graph);
  check_size(g, o.p, o.k);
  bool yes = cayrep::cgrec(g.n, g.edges, o.p, o.k, o.seed);
  emit({{"n", g.n}, {"p", o.p}, {"k", o.k}, {"cayley", yes}});
  std::cerr << (yes ? "yes" : "no") << '\n';
  return yes ? kYes : kNo;
}

int run_cgi(const Options& o) {
  auto spec = cayrep::read_cayley_file(o.cayley);
  auto g = cayrep::read_graph_file(o.graph);
  check_size(g, spec.p, spec.k);
  cayrep::AbstractGroupD d(spec.p, spec.k);
  bool yes = cayrep::cgi(d, spec.connection, g.n, g.edges, o.seed);
  emit({{"n", g.n}, {"p", spec.p}, {"k", spec.k}, {"isomorphic", yes}});
  std::cerr << (yes ? "yes" : "no") << '\n';
  return yes ? kYes : kNo;
}

int run_scheme_info(const Options& o) {
  auto g = cayrep::read_graph_file(o.graph);
  auto x = cayrep::cc_from_graph(g.n, g.edges);
  auto j = cayrep::scheme_info_json(x);
  emit(j);
  std::cerr << "rank " << x.rank() << ", " << x.fibers().size() << " fiber(s)\n";
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley representations over C_p x C_{p^k}"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime p")->required()->check(CLI::IsMember({2, 3}));
    sub->add_option("--k", o.k, "exponent k")->required()->check(CLI::Range(1, 12));
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed"); };

  auto* dbase = app.add_subcommand("dbase", "compute a D-base of Aut(graph)");
  dbase->add_option("--graph", o.graph, "edge list file")->required();
  add_group(dbase);
  add_seed(dbase);
  dbase->add_flag("--timing", o.timing, "include elapsed_ms in the JSON");

  auto* represent = app.add_subcommand("represent", "list non-equivalent Cayley representations");
  represent->add_option("--graph", o.graph, "edge list file")->required();
  add_group(represent);
  add_seed(represent);

  auto* recognize = app.add_subcommand("recognize", "is the graph a Cayley graph over D");
  recognize->add_option("--graph", o.graph, "edge list file")->required();
  add_group(recognize);
  add_seed(recognize);

  auto* cgi = app.add_subcommand("cgi", "is Cay(D, X) isomorphic to the graph");
  cgi->add_option("--cayley", o.cayley, "connection set file")->required();
  cgi->add_option("--graph", o.graph, "edge list file")->required();
  add_seed(cgi);

  auto* info = app.add_subcommand("scheme-info", "describe WL(graph)");
  info->add_option("--graph", o.graph, "edge list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kMalformed;
  }

  try {
    if (*dbase) return run_dbase(o);
    if (*represent) return run_represent(o);
    if (*recognize) return run_recognize(o);
    if (*cgi) return run_cgi(o);
    return run_scheme_info(o);
  } catch (const cayrep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == cayrep::ErrorCode::kMalformedInput ? kMalformed : 3;
  }
}
