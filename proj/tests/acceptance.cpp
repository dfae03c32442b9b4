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

// Acceptance suite: one PASS/FAIL line per criterion on stdout, progress on
// stderr. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayrep/cayley.hpp"
#include "cayrep/dbase.hpp"
#include "cayrep/graph_io.hpp"
#include "checks.hpp"
#include "graphs.hpp"
#include "oracle.hpp"

using namespace cayrep;
namespace tg = testgraphs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Instance {
  std::string name;
  int p;
  int k;
  std::size_t n;
  PairSet edges;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Run {
  std::string name;
  int p = 0;
  std::size_t n = 0;
  PipelineReport report;
  std::string json;
  double seconds = 0;
};

Run run_pipeline(const Instance& in, std::uint64_t seed = 0) {
  auto t0 = Clock::now();
  Run r;
  r.name = in.name;
  r.p = in.p;
  r.n = in.n;
  r.report = main_dbase_report(cc_from_graph(in.n, in.edges), in.p, in.k, seed);
  r.seconds = seconds_since(t0);
  r.json = dbase_report_json(r.report, in.n, in.p, in.k, seed).dump();
  return r;
}

std::size_t order_of(int p, int k) { return int_pow(static_cast<std::uint64_t>(p), k + 1); }

// Layer of (a, b) in the chain 1 < <(0,1)> < <(0,1),(p^(k-1),0)> < ... < D.
int chain_layer(int p, int k, int a, int b) {
  if (a == 0) return b == 0 ? 0 : 1;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return 1 + (k - v);
}

std::vector<Instance> wreath_chain_graphs(int p, int k) {
  std::vector<Instance> out;
  int layers = k + 1;
  int pk = static_cast<int>(int_pow(static_cast<std::uint64_t>(p), k));
  for (int mask = 1; mask < (1 << layers) - 1; ++mask) {
    std::vector<std::pair<int, int>> conn;
    for (int a = 0; a < pk; ++a) {
      for (int b = 0; b < p; ++b) {
        int layer = chain_layer(p, k, a, b);
        if (layer > 0 && (mask >> (layer - 1) & 1)) conn.emplace_back(a, b);
      }
    }
    out.push_back({"chain" + std::to_string(mask), p, k, order_of(p, k), tg::cayley(p, k, conn)});
  }
  return out;
}

PairSet normalized(PairSet e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

std::vector<Instance> criterion1_corpus() {
  std::vector<Instance> out;
  std::mt19937_64 rng(2026);
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    std::size_t n = order_of(p, k);
    for (int i = 0; i < 200; ++i) {
      PairSet e = i % 2 == 0
                      ? tg::random_digraph(static_cast<int>(n), rng, 10 + static_cast<int>(rng() % 80))
                      : tg::cayley(p, k, tg::random_connection(p, k, rng, i % 4 == 1));
      out.push_back({"random" + std::to_string(i), p, k, n, normalized(e)});
    }
  }
  out.push_back({"K4", 2, 1, 4, tg::complete(4)});
  out.push_back({"C8", 2, 2, 8, tg::cycle(8)});
  out.push_back({"Q3", 2, 2, 8, tg::cube()});
  out.push_back({"Paley9", 3, 1, 9, tg::paley9()});
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    std::size_t n = order_of(p, k);
    out.push_back({"edgeless", p, k, n, {}});
    out.push_back({"complete", p, k, n, tg::complete(static_cast<int>(n))});
    for (auto& w : wreath_chain_graphs(p, k)) out.push_back(std::move(w));
  }
  for (auto& in : out) in.edges = normalized(in.edges);
  return out;
}

Outcome check_bound_and_validity(const Instance& in, const PipelineReport& r) {
  Outcome o;
  auto x0 = cc_from_graph(in.n, in.edges);
  for (const auto& g : r.base.subgroups) {
    if (!checks::valid_member(g, x0, in.p, in.k)) {
      o.pass = false;
      o.detail = in.name + ": invalid member";
    }
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion1(const std::vector<Instance>& corpus, std::vector<Run>& runs) {
  Outcome o;
  std::size_t nonempty = 0;
  std::size_t mismatches = 0;
  for (const auto& in : corpus) {
    runs.push_back(run_pipeline(in));
    const auto& r = runs.back().report;
    auto classes = oracle::brute_dbase(oracle::brute_aut(in.n, in.edges), in.p, in.k);
    bool ok = checks::class_for_class(r.base.subgroups, classes) &&
              check_bound_and_validity(in, r).pass;
    if (!ok) {
      ++mismatches;
      if (o.detail.empty()) o.detail = "first mismatch " + in.name + " n=" + std::to_string(in.n) + "; ";
    }
    nonempty += !classes.empty();
  }
  o.pass = mismatches == 0;
  o.detail += std::to_string(corpus.size()) + " graphs, " + std::to_string(nonempty) +
              " with a nonempty base, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome criterion2(std::vector<Run>& runs, std::vector<Instance>& instances) {
  Outcome o;
  std::mt19937_64 rng(27);
  const int p = 3, k = 2;
  const std::size_t n = 27;
  std::size_t maximality_checked = 0;
  std::size_t failures = 0;
  auto fail = [&](const std::string& why) {
    ++failures;
    if (o.detail.empty()) o.detail = "first failure: " + why + "; ";
  };
  for (int i = 0; i < 30; ++i) {
    Instance in{"cay27_" + std::to_string(i), p, k, n,
                normalized(tg::cayley(p, k, tg::random_connection(p, k, rng, i % 2 == 0)))};
    auto run = run_pipeline(in);
    const auto& base = run.report.base.subgroups;
    auto x0 = cc_from_graph(n, in.edges);
    if (base.empty()) fail(in.name + " has an empty base");
    if (!check_bound_and_validity(in, run.report).pass) fail(in.name + " invalid member");
    Membership in_k0 = [&x0](const Permutation& h) { return is_automorphism(h, x0); };
    if (filter_nonconjugate(base, in_k0, p, k).size() != base.size()) fail(in.name + " conjugate members");
    try {
      auto classes = oracle::brute_dbase(oracle::backtrack_aut(n, in.edges), p, k);
      ++maximality_checked;
      if (!checks::class_for_class(base, classes)) fail(in.name + " differs from the oracle");
    } catch (const std::runtime_error&) {
      // Aut too large for the oracle budget.
    }
    runs.push_back(std::move(run));
    instances.push_back(std::move(in));
  }
  int rejected = 0;
  for (int i = 0; rejected < 10 && i < 200; ++i) {
    PairSet e;
    if (rejected < 5) {
      e = tg::random_digraph(static_cast<int>(n), rng, 20 + 10 * (i % 5));
    } else {
      // Circulants over C27 and Cayley graphs over C3^3; kept only when the
      // oracle confirms that Aut has no regular subgroup isomorphic to D.
      std::vector<int> conn;
      for (int x = 1; x < 27; ++x) {
        if (rng() % 3 == 0) conn.push_back(x);
      }
      for (int g = 0; g < 27; ++g) {
        for (int x : conn) {
          int h = i % 2 == 0 ? (g + x) % 27
                             : (g % 3 + x % 3) % 3 + 3 * ((g / 3 % 3 + x / 3 % 3) % 3) +
                                   9 * ((g / 9 + x / 9) % 3);
          e.emplace_back(g, h);
        }
      }
      try {
        if (!oracle::brute_dbase(oracle::backtrack_aut(n, e), p, k).empty()) continue;
      } catch (const std::runtime_error&) {
        continue;
      }
    }
    e = normalized(e);
    if (cgrec(n, e, p, k)) {
      fail("non-Cayley graph accepted");
    }
    ++rejected;
  }
  if (rejected < 10) fail("could not build 10 non-Cayley graphs");
  o.pass = failures == 0;
  o.detail += "30 Cayley graphs, maximality checked by the oracle on " +
              std::to_string(maximality_checked) + ", " + std::to_string(rejected) +
              " non-Cayley graphs rejected";
  return o;
}

Outcome criterion3(const std::vector<Run>& runs) {
  Outcome o;
  for (const auto& run : runs) {
    if (BigInt(run.report.base.subgroups.size()) > dbase_size_bound(run.p, run.n)) {
      o.pass = false;
      o.detail = run.name + " exceeds the bound; ";
    }
  }
  o.detail += std::to_string(runs.size()) + " runs within bound; bound(p=2, n=8) = " +
              dbase_size_bound(2, 8).str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  int pairs = 0;
  for (; pairs < 50; ++pairs) {
    int n = 4 + pairs % 5;
    auto x = cc_from_graph(static_cast<std::size_t>(n), tg::random_digraph(n, rng, 20 + 10 * (pairs % 6)));
    std::vector<PairSet> t;
    int count = 1 + pairs % 3;
    for (int j = 0; j < count; ++j) {
      PairSet rel;
      if ((pairs + j) % 2 == 0) {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        for (int a = 0; a < n; ++a) rel.emplace_back(a, sigma[a]);
      } else {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (rng() % 4 == 0) rel.emplace_back(a, b);
          }
        }
      }
      t.push_back(normalized(rel));
    }
    auto y = wl_extension(x, t);
    auto direct = oracle::brute_color_aut(static_cast<std::size_t>(n), y.colors());
    oracle::Elements filtered;
    for (const auto& f : oracle::brute_color_aut(static_cast<std::size_t>(n), x.colors())) {
      bool keeps = std::all_of(t.begin(), t.end(), [&](const PairSet& rel) {
        PairSet image;
        for (auto [a, b] : rel) image.emplace_back(f[a], f[b]);
        return normalized(image) == rel;
      });
      if (keeps) filtered.push_back(f);
    }
    if (direct != filtered) {
      o.pass = false;
      o.detail = "pair " + std::to_string(pairs) + " differs; ";
    }
  }
  o.detail += std::to_string(pairs) + " (X, T) pairs with n <= 8";
  return o;
}

Outcome criterion5(const std::vector<Run>& runs) {
  Outcome o;
  std::size_t steps = 0;
  std::size_t raw_increase = 0;
  for (const auto& run : runs) {
    for (const auto& s : run.report.iterations) {
      ++steps;
      if (!s.progress()) o.pass = false;
      raw_increase += s.singular_sections_after >= s.singular_sections_before;
    }
  }
  o.detail = std::to_string(steps) + " singular iterations, rank and carried section count " +
             (o.pass ? "strictly improved on all" : "failed to improve on some") + "; " +
             std::to_string(raw_increase) + " of them did not lower the count over the refined lattice";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto cyc = [](std::size_t n, const char* text) { return Permutation::parse(text, n); };
  struct Case {
    std::string name;
    PermutationGroup group;
    int p;
    int k;
  };
  std::vector<Case> cases{
      {"Sylow-2 of Sym(8)", sylow_subgroup(PermutationGroup::symmetric(8), 2, 1), 2, 2},
      {"C2 wr C2 wr C2",
       PermutationGroup(8, {cyc(8, "(0 1)"), cyc(8, "(0 2)(1 3)"), cyc(8, "(0 4)(1 5)(2 6)(3 7)")}), 2, 2},
      {"Sylow-3 of Sym(9)", sylow_subgroup(PermutationGroup::symmetric(9), 3, 1), 3, 1},
      {"regular C2 x C4",
       PermutationGroup(8, {cyc(8, "(0 1 2 3)(4 5 6 7)"), cyc(8, "(0 4)(1 5)(2 6)(3 7)")}), 2, 2},
      {"<8-cycle>", PermutationGroup(8, {cyc(8, "(0 1 2 3 4 5 6 7)")}), 2, 2},
  };
  std::ostringstream detail;
  for (const auto& c : cases) {
    auto elements = oracle::closure(c.group.degree(), c.group.generators());
    auto classes = oracle::brute_dbase(elements, c.p, c.k);
    auto base = pdbase(c.group, c.p, c.k);
    bool ok = checks::class_for_class(base.subgroups, classes);
    o.pass = o.pass && ok;
    detail << c.name << " |P|=" << elements.size() << " classes=" << classes.size()
           << (ok ? "" : " MISMATCH") << "; ";
  }
  o.detail = detail.str();
  o.detail.resize(o.detail.size() - 2);
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto edges = normalized(tg::paley9());
  auto report = main_dbase_report(cc_from_graph(9, edges), 3, 1);
  auto brute = oracle::brute_aut(9, edges);
  o.pass = report.base.subgroups.size() == 1 && report.aut_order == 72 && brute.size() == 72;
  o.detail = "classes=" + std::to_string(report.base.subgroups.size()) +
             " |Aut|=" + report.aut_order.str() + " brute |Aut|=" + std::to_string(brute.size());
  return o;
}

Outcome criterion8() {
  Outcome o;
  AbstractGroupD d(2, 2);
  std::vector<DElement> x{{1, 0}, {3, 0}, {0, 1}};
  auto cay = cayley_graph_edges(d, x);
  bool with_cube = cgi(d, x, 8, normalized(tg::cube()));
  bool with_cycle = cgi(d, x, 8, normalized(tg::cycle(8)));
  bool brute_cube = oracle::brute_isomorphic(8, cay, normalized(tg::cube()));
  bool brute_cycle = oracle::brute_isomorphic(8, cay, normalized(tg::cycle(8)));
  o.pass = with_cube && !with_cycle && brute_cube == with_cube && brute_cycle == with_cycle;
  o.detail = std::string("Q3: ") + (with_cube ? "yes" : "no") + ", C8: " + (with_cycle ? "yes" : "no") +
             ", oracle agrees: " + (brute_cube == with_cube && brute_cycle == with_cycle ? "yes" : "no");
  return o;
}

Outcome criterion9(const std::vector<Instance>& corpus, const std::vector<Run>& first) {
  Outcome o;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (run_pipeline(corpus[i]).json != first[i].json) ++differing;
  }
  o.pass = differing == 0;
  o.detail = std::to_string(corpus.size()) + " reports compared, " + std::to_string(differing) + " differ";
  return o;
}

Outcome criterion10(std::vector<Instance>& instances, std::vector<Run>& runs) {
  Outcome o;
  const int p = 3, k = 3, pk = 27;
  const std::size_t n = 81;
  std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> sets;
  sets.push_back({"edgeless", {}});
  std::vector<std::pair<int, int>> all, b_clique, c_cycles, prism, cosets;
  for (int a = 0; a < pk; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a || b) all.emplace_back(a, b);
      if (a % p == 0 && (a || b)) cosets.emplace_back(a, b);
    }
  }
  for (int b = 1; b < p; ++b) b_clique.emplace_back(0, b);
  c_cycles = {{1, 0}, {pk - 1, 0}};
  prism = {{1, 0}, {pk - 1, 0}, {0, 1}, {0, 2}};
  sets.push_back({"complete", all});
  sets.push_back({"triangles", b_clique});
  sets.push_back({"cycles", c_cycles});
  sets.push_back({"prism", prism});
  sets.push_back({"subgroup cliques", cosets});
  std::mt19937_64 rng(81);
  for (int i = 0; i < 3; ++i) sets.push_back({"random" + std::to_string(i), tg::random_connection(p, k, rng, i != 1)});
  double worst = 0;
  std::string worst_name;
  for (const auto& [name, conn] : sets) {
    Instance in{name, p, k, n, normalized(tg::cayley(p, k, conn))};
    auto run = run_pipeline(in);
    std::cerr << "  n=81 " << name << ": " << run.seconds << " s, b_D=" << run.report.base.subgroups.size()
              << '\n';
    if (run.seconds > worst) {
      worst = run.seconds;
      worst_name = name;
    }
    if (run.seconds > 600 || run.report.base.subgroups.empty() || !check_bound_and_validity(in, run.report).pass) {
      o.pass = false;
    }
    runs.push_back(std::move(run));
    instances.push_back(std::move(in));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", worst);
  o.detail = std::to_string(sets.size()) + " Cayley inputs, slowest " + worst_name + " at " + buf + " s";
  return o;
}

}  // namespace

int main() {
  std::map<int, std::pair<std::string, Outcome>> results;
  auto record = [&](int id, const std::string& title, const std::function<Outcome()>& fn) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cerr << "criterion " << id << " took " << seconds_since(t0) << " s\n";
    results[id] = {title, o};
  };

  auto corpus = criterion1_corpus();
  std::vector<Run> corpus_runs;
  std::vector<Instance> other_instances;
  std::vector<Run> other_runs;

  record(1, "oracle equivalence at n = 4, 8, 9", [&] { return criterion1(corpus, corpus_runs); });
  record(2, "n = 27 spot suite", [&] { return criterion2(other_runs, other_instances); });
  record(4, "Aut of a WL extension", criterion4);
  record(6, "pdbase on standard p-groups", criterion6);
  record(7, "Paley(9)", criterion7);
  record(8, "CGI end to end", criterion8);
  record(9, "determinism", [&] { return criterion9(corpus, corpus_runs); });
  record(10, "n = 81 performance", [&] { return criterion10(other_instances, other_runs); });

  std::vector<Run> all_runs = corpus_runs;
  all_runs.insert(all_runs.end(), other_runs.begin(), other_runs.end());
  record(3, "size bound on every run", [&] { return criterion3(all_runs); });
  record(5, "resolve progress", [&] { return criterion5(all_runs); });

  bool all = true;
  for (const auto& [id, entry] : results) {
    const auto& [title, o] = entry;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " ("
              << o.detail << ")\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
