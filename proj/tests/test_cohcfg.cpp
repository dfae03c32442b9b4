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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "cayrep/cohcfg.hpp"
#include "graphs.hpp"
#include "oracle.hpp"

using namespace cayrep;
namespace tg = testgraphs;

namespace {

PairSet pairs_of(const CoherentConfiguration& x, const std::vector<int>& colors) {
  PairSet out;
  for (int c : colors) out.insert(out.end(), x.pairs(c).begin(), x.pairs(c).end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_union_of_colors(const CoherentConfiguration& x, const PairSet& t) {
  std::size_t n = x.degree();
  std::vector<int> state(x.rank(), -1);
  std::vector<char> in(n * n, 0);
  for (auto [a, b] : t) in[static_cast<std::size_t>(a) * n + b] = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    int c = x.colors()[i];
    if (state[c] < 0) state[c] = in[i];
    if (state[c] != in[i]) return false;
  }
  return true;
}

CoherentConfiguration discrete(int n) {
  std::vector<int> raw(static_cast<std::size_t>(n) * n);
  std::iota(raw.begin(), raw.end(), 0);
  return CoherentConfiguration(static_cast<std::size_t>(n), raw);
}

// Relation {(x, x^g)} of a permutation.
PairSet graph_of(const Permutation& g) {
  PairSet out;
  for (std::size_t x = 0; x < g.size(); ++x) out.emplace_back(static_cast<int>(x), g[static_cast<int>(x)]);
  return out;
}

oracle::Elements to_elements(const PermutationGroup& g) {
  auto e = g.elements();
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("coherent closure of small graphs") {
  auto k4 = cc_from_graph(4, tg::complete(4));
  CHECK(k4.rank() == 2);
  CHECK(k4.is_homogeneous());
  auto c5 = cc_from_graph(5, tg::cycle(5));
  CHECK(c5.rank() == 3);
  auto p3 = cc_from_graph(3, tg::path(3));
  CHECK(p3.fibers().size() == 2);
  CHECK_FALSE(p3.is_homogeneous());
  CHECK(p3.fibers()[0] == std::vector<int>{0, 2});
  CHECK_THROWS_AS(cc_from_graph(3, {{0, 3}}), Error);
}

TEST_CASE("canonical numbering is independent of raw color values") {
  std::vector<int> raw{7, 3, 3, 7};
  std::vector<int> shifted{100, -4, -4, 100};
  CHECK(CoherentConfiguration(2, raw) == CoherentConfiguration(2, shifted));
  CHECK(CoherentConfiguration(2, raw).colors() == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("json round trip") {
  auto x = cc_from_graph(5, tg::cycle(5));
  auto j = x.to_json();
  CHECK(j["n"] == 5);
  CHECK(j["rank"] == 3);
  CHECK(CoherentConfiguration::from_json(j) == x);
  CHECK_THROWS_AS(CoherentConfiguration::from_json(nlohmann::json{{"n", 2}}), Error);
}

TEST_CASE("wl extension") {
  auto x = cc_from_graph(5, tg::cycle(5));
  CHECK(wl_extension(x, {x.pairs(1)}) == x);
  CHECK(wl_extension(x, {}) == x);
  auto t4 = tg::trivial_scheme(4);
  auto matching = graph_of(Permutation::parse("(0 1)(2 3)", 4));
  matching.erase(std::remove_if(matching.begin(), matching.end(),
                                [](auto pr) { return pr.first == pr.second; }),
                 matching.end());
  auto y = wl_extension(t4, {matching});
  CHECK(y.rank() >= 3);
  CHECK(is_union_of_colors(y, matching));
  CHECK(is_refinement(y, t4));
  CHECK(verify_coherence(y));
}

TEST_CASE("coherence verification") {
  CHECK(verify_coherence(cc_from_graph(6, tg::path(6))));
  CHECK(verify_coherence(discrete(4)));
  // color 1 = {(0,1)} is asymmetric and its transpose lies inside color 2
  std::vector<int> bad{0, 1, 2, 2,  //
                       2, 0, 2, 2,  //
                       2, 2, 0, 2,  //
                       2, 2, 2, 0};
  CHECK_FALSE(verify_coherence(CoherentConfiguration(4, bad)));
}

TEST_CASE("equivalence closure") {
  CHECK(equivalence_closure(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}).is_identity());
  CHECK(equivalence_closure(5, tg::cycle(5)).is_universal());
  auto e = equivalence_closure(4, {{0, 1}});
  CHECK(e.classes() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
}

TEST_CASE("radical") {
  auto e = EquivalenceRelation::from_labels({0, 0, 1, 1, 2, 2});
  PairSet epairs;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (e.related(a, b)) epairs.emplace_back(a, b);
    }
  }
  CHECK(radical(6, epairs) == e);
  auto matching = graph_of(Permutation::parse("(0 1)(2 3)(4 5)", 6));
  CHECK(radical(6, matching).is_identity());
  CHECK(radical(4, tg::complete(4)).is_identity());
  PairSet all;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) all.emplace_back(a, b);
  }
  CHECK(radical(4, all).is_universal());

  auto x = tg::nested_blocks_scheme(2, 3);
  // color 2: same block of size 4 but different blocks of size 2
  CHECK(radical(x, {2}).class_count() == 4);
  CHECK(radical(x, {0, 1, 2}).class_count() == 2);
  CHECK(radical(x, {3}).class_count() == 2);
  CHECK(radical(x, {1}).is_identity());
}

TEST_CASE("radical fixes s and nothing larger does") {
  auto x = tg::nested_blocks_scheme(2, 3);
  auto all = enumerate_equivalences(x);
  std::size_t n = x.degree();
  auto compose_is = [&](const PairSet& s, const EquivalenceRelation& e) {
    std::vector<char> in(n * n, 0);
    for (auto [a, b] : s) in[a * n + b] = 1;
    for (auto [a, b] : s) {
      for (int g = 0; g < static_cast<int>(n); ++g) {
        if (e.related(b, g) && !in[a * n + g]) return false;
        if (e.related(g, a) && !in[g * n + b]) return false;
      }
    }
    return true;
  };
  for (std::size_t mask = 1; mask < (1u << x.rank()); ++mask) {
    std::vector<int> colors;
    for (std::size_t c = 0; c < x.rank(); ++c) {
      if (mask >> c & 1) colors.push_back(static_cast<int>(c));
    }
    auto s = pairs_of(x, colors);
    auto r = radical(x, colors);
    CHECK(compose_is(s, r));
    for (const auto& e : all) {
      if (e != r && r.is_subset_of(e)) CHECK_FALSE(compose_is(s, e));
    }
  }
}

TEST_CASE("feasibility") {
  auto t = tg::trivial_scheme(5);
  CHECK(is_feasible(t));
  auto e = enumerate_equivalences(t);
  REQUIRE(e.size() == 2);
  CHECK(e[0].is_identity());
  CHECK(e[1].is_universal());
  CHECK_FALSE(is_feasible(discrete(3)));
  CHECK_THROWS_AS(enumerate_equivalences(discrete(3)), Error);
  auto q3 = cc_from_graph(8, tg::cayley(2, 2, {{1, 0}, {3, 0}, {0, 1}}));
  CHECK(is_feasible(q3));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto g = tg::cayley(2, 2, tg::random_connection(2, 2, rng, i % 2 == 0));
    auto x = cc_from_graph(8, g);
    CHECK(is_feasible(x));
    CHECK(enumerate_equivalences(x).size() <= 64);
  }
}

TEST_CASE("quotients, restrictions and sections") {
  auto x = tg::nested_blocks_scheme(2, 3);
  auto id = EquivalenceRelation::identity(8);
  auto q = quotient(x, id);
  CHECK(q.rank() == x.rank());
  CHECK(q.degree() == 8);
  CHECK(quotient(x, EquivalenceRelation::universal(8)).degree() == 1);
  auto pairs = EquivalenceRelation::from_labels({0, 0, 1, 1, 2, 2, 3, 3});
  auto sec = section(x, SectionDescriptor::make(id, pairs, 0));
  CHECK(sec.degree() == 2);
  CHECK(sec.rank() == 2);
  auto r = restriction(x, {4, 5, 6, 7});
  CHECK(r.degree() == 4);
  CHECK(r.rank() == 3);
  CHECK_THROWS_AS(SectionDescriptor::make(pairs, id, 0), Error);
  CHECK_THROWS_AS(SectionDescriptor::make(id, pairs, 9), Error);
  CHECK_THROWS_AS(restriction(x, {1, 1}), Error);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(tg::trivial_scheme(6)));
  CHECK_FALSE(is_primitive(cc_from_graph(6, tg::disjoint_triangles(2))));
  auto paley = cc_from_graph(9, tg::paley9());
  CHECK(paley.rank() == 3);
  CHECK(is_primitive(paley));
  auto secs = enumerate_prim_sections(tg::nested_blocks_scheme(2, 3));
  CHECK(secs.size() == 3);
  for (const auto& s : secs) CHECK(s.degree() == 2);
}

TEST_CASE("maximal path") {
  auto t = maximal_path(tg::trivial_scheme(4));
  REQUIRE(t.size() == 2);
  auto chain = maximal_path(tg::nested_blocks_scheme(2, 3));
  REQUIRE(chain.size() == 4);
  std::vector<std::size_t> sizes;
  for (const auto& e : chain) sizes.push_back(e.classes()[0].size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(maximal_path(cc_from_graph(9, tg::paley9())).size() == 2);
  CHECK_THROWS_AS(maximal_path(discrete(2)), Error);
}

TEST_CASE("automorphisms") {
  auto x = cc_from_graph(5, tg::cycle(5));
  CHECK(is_automorphism(Permutation(5), x));
  CHECK_THROWS_AS(is_automorphism(Permutation(4), x), Error);
  CHECK(aut_brute(tg::trivial_scheme(3)).order() == 6);
  CHECK(aut_brute(tg::trivial_scheme(2)).order() == 2);
  CHECK(aut_brute(cc_from_graph(9, tg::paley9())).order() == 72);
  CHECK(aut_brute(x).order() == 10);
  CHECK_THROWS_AS(aut_brute(tg::trivial_scheme(10)), Error);
}

TEST_CASE("closure preserves the automorphism group of the graph") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto g = tg::random_digraph(n, rng, 30 + static_cast<int>(rng() % 40));
    auto x = cc_from_graph(static_cast<std::size_t>(n), g);
    CHECK(verify_coherence(x));
    CHECK(to_elements(aut_brute(x)) == oracle::brute_aut(static_cast<std::size_t>(n), g));
    if (x.is_homogeneous()) {
      for (std::size_t c = 0; c < x.rank(); ++c) {
        CHECK(x.valency(static_cast<int>(c)) == x.valency(x.transpose(static_cast<int>(c))));
      }
    }
  }
}

TEST_CASE("wl extension is idempotent and monotone") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    int n = 4 + static_cast<int>(rng() % 5);
    auto x = cc_from_graph(static_cast<std::size_t>(n), tg::random_digraph(n, rng, 40));
    std::vector<PairSet> t{tg::random_digraph(n, rng, 20)};
    auto y = wl_extension(x, t);
    CHECK(is_refinement(y, x));
    CHECK(wl_extension(y, t) == y);
    CHECK(verify_coherence(y));
  }
}

TEST_CASE("feasible schemes list closures of pairs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    auto x = cc_from_graph(9, tg::cayley(3, 1, tg::random_connection(3, 1, rng, false)));
    if (!is_feasible(x)) continue;
    auto all = enumerate_equivalences(x);
    CHECK(all.size() <= 81);
    for (std::size_t r = 0; r < x.rank(); ++r) {
      for (std::size_t s = 0; s < x.rank(); ++s) {
        auto e = equivalence_closure(x, {static_cast<int>(r), static_cast<int>(s)});
        CHECK(std::find(all.begin(), all.end(), e) != all.end());
        for (std::size_t t = 0; t < x.rank(); ++t) {
          auto f = equivalence_closure(
              x, {static_cast<int>(r), static_cast<int>(s), static_cast<int>(t)});
          CHECK(std::find(all.begin(), all.end(), f) != all.end());
        }
      }
    }
    for (const auto& e : all) CHECK_FALSE(e.colors_in(x).empty());
  }
}
