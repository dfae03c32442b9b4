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

// Brute-force reference implementations. They rely only on Permutation and
// never on the stabilizer-chain machinery of the library.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cayrep/perm.hpp"

namespace oracle {

using cayrep::Permutation;
using Edges = std::vector<std::pair<int, int>>;
using Elements = std::vector<Permutation>;  // sorted, duplicate free

struct Budget {
  std::size_t max_group_order = 1'000'000;
  std::size_t max_degree = 10;
  // Search-tree nodes visited by backtrack_aut.
  std::size_t max_nodes = 2'000'000;
};

// Every automorphism of the directed graph.
Elements brute_aut(std::size_t n, const Edges& edges, const Budget& budget = {});

// Same result as brute_aut for any degree; gives up once more than
// max_group_order automorphisms have been found or max_nodes search nodes
// have been visited.
Elements backtrack_aut(std::size_t n, const Edges& edges, const Budget& budget = {});

// Every permutation preserving each color of an n x n color matrix.
Elements brute_color_aut(std::size_t n, const std::vector<int>& colors,
                         const Budget& budget = {});

bool brute_isomorphic(std::size_t n, const Edges& a, const Edges& b,
                      const Budget& budget = {});

// Group generated by gens, by breadth-first closure.
Elements closure(std::size_t n, const std::vector<Permutation>& gens,
                 const Budget& budget = {});

// A small generating set picked greedily from the element list.
std::vector<Permutation> generating_set(const Elements& group);

bool contains(const Elements& group, const Permutation& g);

// One conjugacy class of regular subgroups, each held as its sorted
// element list. members[0] is the representative.
struct SubgroupClass {
  std::vector<Elements> members;
};

// Regular subgroups isomorphic to C_p x C_{p^k}, up to conjugacy in `group`.
std::vector<SubgroupClass> brute_dbase(const Elements& group, int p, int k,
                                       const Budget& budget = {});

// Regular cyclic subgroups up to conjugacy in `group`.
std::vector<SubgroupClass> brute_cycle_base(const Elements& group,
                                            const Budget& budget = {});

// Index of the class containing `subgroup` (sorted element list), or -1.
int class_of(const std::vector<SubgroupClass>& classes, const Elements& subgroup);

}  // namespace oracle
