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
#include <optional>
#include <vector>

#include "cayrep/cohcfg.hpp"

namespace cayrep {

struct EquivalencePair {
  EquivalenceRelation lower;  // F
  EquivalenceRelation upper;  // E
};

// Pairs F < E of E(X) whose sections have rank 2 and composite degree,
// and those among them with the least |E|.
struct SingularData {
  std::vector<EquivalencePair> all_pairs;
  std::vector<EquivalencePair> minimal;
  std::size_t m = 0;
};

bool is_composite(std::size_t value);

// Degree 9, rank 3 and primitive.
bool is_paley_scheme(const CoherentConfiguration& x);

// Feasible, and every primitive section has degree p or is the Paley scheme.
bool is_quasinormal(const CoherentConfiguration& x, int p);

// nullopt when X is not feasible or no such pair exists.
std::optional<SingularData> singular_data(const CoherentConfiguration& x);

// The member of data.minimal with the least (class size of F, labels of F,
// labels of E).
EquivalencePair choose_minimal_pair(const SingularData& data);

// Number of sections X_{Delta/F}, over all F < E in E(X) and all classes
// Delta of E, that have rank 2 and composite degree. Zero when X is not
// feasible.
std::size_t count_singular_sections(const CoherentConfiguration& x);

// Same count restricted to pairs F < E taken from `lattice` (for instance
// E(X) of a coarser configuration), with sections computed in X.
std::size_t count_singular_sections(const CoherentConfiguration& x,
                                    const std::vector<EquivalenceRelation>& lattice);

}  // namespace cayrep
