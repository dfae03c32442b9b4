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
#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cayrep/cohcfg.hpp"
#include "cayrep/perm.hpp"

namespace cayrep {

// An element (i, j) of D = C x B with |C| = p^k, |B| = p.
using DElement = std::pair<int, int>;

// D = C_{p^k} x C_p written additively; (i, j) is stored at index i + p^k j.
class AbstractGroupD {
 public:
  AbstractGroupD(int p, int k);
  int p() const { return p_; }
  int k() const { return k_; }
  int cyclic_order() const { return pk_; }
  std::size_t order() const { return static_cast<std::size_t>(pk_) * p_; }
  int index(DElement e) const { return e.first + pk_ * e.second; }
  DElement element(int index) const { return {index % pk_, index / pk_}; }
  DElement add(DElement a, DElement b) const;
  DElement negate(DElement a) const;
  DElement scale(DElement a, int times) const;
  int element_order(DElement a) const;
  bool is_valid(DElement a) const;
  // Every automorphism as the pair (image of c, image of b).
  std::vector<std::pair<DElement, DElement>> automorphisms() const;
  DElement apply(const std::pair<DElement, DElement>& automorphism, DElement a) const;

 private:
  int p_;
  int k_;
  int pk_;
};

// Edges (g, x + g) of Cay(D, X) on the indices of D.
PairSet cayley_graph_edges(const AbstractGroupD& d, const std::vector<DElement>& connection);

struct CayleyRepresentation {
  std::vector<DElement> labeling;        // vertex -> element of D
  std::vector<DElement> connection_set;  // sorted
  Permutation c;                         // |c| = p^k
  Permutation b;                         // |b| = p
  nlohmann::json to_json() const;
};

// The representation induced by a regular subgroup G of Aut(Gamma)
// isomorphic to D: vertex 0^(c^i b^j) gets label (i, j).
CayleyRepresentation representation_from_subgroup(std::size_t n, const PairSet& edges,
                                                  const PermutationGroup& g, int p, int k);

// Some automorphism of D maps X1 onto X2.
bool cayley_isomorphic(const AbstractGroupD& d, std::vector<DElement> x1,
                       std::vector<DElement> x2);

// One representation per conjugacy class of regular subgroups isomorphic
// to D in Aut(Gamma).
std::vector<CayleyRepresentation> crg(std::size_t n, const PairSet& edges, int p, int k,
                                      std::uint64_t seed = 0);
bool cgrec(std::size_t n, const PairSet& edges, int p, int k, std::uint64_t seed = 0);
// Cay(D, X) is isomorphic to the graph.
bool cgi(const AbstractGroupD& d, const std::vector<DElement>& connection, std::size_t n,
         const PairSet& edges, std::uint64_t seed = 0);

}  // namespace cayrep
