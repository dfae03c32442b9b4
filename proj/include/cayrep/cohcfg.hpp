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
#include <utility>
#include <vector>

#include "json.hpp"

#include "cayrep/perm.hpp"

namespace cayrep {

// Pair sets are exchanged as sorted (row, col) lists.
using PairSet = std::vector<std::pair<int, int>>;

// A partition of Omega x Omega held as a dense color matrix. Colors are
// numbered canonically: diagonal colors (one per fiber) first, then the
// remaining colors ordered by (source fiber, target fiber, first row-major
// occurrence). Construction renumbers but does not check coherence.
class CoherentConfiguration {
 public:
  CoherentConfiguration() = default;
  CoherentConfiguration(std::size_t n, const std::vector<int>& raw_colors);

  std::size_t degree() const { return n_; }
  std::size_t rank() const { return pairs_.size(); }
  int color(int a, int b) const { return colors_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<int>& colors() const { return colors_; }

  const std::vector<std::vector<int>>& fibers() const { return fibers_; }
  bool is_homogeneous() const { return fibers_.size() == 1; }
  bool is_diagonal_color(int c) const { return static_cast<std::size_t>(c) < fibers_.size(); }

  // Color of the transposed relation, read off one representative pair.
  int transpose(int c) const { return transpose_[c]; }
  // Out-degree of any point in the source fiber of c.
  std::size_t valency(int c) const;
  const PairSet& pairs(int c) const { return pairs_[c]; }

  nlohmann::json to_json() const;
  static CoherentConfiguration from_json(const nlohmann::json& j);

  friend bool operator==(const CoherentConfiguration& a, const CoherentConfiguration& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> colors_;
  std::vector<std::vector<int>> fibers_;
  std::vector<int> transpose_;
  std::vector<PairSet> pairs_;
};

class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;
  // Labels are renumbered by first occurrence.
  static EquivalenceRelation from_labels(const std::vector<int>& labels);
  static EquivalenceRelation identity(std::size_t n);
  static EquivalenceRelation universal(std::size_t n);

  std::size_t degree() const { return class_of_.size(); }
  int class_of(int x) const { return class_of_[x]; }
  const std::vector<int>& labels() const { return class_of_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  // Cardinality as a subset of Omega x Omega.
  std::size_t pair_count() const;
  bool related(int a, int b) const { return class_of_[a] == class_of_[b]; }
  bool is_subset_of(const EquivalenceRelation& other) const;
  bool is_identity() const { return classes_.size() == class_of_.size(); }
  bool is_universal() const { return classes_.size() <= 1; }

  // Basis relations of `x` whose union is this relation; empty when it is
  // not such a union.
  std::vector<int> colors_in(const CoherentConfiguration& x) const;

  friend bool operator==(const EquivalenceRelation& a, const EquivalenceRelation& b) {
    return a.class_of_ == b.class_of_;
  }
  friend auto operator<=>(const EquivalenceRelation& a, const EquivalenceRelation& b) {
    return a.class_of_ <=> b.class_of_;
  }

 private:
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

// The pair (F, E) with F inside E together with one class of E and the
// F-classes inside it, sorted by least point.
struct SectionDescriptor {
  EquivalenceRelation lower;  // F
  EquivalenceRelation upper;  // E
  int delta = 0;              // index of the chosen E-class
  std::vector<std::vector<int>> points;

  static SectionDescriptor make(const EquivalenceRelation& lower,
                                const EquivalenceRelation& upper, int delta);
  std::size_t degree() const { return points.size(); }
};

CoherentConfiguration cc_from_graph(std::size_t n, const PairSet& edges);
CoherentConfiguration wl_extension(const CoherentConfiguration& x,
                                   const std::vector<PairSet>& relations);
// True when every color of `coarse` is a union of colors of `fine`.
bool is_refinement(const CoherentConfiguration& fine, const CoherentConfiguration& coarse);
bool verify_coherence(const CoherentConfiguration& x);

EquivalenceRelation equivalence_closure(std::size_t n, const PairSet& s);
// Closure of the union of the given basis relations.
EquivalenceRelation equivalence_closure(const CoherentConfiguration& x,
                                        const std::vector<int>& colors);
// Largest r with s r = r s = s; throws when that relation is not an
// equivalence (it always is for unions of basis relations).
EquivalenceRelation radical(std::size_t n, const PairSet& s);
// Same, searched among E(X) for s a union of basis relations of a feasible X.
EquivalenceRelation radical(const CoherentConfiguration& x, const std::vector<int>& colors);

bool is_commutative(const CoherentConfiguration& x);
bool is_feasible(const CoherentConfiguration& x);
// All of E(X) ordered by (pair count, labels); throws unless X is feasible.
std::vector<EquivalenceRelation> enumerate_equivalences(const CoherentConfiguration& x);

CoherentConfiguration quotient(const CoherentConfiguration& x, const EquivalenceRelation& e);
CoherentConfiguration restriction(const CoherentConfiguration& x, const std::vector<int>& delta);
CoherentConfiguration section(const CoherentConfiguration& x, const SectionDescriptor& sec);

bool is_primitive(const CoherentConfiguration& x);
// One descriptor per covering pair F < E of E(X); Delta is the class of point 0.
std::vector<SectionDescriptor> enumerate_prim_sections(const CoherentConfiguration& x);
std::vector<EquivalenceRelation> maximal_path(const CoherentConfiguration& x);

bool is_automorphism(const Permutation& f, const CoherentConfiguration& x);
// Exhaustive automorphism group, degree at most 9.
PermutationGroup aut_brute(const CoherentConfiguration& x);

}  // namespace cayrep
