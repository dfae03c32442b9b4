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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayrep/classify.hpp"
#include "cayrep/cohcfg.hpp"
#include "cayrep/perm.hpp"

namespace cayrep {

// Pairwise non-conjugate regular subgroups isomorphic to C_p x C_{p^k}.
// `ambient` is the group in which non-conjugacy holds when it is held
// explicitly; the main pipeline tests conjugacy in Aut(X0) instead.
struct DBase {
  std::vector<PermutationGroup> subgroups;
  std::optional<PermutationGroup> ambient;
};

using Membership = std::function<bool(const Permutation&)>;

std::uint64_t int_pow(std::uint64_t base, int exponent);

// Abelian of order p^(k+1) with exactly p^2 solutions of x^p = 1 and an
// element of order p^k.
bool is_isomorphic_to_d(const PermutationGroup& g, int p, int k);

// Generators (c, b) of a group isomorphic to C_p x C_{p^k} with |c| = p^k
// and |b| = p: the least element of order p^k and the least element of
// order p outside <c>.
std::pair<Permutation, Permutation> d_generators(const PermutationGroup& g, int p, int k);

// floor((p-1)^2 p! n^(p+2) / p^p)
BigInt dbase_size_bound(int p, std::size_t n);

// Iterated wreath product over a maximal path of a quasinormal scheme; it
// contains Aut(X).
PermutationGroup qnrmaut(const CoherentConfiguration& x, int p);

struct WreathAut {
  PermutationGroup group;  // qnrmaut(x, p)
  PermutationGroup sylow;  // iterated wreath product of the local Sylow p-subgroups
};
WreathAut qnrmaut_with_sylow(const CoherentConfiguration& x, int p);

// {f in K : f preserves every color of X}, for K containing Aut(X).
PermutationGroup aut_in_solvable(const CoherentConfiguration& x, const PermutationGroup& k);

// WL(X, {R}) for R built from p-cycles on the F-classes inside each E-class.
CoherentConfiguration resolve(const CoherentConfiguration& x, const EquivalencePair& pair, int p);

// The permutation c_Delta used by resolve, as a relation on Omega. Classes
// whose sections are matched by a basis relation share one transported c_Delta.
PairSet resolve_relation(const CoherentConfiguration& x, const EquivalencePair& pair, int p);

// Elements of the coset K c covering it up to K-conjugacy. `blocks` lists
// Delta_0, ..., Delta_{m-1} with every block K-invariant and
// Delta_i^c = Delta_{i+1 mod m}.
std::vector<Permutation> conj_coset_reps(const PermutationGroup& k, const Permutation& c,
                                         const std::vector<std::vector<int>>& blocks);

// Regular cyclic subgroups of a p-group up to conjugacy; each member is
// generated by one full cycle.
std::vector<PermutationGroup> cbase_pgroup(const PermutationGroup& group, int p);

// Some h in the group with h^-1 G1 h == G2 for regular G1, G2 isomorphic to
// C_p x C_{p^k}.
std::optional<Permutation> regular_conjugator(const PermutationGroup& g1,
                                              const PermutationGroup& g2, int p, int k,
                                              const Membership& in_group);

DBase pdbase(const PermutationGroup& group, int p, int k);

// Keeps the first member of every conjugacy class under the group described
// by `in_group`.
std::vector<PermutationGroup> filter_nonconjugate(const std::vector<PermutationGroup>& members,
                                                  const Membership& in_group, int p, int k);
std::vector<PermutationGroup> filter_nonconjugate(const std::vector<PermutationGroup>& members,
                                                  const PermutationGroup& k0, int p, int k);

struct ResolveStep {
  std::size_t lower_class_size = 0;
  std::size_t upper_class_size = 0;
  std::size_t rank_before = 0;
  std::size_t rank_after = 0;
  // Rank-2 composite-degree sections over E(X) before the step.
  std::size_t singular_sections_before = 0;
  // The same pairs of E(X) with sections recomputed after the step.
  std::size_t carried_sections_after = 0;
  // Rank-2 composite-degree sections over the new lattice.
  std::size_t singular_sections_after = 0;
  bool feasible_after = true;
  bool progress() const {
    return rank_after > rank_before && carried_sections_after < singular_sections_before;
  }
};

struct PipelineReport {
  DBase base;
  std::vector<ResolveStep> iterations;
  // Step at which the pipeline stopped: "2", "3.3", "4", "6" or "8".
  std::string exit_step;
  std::size_t final_rank = 0;
  BigInt aut_order = 0;       // |K| at step 5
  BigInt sylow_order = 0;     // |P| at step 6
  std::size_t candidates = 0; // |B| at step 7
};

PipelineReport main_dbase_report(const CoherentConfiguration& x0, int p, int k,
                                 std::uint64_t seed = 0);
DBase main_dbase(const CoherentConfiguration& x0, int p, int k, std::uint64_t seed = 0);

}  // namespace cayrep
