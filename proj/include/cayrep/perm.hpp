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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayrep/error.hpp"

namespace cayrep {

using BigInt = boost::multiprecision::cpp_int;

// A bijection of {0..n-1} stored as its image table. Products compose left
// to right: (a * b)[x] == b[a[x]], i.e. points are acted on from the right.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);
  explicit Permutation(std::vector<int> images);

  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<int>>& cycles);
  // Cycle notation with 0-based points, "()" for the identity.
  static Permutation parse(std::string_view text, std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  bool is_identity() const;

  // Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  // Every cycle including fixed points, same normalization.
  std::vector<std::vector<int>> all_cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

std::uint64_t element_order(const Permutation& g);
std::size_t element_degree(const Permutation& g);
// h^-1 x h
Permutation conjugate(const Permutation& x, const Permutation& h);
bool commute(const Permutation& a, const Permutation& b);

// Permutation group held as a base and strong generating set, built by
// deterministic Schreier-Sims. Immutable once constructed.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  // The base starts with `base_prefix` (redundant points allowed) and is
  // extended by the least moved point whenever a new level is needed.
  PermutationGroup(std::size_t n, std::vector<Permutation> generators,
                   std::span<const int> base_prefix = {});

  static PermutationGroup trivial(std::size_t n);
  static PermutationGroup symmetric(std::size_t n);

  // Same group, BSGS rebuilt over a base beginning with `base_prefix`.
  PermutationGroup with_base(std::span<const int> base_prefix) const;

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  std::vector<Permutation> strong_generators() const;
  const BigInt& order() const { return order_; }

  bool contains(const Permutation& g) const;
  // Strips g through the chain; returns the residue and the level reached.
  std::pair<Permutation, std::size_t> sift(const Permutation& g,
                                           std::size_t from_level = 0) const;

  std::size_t levels() const { return levels_.size(); }
  // Generators of the stabilizer of base[0..level-1].
  const std::vector<Permutation>& level_generators(std::size_t level) const {
    return levels_[level].gens;
  }
  const std::vector<int>& level_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  // Coset representative u with base[level]^u == point, or nullptr.
  const Permutation* transversal(std::size_t level, int point) const;

  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;
  bool is_regular() const;
  bool is_abelian() const;

  // All elements in a deterministic order; throws kBudgetExceeded when the
  // order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = 10'000'000) const;
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

 private:
  struct Level {
    int point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into reps, -1 if outside orbit
    std::vector<Permutation> reps;
    std::vector<Permutation> reps_inv;
  };

  void build(std::span<const int> base_prefix);
  void extend_orbit(Level& level) const;

  std::size_t n_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// Deterministic pseudo-random group elements by product replacement.
class RandomElements {
 public:
  RandomElements(const PermutationGroup& group, std::uint64_t seed);
  Permutation next();

 private:
  std::uint64_t draw(std::uint64_t bound);

  std::vector<Permutation> slots_;
  Permutation accumulator_;
  std::uint64_t state_;
};

struct BlockSystem {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks[0].size(); }

  static BlockSystem from_blocks(std::size_t n, std::vector<std::vector<int>> blocks);
  bool is_invariant_under(const Permutation& g) const;
};

// Least block containing a and b for the group generated by `gens`.
BlockSystem minimal_block_containing(std::size_t n,
                                     std::span<const Permutation> gens, int a,
                                     int b);
// Lexicographically least system of blocks of size p for a transitive
// p-group of degree p^(k+1).
BlockSystem minimal_blocks_of_size_p(const PermutationGroup& group, int p);

// Permutation of blocks induced by g.
Permutation induced_on_blocks(const Permutation& g, const BlockSystem& blocks);

class BlockAction {
 public:
  BlockAction(const PermutationGroup& group, const BlockSystem& blocks);

  const PermutationGroup& image() const { return image_; }
  const PermutationGroup& kernel() const { return kernel_; }
  const BlockSystem& blocks() const { return blocks_; }
  // Some h in the group whose action on blocks is `block_perm`.
  Permutation lift(const Permutation& block_perm) const;

 private:
  BlockSystem blocks_;
  PermutationGroup combined_;
  PermutationGroup image_;
  PermutationGroup kernel_;
};

BlockAction block_action(const PermutationGroup& group, const BlockSystem& blocks);

// g must be a product of equal-length cycles covering every point (this
// includes the identity, an n-cycle and p cycles of length n/p).
PermutationGroup centralizer_in_sym(const Permutation& g);
// Calls fn(h) for every h in sym(n) with h^-1 g h == target; fn returns
// false to stop early. Same shape restriction as centralizer_in_sym.
void for_each_conjugator_in_sym(const Permutation& g, const Permutation& target,
                                const std::function<bool(const Permutation&)>& fn);

PermutationGroup centralizer_in_group(const PermutationGroup& group,
                                      const Permutation& x);
// Some h in the group with h^-1 x h == y.
std::optional<Permutation> conjugating_element(const PermutationGroup& group,
                                               const Permutation& x,
                                               const Permutation& y);
// Every h in the group with h^-1 x h == y (a coset of C(x)).
std::vector<Permutation> all_conjugating_elements(const PermutationGroup& group,
                                                  const Permutation& x,
                                                  const Permutation& y);
PermutationGroup normalizer_in_group(const PermutationGroup& group,
                                     const PermutationGroup& sub);

PermutationGroup sylow_subgroup(const PermutationGroup& group, int p,
                                std::uint64_t seed = 0);
// Grows `start`, a p-subgroup of the group, to a Sylow p-subgroup.
PermutationGroup sylow_subgroup(const PermutationGroup& group, int p, std::uint64_t seed,
                                const PermutationGroup& start);

BigInt p_part(const BigInt& value, int p);
bool is_power_of(const BigInt& value, int p);

// Backtrack search over the elements of a group, one level per point of a
// full base. Callbacks see a point -> image map where unassigned points hold -1.
struct SearchSpec {
  std::vector<int> base;
  // Image forced on base[level] given the images so far, or -1 if free.
  std::function<int(std::size_t level, std::span<const int> image)> forced;
  // Called after base[level] received its image; false prunes the node.
  std::function<bool(std::size_t level, std::span<const int> image)> partial;
  // Final test on a complete element.
  std::function<bool(const Permutation&)> accept;
};

// Visits every accepted element; visitor returns false to stop.
void search_elements(const PermutationGroup& group, const SearchSpec& spec,
                     const std::function<bool(const Permutation&)>& visitor);
// The subgroup of accepted elements. The accepted set must be a subgroup.
PermutationGroup search_subgroup(const PermutationGroup& group,
                                 const SearchSpec& spec);

}  // namespace cayrep
