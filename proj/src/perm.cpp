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

#include "cayrep/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace cayrep {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x]) {
      throw Error(ErrorCode::kMalformedInput, "image table is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      if (a < 0 || static_cast<std::size_t>(a) >= n || used[a]) {
        throw Error(ErrorCode::kMalformedInput, "bad cycle point " + std::to_string(a));
      }
      used[a] = 1;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorCode::kMalformedInput, "expected '(' in " + std::string(text));
    }
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw Error(ErrorCode::kMalformedInput, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorCode::kMalformedInput, "bad character in " + std::string(text));
      }
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw Error(ErrorCode::kMalformedInput, "point out of range");
        ++i;
      }
      cycle.push_back(static_cast<int>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(n, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = rhs.images_[images_[x]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<int>(x);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::pow(std::int64_t e) const {
  std::vector<int> out(images_.size());
  for (const auto& cycle : all_cycles()) {
    auto len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = ((e % len) + len) % len;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out[cycle[i]] = cycle[(static_cast<std::int64_t>(i) + shift) % len];
    }
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::all_cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int x = static_cast<int>(start);
    while (!seen[x]) {
      seen[x] = 1;
      cycle.push_back(x);
      x = images_[x];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  auto all = all_cycles();
  std::erase_if(all, [](const auto& c) { return c.size() < 2; });
  return all;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : g.images()) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  for (const auto& cycle : g.cycles()) order = std::lcm(order, cycle.size());
  return order;
}

std::size_t element_degree(const Permutation& g) {
  std::size_t moved = 0;
  for (std::size_t x = 0; x < g.size(); ++x) moved += g[static_cast<int>(x)] != static_cast<int>(x);
  return moved;
}

Permutation conjugate(const Permutation& x, const Permutation& h) {
  // h^-1 x h maps a^h to a^(x h).
  std::vector<int> out(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) out[h[static_cast<int>(a)]] = h[x[static_cast<int>(a)]];
  return Permutation(std::move(out));
}

bool commute(const Permutation& a, const Permutation& b) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    int xi = static_cast<int>(x);
    if (b[a[xi]] != a[b[xi]]) return false;
  }
  return true;
}

BigInt p_part(const BigInt& value, int p) {
  BigInt v = value;
  BigInt out = 1;
  if (v == 0) return 0;
  while (v % p == 0) {
    v /= p;
    out *= p;
  }
  return out;
}

bool is_power_of(const BigInt& value, int p) { return value > 0 && p_part(value, p) == value; }

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(std::size_t n, std::vector<Permutation> generators,
                                   std::span<const int> base_prefix)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != n_) {
      throw Error(ErrorCode::kMalformedInput, "generator degree " + std::to_string(g.size()) +
                                                  " differs from " + std::to_string(n_));
    }
  }
  build(base_prefix);
}

PermutationGroup PermutationGroup::trivial(std::size_t n) { return PermutationGroup(n, {}); }

PermutationGroup PermutationGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup PermutationGroup::with_base(std::span<const int> base_prefix) const {
  PermutationGroup out;
  out.n_ = n_;
  out.generators_ = strong_generators();
  out.build(base_prefix);
  out.generators_ = generators_;
  return out;
}

std::vector<Permutation> PermutationGroup::strong_generators() const {
  if (levels_.empty()) return {};
  return levels_[0].gens;
}

void PermutationGroup::extend_orbit(Level& level) const {
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    int x = level.orbit[idx];
    for (const auto& g : level.gens) {
      int y = g[x];
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<int>(level.reps.size());
      Permutation rep = level.reps[level.slot[x]] * g;
      level.reps_inv.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
      level.orbit.push_back(y);
    }
  }
}

void PermutationGroup::build(std::span<const int> base_prefix) {
  base_.clear();
  levels_.clear();
  std::vector<char> in_base(n_, 0);
  for (int b : base_prefix) {
    if (b < 0 || static_cast<std::size_t>(b) >= n_) {
      throw Error(ErrorCode::kMalformedInput, "base point out of range");
    }
    if (!in_base[b]) {
      in_base[b] = 1;
      base_.push_back(b);
    }
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators_) {
    if (!g.is_identity()) gens.push_back(g);
  }
  for (const auto& g : gens) {
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return g[b] == b; });
    if (!fixes_base) continue;
    for (std::size_t x = 0; x < n_; ++x) {
      if (g[static_cast<int>(x)] != static_cast<int>(x)) {
        base_.push_back(static_cast<int>(x));
        in_base[x] = 1;
        break;
      }
    }
  }

  auto make_level = [&](int point) {
    Level lv;
    lv.point = point;
    lv.slot.assign(n_, -1);
    lv.slot[point] = 0;
    lv.orbit.push_back(point);
    lv.reps.emplace_back(n_);
    lv.reps_inv.emplace_back(n_);
    return lv;
  };
  for (std::size_t l = 0; l < base_.size(); ++l) {
    Level lv = make_level(base_[l]);
    for (const auto& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < l && fixes; ++j) fixes = g[base_[j]] == base_[j];
      if (fixes) lv.gens.push_back(g);
    }
    extend_orbit(lv);
    levels_.push_back(std::move(lv));
  }

  // checked[l][idx]: number of level generators already paired with orbit[idx].
  std::vector<std::vector<std::size_t>> checked(levels_.size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    auto li = static_cast<std::size_t>(i);
    checked[li].resize(levels_[li].orbit.size(), 0);
    for (std::size_t idx = 0; idx < levels_[li].orbit.size() && !added; ++idx) {
      while (checked[li][idx] < levels_[li].gens.size()) {
        const Level& lv = levels_[li];
        std::size_t s = checked[li][idx]++;
        int delta = lv.orbit[idx];
        const Permutation& g = lv.gens[s];
        int img = g[delta];
        Permutation schreier = lv.reps[lv.slot[delta]] * g * lv.reps_inv[lv.slot[img]];
        if (schreier.is_identity()) continue;
        auto [residue, j] = sift(schreier, li + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          int moved = 0;
          while (residue[moved] == moved) ++moved;
          base_.push_back(moved);
          levels_.push_back(make_level(moved));
          checked.emplace_back();
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          extend_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
        break;
      }
    }
    if (!added) --i;
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned>(lv.orbit.size());
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(const Permutation& g,
                                                           std::size_t from_level) const {
  Permutation h = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    int beta = h[lv.point];
    int slot = lv.slot[beta];
    if (slot < 0) return {h, l};
    if (slot > 0) h = h * lv.reps_inv[slot];
  }
  return {h, levels_.size()};
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.size() != n_) return false;
  return sift(g).first.is_identity();
}

const Permutation* PermutationGroup::transversal(std::size_t level, int point) const {
  const Level& lv = levels_[level];
  int slot = lv.slot[point];
  return slot < 0 ? nullptr : &lv.reps[slot];
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, std::size_t n) {
  std::vector<int> index(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < n; ++x) {
    int r = uf.find(static_cast<int>(x));
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  UnionFind uf(n_);
  for (const auto& g : generators_) {
    for (std::size_t x = 0; x < n_; ++x) uf.unite(static_cast<int>(x), g[static_cast<int>(x)]);
  }
  return classes_of(uf, n_);
}

bool PermutationGroup::is_transitive() const { return n_ <= 1 || orbits().size() == 1; }

bool PermutationGroup::is_regular() const { return is_transitive() && order_ == n_; }

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commute(generators_[i], generators_[j])) return false;
    }
  }
  return true;
}

void PermutationGroup::for_each_element(
    const std::function<void(const Permutation&)>& fn) const {
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t l,
                                                                 const Permutation& w) {
    if (l == levels_.size()) {
      fn(w);
      return;
    }
    for (const auto& rep : levels_[l].reps) rec(l + 1, rep * w);
  };
  rec(0, Permutation(n_));
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) {
    throw Error(ErrorCode::kBudgetExceeded, "group order exceeds enumeration cap");
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// RandomElements

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomElements::RandomElements(const PermutationGroup& group, std::uint64_t seed)
    : accumulator_(group.degree()), state_(seed) {
  const auto& gens = group.generators();
  std::size_t count = std::max<std::size_t>(10, gens.size());
  for (std::size_t i = 0; i < count; ++i) {
    slots_.push_back(gens.empty() ? Permutation(group.degree()) : gens[i % gens.size()]);
  }
  for (int i = 0; i < 50; ++i) next();
}

std::uint64_t RandomElements::draw(std::uint64_t bound) { return splitmix64(state_) % bound; }

Permutation RandomElements::next() {
  std::size_t r = slots_.size();
  std::size_t i = draw(r);
  std::size_t j = draw(r - 1);
  if (j >= i) ++j;
  if (draw(2)) {
    slots_[i] = slots_[i] * slots_[j];
  } else {
    slots_[i] = slots_[j] * slots_[i];
  }
  accumulator_ = accumulator_ * slots_[i];
  return accumulator_;
}

// ---------------------------------------------------------------------------
// Blocks

BlockSystem BlockSystem::from_blocks(std::size_t n, std::vector<std::vector<int>> blocks) {
  BlockSystem out;
  out.block_of.assign(n, -1);
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != blocks[0].size()) {
      throw Error(ErrorCode::kMalformedInput, "blocks of unequal size");
    }
    for (int x : blocks[i]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n || out.block_of[x] >= 0) {
        throw Error(ErrorCode::kMalformedInput, "blocks do not partition the points");
      }
      out.block_of[x] = static_cast<int>(i);
    }
  }
  if (std::find(out.block_of.begin(), out.block_of.end(), -1) != out.block_of.end()) {
    throw Error(ErrorCode::kMalformedInput, "blocks do not cover the points");
  }
  out.blocks = std::move(blocks);
  return out;
}

bool BlockSystem::is_invariant_under(const Permutation& g) const {
  for (const auto& b : blocks) {
    int target = block_of[g[b[0]]];
    for (int x : b) {
      if (block_of[g[x]] != target) return false;
    }
  }
  return true;
}

BlockSystem minimal_block_containing(std::size_t n, std::span<const Permutation> gens, int a,
                                     int b) {
  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      int gx = g[x];
      int gy = g[y];
      if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
    }
  }
  return BlockSystem::from_blocks(n, classes_of(uf, n));
}

BlockSystem minimal_blocks_of_size_p(const PermutationGroup& group, int p) {
  std::size_t n = group.degree();
  if (!group.is_transitive()) {
    throw Error(ErrorCode::kPreconditionViolation, "group is not transitive");
  }
  std::optional<BlockSystem> best;
  const auto& gens = group.generators();
  for (std::size_t b = 1; b < n; ++b) {
    BlockSystem sys = minimal_block_containing(n, gens, 0, static_cast<int>(b));
    if (sys.block_size() != static_cast<std::size_t>(p)) continue;
    if (!best || sys.blocks < best->blocks) best = std::move(sys);
  }
  if (!best) throw Error(ErrorCode::kPreconditionViolation, "no block system with blocks of size p");
  return *best;
}

Permutation induced_on_blocks(const Permutation& g, const BlockSystem& blocks) {
  std::vector<int> images(blocks.block_count());
  for (std::size_t i = 0; i < blocks.block_count(); ++i) {
    images[i] = blocks.block_of[g[blocks.blocks[i][0]]];
  }
  return Permutation(std::move(images));
}

BlockAction::BlockAction(const PermutationGroup& group, const BlockSystem& blocks)
    : blocks_(blocks) {
  std::size_t n = group.degree();
  std::size_t m = blocks.block_count();
  std::vector<Permutation> combined_gens;
  std::vector<Permutation> image_gens;
  for (const auto& g : group.generators()) {
    if (!blocks.is_invariant_under(g)) {
      throw Error(ErrorCode::kPreconditionViolation, "block system is not invariant");
    }
    Permutation bar = induced_on_blocks(g, blocks);
    std::vector<int> images(g.images());
    for (std::size_t i = 0; i < m; ++i) images.push_back(static_cast<int>(n) + bar[static_cast<int>(i)]);
    combined_gens.emplace_back(std::move(images));
    image_gens.push_back(std::move(bar));
  }
  std::vector<int> prefix(m);
  std::iota(prefix.begin(), prefix.end(), static_cast<int>(n));
  combined_ = PermutationGroup(n + m, std::move(combined_gens), prefix);
  image_ = PermutationGroup(m, std::move(image_gens));
  std::vector<Permutation> kernel_gens;
  if (combined_.levels() > m) {
    for (const auto& g : combined_.level_generators(m)) {
      std::vector<int> images(g.images().begin(), g.images().begin() + static_cast<std::ptrdiff_t>(n));
      kernel_gens.emplace_back(std::move(images));
    }
  }
  kernel_ = PermutationGroup(n, std::move(kernel_gens));
}

Permutation BlockAction::lift(const Permutation& block_perm) const {
  std::size_t m = blocks_.block_count();
  std::size_t n = combined_.degree() - m;
  if (block_perm.size() != m) throw Error(ErrorCode::kMalformedInput, "wrong degree for lift");
  std::vector<int> residue = block_perm.images();
  Permutation w(n + m);
  for (std::size_t l = 0; l < m && l < combined_.levels(); ++l) {
    int b = combined_.base()[l] - static_cast<int>(n);
    int beta = static_cast<int>(n) + residue[b];
    const Permutation* rep = combined_.transversal(l, beta);
    if (!rep) throw Error(ErrorCode::kNotInImage, "element is not induced by the group");
    Permutation rep_inv = rep->inverse();
    for (auto& r : residue) r = rep_inv[static_cast<int>(n) + r] - static_cast<int>(n);
    w = *rep * w;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (residue[i] != static_cast<int>(i)) {
      throw Error(ErrorCode::kNotInImage, "element is not induced by the group");
    }
  }
  return Permutation(std::vector<int>(w.images().begin(), w.images().begin() + static_cast<std::ptrdiff_t>(n)));
}

BlockAction block_action(const PermutationGroup& group, const BlockSystem& blocks) {
  return BlockAction(group, blocks);
}

// ---------------------------------------------------------------------------
// Centralizers and conjugacy

namespace {

// Cycles (fixed points included) when all have one common length, else empty.
std::vector<std::vector<int>> homogeneous_cycles(const Permutation& g) {
  auto cycles = g.all_cycles();
  for (const auto& c : cycles) {
    if (c.size() != cycles[0].size()) return {};
  }
  return cycles;
}

}  // namespace

PermutationGroup centralizer_in_sym(const Permutation& g) {
  std::size_t n = g.size();
  auto cycles = homogeneous_cycles(g);
  if (cycles.empty() && n > 0) {
    throw Error(ErrorCode::kUnsupportedShape, "centralizer needs equal-length cycles: " + g.to_string());
  }
  std::size_t m = cycles.size();
  std::size_t len = m ? cycles[0].size() : 0;
  std::vector<Permutation> gens;
  if (len > 1) gens.push_back(Permutation::from_cycles(n, {cycles[0]}));
  if (m >= 2) {
    std::vector<int> swap(n), shift(n);
    std::iota(swap.begin(), swap.end(), 0);
    for (std::size_t t = 0; t < len; ++t) {
      swap[cycles[0][t]] = cycles[1][t];
      swap[cycles[1][t]] = cycles[0][t];
      for (std::size_t j = 0; j < m; ++j) shift[cycles[j][t]] = cycles[(j + 1) % m][t];
    }
    gens.emplace_back(std::move(swap));
    if (m > 2) gens.emplace_back(std::move(shift));
  }
  return PermutationGroup(n, std::move(gens));
}

void for_each_conjugator_in_sym(const Permutation& g, const Permutation& target,
                                const std::function<bool(const Permutation&)>& fn) {
  auto a = homogeneous_cycles(g);
  if (a.empty() && g.size() > 0) {
    throw Error(ErrorCode::kUnsupportedShape, "conjugators need equal-length cycles: " + g.to_string());
  }
  auto b = homogeneous_cycles(target);
  if (b.size() != a.size() || (!a.empty() && b[0].size() != a[0].size())) return;
  std::size_t m = a.size();
  std::size_t len = m ? a[0].size() : 0;
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> images(g.size());
  do {
    std::vector<std::size_t> shift(m, 0);
    for (;;) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto& to = b[sigma[j]];
        for (std::size_t t = 0; t < len; ++t) images[a[j][t]] = to[(t + shift[j]) % len];
      }
      if (!fn(Permutation(images))) return;
      std::size_t j = 0;
      while (j < m && ++shift[j] == len) shift[j++] = 0;
      if (j == m) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

namespace {

void search_rec(const PermutationGroup& k, const SearchSpec& spec, std::size_t level,
                const Permutation& w, const Permutation& w_inv, std::vector<int>& image,
                const std::function<bool(const Permutation&)>& visitor, bool& stop) {
  if (stop) return;
  if (level == k.levels()) {
    if (!spec.accept || spec.accept(w)) {
      if (!visitor(w)) stop = true;
    }
    return;
  }
  int b = spec.base[level];
  auto attempt = [&](int delta) {
    const Permutation* rep = k.transversal(level, delta);
    if (!rep) return;
    image[b] = w[delta];
    if (!spec.partial || spec.partial(level, image)) {
      search_rec(k, spec, level + 1, *rep * w, w_inv * rep->inverse(), image, visitor, stop);
    }
    image[b] = -1;
  };
  int forced = spec.forced ? spec.forced(level, image) : -1;
  if (forced >= 0) {
    attempt(w_inv[forced]);
  } else {
    for (int delta : k.level_orbit(level)) {
      attempt(delta);
      if (stop) return;
    }
  }
}

PermutationGroup rebase_full(const PermutationGroup& group, const SearchSpec& spec) {
  std::size_t n = group.degree();
  std::vector<char> seen(n, 0);
  if (spec.base.size() != n) throw Error(ErrorCode::kMalformedInput, "search base must list every point");
  for (int b : spec.base) {
    if (b < 0 || static_cast<std::size_t>(b) >= n || seen[b]) {
      throw Error(ErrorCode::kMalformedInput, "search base must list every point once");
    }
    seen[b] = 1;
  }
  return group.with_base(spec.base);
}

}  // namespace

void search_elements(const PermutationGroup& group, const SearchSpec& spec,
                     const std::function<bool(const Permutation&)>& visitor) {
  PermutationGroup k = rebase_full(group, spec);
  std::vector<int> image(group.degree(), -1);
  bool stop = false;
  Permutation id(group.degree());
  search_rec(k, spec, 0, id, id, image, visitor, stop);
}

PermutationGroup search_subgroup(const PermutationGroup& group, const SearchSpec& spec) {
  std::size_t n = group.degree();
  PermutationGroup k = rebase_full(group, spec);
  std::vector<Permutation> found;
  std::vector<int> image(n, -1);
  for (std::size_t i = k.levels(); i-- > 0;) {
    int b = spec.base[i];
    for (std::size_t j = 0; j < i; ++j) image[spec.base[j]] = spec.base[j];
    // Orbit of b under the part of the answer found so far; every element in
    // `found` fixes base[0..i-1].
    std::vector<char> reached(n, 0);
    std::vector<int> orbit{b};
    reached[b] = 1;
    auto grow = [&] {
      for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
        for (const auto& g : found) {
          int y = g[orbit[idx]];
          if (!reached[y]) {
            reached[y] = 1;
            orbit.push_back(y);
          }
        }
      }
    };
    for (int delta : k.level_orbit(i)) {
      if (reached[delta]) continue;
      int forced = spec.forced ? spec.forced(i, image) : -1;
      if (forced >= 0 && forced != delta) continue;
      image[b] = delta;
      if (!spec.partial || spec.partial(i, image)) {
        const Permutation* rep = k.transversal(i, delta);
        bool stop = false;
        std::optional<Permutation> hit;
        search_rec(k, spec, i + 1, *rep, rep->inverse(), image,
                   [&](const Permutation& g) {
                     hit = g;
                     return false;
                   },
                   stop);
        if (hit) {
          found.push_back(std::move(*hit));
          grow();
        }
      }
      image[b] = -1;
    }
    std::fill(image.begin(), image.end(), -1);
  }
  return PermutationGroup(n, std::move(found));
}

namespace {

SearchSpec conjugator_spec(const Permutation& x, const Permutation& y) {
  std::size_t n = x.size();
  SearchSpec spec;
  std::vector<int> cycle_len_x(n), cycle_len_y(n), first(n, 0);
  for (const auto& c : x.all_cycles()) {
    for (int a : c) cycle_len_x[a] = static_cast<int>(c.size());
    first[c[0]] = 1;
    spec.base.insert(spec.base.end(), c.begin(), c.end());
  }
  for (const auto& c : y.all_cycles()) {
    for (int a : c) cycle_len_y[a] = static_cast<int>(c.size());
  }
  Permutation x_inv = x.inverse();
  spec.forced = [first, x_inv, y, base = spec.base](std::size_t level, std::span<const int> image) {
    int b = base[level];
    if (first[b]) return -1;
    return y[image[x_inv[b]]];
  };
  spec.partial = [first, cycle_len_x, cycle_len_y, base = spec.base](std::size_t level,
                                                                     std::span<const int> image) {
    int b = base[level];
    return !first[b] || cycle_len_x[b] == cycle_len_y[image[b]];
  };
  spec.accept = [x, y](const Permutation& h) { return x * h == h * y; };
  return spec;
}

bool same_cycle_type(const Permutation& x, const Permutation& y) {
  auto type = [](const Permutation& g) {
    std::vector<std::size_t> lens;
    for (const auto& c : g.all_cycles()) lens.push_back(c.size());
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  return x.size() == y.size() && type(x) == type(y);
}

}  // namespace

PermutationGroup centralizer_in_group(const PermutationGroup& group, const Permutation& x) {
  if (x.is_identity()) return group;
  return search_subgroup(group, conjugator_spec(x, x));
}

std::optional<Permutation> conjugating_element(const PermutationGroup& group,
                                               const Permutation& x, const Permutation& y) {
  if (!same_cycle_type(x, y)) return std::nullopt;
  std::optional<Permutation> out;
  search_elements(group, conjugator_spec(x, y), [&](const Permutation& h) {
    out = h;
    return false;
  });
  return out;
}

std::vector<Permutation> all_conjugating_elements(const PermutationGroup& group,
                                                  const Permutation& x, const Permutation& y) {
  std::vector<Permutation> out;
  if (!same_cycle_type(x, y)) return out;
  search_elements(group, conjugator_spec(x, y), [&](const Permutation& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

PermutationGroup normalizer_in_group(const PermutationGroup& group, const PermutationGroup& sub) {
  std::size_t n = group.degree();
  auto orbits = sub.orbits();
  std::vector<int> orbit_of(n), orbit_size(n);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (int x : orbits[i]) {
      orbit_of[x] = static_cast<int>(i);
      orbit_size[x] = static_cast<int>(orbits[i].size());
    }
  }
  SearchSpec spec;
  spec.base.resize(n);
  std::iota(spec.base.begin(), spec.base.end(), 0);
  spec.partial = [orbit_of, orbit_size](std::size_t level, std::span<const int> image) {
    int b = static_cast<int>(level);
    int gb = image[b];
    if (orbit_size[b] != orbit_size[gb]) return false;
    for (int j = 0; j < b; ++j) {
      if ((orbit_of[j] == orbit_of[b]) != (orbit_of[image[j]] == orbit_of[gb])) return false;
    }
    return true;
  };
  spec.accept = [&sub](const Permutation& g) {
    for (const auto& s : sub.generators()) {
      if (!sub.contains(conjugate(s, g))) return false;
    }
    return true;
  };
  return search_subgroup(group, spec);
}

// ---------------------------------------------------------------------------
// Sylow subgroups

namespace {

Permutation p_part_element(const Permutation& g, int p) {
  std::uint64_t order = element_order(g);
  std::uint64_t pp = 1;
  while (order % (pp * static_cast<std::uint64_t>(p)) == 0) pp *= static_cast<std::uint64_t>(p);
  return g.pow(static_cast<std::int64_t>(order / pp));
}

PermutationGroup adjoin(const PermutationGroup& group, const Permutation& g) {
  auto gens = group.generators();
  gens.push_back(g);
  return PermutationGroup(group.degree(), std::move(gens));
}

}  // namespace

PermutationGroup sylow_subgroup(const PermutationGroup& group, int p, std::uint64_t seed) {
  return sylow_subgroup(group, p, seed, PermutationGroup::trivial(group.degree()));
}

PermutationGroup sylow_subgroup(const PermutationGroup& group, int p, std::uint64_t seed,
                                const PermutationGroup& start) {
  if (start.degree() != group.degree() || !is_power_of(start.order(), p)) {
    throw Error(ErrorCode::kPreconditionViolation, "start is not a p-subgroup");
  }
  for (const auto& g : start.generators()) {
    if (!group.contains(g)) throw Error(ErrorCode::kPreconditionViolation, "start is not a subgroup");
  }
  if (group.order() % p != 0) {
    throw Error(ErrorCode::kDivisibility, std::to_string(p) + " does not divide the group order");
  }
  BigInt target = p_part(group.order(), p);
  if (target == group.order()) return group;

  PermutationGroup sylow = start;
  RandomElements random(group, seed);
  std::uint64_t round = 0;
  while (sylow.order() < target) {
    bool grew = false;
    for (int attempt = 0; attempt < 64 && !grew; ++attempt) {
      Permutation z = p_part_element(random.next(), p);
      if (z.is_identity() || sylow.contains(z)) continue;
      PermutationGroup bigger = adjoin(sylow, z);
      if (is_power_of(bigger.order(), p)) {
        sylow = std::move(bigger);
        grew = true;
      }
    }
    if (grew) continue;
    // A proper p-subgroup has p-elements of its normalizer outside it; those
    // always extend it to a larger p-group.
    PermutationGroup normalizer = normalizer_in_group(group, sylow);
    RandomElements local(normalizer, seed + ++round);
    for (int attempt = 0; attempt < 4096 && !grew; ++attempt) {
      Permutation z = p_part_element(local.next(), p);
      if (z.is_identity() || sylow.contains(z)) continue;
      sylow = adjoin(sylow, z);
      grew = true;
    }
    if (!grew && normalizer.order() <= 1'000'000) {
      for (const auto& g : normalizer.elements()) {
        Permutation z = p_part_element(g, p);
        if (!sylow.contains(z)) {
          sylow = adjoin(sylow, z);
          grew = true;
          break;
        }
      }
    }
    if (!grew) throw Error(ErrorCode::kBudgetExceeded, "Sylow search did not converge");
  }
  return sylow;
}

}  // namespace cayrep
