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

#include "cayrep/cohcfg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace cayrep {

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
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> labels() {
    std::vector<int> out(parent.size());
    for (std::size_t x = 0; x < parent.size(); ++x) out[x] = find(static_cast<int>(x));
    return out;
  }
};

std::uint64_t mix(std::uint64_t x, std::uint64_t seed) {
  x ^= seed;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Relabels arbitrary integer colors to 0..k-1 preserving their order.
std::size_t compress(std::vector<int>& colors) {
  std::vector<int> values(colors);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto& c : colors) {
    c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }
  return values.size();
}

// Two-dimensional Weisfeiler-Leman refinement to the stable coloring. A
// pair's new color is determined by its old color, the old color of its
// transpose and the multiset {(c(a,g), c(g,b)) : g}; the multiset is
// represented by two independent 64-bit additive hashes.
std::vector<int> refine(std::size_t n, std::vector<int> colors) {
  std::size_t count = compress(colors);
  std::vector<int> transposed(n * n);
  using Key = std::tuple<int, int, std::uint64_t, std::uint64_t>;
  std::vector<Key> keys(n * n);
  for (;;) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) transposed[b * n + a] = colors[a * n + b];
    }
    const auto stride = static_cast<std::uint64_t>(count);
    for (std::size_t a = 0; a < n; ++a) {
      const int* row = &colors[a * n];
      for (std::size_t b = 0; b < n; ++b) {
        const int* col = &transposed[b * n];
        std::uint64_t h1 = 0, h2 = 0;
        for (std::size_t g = 0; g < n; ++g) {
          std::uint64_t code = static_cast<std::uint64_t>(row[g]) * stride +
                               static_cast<std::uint64_t>(col[g]);
          h1 += mix(code, 0x243f6a8885a308d3ULL);
          h2 += mix(code, 0x13198a2e03707344ULL);
        }
        keys[a * n + b] = {colors[a * n + b], colors[b * n + a], h1, h2};
      }
    }
    std::vector<Key> distinct(keys);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() == count) return colors;
    count = distinct.size();
    for (std::size_t i = 0; i < n * n; ++i) {
      colors[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[i]) -
                                   distinct.begin());
    }
  }
}

// Color matrix of the configuration induced on a family of disjoint point
// classes: the color of (A, B) is the set of colors met in A x B.
CoherentConfiguration induced_on_classes(const CoherentConfiguration& x,
                                         const std::vector<std::vector<int>>& classes) {
  std::size_t m = classes.size();
  std::map<std::vector<int>, int> ids;
  std::vector<int> raw(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> present;
      for (int a : classes[i]) {
        for (int b : classes[j]) present.push_back(x.color(a, b));
      }
      std::sort(present.begin(), present.end());
      present.erase(std::unique(present.begin(), present.end()), present.end());
      auto [it, inserted] = ids.emplace(std::move(present), static_cast<int>(ids.size()));
      raw[i * m + j] = it->second;
    }
  }
  return CoherentConfiguration(m, raw);
}

EquivalenceRelation join(const EquivalenceRelation& a, const EquivalenceRelation& b) {
  std::size_t n = a.degree();
  UnionFind uf(n);
  for (const auto& c : a.classes()) {
    for (int x : c) uf.unite(c[0], x);
  }
  for (const auto& c : b.classes()) {
    for (int x : c) uf.unite(c[0], x);
  }
  return EquivalenceRelation::from_labels(uf.labels());
}

// {<r u s> : r, s in S}: every closure of one basis relation and every join
// of two of them.
std::set<EquivalenceRelation> pairwise_closures(const CoherentConfiguration& x,
                                                std::vector<EquivalenceRelation>& singles) {
  singles.clear();
  for (std::size_t c = 0; c < x.rank(); ++c) {
    singles.push_back(equivalence_closure(x, {static_cast<int>(c)}));
  }
  std::set<EquivalenceRelation> out(singles.begin(), singles.end());
  for (std::size_t r = 0; r < singles.size(); ++r) {
    for (std::size_t s = r + 1; s < singles.size(); ++s) out.insert(join(singles[r], singles[s]));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoherentConfiguration

CoherentConfiguration::CoherentConfiguration(std::size_t n, const std::vector<int>& raw)
    : n_(n) {
  if (raw.size() != n * n) {
    throw Error(ErrorCode::kMalformedInput, "color matrix must have n*n entries");
  }
  std::unordered_map<int, int> id;
  std::vector<int> fiber_of(n);
  for (std::size_t a = 0; a < n; ++a) {
    int r = raw[a * n + a];
    auto [it, inserted] = id.emplace(r, static_cast<int>(fibers_.size()));
    if (inserted) fibers_.emplace_back();
    fibers_[it->second].push_back(static_cast<int>(a));
    fiber_of[a] = it->second;
  }
  // (source fiber, target fiber, first position, raw color)
  std::vector<std::tuple<int, int, std::size_t, int>> off;
  std::unordered_map<int, char> seen;
  for (std::size_t i = 0; i < n * n; ++i) {
    int r = raw[i];
    if (id.count(r) || seen.count(r)) continue;
    seen.emplace(r, 1);
    off.emplace_back(fiber_of[i / n], fiber_of[i % n], i, r);
  }
  std::sort(off.begin(), off.end());
  for (const auto& entry : off) {
    id.emplace(std::get<3>(entry), static_cast<int>(id.size()));
  }
  colors_.resize(n * n);
  pairs_.assign(id.size(), {});
  for (std::size_t i = 0; i < n * n; ++i) {
    colors_[i] = id[raw[i]];
    pairs_[colors_[i]].emplace_back(static_cast<int>(i / n), static_cast<int>(i % n));
  }
  transpose_.resize(pairs_.size());
  for (std::size_t c = 0; c < pairs_.size(); ++c) {
    auto [a, b] = pairs_[c].front();
    transpose_[c] = color(b, a);
  }
}

std::size_t CoherentConfiguration::valency(int c) const {
  const auto& ps = pairs_[c];
  int source = ps.front().first;
  return static_cast<std::size_t>(std::count_if(
      ps.begin(), ps.end(), [source](const auto& pr) { return pr.first == source; }));
}

nlohmann::json CoherentConfiguration::to_json() const {
  return nlohmann::json{{"n", n_}, {"rank", rank()}, {"color_matrix", colors_}, {"fibers", fibers_}};
}

CoherentConfiguration CoherentConfiguration::from_json(const nlohmann::json& j) {
  try {
    return CoherentConfiguration(j.at("n").get<std::size_t>(),
                                 j.at("color_matrix").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

// ---------------------------------------------------------------------------
// EquivalenceRelation

EquivalenceRelation EquivalenceRelation::from_labels(const std::vector<int>& labels) {
  EquivalenceRelation e;
  std::unordered_map<int, int> id;
  e.class_of_.resize(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = id.emplace(labels[x], static_cast<int>(e.classes_.size()));
    if (inserted) e.classes_.emplace_back();
    e.classes_[it->second].push_back(static_cast<int>(x));
    e.class_of_[x] = it->second;
  }
  return e;
}

EquivalenceRelation EquivalenceRelation::identity(std::size_t n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

EquivalenceRelation EquivalenceRelation::universal(std::size_t n) {
  return from_labels(std::vector<int>(n, 0));
}

std::size_t EquivalenceRelation::pair_count() const {
  std::size_t total = 0;
  for (const auto& c : classes_) total += c.size() * c.size();
  return total;
}

bool EquivalenceRelation::is_subset_of(const EquivalenceRelation& other) const {
  for (const auto& c : classes_) {
    for (int x : c) {
      if (!other.related(c[0], x)) return false;
    }
  }
  return true;
}

std::vector<int> EquivalenceRelation::colors_in(const CoherentConfiguration& x) const {
  std::size_t n = x.degree();
  std::vector<int> inside(x.rank(), -1);  // -1 unseen, 0 outside, 1 inside
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int c = x.color(static_cast<int>(a), static_cast<int>(b));
      int in = related(static_cast<int>(a), static_cast<int>(b)) ? 1 : 0;
      if (inside[c] < 0) {
        inside[c] = in;
      } else if (inside[c] != in) {
        return {};
      }
    }
  }
  std::vector<int> out;
  for (std::size_t c = 0; c < inside.size(); ++c) {
    if (inside[c] == 1) out.push_back(static_cast<int>(c));
  }
  return out;
}

SectionDescriptor SectionDescriptor::make(const EquivalenceRelation& lower,
                                          const EquivalenceRelation& upper, int delta) {
  if (lower.degree() != upper.degree() || !lower.is_subset_of(upper)) {
    throw Error(ErrorCode::kMalformedSection, "lower relation is not contained in the upper one");
  }
  if (delta < 0 || static_cast<std::size_t>(delta) >= upper.class_count()) {
    throw Error(ErrorCode::kMalformedSection, "no such class");
  }
  SectionDescriptor sec;
  sec.lower = lower;
  sec.upper = upper;
  sec.delta = delta;
  std::vector<char> taken(lower.class_count(), 0);
  for (int x : upper.classes()[delta]) {
    int c = lower.class_of(x);
    if (taken[c]) continue;
    taken[c] = 1;
    sec.points.push_back(lower.classes()[c]);
  }
  return sec;
}

// ---------------------------------------------------------------------------
// Construction and refinement

CoherentConfiguration cc_from_graph(std::size_t n, const PairSet& edges) {
  std::vector<char> adj(n * n, 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
    }
    adj[static_cast<std::size_t>(a) * n + b] = 1;
  }
  std::vector<int> raw(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) raw[a * n + b] = (a == b ? 2 : 0) + adj[a * n + b];
  }
  return CoherentConfiguration(n, refine(n, std::move(raw)));
}

CoherentConfiguration wl_extension(const CoherentConfiguration& x,
                                   const std::vector<PairSet>& relations) {
  std::size_t n = x.degree();
  std::vector<int> raw(x.colors());
  for (const auto& t : relations) {
    std::vector<char> member(n * n, 0);
    for (auto [a, b] : t) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
        throw Error(ErrorCode::kMalformedInput, "relation pair out of range");
      }
      member[static_cast<std::size_t>(a) * n + b] = 1;
    }
    for (std::size_t i = 0; i < n * n; ++i) raw[i] = raw[i] * 2 + member[i];
    compress(raw);
  }
  return CoherentConfiguration(n, refine(n, std::move(raw)));
}

bool is_refinement(const CoherentConfiguration& fine, const CoherentConfiguration& coarse) {
  if (fine.degree() != coarse.degree()) return false;
  std::vector<int> image(fine.rank(), -1);
  const auto& f = fine.colors();
  const auto& c = coarse.colors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (image[f[i]] < 0) {
      image[f[i]] = c[i];
    } else if (image[f[i]] != c[i]) {
      return false;
    }
  }
  return true;
}

bool verify_coherence(const CoherentConfiguration& x) {
  std::size_t n = x.degree();
  const auto r = static_cast<std::int64_t>(x.rank());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int c = x.color(static_cast<int>(a), static_cast<int>(b));
      if ((a == b) != x.is_diagonal_color(c)) return false;
      if (x.color(static_cast<int>(b), static_cast<int>(a)) != x.transpose(c)) return false;
    }
  }
  std::vector<std::int64_t> reference, current;
  auto profile = [&](int a, int b, std::vector<std::int64_t>& out) {
    out.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
      out[g] = x.color(a, static_cast<int>(g)) * r + x.color(static_cast<int>(g), b);
    }
    std::sort(out.begin(), out.end());
  };
  for (std::size_t c = 0; c < x.rank(); ++c) {
    const auto& ps = x.pairs(static_cast<int>(c));
    profile(ps[0].first, ps[0].second, reference);
    for (std::size_t i = 1; i < ps.size(); ++i) {
      profile(ps[i].first, ps[i].second, current);
      if (current != reference) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Equivalences

EquivalenceRelation equivalence_closure(std::size_t n, const PairSet& s) {
  UnionFind uf(n);
  for (auto [a, b] : s) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw Error(ErrorCode::kMalformedInput, "pair out of range");
    }
    uf.unite(a, b);
  }
  return EquivalenceRelation::from_labels(uf.labels());
}

EquivalenceRelation equivalence_closure(const CoherentConfiguration& x,
                                        const std::vector<int>& colors) {
  UnionFind uf(x.degree());
  for (int c : colors) {
    for (auto [a, b] : x.pairs(c)) uf.unite(a, b);
  }
  return EquivalenceRelation::from_labels(uf.labels());
}

EquivalenceRelation radical(std::size_t n, const PairSet& s) {
  std::vector<char> in(n * n, 0);
  for (auto [a, b] : s) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw Error(ErrorCode::kMalformedInput, "pair out of range");
    }
    in[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // (a, b) may join the radical iff every s-predecessor of a precedes b and
  // every s-successor of b succeeds a.
  std::vector<char> rad(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) {
        if (in[g * n + a] && !in[g * n + b]) ok = false;
        if (in[b * n + g] && !in[a * n + g]) ok = false;
      }
      rad[a * n + b] = a == b || ok;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!rad[a * n + b]) continue;
      if (!rad[b * n + a]) {
        throw Error(ErrorCode::kPreconditionViolation, "radical is not an equivalence relation");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (rad[b * n + c] && !rad[a * n + c]) {
          throw Error(ErrorCode::kPreconditionViolation, "radical is not an equivalence relation");
        }
      }
    }
  }
  std::vector<int> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rad[a * n + b]) {
        labels[a] = static_cast<int>(b);
        break;
      }
    }
  }
  return EquivalenceRelation::from_labels(labels);
}

EquivalenceRelation radical(const CoherentConfiguration& x, const std::vector<int>& colors) {
  std::size_t n = x.degree();
  std::vector<char> in(n * n, 0);
  for (int c : colors) {
    for (auto [a, b] : x.pairs(c)) in[static_cast<std::size_t>(a) * n + b] = 1;
  }
  auto all = enumerate_equivalences(x);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::make_pair(b.pair_count(), a.labels()) < std::make_pair(a.pair_count(), b.labels());
  });
  for (const auto& e : all) {
    // s e = s and e s = s; both contain s because e is reflexive.
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (!in[a * n + b]) continue;
        for (int g : e.classes()[e.class_of(static_cast<int>(b))]) {
          if (!in[a * n + g]) {
            ok = false;
            break;
          }
        }
        for (int g : e.classes()[e.class_of(static_cast<int>(a))]) {
          if (!in[g * n + b]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) return e;
  }
  return EquivalenceRelation::identity(n);
}

bool is_commutative(const CoherentConfiguration& x) {
  std::size_t n = x.degree();
  const auto r = static_cast<std::int64_t>(x.rank());
  std::unordered_map<std::int64_t, int> counts;
  for (std::size_t t = 0; t < x.rank(); ++t) {
    auto [a, b] = x.pairs(static_cast<int>(t)).front();
    counts.clear();
    for (std::size_t g = 0; g < n; ++g) {
      ++counts[x.color(a, static_cast<int>(g)) * r + x.color(static_cast<int>(g), b)];
    }
    for (const auto& [code, value] : counts) {
      std::int64_t swapped = (code % r) * r + code / r;
      auto it = counts.find(swapped);
      if (it == counts.end() || it->second != value) return false;
    }
  }
  return true;
}

bool is_feasible(const CoherentConfiguration& x) {
  if (!x.is_homogeneous() || !is_commutative(x)) return false;
  std::vector<EquivalenceRelation> singles;
  auto closures = pairwise_closures(x, singles);
  for (const auto& e : closures) {
    for (const auto& t : singles) {
      if (!closures.count(join(e, t))) return false;
    }
  }
  return true;
}

std::vector<EquivalenceRelation> enumerate_equivalences(const CoherentConfiguration& x) {
  if (!is_feasible(x)) {
    throw Error(ErrorCode::kFeasibilityViolation, "configuration is not feasible");
  }
  std::vector<EquivalenceRelation> singles;
  auto closures = pairwise_closures(x, singles);
  std::vector<EquivalenceRelation> out(closures.begin(), closures.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.pair_count(), a.labels()) < std::make_pair(b.pair_count(), b.labels());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Quotients, restrictions and sections

CoherentConfiguration quotient(const CoherentConfiguration& x, const EquivalenceRelation& e) {
  if (e.degree() != x.degree()) throw Error(ErrorCode::kMalformedSection, "degree mismatch");
  return induced_on_classes(x, e.classes());
}

CoherentConfiguration restriction(const CoherentConfiguration& x, const std::vector<int>& delta) {
  std::vector<int> pts(delta);
  std::sort(pts.begin(), pts.end());
  if (pts.empty() || std::adjacent_find(pts.begin(), pts.end()) != pts.end() || pts.front() < 0 ||
      static_cast<std::size_t>(pts.back()) >= x.degree()) {
    throw Error(ErrorCode::kMalformedSection, "restriction needs distinct points in range");
  }
  std::size_t m = pts.size();
  std::vector<int> raw(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) raw[i * m + j] = x.color(pts[i], pts[j]);
  }
  return CoherentConfiguration(m, raw);
}

CoherentConfiguration section(const CoherentConfiguration& x, const SectionDescriptor& sec) {
  if (sec.upper.degree() != x.degree() || !sec.lower.is_subset_of(sec.upper)) {
    throw Error(ErrorCode::kMalformedSection, "invalid section descriptor");
  }
  return induced_on_classes(x, sec.points);
}

bool is_primitive(const CoherentConfiguration& x) {
  if (!x.is_homogeneous()) return false;
  for (std::size_t c = 1; c < x.rank(); ++c) {
    if (!equivalence_closure(x, {static_cast<int>(c)}).is_universal()) return false;
  }
  return true;
}

std::vector<SectionDescriptor> enumerate_prim_sections(const CoherentConfiguration& x) {
  auto all = enumerate_equivalences(x);
  std::vector<SectionDescriptor> out;
  for (const auto& upper : all) {
    for (const auto& lower : all) {
      if (lower == upper || !lower.is_subset_of(upper)) continue;
      bool cover = true;
      for (const auto& mid : all) {
        if (mid == lower || mid == upper) continue;
        if (lower.is_subset_of(mid) && mid.is_subset_of(upper)) {
          cover = false;
          break;
        }
      }
      if (cover) out.push_back(SectionDescriptor::make(lower, upper, upper.class_of(0)));
    }
  }
  return out;
}

std::vector<EquivalenceRelation> maximal_path(const CoherentConfiguration& x) {
  auto all = enumerate_equivalences(x);  // sorted by pair count
  std::vector<EquivalenceRelation> path{all.front()};
  while (!path.back().is_universal()) {
    for (const auto& e : all) {
      if (e != path.back() && path.back().is_subset_of(e)) {
        path.push_back(e);
        break;
      }
    }
  }
  return path;
}

// ---------------------------------------------------------------------------
// Automorphisms

bool is_automorphism(const Permutation& f, const CoherentConfiguration& x) {
  std::size_t n = x.degree();
  if (f.size() != n) throw Error(ErrorCode::kMalformedInput, "permutation degree mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int ai = static_cast<int>(a), bi = static_cast<int>(b);
      if (x.color(ai, bi) != x.color(f[ai], f[bi])) return false;
    }
  }
  return true;
}

PermutationGroup aut_brute(const CoherentConfiguration& x) {
  std::size_t n = x.degree();
  if (n > 9) throw Error(ErrorCode::kPreconditionViolation, "aut_brute is limited to degree 9");
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Permutation> gens;
  PermutationGroup group = PermutationGroup::trivial(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Permutation f(image);
      if (!group.contains(f)) {
        gens.push_back(f);
        group = PermutationGroup(n, gens);
      }
      return;
    }
    int a = static_cast<int>(i);
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      int iv = static_cast<int>(v);
      bool ok = x.color(a, a) == x.color(iv, iv);
      for (int j = 0; j < a && ok; ++j) {
        ok = x.color(j, a) == x.color(image[j], iv) && x.color(a, j) == x.color(iv, image[j]);
      }
      if (!ok) continue;
      used[v] = 1;
      image[i] = iv;
      rec(i + 1);
      used[v] = 0;
      image[i] = -1;
    }
  };
  rec(0);
  return group;
}

}  // namespace cayrep
