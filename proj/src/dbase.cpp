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

#include "cayrep/dbase.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace cayrep {

namespace {

// Elements of a regular group indexed by the image of point 0.
class RegularTable {
 public:
  explicit RegularTable(const PermutationGroup& g) : by_image_(g.degree()) {
    g.for_each_element([&](const Permutation& e) { by_image_[e[0]] = e; });
  }
  bool contains(const Permutation& y) const { return by_image_[y[0]] == y; }
  const std::vector<Permutation>& elements() const { return by_image_; }

 private:
  std::vector<Permutation> by_image_;
};

bool all_cycles_of_length(const Permutation& g, std::size_t len) {
  for (const auto& c : g.all_cycles()) {
    if (c.size() != len) return false;
  }
  return true;
}

std::size_t orbit_size_of_zero(std::size_t n, std::initializer_list<const Permutation*> gens) {
  std::vector<char> seen(n, 0);
  std::vector<int> orbit{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation* g : gens) {
      int y = (*g)[orbit[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit.size();
}

// Backtracking bijection a -> phi[a] with labels(a, b) == ref(phi[a], phi[b]).
bool match_labels(const std::vector<int>& labels, const std::vector<int>& ref, std::size_t d,
                  std::vector<int>& phi) {
  phi.assign(d, -1);
  std::vector<char> used(d, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t a) {
    if (a == d) return true;
    for (std::size_t v = 0; v < d; ++v) {
      if (used[v]) continue;
      bool ok = labels[a * d + a] == ref[v * d + v];
      for (std::size_t b = 0; b < a && ok; ++b) {
        std::size_t w = static_cast<std::size_t>(phi[b]);
        ok = labels[a * d + b] == ref[v * d + w] && labels[b * d + a] == ref[w * d + v];
      }
      if (!ok) continue;
      used[v] = 1;
      phi[a] = static_cast<int>(v);
      if (rec(a + 1)) return true;
      used[v] = 0;
    }
    phi[a] = -1;
    return false;
  };
  return rec(0);
}

// Blocks visited by the cycle of `on_blocks` through block `start`.
std::vector<std::vector<int>> blocks_along(const BlockSystem& blocks, const Permutation& on_blocks,
                                           int start) {
  std::vector<std::vector<int>> out;
  int b = start;
  do {
    out.push_back(blocks.blocks[b]);
    b = on_blocks[b];
  } while (b != start);
  return out;
}

CoherentConfiguration resolve_unchecked(const CoherentConfiguration& x, const EquivalencePair& pair,
                                        int p) {
  return wl_extension(x, {resolve_relation(x, pair, p)});
}

}  // namespace

std::uint64_t int_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

bool is_isomorphic_to_d(const PermutationGroup& g, int p, int k) {
  if (g.order() != BigInt(int_pow(static_cast<std::uint64_t>(p), k + 1))) return false;
  if (!g.is_abelian()) return false;
  std::uint64_t top = int_pow(static_cast<std::uint64_t>(p), k);
  std::size_t small = 0;
  bool has_top = false;
  g.for_each_element([&](const Permutation& e) {
    std::uint64_t o = element_order(e);
    if (o == 1 || o == static_cast<std::uint64_t>(p)) ++small;
    if (o == top) has_top = true;
  });
  return small == static_cast<std::size_t>(p * p) && has_top;
}

std::pair<Permutation, Permutation> d_generators(const PermutationGroup& g, int p, int k) {
  if (!is_isomorphic_to_d(g, p, k)) {
    throw Error(ErrorCode::kPreconditionViolation, "group is not isomorphic to C_p x C_{p^k}");
  }
  auto elements = g.elements();
  std::sort(elements.begin(), elements.end());
  std::uint64_t top = int_pow(static_cast<std::uint64_t>(p), k);
  Permutation c = *std::find_if(elements.begin(), elements.end(),
                                [&](const auto& e) { return element_order(e) == top; });
  std::set<Permutation> powers;
  for (std::uint64_t i = 0; i < top; ++i) powers.insert(c.pow(static_cast<std::int64_t>(i)));
  Permutation b = *std::find_if(elements.begin(), elements.end(), [&](const auto& e) {
    return element_order(e) == static_cast<std::uint64_t>(p) && !powers.count(e);
  });
  return {c, b};
}

BigInt dbase_size_bound(int p, std::size_t n) {
  BigInt num = (p - 1) * (p - 1);
  for (int i = 2; i <= p; ++i) num *= i;
  for (int i = 0; i < p + 2; ++i) num *= n;
  BigInt den = 1;
  for (int i = 0; i < p; ++i) den *= p;
  return num / den;
}

// ---------------------------------------------------------------------------
// Automorphism groups of quasinormal schemes

WreathAut qnrmaut_with_sylow(const CoherentConfiguration& x, int p) {
  if (!is_quasinormal(x, p)) throw Error(ErrorCode::kNotQuasinormal, "scheme is not quasinormal");
  std::size_t n = x.degree();
  auto path = maximal_path(x);
  std::size_t m = path.size() - 1;
  if (m == 0) return {PermutationGroup::trivial(n), PermutationGroup::trivial(n)};

  std::map<std::vector<int>, int> label_ids;
  auto label_matrix = [&](const std::vector<std::vector<int>>& children) {
    std::size_t d = children.size();
    std::vector<int> out(d * d);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        std::vector<int> present;
        for (int u : children[a]) {
          for (int v : children[b]) present.push_back(x.color(u, v));
        }
        std::sort(present.begin(), present.end());
        present.erase(std::unique(present.begin(), present.end()), present.end());
        auto it = label_ids.emplace(std::move(present), static_cast<int>(label_ids.size())).first;
        out[a * d + b] = it->second;
      }
    }
    return out;
  };

  // address[x][i - 1]: position of the E_{i-1}-class of x inside its E_i-class,
  // read in the coordinates of the reference section through point 0.
  std::vector<std::vector<int>> address(n, std::vector<int>(m, 0));
  std::vector<PermutationGroup> local(m + 1);
  for (std::size_t i = m; i >= 1; --i) {
    const auto& upper = path[i];
    const auto& lower = path[i - 1];
    auto ref = SectionDescriptor::make(lower, upper, upper.class_of(0));
    auto ref_labels = label_matrix(ref.points);
    local[i] = aut_brute(section(x, ref));
    std::size_t d = ref.points.size();
    for (std::size_t cls = 0; cls < upper.class_count(); ++cls) {
      auto sec = SectionDescriptor::make(lower, upper, static_cast<int>(cls));
      std::vector<int> phi(d);
      if (static_cast<int>(cls) == upper.class_of(0)) {
        std::iota(phi.begin(), phi.end(), 0);
      } else if (sec.points.size() != d || !match_labels(label_matrix(sec.points), ref_labels, d, phi)) {
        throw Error(ErrorCode::kPreconditionViolation, "sections of one level are not isomorphic");
      }
      for (std::size_t a = 0; a < d; ++a) {
        for (int pt : sec.points[a]) address[pt][i - 1] = phi[a];
      }
    }
  }
  std::map<std::vector<int>, int> point_of;
  for (std::size_t pt = 0; pt < n; ++pt) point_of.emplace(address[pt], static_cast<int>(pt));

  auto assemble = [&](const std::vector<PermutationGroup>& groups) {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i <= m; ++i) {
      const auto& node = path[i].classes()[path[i].class_of(0)];
      for (const auto& h : groups[i].generators()) {
        std::vector<int> image(n);
        std::iota(image.begin(), image.end(), 0);
        for (int pt : node) {
          auto a = address[pt];
          a[i - 1] = h[a[i - 1]];
          image[pt] = point_of.at(a);
        }
        gens.emplace_back(std::move(image));
      }
    }
    return PermutationGroup(n, std::move(gens));
  };
  std::vector<PermutationGroup> local_sylow(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    local_sylow[i] = local[i].order() % p == 0 ? sylow_subgroup(local[i], p)
                                               : PermutationGroup::trivial(local[i].degree());
  }
  return {assemble(local), assemble(local_sylow)};
}

PermutationGroup qnrmaut(const CoherentConfiguration& x, int p) {
  return qnrmaut_with_sylow(x, p).group;
}

PermutationGroup aut_in_solvable(const CoherentConfiguration& x, const PermutationGroup& k) {
  std::size_t n = x.degree();
  if (k.degree() != n) throw Error(ErrorCode::kMalformedInput, "degree mismatch");
  SearchSpec spec;
  spec.base.resize(n);
  std::iota(spec.base.begin(), spec.base.end(), 0);
  spec.partial = [&x, base = spec.base](std::size_t level, std::span<const int> image) {
    int b = base[level];
    int v = image[b];
    if (x.color(b, b) != x.color(v, v)) return false;
    for (std::size_t j = 0; j < level; ++j) {
      int a = base[j];
      int w = image[a];
      if (x.color(a, b) != x.color(w, v) || x.color(b, a) != x.color(v, w)) return false;
    }
    return true;
  };
  spec.accept = [&x](const Permutation& f) { return is_automorphism(f, x); };
  return search_subgroup(k, spec);
}

// ---------------------------------------------------------------------------
// Resolving singular schemes

namespace {

// Bijection u = phi[t] between the blocks of two sections, read off a class of
// block pairs sharing one set of colors; empty when no such class is a bijection.
std::vector<int> section_bijection(const CoherentConfiguration& x, const SectionDescriptor& a,
                                   const SectionDescriptor& b) {
  std::size_t d = a.points.size();
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> by_colors;
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t u = 0; u < d; ++u) {
      std::set<int> cs;
      for (int v : a.points[t]) {
        for (int w : b.points[u]) cs.insert(x.color(v, w));
      }
      by_colors[std::vector<int>(cs.begin(), cs.end())].emplace_back(t, u);
    }
  }
  for (const auto& [cs, tus] : by_colors) {
    if (tus.size() != d) continue;
    std::vector<int> phi(d, -1);
    std::vector<char> hit(d, 0);
    bool ok = true;
    for (auto [t, u] : tus) {
      if (phi[t] != -1 || hit[u]) {
        ok = false;
        break;
      }
      phi[t] = u;
      hit[u] = 1;
    }
    if (ok) return phi;
  }
  return {};
}

}  // namespace

PairSet resolve_relation(const CoherentConfiguration& x, const EquivalencePair& pair, int p) {
  const auto& upper = pair.upper;
  const auto& lower = pair.lower;
  if (upper.degree() != x.degree() || lower.degree() != x.degree()) {
    throw Error(ErrorCode::kMalformedSection, "degree mismatch");
  }
  std::size_t classes = upper.class_count();
  std::vector<SectionDescriptor> secs;
  for (std::size_t cls = 0; cls < classes; ++cls) {
    secs.push_back(SectionDescriptor::make(lower, upper, static_cast<int>(cls)));
    if (secs.back().points.size() % static_cast<std::size_t>(p) != 0) {
      throw Error(ErrorCode::kPreconditionViolation, "section degree is not divisible by p");
    }
  }
  // c[cls][t]: image of block t. Classes linked by a bijection of blocks get
  // the transported permutation, the root of each component the standard one.
  std::vector<std::vector<int>> c(classes);
  for (std::size_t root = 0; root < classes; ++root) {
    if (!c[root].empty()) continue;
    std::size_t d = secs[root].points.size();
    c[root].resize(d);
    for (std::size_t t = 0; t < d; ++t) {
      c[root][t] = static_cast<int>((t % p == static_cast<std::size_t>(p - 1)) ? t + 1 - p : t + 1);
    }
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < classes; ++j) {
        if (!c[j].empty()) continue;
        auto phi = section_bijection(x, secs[i], secs[j]);
        if (phi.empty()) continue;
        c[j].resize(d);
        for (std::size_t t = 0; t < d; ++t) c[j][phi[t]] = phi[c[i][t]];
        queue.push_back(j);
      }
    }
  }
  PairSet r;
  for (std::size_t cls = 0; cls < classes; ++cls) {
    const auto& pts = secs[cls].points;
    for (std::size_t t = 0; t < pts.size(); ++t) {
      for (int a : pts[t]) {
        for (int b : pts[c[cls][t]]) r.emplace_back(a, b);
      }
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

CoherentConfiguration resolve(const CoherentConfiguration& x, const EquivalencePair& pair, int p) {
  auto data = singular_data(x);
  bool listed = data && std::any_of(data->minimal.begin(), data->minimal.end(), [&](const auto& m) {
                  return m.lower == pair.lower && m.upper == pair.upper;
                });
  if (!listed) throw Error(ErrorCode::kPreconditionViolation, "pair is not a minimal singular pair");
  return resolve_unchecked(x, pair, p);
}

// ---------------------------------------------------------------------------
// Coset representatives up to conjugacy

std::vector<Permutation> conj_coset_reps(const PermutationGroup& k, const Permutation& c,
                                         const std::vector<std::vector<int>>& blocks) {
  std::size_t n = k.degree();
  if (c.size() != n) throw Error(ErrorCode::kMalformedInput, "degree mismatch");
  std::vector<int> block_of(n, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n || block_of[x] >= 0) {
        throw Error(ErrorCode::kPreconditionViolation, "blocks do not partition the points");
      }
      block_of[x] = static_cast<int>(i);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) {
    throw Error(ErrorCode::kPreconditionViolation, "blocks do not partition the points");
  }
  int m = static_cast<int>(blocks.size());
  for (std::size_t x = 0; x < n; ++x) {
    int xi = static_cast<int>(x);
    if (block_of[c[xi]] != (block_of[x] + 1) % m) {
      throw Error(ErrorCode::kPreconditionViolation, "c does not shift the blocks cyclically");
    }
    for (const auto& g : k.generators()) {
      if (block_of[g[xi]] != block_of[x]) {
        throw Error(ErrorCode::kPreconditionViolation, "blocks are not invariant");
      }
    }
  }
  for (const auto& g : k.generators()) {
    if (!k.contains(conjugate(g, c))) {
      throw Error(ErrorCode::kPreconditionViolation, "c does not normalize the group");
    }
  }

  std::vector<Permutation> reps;
  if (k.is_abelian()) {
    // In an abelian K the K-class of kc is (k I) c with I generated by the
    // elements g^-1 c g c^-1, so a transversal of I in K suffices.
    Permutation c_inv = c.inverse();
    std::vector<Permutation> commutators;
    for (const auto& g : k.generators()) commutators.push_back(conjugate(c, g) * c_inv);
    PermutationGroup i_group(n, commutators);
    std::vector<Permutation> transversal{Permutation(n)};
    for (std::size_t idx = 0; idx < transversal.size(); ++idx) {
      for (const auto& g : k.generators()) {
        Permutation t = transversal[idx] * g;
        bool known = std::any_of(transversal.begin(), transversal.end(), [&](const auto& r) {
          return i_group.contains(t * r.inverse());
        });
        if (!known) transversal.push_back(t);
      }
    }
    for (const auto& r : transversal) reps.push_back(r * c);
    return reps;
  }
  if (k.order() > 1'000'000) {
    throw Error(ErrorCode::kBudgetExceeded, "non-abelian group too large for orbit enumeration");
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& e : k.elements()) {
    Permutation x = e * c;
    if (seen.count(x)) continue;
    reps.push_back(x);
    std::deque<Permutation> queue{x};
    seen.insert(x);
    while (!queue.empty()) {
      auto y = queue.front();
      queue.pop_front();
      for (const auto& g : k.generators()) {
        auto z = conjugate(y, g);
        if (seen.insert(z).second) queue.push_back(z);
      }
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Cycle bases

std::vector<PermutationGroup> cbase_pgroup(const PermutationGroup& group, int p) {
  std::size_t n = group.degree();
  if (n == 1) return {PermutationGroup::trivial(1)};
  if (!group.is_transitive()) return {};
  if (!is_power_of(BigInt(n), p) || !is_power_of(group.order(), p)) {
    throw Error(ErrorCode::kPreconditionViolation, "expected a p-group of p-power degree");
  }
  std::vector<Permutation> candidates;
  if (n == static_cast<std::size_t>(p)) {
    group.for_each_element([&](const Permutation& e) {
      if (candidates.empty() && element_order(e) == n) candidates.push_back(e);
    });
  } else {
    auto blocks = minimal_blocks_of_size_p(group, p);
    auto act = block_action(group, blocks);
    for (const auto& quotient_cycle : cbase_pgroup(act.image(), p)) {
      const Permutation& h_bar = quotient_cycle.generators().front();
      Permutation h = act.lift(h_bar);
      auto ordered = blocks_along(blocks, h_bar, blocks.block_of[0]);
      for (auto& x : conj_coset_reps(act.kernel(), h, ordered)) {
        if (element_order(x) == n) candidates.push_back(std::move(x));
      }
    }
  }
  std::vector<Permutation> kept;
  for (const auto& x : candidates) {
    bool duplicate = false;
    for (const auto& r : kept) {
      for (std::size_t j = 1; j < n && !duplicate; ++j) {
        if (j % static_cast<std::size_t>(p) == 0) continue;
        duplicate = conjugating_element(group, x, r.pow(static_cast<std::int64_t>(j))).has_value();
      }
      if (duplicate) break;
    }
    if (!duplicate) kept.push_back(x);
  }
  std::vector<PermutationGroup> out;
  for (const auto& x : kept) out.emplace_back(n, std::vector<Permutation>{x});
  return out;
}

// ---------------------------------------------------------------------------
// D-bases of p-groups

std::optional<Permutation> regular_conjugator(const PermutationGroup& g1,
                                              const PermutationGroup& g2, int p, int k,
                                              const Membership& in_group) {
  std::size_t n = g1.degree();
  if (g2.degree() != n || g1.order() != g2.order()) return std::nullopt;
  auto [c, b] = d_generators(g1, p, k);
  if (!is_isomorphic_to_d(g2, p, k)) return std::nullopt;
  auto pk = static_cast<std::int64_t>(int_pow(static_cast<std::uint64_t>(p), k));
  // word[v] = (i, j) with 0^(c^i b^j) = v
  std::vector<std::pair<int, int>> word(n);
  {
    Permutation ci(n);
    for (std::int64_t i = 0; i < pk; ++i) {
      Permutation e = ci;
      for (int j = 0; j < p; ++j) {
        word[e[0]] = {static_cast<int>(i), j};
        e = e * b;
      }
      ci = ci * c;
    }
  }
  RegularTable table(g2);
  bool contains_g2 =
      std::all_of(g2.generators().begin(), g2.generators().end(), [&](const auto& g) { return in_group(g); });
  std::vector<Permutation> tops, smalls;
  for (const auto& e : table.elements()) {
    auto o = element_order(e);
    if (o == static_cast<std::uint64_t>(pk)) tops.push_back(e);
    if (o == static_cast<std::uint64_t>(p)) smalls.push_back(e);
  }
  std::vector<int> image(n);
  for (const auto& t : tops) {
    std::vector<Permutation> t_pow{Permutation(n)};
    for (std::int64_t i = 1; i < pk; ++i) t_pow.push_back(t_pow.back() * t);
    std::set<Permutation> t_group(t_pow.begin(), t_pow.end());
    for (const auto& s : smalls) {
      if (t_group.count(s)) continue;
      std::vector<Permutation> s_pow{Permutation(n)};
      for (int j = 1; j < p; ++j) s_pow.push_back(s_pow.back() * s);
      std::size_t starts = contains_g2 ? 1 : n;
      for (std::size_t u = 0; u < starts; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          auto [i, j] = word[v];
          image[v] = (t_pow[i] * s_pow[j])[static_cast<int>(u)];
        }
        Permutation h(image);
        if (in_group(h)) return h;
      }
    }
  }
  return std::nullopt;
}

DBase pdbase(const PermutationGroup& group, int p, int k) {
  std::size_t n = group.degree();
  if (k < 1 || n != int_pow(static_cast<std::uint64_t>(p), k + 1)) {
    throw Error(ErrorCode::kMalformedInput, "degree must be p^(k+1) with k >= 1");
  }
  DBase out;
  out.ambient = group;
  if (!group.is_transitive()) return out;
  if (!is_power_of(group.order(), p)) throw Error(ErrorCode::kPreconditionViolation, "not a p-group");
  Membership in_group = [&group](const Permutation& h) { return group.contains(h); };
  auto add = [&](PermutationGroup g) {
    for (const auto& f : out.subgroups) {
      if (regular_conjugator(g, f, p, k, in_group)) return;
    }
    out.subgroups.push_back(std::move(g));
  };

  if (k == 1) {
    std::vector<Permutation> order_p;
    group.for_each_element([&](const Permutation& e) {
      if (element_order(e) == static_cast<std::uint64_t>(p)) order_p.push_back(e);
    });
    std::sort(order_p.begin(), order_p.end());
    std::set<std::vector<Permutation>> seen;
    for (const auto& x : order_p) {
      for (const auto& y : order_p) {
        if (!commute(x, y) || orbit_size_of_zero(n, {&x, &y}) != n) continue;
        PermutationGroup g(n, {x, y});
        if (g.order() != BigInt(n)) continue;
        auto elements = g.elements();
        std::sort(elements.begin(), elements.end());
        if (seen.insert(elements).second) add(std::move(g));
      }
    }
    return out;
  }

  auto blocks = minimal_blocks_of_size_p(group, p);
  auto act = block_action(group, blocks);
  const auto& quotient_group = act.image();
  std::uint64_t m = n / static_cast<std::uint64_t>(p);  // n/p
  std::uint64_t m2 = m / static_cast<std::uint64_t>(p); // n/p^2

  // One generator of every cyclic subgroup of order n/p^2 in a D_{k-1}-base
  // member, and the generator of every member of a cycle base.
  std::vector<Permutation> s_bar;
  for (const auto& member : pdbase(quotient_group, p, k - 1).subgroups) {
    std::vector<std::set<Permutation>> cyclic;
    member.for_each_element([&](const Permutation& e) {
      if (element_order(e) != m2) return;
      for (const auto& cs : cyclic) {
        if (cs.count(e)) return;
      }
      std::set<Permutation> powers;
      for (std::uint64_t i = 0; i < m2; ++i) powers.insert(e.pow(static_cast<std::int64_t>(i)));
      cyclic.push_back(std::move(powers));
      s_bar.push_back(e);
    });
  }
  for (const auto& member : cbase_pgroup(quotient_group, p)) s_bar.push_back(member.generators().front());

  std::vector<Permutation> t_set;
  for (const auto& h_bar : s_bar) {
    Permutation h = act.lift(h_bar);
    std::vector<std::vector<int>> ordered;
    if (element_order(h_bar) == m) {
      ordered = blocks_along(blocks, h_bar, blocks.block_of[0]);
    } else {
      auto cycles = h_bar.all_cycles();
      if (cycles.size() != static_cast<std::size_t>(p)) continue;
      for (std::size_t t = 0; t < m2; ++t) {
        std::vector<int> lambda;
        for (const auto& cyc : cycles) {
          const auto& blk = blocks.blocks[cyc[t]];
          lambda.insert(lambda.end(), blk.begin(), blk.end());
        }
        ordered.push_back(std::move(lambda));
      }
    }
    for (auto& x : conj_coset_reps(act.kernel(), h, ordered)) {
      if (element_order(x) == m && all_cycles_of_length(x, m)) t_set.push_back(std::move(x));
    }
  }

  for (const auto& x : t_set) {
    auto centralizer = centralizer_in_group(group, x);
    std::vector<Permutation> powers(n);  // powers of x indexed by image of 0, if any
    std::vector<char> has_power(n, 0);
    for (std::uint64_t i = 0; i < m; ++i) {
      auto e = x.pow(static_cast<std::int64_t>(i));
      powers[e[0]] = e;
      has_power[e[0]] = 1;
    }
    std::vector<RegularTable> local;
    centralizer.for_each_element([&](const Permutation& y) {
      if (element_order(y) != static_cast<std::uint64_t>(p)) return;
      if (has_power[y[0]] && powers[y[0]] == y) return;
      for (const auto& t : local) {
        if (t.contains(y)) return;
      }
      if (orbit_size_of_zero(n, {&x, &y}) != n) return;
      PermutationGroup g(n, {x, y});
      local.emplace_back(g);
      add(std::move(g));
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy in the ambient group

namespace {

// Some h with h^-1 g1 h in g2 for the given generators, searched in the
// cosets C_sym(c) h0 of conjugators taking c to an element of g2.
bool conjugate_in(const PermutationGroup& g1, const PermutationGroup& g2, int p, int k,
                  const Membership& in_group) {
  std::size_t n = g1.degree();
  auto [c, b] = d_generators(g1, p, k);
  RegularTable table(g2);
  std::uint64_t m = n / static_cast<std::uint64_t>(p);
  bool found = false;
  for (const auto& target : table.elements()) {
    if (element_order(target) != m || !all_cycles_of_length(target, m)) continue;
    for_each_conjugator_in_sym(c, target, [&](const Permutation& h) {
      // h^-1 b h maps h[z] to h[b[z]]; it must be the element of g2 sending
      // 0 to its image.
      int z0 = 0;
      while (h[z0] != 0) ++z0;
      const Permutation& e = table.elements()[h[b[z0]]];
      for (std::size_t z = 0; z < n; ++z) {
        int zi = static_cast<int>(z);
        if (e[h[zi]] != h[b[zi]]) return true;
      }
      if (!in_group(h)) return true;
      found = true;
      return false;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

std::vector<PermutationGroup> filter_nonconjugate(const std::vector<PermutationGroup>& members,
                                                  const Membership& in_group, int p, int k) {
  std::vector<PermutationGroup> kept;
  for (const auto& g : members) {
    if (!g.is_regular()) throw Error(ErrorCode::kPreconditionViolation, "member is not regular");
    bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const PermutationGroup& r) {
      return conjugate_in(g, r, p, k, in_group);
    });
    if (!duplicate) kept.push_back(g);
  }
  return kept;
}

std::vector<PermutationGroup> filter_nonconjugate(const std::vector<PermutationGroup>& members,
                                                  const PermutationGroup& k0, int p, int k) {
  return filter_nonconjugate(
      members, [&k0](const Permutation& h) { return k0.contains(h); }, p, k);
}

// ---------------------------------------------------------------------------
// Main pipeline

PipelineReport main_dbase_report(const CoherentConfiguration& x0, int p, int k,
                                 std::uint64_t seed) {
  std::size_t n = x0.degree();
  if ((p != 2 && p != 3) || k < 1 || n != int_pow(static_cast<std::uint64_t>(p), k + 1)) {
    throw Error(ErrorCode::kMalformedInput, "degree must be p^(k+1) with p in {2,3} and k >= 1");
  }
  PipelineReport report;
  CoherentConfiguration x = x0;
  auto stop = [&](const char* step) {
    report.exit_step = step;
    report.final_rank = x.rank();
    return report;
  };
  if (!is_feasible(x)) return stop("2");
  while (auto data = singular_data(x)) {
    auto pair = choose_minimal_pair(*data);
    ResolveStep step;
    step.lower_class_size = pair.lower.classes()[0].size();
    step.upper_class_size = pair.upper.classes()[0].size();
    step.rank_before = x.rank();
    auto lattice = enumerate_equivalences(x);
    step.singular_sections_before = count_singular_sections(x, lattice);
    x = resolve_unchecked(x, pair, p);
    step.rank_after = x.rank();
    step.carried_sections_after = count_singular_sections(x, lattice);
    step.feasible_after = is_feasible(x);
    step.singular_sections_after = count_singular_sections(x);
    report.iterations.push_back(step);
    if (!step.feasible_after) return stop("3.3");
  }
  if (!is_quasinormal(x, p)) return stop("4");
  auto wreath = qnrmaut_with_sylow(x, p);
  auto aut = aut_in_solvable(x, wreath.group);
  report.aut_order = aut.order();
  if (aut.order() % p != 0) return stop("6");
  // A Sylow subgroup of the wreath product meets K in a p-subgroup, which is
  // all of a Sylow subgroup of K when K is the whole wreath product.
  auto sylow = aut.order() == wreath.group.order()
                   ? wreath.sylow
                   : sylow_subgroup(aut, p, seed, aut_in_solvable(x, wreath.sylow));
  report.sylow_order = sylow.order();
  auto candidates = pdbase(sylow, p, k).subgroups;
  report.candidates = candidates.size();
  Membership in_k0 = [&x0](const Permutation& h) { return is_automorphism(h, x0); };
  for (const auto& g : filter_nonconjugate(candidates, in_k0, p, k)) {
    auto [c, b] = d_generators(g, p, k);
    report.base.subgroups.emplace_back(n, std::vector<Permutation>{c, b});
  }
  return stop("8");
}

DBase main_dbase(const CoherentConfiguration& x0, int p, int k, std::uint64_t seed) {
  return main_dbase_report(x0, p, k, seed).base;
}

}  // namespace cayrep
