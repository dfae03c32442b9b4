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

#include "cayrep/cayley.hpp"

#include <algorithm>

#include "cayrep/dbase.hpp"

namespace cayrep {

AbstractGroupD::AbstractGroupD(int p, int k) : p_(p), k_(k), pk_(1) {
  if (p < 2 || k < 1) throw Error(ErrorCode::kMalformedInput, "need p >= 2 and k >= 1");
  for (int i = 0; i < k; ++i) pk_ *= p;
}

DElement AbstractGroupD::add(DElement a, DElement b) const {
  return {(a.first + b.first) % pk_, (a.second + b.second) % p_};
}

DElement AbstractGroupD::negate(DElement a) const {
  return {(pk_ - a.first) % pk_, (p_ - a.second) % p_};
}

DElement AbstractGroupD::scale(DElement a, int times) const {
  auto i = static_cast<std::int64_t>(a.first) * times % pk_;
  auto j = static_cast<std::int64_t>(a.second) * times % p_;
  return {static_cast<int>((i + pk_) % pk_), static_cast<int>((j + p_) % p_)};
}

int AbstractGroupD::element_order(DElement a) const {
  int o = 1;
  DElement x = a;
  while (x != DElement{0, 0}) {
    x = add(x, a);
    ++o;
  }
  return o;
}

bool AbstractGroupD::is_valid(DElement a) const {
  return a.first >= 0 && a.first < pk_ && a.second >= 0 && a.second < p_;
}

std::vector<std::pair<DElement, DElement>> AbstractGroupD::automorphisms() const {
  std::vector<std::pair<DElement, DElement>> out;
  for (std::size_t ci = 0; ci < order(); ++ci) {
    DElement c = element(static_cast<int>(ci));
    if (element_order(c) != pk_) continue;
    std::vector<char> in_c(order(), 0);
    for (int t = 0; t < pk_; ++t) in_c[index(scale(c, t))] = 1;
    for (std::size_t bi = 0; bi < order(); ++bi) {
      DElement b = element(static_cast<int>(bi));
      if (element_order(b) == p_ && !in_c[bi]) out.emplace_back(c, b);
    }
  }
  return out;
}

DElement AbstractGroupD::apply(const std::pair<DElement, DElement>& automorphism, DElement a) const {
  return add(scale(automorphism.first, a.first), scale(automorphism.second, a.second));
}

PairSet cayley_graph_edges(const AbstractGroupD& d, const std::vector<DElement>& connection) {
  PairSet out;
  for (const auto& x : connection) {
    if (!d.is_valid(x)) throw Error(ErrorCode::kMalformedInput, "connection element out of range");
  }
  for (std::size_t g = 0; g < d.order(); ++g) {
    DElement ge = d.element(static_cast<int>(g));
    for (const auto& x : connection) out.emplace_back(static_cast<int>(g), d.index(d.add(x, ge)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json CayleyRepresentation::to_json() const {
  auto pairs = [](const std::vector<DElement>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto [i, j] : v) a.push_back({i, j});
    return a;
  };
  return nlohmann::json{{"labeling", pairs(labeling)},
                        {"connection_set", pairs(connection_set)},
                        {"generators", {c.to_string(), b.to_string()}}};
}

CayleyRepresentation representation_from_subgroup(std::size_t n, const PairSet& edges,
                                                  const PermutationGroup& g, int p, int k) {
  AbstractGroupD d(p, k);
  if (g.degree() != n || d.order() != n || !g.is_regular()) {
    throw Error(ErrorCode::kPreconditionViolation, "subgroup is not regular of order p^(k+1)");
  }
  auto [c, b] = d_generators(g, p, k);
  CayleyRepresentation rep;
  rep.c = c;
  rep.b = b;
  rep.labeling.assign(n, {0, 0});
  Permutation ci(n);
  for (int i = 0; i < d.cyclic_order(); ++i) {
    Permutation e = ci;
    for (int j = 0; j < p; ++j) {
      rep.labeling[e[0]] = {i, j};
      e = e * b;
    }
    ci = ci * c;
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
    }
    if (u == 0) rep.connection_set.push_back(rep.labeling[v]);
  }
  std::sort(rep.connection_set.begin(), rep.connection_set.end());
  rep.connection_set.erase(std::unique(rep.connection_set.begin(), rep.connection_set.end()),
                           rep.connection_set.end());
  return rep;
}

bool cayley_isomorphic(const AbstractGroupD& d, std::vector<DElement> x1, std::vector<DElement> x2) {
  std::sort(x1.begin(), x1.end());
  x1.erase(std::unique(x1.begin(), x1.end()), x1.end());
  std::sort(x2.begin(), x2.end());
  x2.erase(std::unique(x2.begin(), x2.end()), x2.end());
  if (x1.size() != x2.size()) return false;
  for (const auto& aut : d.automorphisms()) {
    std::vector<DElement> image;
    for (const auto& x : x1) image.push_back(d.apply(aut, x));
    std::sort(image.begin(), image.end());
    if (image == x2) return true;
  }
  return false;
}

std::vector<CayleyRepresentation> crg(std::size_t n, const PairSet& edges, int p, int k,
                                      std::uint64_t seed) {
  AbstractGroupD d(p, k);
  if (d.order() != n) throw Error(ErrorCode::kMalformedInput, "vertex count must be p^(k+1)");
  auto x = cc_from_graph(n, edges);
  std::vector<CayleyRepresentation> out;
  for (const auto& g : main_dbase(x, p, k, seed).subgroups) {
    out.push_back(representation_from_subgroup(n, edges, g, p, k));
  }
  return out;
}

bool cgrec(std::size_t n, const PairSet& edges, int p, int k, std::uint64_t seed) {
  return !crg(n, edges, p, k, seed).empty();
}

bool cgi(const AbstractGroupD& d, const std::vector<DElement>& connection, std::size_t n,
         const PairSet& edges, std::uint64_t seed) {
  if (d.order() != n) throw Error(ErrorCode::kMalformedInput, "graph sizes differ");
  for (const auto& x : connection) {
    if (!d.is_valid(x)) throw Error(ErrorCode::kMalformedInput, "connection element out of range");
  }
  for (const auto& rep : crg(n, edges, d.p(), d.k(), seed)) {
    if (cayley_isomorphic(d, connection, rep.connection_set)) return true;
  }
  return false;
}

}  // namespace cayrep
