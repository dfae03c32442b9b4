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

#include "cayrep/classify.hpp"

#include <algorithm>
#include <tuple>

namespace cayrep {

namespace {

bool is_singular_section(const CoherentConfiguration& x, const EquivalenceRelation& lower,
                         const EquivalenceRelation& upper, int delta) {
  auto sec = SectionDescriptor::make(lower, upper, delta);
  if (!is_composite(sec.degree())) return false;
  return section(x, sec).rank() == 2;
}

}  // namespace

bool is_composite(std::size_t value) {
  if (value < 4) return false;
  for (std::size_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return true;
  }
  return false;
}

bool is_paley_scheme(const CoherentConfiguration& x) {
  return x.degree() == 9 && x.rank() == 3 && is_primitive(x);
}

bool is_quasinormal(const CoherentConfiguration& x, int p) {
  if (!is_feasible(x)) return false;
  for (const auto& sec : enumerate_prim_sections(x)) {
    if (sec.degree() == static_cast<std::size_t>(p)) continue;
    if (!is_paley_scheme(section(x, sec))) return false;
  }
  return true;
}

std::optional<SingularData> singular_data(const CoherentConfiguration& x) {
  if (!is_feasible(x)) return std::nullopt;
  auto all = enumerate_equivalences(x);
  SingularData data;
  for (const auto& upper : all) {
    for (const auto& lower : all) {
      if (lower == upper || !lower.is_subset_of(upper)) continue;
      if (is_singular_section(x, lower, upper, upper.class_of(0))) {
        data.all_pairs.push_back({lower, upper});
      }
    }
  }
  if (data.all_pairs.empty()) return std::nullopt;
  data.m = data.all_pairs.front().upper.pair_count();
  for (const auto& pr : data.all_pairs) data.m = std::min(data.m, pr.upper.pair_count());
  for (const auto& pr : data.all_pairs) {
    if (pr.upper.pair_count() == data.m) data.minimal.push_back(pr);
  }
  return data;
}

EquivalencePair choose_minimal_pair(const SingularData& data) {
  auto key = [](const EquivalencePair& pr) {
    return std::make_tuple(pr.lower.classes()[0].size(), pr.lower.labels(), pr.upper.labels());
  };
  return *std::min_element(data.minimal.begin(), data.minimal.end(),
                           [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

std::size_t count_singular_sections(const CoherentConfiguration& x) {
  if (!is_feasible(x)) return 0;
  return count_singular_sections(x, enumerate_equivalences(x));
}

std::size_t count_singular_sections(const CoherentConfiguration& x,
                                    const std::vector<EquivalenceRelation>& all) {
  std::size_t count = 0;
  for (const auto& upper : all) {
    for (const auto& lower : all) {
      if (lower == upper || !lower.is_subset_of(upper)) continue;
      for (std::size_t d = 0; d < upper.class_count(); ++d) {
        count += is_singular_section(x, lower, upper, static_cast<int>(d));
      }
    }
  }
  return count;
}

}  // namespace cayrep
