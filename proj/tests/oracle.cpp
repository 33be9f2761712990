/* Copyright 2026 The VML Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "oracle.hpp"

#include "vml/zf.hpp"

namespace vml::oracle {

bool naive_eq(const VSet& x, const VSet& y) {
  if (!x.is_table() || !y.is_table())
    fail(ErrorKind::Internal, "oracle handles finite tables only");
  for (const auto& [k, c] : x.table_children()) {
    bool hit = false;
    for (const auto& [j, d] : y.table_children())
      if (naive_eq(c, d)) { hit = true; break; }
    if (!hit) return false;
  }
  for (const auto& [j, d] : y.table_children()) {
    bool hit = false;
    for (const auto& [k, c] : x.table_children())
      if (naive_eq(c, d)) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

bool naive_mem(const VSet& x, const VSet& a) {
  for (const auto& [k, c] : a.table_children())
    if (naive_eq(x, c)) return true;
  return false;
}

bool naive_subset(const VSet& a, const VSet& b) {
  for (const auto& [k, c] : a.table_children())
    if (!naive_mem(c, b)) return false;
  return true;
}

std::vector<VSet> hf_all(int height, int width) {
  if (height == 0) return {VSet::empty()};
  std::vector<VSet> lower = hf_all(height - 1, width);
  std::vector<VSet> out;
  // All child sequences of length 0..width over the lower layer, counted in
  // mixed radix so the order is reproducible.
  for (int k = 0; k <= width; ++k) {
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= lower.size();
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<std::pair<Key, VSet>> kids;
      std::size_t rest = n;
      for (int i = 0; i < k; ++i) {
        kids.emplace_back(Key::atom(static_cast<std::uint64_t>(i)),
                          lower[rest % lower.size()]);
        rest /= lower.size();
      }
      out.push_back(VSet::table(std::move(kids)));
    }
  }
  return out;
}



VSet fin_set(std::uint64_t n) {
  std::vector<std::pair<Key, VSet>> kids;
  kids.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    kids.emplace_back(Key::numeral(i), numeral(i));
  return VSet::table(std::move(kids));
}

}  // namespace vml::oracle
