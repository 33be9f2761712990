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

#ifndef VML_UNIVERSE_INTERNAL_HPP
#define VML_UNIVERSE_INTERNAL_HPP

// Hooks the value layer uses to treat universe key spaces without depending
// on the universe module's headers. Implemented in universe.cpp.

#include <cstdint>
#include <optional>
#include <vector>

#include "vml/key.hpp"

namespace vml {
class VSet;
}

namespace vml::univ_internal {

bool code_key_wf(std::uint32_t level, const Key& k);
bool tree_key_wf(std::uint32_t level, const Key& k);
// Size-ordered, capped enumerations (never complete; both spaces are
// infinite at every level).
std::vector<Key> enumerate_codes(std::uint32_t level, std::uint32_t cap);
std::vector<Key> enumerate_trees(std::uint32_t level, std::uint32_t cap);
Key least_code_key(std::uint32_t level);
Key least_tree_key(std::uint32_t level);
// Child of V_level at a tree key: the embedding of the decoded tree.
VSet univ_child(std::uint32_t level, const Key& tree_key);
// Canonical tree key whose child is bisimilar to x, when one is known:
// hereditarily finite values, the naturals, and universes below this level.
std::optional<Key> member_tree_key(std::uint32_t level, const VSet& x);

}  // namespace vml::univ_internal

#endif  // VML_UNIVERSE_INTERNAL_HPP
