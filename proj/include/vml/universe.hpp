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

#ifndef VML_UNIVERSE_HPP
#define VML_UNIVERSE_HPP

// The cumulative tower of set universes. Level k is the value u_v(k), a
// lazily generated set whose members are indexed by coded trees: a tree is a
// root code paired with branches, one per key of the code's key space, and
// its decoding is the set those branches denote. Codes close the level under
// the empty set, the one-point set, the naturals, finite sums and products,
// dependent sums and products over finitely keyed codes, branching trees,
// and everything from the level below (both wholesale, through the lower
// code space, and pointwise, through lifting).

#include <cstdint>
#include <optional>
#include <vector>

#include "vml/common.hpp"
#include "vml/key.hpp"
#include "vml/verdict.hpp"
#include "vml/vset.hpp"

namespace vml {

// Raw key builders for codes, code families, and trees. Builders perform no
// validation; code_wf / tree_wf decide legality at a given level.
namespace ucode {

Key n0();                // no keys
Key n1();                // one key
Key nat();               // numeral keys
Key ix();                // keys are the codes one level down
Key lft(const Key& lower_code);
Key plus(const Key& c, const Key& d);
Key times(const Key& c, const Key& d);
Key sigma(const Key& c, const Key& fam);
Key pi(const Key& c, const Key& fam);
Key w(const Key& c, const Key& fam);

// Families over the keys of an index code: an explicit table, a constant
// code, or the pointwise lift of lower codes (legal over ix only).
Key fam_table(std::vector<std::pair<Key, Key>> entries);
Key fam_const(const Key& c);
Key fam_lft();

// Trees: a code plus branches. Branches are an explicit table over the
// code's key space, or one of two canonical generators: numeral branches
// (legal over nat) and lower-universe branches (legal over w(ix, fam_lft)).
Key tree(const Key& code, std::vector<std::pair<Key, Key>> branches);
Key tree_nat();
Key tree_univ();

}  // namespace ucode

bool code_wf(std::uint32_t level, const Key& code);
bool tree_wf(std::uint32_t level, const Key& tree);

// Key space of a well-formed code (its decode-index type).
KeySpace code_space(std::uint32_t level, const Key& code);

// Value denoted by a well-formed tree.
VSet decode_tree(std::uint32_t level, const Key& tree);

// The universe value at a level.
VSet u_v(std::uint32_t level);

// Same denotation one level up.
Key lift_code(std::uint32_t from_level, const Key& code);
Key lift_tree(std::uint32_t from_level, const Key& tree);

// Canonical tree for a hereditarily finite value (DomainMismatch otherwise).
Key hf_tree(std::uint32_t level, const VSet& x);

// Canonical membership certificate: a tree whose decoding is bisimilar to x,
// when the shape of x admits one.
std::optional<Key> cert_for(std::uint32_t level, const VSet& x);

// Certificate-backed membership in u_v(level).
Verdict check_mem_u(const VSet& x, std::uint32_t level,
                    const Budget& bud = Budget{});

}  // namespace vml

#endif  // VML_UNIVERSE_HPP
