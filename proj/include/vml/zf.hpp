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

#ifndef VML_ZF_HPP
#define VML_ZF_HPP

#include <optional>

#include "vml/eq.hpp"
#include "vml/verdict.hpp"
#include "vml/vset.hpp"

namespace vml {

// Kuratowski pair {{a},{a,b}}. The index keys follow the two-element sum
// shape (inl a0, inr a0) so coded pair trees embed onto the same layout.
VSet pair_v(const VSet& a, const VSet& b);

// Inverse up to bisimulation: any set bisimilar to some pair_v(a,b) yields
// such components. NotAPair if the set has no pair reading;
// UndecidedEquality if deciding the reading exhausts the budget.
struct VPair {
  VSet first, second;
};
VPair unpair_v(const VSet& p, const Budget& bud = Budget{});

// Von Neumann-style numeral chain: 0 -> empty, n+1 -> { numeral(n) }.
VSet numeral(std::uint64_t n);
// Height of a numeral value, when the value is bisimilar to one.
std::optional<std::uint64_t> numeral_of(const VSet& v,
                                        const Budget& bud = Budget{});

// natV: the set of all numerals, lazily generated.
VSet nat_v();

// Disjoint-sum coding: members are tagged pairs <0,a> / <1,b> with keys
// inl k / inr k. Both arguments must be finite tables.
VSet sum_v(const VSet& a, const VSet& b);
VSet inl_v(const VSet& a);
VSet inr_v(const VSet& b);

// Dependent pair set: index pairs (y,u), children <a@y, g(y)@u>. Finite
// inputs materialize to a table; an infinite base or fiber space yields a
// lazy sigma set. The family must respect bisimulation on the base
// (definitive violations raise FamilyNotExtensional; the check is bounded
// over infinite bases).
VSet sigma_v(const VSet& a, const VFamily& g, const Budget& bud = Budget{});

// Dependent function set: index keys are the extensional function tables
// from a's keys into the fibers' keys; each child is the function's graph.
// InfiniteUnsupported unless a and every fiber are finite tables.
VSet pi_v(const VSet& a, const VFamily& g, const Budget& bud = Budget{});

// Equality reflection set: one child a@x when a@x and a@y are bisimilar,
// empty otherwise. Eager: raises UndecidedEquality on an Unknown.
VSet id_v(const VSet& a, const Key& x, const Key& y,
          const Budget& bud = Budget{});

// Squash: same index space, every child empty. Finite tables materialize.
VSet sq_v(const VSet& a);

}  // namespace vml

#endif  // VML_ZF_HPP
