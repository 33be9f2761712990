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

#ifndef VML_EQ_HPP
#define VML_EQ_HPP

#include "vml/verdict.hpp"
#include "vml/vset.hpp"

namespace vml {

// Bisimulation equality of set values. Definitive on hereditarily finite
// inputs (never Unknown there, regardless of fuel); lazy generators are
// matched by canonical recognition, refuted by rank where both ranks are
// known, and otherwise probed under the budget. Definitive answers are
// memoized under (digest, digest) keys process-wide.
Verdict eq_v(const VSet& x, const VSet& y, const Budget& b = Budget{});

// Membership: Holds carries the least witness key k of a's space with
// x bisimilar to a's child at k.
Verdict mem_v(const VSet& x, const VSet& a, const Budget& b = Budget{});

// Every child of a is a member of b. Witnesses are not collected.
Verdict subset_v(const VSet& a, const VSet& b, const Budget& bud = Budget{});

// Recursion-state variants used by the other kernel modules.
Verdict eq_v(const VSet& x, const VSet& y, BudgetState& bs);
Verdict mem_v(const VSet& x, const VSet& a, BudgetState& bs);

// Drops every memoized verdict (test isolation).
void eq_cache_clear();
std::size_t eq_cache_size();

// True when the value is bisimilar to a numeral; n receives its height.
// Decidable for hereditarily finite values and all lazy generator kinds
// except un-probed sigma generators (where Unknown is reported).
Verdict numeral_shape(const VSet& v, std::uint64_t* n, BudgetState& bs);

}  // namespace vml

#endif  // VML_EQ_HPP
