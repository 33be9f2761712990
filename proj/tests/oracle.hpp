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

#ifndef VML_TESTS_ORACLE_HPP
#define VML_TESTS_ORACLE_HPP

// Reference implementations used to cross-check the kernel. Deliberately
// naive: double-quantifier recursion with no memoization, no rank shortcuts,
// no generators. Finite tables only.

#include <vector>

#include "vml/vset.hpp"

namespace vml::oracle {

bool naive_eq(const VSet& x, const VSet& y);
bool naive_mem(const VSet& x, const VSet& a);
bool naive_subset(const VSet& a, const VSet& b);

// Every table of height <= height whose nodes have at most `width` children,
// keyed atom(0..k-1). Generated in a canonical deterministic order.
std::vector<VSet> hf_all(int height, int width);

// Canonical n-element set: the first n numerals at keys 0..n-1. Handy as a
// finite index set with pairwise distinct members.
VSet fin_set(std::uint64_t n);

}  // namespace vml::oracle

#endif  // VML_TESTS_ORACLE_HPP
