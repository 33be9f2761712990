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

#include "vml/universe.hpp"

#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "vml/eq.hpp"
#include "vml/zf.hpp"

using namespace vml;

namespace {

const Budget kBud{20000, 16};

std::vector<Key> keys_of(std::uint32_t level, const Key& code) {
  KeyEnum e = code_space(level, code).enumerate(256);
  REQUIRE(e.complete);
  return e.keys;
}

}  // namespace

TEST_CASE("code well-formedness") {
  using namespace ucode;
  for (std::uint32_t lv : {0u, 1u, 2u}) {
    CHECK(code_wf(lv, n0()));
    CHECK(code_wf(lv, n1()));
    CHECK(code_wf(lv, nat()));
    CHECK(code_wf(lv, w(nat(), fam_const(n0()))));
  }
  // The lower code space and its pointwise family need a level below.
  CHECK_FALSE(code_wf(0, ix()));
  CHECK(code_wf(1, ix()));
  CHECK_FALSE(code_wf(0, w(ix(), fam_lft())));
  CHECK(code_wf(1, w(ix(), fam_lft())));
  CHECK_FALSE(code_wf(0, lft(n1())));
  CHECK(code_wf(1, lft(n1())));
  CHECK_FALSE(code_wf(1, lft(ix())));  // wrapped code must be wf one down
  CHECK(code_wf(2, lft(ix())));

  // Pairwise-keyed formers need a listable index space.
  CHECK(code_wf(0, times(plus(n1(), n1()), n1())));
  CHECK_FALSE(code_wf(0, times(nat(), n1())));
  CHECK_FALSE(code_wf(0, plus(n1(), nat())));
  CHECK_FALSE(code_wf(0, sigma(nat(), fam_const(n1()))));
  CHECK_FALSE(code_wf(0, pi(nat(), fam_const(n1()))));
  CHECK_FALSE(code_wf(1, pi(ix(), fam_const(n1()))));

  // Table families must cover the index keys exactly.
  Key two = plus(n1(), n1());
  std::vector<Key> tk = keys_of(0, two);
  REQUIRE(tk.size() == 2);
  CHECK(code_wf(0, sigma(two, fam_table({{tk[0], n0()}, {tk[1], n1()}}))));
  CHECK_FALSE(code_wf(0, sigma(two, fam_table({{tk[0], n0()}}))));
  CHECK_FALSE(code_wf(0, sigma(two, fam_table({{tk[0], n0()},
                                               {tk[1], ix()}}))));
  CHECK_FALSE(code_wf(0, sigma(n1(), fam_lft())));  // lift family needs ix

  CHECK_FALSE(code_wf(0, Key::atom(7)));
  CHECK_FALSE(code_wf(3, Key::pair(Key::numeral(99), Key::atom(0))));
}

TEST_CASE("code key spaces match combinatorics") {
  using namespace ucode;
  CHECK(keys_of(0, n0()).empty());
  CHECK(keys_of(0, n1()).size() == 1);
  Key two = plus(n1(), n1());
  CHECK(keys_of(0, two).size() == 2);
  CHECK(keys_of(0, times(two, two)).size() == 4);
  CHECK(keys_of(0, sigma(two, fam_const(n1()))).size() == 2);
  std::vector<Key> tk = keys_of(0, two);
  CHECK(keys_of(0, sigma(two, fam_table({{tk[0], n0()}, {tk[1], n1()}})))
            .size() == 1);
  CHECK(keys_of(0, pi(two, fam_const(two))).size() == 4);
  CHECK(keys_of(0, pi(two, fam_table({{tk[0], n1()}, {tk[1], two}})))
            .size() == 2);
  // Leaf-only branching trees: one per label with an empty fiber.
  CHECK(keys_of(0, w(two, fam_const(n0()))).size() == 2);
  CHECK(keys_of(0, w(n0(), fam_const(n1()))).empty());

  // Numeral keys stream without completing.
  KeyEnum ne = code_space(0, nat()).enumerate(5);
  CHECK_FALSE(ne.complete);
  REQUIRE(ne.keys.size() >= 5);
  CHECK(ne.keys[3] == Key::numeral(3));

  // With no leaf labels there are no well-founded trees at all.
  KeyEnum we = code_space(0, w(n1(), fam_const(n1()))).enumerate(16);
  CHECK(we.complete);
  CHECK(we.keys.empty());

  // One leaf label plus one successor label streams an unbounded chain.
  KeyEnum ch = code_space(
                   0, w(two, fam_table({{tk[0], n0()}, {tk[1], n1()}})))
                   .enumerate(16);
  CHECK_FALSE(ch.complete);
  CHECK(ch.keys.size() >= 3);

  try {
    (void)code_space(0, Key::atom(7));
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllFormedCode);
  }
}

TEST_CASE("tree decoding round trips") {
  using namespace ucode;
  VSet empty = VSet::table({});
  CHECK(eq_v(decode_tree(0, tree(n0(), {})), empty, kBud).is_holds());

  Key k1 = keys_of(0, n1())[0];
  VSet one = decode_tree(0, tree(n1(), {{k1, tree(n0(), {})}}));
  CHECK(eq_v(one, numeral(1), kBud).is_holds());

  CHECK(eq_v(decode_tree(0, tree_nat()), VSet::naturals(), kBud).is_holds());
  CHECK(eq_v(decode_tree(1, tree_univ()), u_v(0), kBud).is_holds());
  CHECK(eq_v(decode_tree(2, tree_univ()), u_v(1), kBud).is_holds());

  try {
    (void)decode_tree(0, Key::atom(7));
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllFormedCode);
  }
}

TEST_CASE("tree well-formedness") {
  using namespace ucode;
  Key two = plus(n1(), n1());
  std::vector<Key> tk = keys_of(0, two);
  Key leaf = tree(n0(), {});
  CHECK(tree_wf(0, tree(two, {{tk[0], leaf}, {tk[1], leaf}})));
  CHECK_FALSE(tree_wf(0, tree(two, {{tk[0], leaf}})));          // missing key
  CHECK_FALSE(tree_wf(0, tree(n0(), {{Key::atom(5), leaf}})));  // extra key
  CHECK_FALSE(tree_wf(0, tree(two, {{tk[0], leaf},
                                    {tk[1], Key::atom(9)}})));  // bad subtree

  // Canonical generators are pinned to their codes.
  CHECK(tree_wf(0, tree_nat()));
  CHECK_FALSE(tree_wf(0, Key::pair(n0(), Key::atom(1))));
  CHECK_FALSE(tree_wf(0, tree_univ()));  // no level below
  CHECK(tree_wf(1, tree_univ()));
  CHECK_FALSE(tree_wf(0, Key::pair(nat(), Key::atom(3))));  // unknown marker

  // Trees over numeral-keyed codes cannot list their branches.
  CHECK_FALSE(tree_wf(0, tree(nat(), {{Key::numeral(0), leaf}})));
}

TEST_CASE("hereditarily finite certificates") {
  for (const VSet& x : oracle::hf_all(2, 2)) {
    Key t = hf_tree(0, x);
    CHECK(tree_wf(0, t));
    CHECK(eq_v(decode_tree(0, t), x, kBud).is_holds());
    Key t1 = hf_tree(1, x);
    CHECK(tree_wf(1, t1));
    CHECK(eq_v(decode_tree(1, t1), x, kBud).is_holds());
  }
  // A spot check with wider and deeper nesting.
  VSet deep = pair_v(numeral(3), pair_v(numeral(0), numeral(2)));
  CHECK(eq_v(decode_tree(0, hf_tree(0, deep)), deep, kBud).is_holds());

  try {
    (void)hf_tree(0, VSet::naturals());
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("certificates cover the canonical shapes") {
  auto c3 = cert_for(0, numeral(3));
  REQUIRE(c3.has_value());
  CHECK(eq_v(decode_tree(0, *c3), numeral(3), kBud).is_holds());

  auto cn = cert_for(0, VSet::naturals());
  REQUIRE(cn.has_value());
  CHECK(*cn == ucode::tree_nat());

  auto cu = cert_for(1, u_v(0));
  REQUIRE(cu.has_value());
  CHECK(*cu == ucode::tree_univ());
  CHECK_FALSE(cert_for(0, u_v(0)).has_value());
  CHECK_FALSE(cert_for(1, u_v(1)).has_value());

  auto cu2 = cert_for(2, u_v(0));
  REQUIRE(cu2.has_value());
  CHECK(eq_v(decode_tree(2, *cu2), u_v(0), kBud).is_holds());

  // Squashes resolve to their normal form first.
  auto cs = cert_for(0, sq_v(VSet::naturals()));
  REQUIRE(cs.has_value());
  CHECK(eq_v(decode_tree(0, *cs), numeral(1), kBud).is_holds());

  // No certificate for sets with no canonical reading.
  VFamily f = VFamily::constant(VSet::naturals(), VSet::table({}));
  CHECK_FALSE(cert_for(0, VSet::sigma_lazy(VSet::naturals(), f)).has_value());
}

TEST_CASE("membership in the universe") {
  CHECK(check_mem_u(VSet::table({}), 0, kBud).is_holds());
  CHECK(check_mem_u(numeral(5), 0, kBud).is_holds());
  CHECK(check_mem_u(pair_v(VSet::table({}), numeral(1)), 0, kBud).is_holds());
  CHECK(check_mem_u(VSet::naturals(), 0, kBud).is_holds());
  CHECK(check_mem_u(VSet::naturals(), 2, kBud).is_holds());

  // Each level sits inside every higher one.
  CHECK(check_mem_u(u_v(0), 1, kBud).is_holds());
  CHECK(check_mem_u(u_v(0), 2, kBud).is_holds());
  CHECK(check_mem_u(u_v(1), 2, kBud).is_holds());
  CHECK(check_mem_u(u_v(0), 0, kBud).truth == Truth::Unknown);
  CHECK(check_mem_u(u_v(1), 0, kBud).truth == Truth::Unknown);

  // Membership witnesses decode back to the member.
  for (const VSet& x : oracle::hf_all(2, 2)) {
    Verdict m = mem_v(x, u_v(0), kBud);
    REQUIRE(m.is_holds());
    CHECK(eq_v(decode_tree(0, m.witness()), x, kBud).is_holds());
  }

  // Finite sets of members are subsets; infinite ones can only be probed.
  CHECK(subset_v(oracle::fin_set(4), u_v(0), kBud).is_holds());
  CHECK(subset_v(VSet::naturals(), u_v(0), kBud).truth == Truth::Unknown);
}

TEST_CASE("universes and plain sets are kept apart") {
  CHECK(eq_v(u_v(0), u_v(0), kBud).is_holds());
  CHECK(eq_v(u_v(0), u_v(1), kBud).truth == Truth::Unknown);
  CHECK(eq_v(u_v(0), VSet::naturals(), kBud).is_fails());
  CHECK(eq_v(u_v(0), numeral(3), kBud).is_fails());
  CHECK(eq_v(u_v(1), sq_v(numeral(2)), kBud).is_fails());
}

TEST_CASE("universe spaces stream certified trees") {
  for (std::uint32_t lv : {0u, 1u}) {
    KeyEnum e = u_v(lv).space().enumerate(48);
    CHECK_FALSE(e.complete);
    REQUIRE(e.keys.size() >= 10);
    for (const Key& t : e.keys) {
      CHECK(tree_wf(lv, t));
      VSet x = u_v(lv).at(t);
      CHECK(eq_v(x, decode_tree(lv, t), kBud).is_holds());
    }
  }
  CHECK(u_v(0).space().contains(ucode::tree_nat()));
  CHECK_FALSE(u_v(0).space().contains(ucode::tree_univ()));
  CHECK(u_v(1).space().contains(ucode::tree_univ()));

  // The lower code space itself enumerates well-formed codes.
  KeyEnum ce = KeySpace::codes(0).enumerate(64);
  REQUIRE(ce.keys.size() >= 3);
  for (const Key& c : ce.keys) CHECK(code_wf(0, c));
}

TEST_CASE("lifting preserves denotation") {
  using namespace ucode;
  for (const Key& c : {n0(), n1(), nat(), plus(n1(), n1()),
                       sigma(plus(n1(), n1()), fam_const(n1()))}) {
    Key lc = lift_code(0, c);
    REQUIRE(code_wf(1, lc));
    KeyEnum lo = code_space(0, c).enumerate(32);
    KeyEnum hi = code_space(1, lc).enumerate(32);
    CHECK(lo.keys == hi.keys);
    CHECK(lo.complete == hi.complete);
  }
  for (const VSet& x : oracle::hf_all(2, 2)) {
    Key lt = lift_tree(0, hf_tree(0, x));
    REQUIRE(tree_wf(1, lt));
    CHECK(eq_v(decode_tree(1, lt), x, kBud).is_holds());
  }
  CHECK(eq_v(decode_tree(1, lift_tree(0, ucode::tree_nat())),
             VSet::naturals(), kBud)
            .is_holds());
  CHECK(eq_v(decode_tree(2, lift_tree(1, ucode::tree_univ())), u_v(0), kBud)
            .is_holds());
}
