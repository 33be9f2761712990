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

#include "vml/key.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"

using namespace vml;

namespace {

std::vector<Key> sample_keys() {
  Key a = Key::atom(0), b = Key::atom(1), n = Key::numeral(7);
  return {a,
          b,
          n,
          Key::numeral(0),
          Key::pair(a, b),
          Key::pair(b, a),
          Key::inl(a),
          Key::inr(a),
          Key::funtable({}),
          Key::funtable({{a, n}}),
          Key::funtable({{a, n}, {b, b}})};
}

}  // namespace

TEST_CASE("key equality is structural") {
  CHECK(Key::atom(3) == Key::atom(3));
  CHECK(Key::atom(3) != Key::atom(4));
  CHECK(Key::atom(3) != Key::numeral(3));
  CHECK(Key::pair(Key::atom(0), Key::atom(1)) ==
        Key::pair(Key::atom(0), Key::atom(1)));
  CHECK(Key::inl(Key::atom(0)) != Key::inr(Key::atom(0)));
  CHECK(Key::funtable({{Key::atom(0), Key::atom(1)}}) ==
        Key::funtable({{Key::atom(0), Key::atom(1)}}));
}

TEST_CASE("equal keys hash equally") {
  for (const Key& k : sample_keys()) {
    Key copy = k;  // same node
    CHECK(copy.hash() == k.hash());
  }
  CHECK(Key::pair(Key::atom(0), Key::numeral(2)).hash() ==
        Key::pair(Key::atom(0), Key::numeral(2)).hash());
  CHECK(Key::funtable({{Key::atom(1), Key::atom(2)},
                       {Key::atom(0), Key::atom(3)}}) ==
        Key::funtable({{Key::atom(0), Key::atom(3)},
                       {Key::atom(1), Key::atom(2)}}));
}

TEST_CASE("ordering is a strict total order on the sample") {
  std::vector<Key> ks = sample_keys();
  for (const Key& x : ks)
    for (const Key& y : ks) {
      int c = key_cmp(x, y);
      CHECK(c == -key_cmp(y, x));
      CHECK((c == 0) == (x == y));
    }
  std::sort(ks.begin(), ks.end());
  for (std::size_t i = 1; i < ks.size(); ++i) CHECK(ks[i - 1] < ks[i]);
}

TEST_CASE("function-table keys reject duplicate arguments") {
  CHECK_THROWS_AS(Key::funtable({{Key::atom(0), Key::atom(1)},
                                 {Key::atom(0), Key::atom(2)}}),
                  Error);
}

TEST_CASE("function-table application") {
  Key f = Key::funtable({{Key::atom(0), Key::numeral(4)},
                         {Key::atom(1), Key::numeral(9)}});
  CHECK(f.apply(Key::atom(0)) == Key::numeral(4));
  CHECK(f.apply(Key::atom(1)) == Key::numeral(9));
  CHECK_THROWS_AS(f.apply(Key::atom(2)), Error);
}

TEST_CASE("accessors match construction") {
  Key p = Key::pair(Key::atom(5), Key::numeral(6));
  CHECK(p.tag() == Key::Tag::Pair);
  CHECK(p.first() == Key::atom(5));
  CHECK(p.second() == Key::numeral(6));
  CHECK(Key::numeral(12).num() == 12);
  CHECK(Key::inl(p).first() == p);
  CHECK(Key::inr(p).first() == p);
}

TEST_CASE("rendering is distinct on the sample") {
  std::vector<Key> ks = sample_keys();
  for (const Key& x : ks)
    for (const Key& y : ks)
      if (!(x == y)) CHECK(x.str() != y.str());
}
