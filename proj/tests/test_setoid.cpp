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

#include "vml/setoid.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "vml/eq.hpp"
#include "vml/zf.hpp"

using namespace vml;

namespace {

const Budget kBud{20000, 16};

Setoid codiscrete(std::vector<Key> keys) {
  return Setoid::finite(std::move(keys),
                        [](const Key&, const Key&, const Budget&) {
                          return Verdict::holds();
                        });
}

std::vector<Key> carrier_of(const Setoid& s) {
  KeyEnum e = s.space().enumerate(4096);
  REQUIRE(e.complete);
  return e.keys;
}

// Greedy partition into equality classes; requires every comparison to be
// definitive within the budget.
std::size_t count_classes(const Setoid& s) {
  std::vector<Key> reps;
  for (const Key& k : carrier_of(s)) {
    bool fresh = true;
    for (const Key& r : reps) {
      Verdict v = s.eq(k, r, kBud);
      REQUIRE(v.definitive());
      if (v.is_holds()) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(k);
  }
  return reps.size();
}

// Subsetoid over explicit ambient keys, with fresh carrier atoms.
SubSetoid make_sub(const Setoid& ambient, const std::vector<Key>& images,
                   std::uint64_t atom_base) {
  std::vector<Key> delta_keys;
  std::vector<std::pair<Key, Key>> entries;
  for (std::size_t i = 0; i < images.size(); ++i) {
    delta_keys.push_back(Key::atom(atom_base + i));
    entries.emplace_back(delta_keys.back(), images[i]);
  }
  Setoid delta = Setoid::discrete(delta_keys);
  return SubSetoid{delta,
                   SetoidMap::from_table(delta, ambient, entries, kBud)};
}

}  // namespace

TEST_CASE("kappa mirrors value equality") {
  VSet four = oracle::fin_set(4);
  Setoid s = kappa(four);
  std::vector<Key> keys = carrier_of(s);
  CHECK(keys.size() == 4);
  REQUIRE(s.origin().has_value());
  CHECK(eq_v(*s.origin(), four, kBud).is_holds());
  for (const Key& x : keys)
    for (const Key& y : keys) {
      Verdict got = s.eq(x, y, kBud);
      bool want = oracle::naive_eq(four.at(x), four.at(y));
      REQUIRE(got.definitive());
      CHECK(got.is_holds() == want);
    }
  CHECK(check_equivalence(s, kBud).is_holds());
  CHECK_THROWS_AS((void)s.eq(Key::atom(99), keys[0], kBud), Error);

  // Infinite carrier: the sweep cannot finish, so the verdict stays open.
  CHECK(check_equivalence(kappa(VSet::naturals()), kBud).truth ==
        Truth::Unknown);
}

TEST_CASE("transport between presentations of one set") {
  VSet a = VSet::table({{Key::atom(0), VSet::table({})},
                        {Key::atom(1), numeral(1)}});
  VSet b = VSet::table({{Key::atom(7), numeral(1)},
                        {Key::atom(9), VSet::table({})}});
  REQUIRE(eq_v(a, b, kBud).is_holds());

  SetoidMap to = kappa_transport(a, b, kBud);
  CHECK(to.ext_checked.is_holds());
  CHECK(eq_v(a.at(Key::atom(0)), b.at(to(Key::atom(0))), kBud).is_holds());
  CHECK(eq_v(a.at(Key::atom(1)), b.at(to(Key::atom(1))), kBud).is_holds());
  CHECK(to(Key::atom(0)) == Key::atom(9));
  CHECK(to(Key::atom(1)) == Key::atom(7));

  // Round trip is the identity up to the setoid's own equality.
  SetoidMap back = kappa_transport(b, a, kBud);
  Setoid sa = kappa(a);
  for (const Key& k : carrier_of(sa))
    CHECK(sa.eq(back(to(k)), k, kBud).is_holds());

  // Self transport moves nothing (up to equality).
  SetoidMap idt = kappa_transport(a, a, kBud);
  for (const Key& k : carrier_of(sa)) CHECK(sa.eq(idt(k), k, kBud).is_holds());

  CHECK_THROWS_WITH_AS((void)kappa_transport(numeral(2), numeral(3), kBud),
                       doctest::Contains("transport requires equal sets"),
                       Error);
}

TEST_CASE("extensionality checker") {
  Setoid cod2 = codiscrete({Key::atom(0), Key::atom(1)});
  Setoid dis2 = Setoid::discrete({Key::atom(0), Key::atom(1)});

  // Identity from the collapsed pair to the discrete pair splits a class.
  SetoidMap split = SetoidMap::make(cod2, dis2, [](const Key& k) { return k; },
                                    kBud);
  CHECK(split.ext_checked.is_fails());
  CHECK(check_extensional(split, kBud).is_fails());

  SetoidMap con = SetoidMap::make(cod2, dis2,
                                  [](const Key&) { return Key::atom(0); },
                                  kBud);
  CHECK(con.ext_checked.is_holds());

  // Infinite domain: only a bounded probe is possible.
  Setoid nat = kappa(VSet::naturals());
  SetoidMap idn = SetoidMap::make(nat, nat, [](const Key& k) { return k; },
                                  kBud);
  CHECK(idn.ext_checked.truth == Truth::Unknown);

  SetoidMap tab = SetoidMap::from_table(dis2, dis2,
                                        {{Key::atom(0), Key::atom(1)},
                                         {Key::atom(1), Key::atom(0)}},
                                        kBud);
  CHECK(tab.ext_checked.is_holds());
  CHECK(tab(Key::atom(0)) == Key::atom(1));
  CHECK_THROWS_AS((void)tab(Key::atom(5)), Error);
}

TEST_CASE("equivalence checker catches broken relations") {
  Key a = Key::atom(0), b = Key::atom(1), c = Key::atom(2);
  Setoid asym = Setoid::finite(
      {a, b}, [a, b](const Key& x, const Key& y, const Budget&) {
        if (x == y || (x == a && y == b)) return Verdict::holds();
        return Verdict::fails("one-way");
      });
  Verdict v1 = check_equivalence(asym, kBud);
  CHECK(v1.is_fails());
  CHECK(v1.detail.find("symmetric") != std::string::npos);

  Setoid intrans = Setoid::finite(
      {a, b, c}, [a, b, c](const Key& x, const Key& y, const Budget&) {
        if (x == y) return Verdict::holds();
        bool ab = (x == a && y == b) || (x == b && y == a);
        bool bc = (x == b && y == c) || (x == c && y == b);
        if (ab || bc) return Verdict::holds();
        return Verdict::fails("gap");
      });
  Verdict v2 = check_equivalence(intrans, kBud);
  CHECK(v2.is_fails());
  CHECK(v2.detail.find("transitive") != std::string::npos);
}

TEST_CASE("binary product") {
  Setoid p = prod_setoid(kappa(oracle::fin_set(2)), kappa(oracle::fin_set(3)));
  CHECK(carrier_of(p).size() == 6);
  CHECK(count_classes(p) == 6);

  Setoid q = prod_setoid(codiscrete({Key::atom(0), Key::atom(1)}),
                         Setoid::discrete({Key::atom(0), Key::atom(1)}));
  CHECK(carrier_of(q).size() == 4);
  CHECK(count_classes(q) == 2);

  CHECK_THROWS_AS((void)prod_setoid(kappa(VSet::naturals()), kappa(numeral(1))),
                  Error);
}

TEST_CASE("function setoid") {
  Setoid dis2 = Setoid::discrete({Key::atom(0), Key::atom(1)});
  Setoid cod2 = codiscrete({Key::atom(0), Key::atom(1)});

  Setoid dd = exp_setoid(dis2, dis2, kBud);
  CHECK(carrier_of(dd).size() == 4);
  CHECK(count_classes(dd) == 4);

  // Collapsed domain: only constant tables respect equality, and they stay
  // distinct in the discrete codomain.
  Setoid cd = exp_setoid(cod2, dis2, kBud);
  CHECK(carrier_of(cd).size() == 2);
  CHECK(count_classes(cd) == 2);
  // Oracle: filter all four tables by hand.
  {
    std::size_t keep = 0;
    for (int f0 = 0; f0 < 2; ++f0)
      for (int f1 = 0; f1 < 2; ++f1)
        if (f0 == f1) ++keep;  // domain keys are equal, images must match
    CHECK(keep == carrier_of(cd).size());
  }

  // Collapsed codomain: everything is kept but identified.
  Setoid dc = exp_setoid(dis2, cod2, kBud);
  CHECK(carrier_of(dc).size() == 4);
  CHECK(count_classes(dc) == 1);

  // Carrier keys behave as total tables on the domain.
  for (const Key& f : carrier_of(dd)) {
    CHECK(f.tag() == Key::Tag::FunTable);
    CHECK_NOTHROW((void)f.apply(Key::atom(0)));
    CHECK_NOTHROW((void)f.apply(Key::atom(1)));
  }
}

TEST_CASE("function setoid refuses undecided domains") {
  Setoid murky = Setoid::finite(
      {Key::atom(0), Key::atom(1)},
      [](const Key& x, const Key& y, const Budget& b) {
        if (x == y) return Verdict::holds();
        return Verdict::unknown("opaque", b);
      });
  Setoid dis2 = Setoid::discrete({Key::atom(0), Key::atom(1)});
  try {
    (void)exp_setoid(murky, dis2, kBud);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndecidedEquality);
  }
}

TEST_CASE("dependent sum setoid") {
  VSet three = oracle::fin_set(3);
  VFamily g(three, [](const Key& k) { return oracle::fin_set(k.num() + 1); });
  Setoid s = sigma_setoid(kappa(three), kappa_family(three, g, kBud), kBud);
  CHECK(carrier_of(s).size() == 6);  // 1 + 2 + 3
  CHECK(count_classes(s) == 6);

  // Collapsed base: pairs are identified across the equal base keys.
  VSet twin = VSet::table({{Key::atom(0), VSet::table({})},
                           {Key::atom(1), VSet::table({})}});
  VFamily cf = VFamily::constant(twin, oracle::fin_set(2));
  Setoid t = sigma_setoid(kappa(twin), kappa_family(twin, cf, kBud), kBud);
  CHECK(carrier_of(t).size() == 4);
  CHECK(count_classes(t) == 2);

  // Mixed pair equality: same fiber element over equal base keys.
  Key p = Key::pair(Key::atom(0), Key::numeral(1));
  Key q = Key::pair(Key::atom(1), Key::numeral(1));
  Key r = Key::pair(Key::atom(1), Key::numeral(0));
  CHECK(t.eq(p, q, kBud).is_holds());
  CHECK(t.eq(p, r, kBud).is_fails());
}

TEST_CASE("dependent product setoid") {
  VSet two = oracle::fin_set(2);
  VFamily cf = VFamily::constant(two, oracle::fin_set(3));
  Setoid p = pi_setoid(kappa(two), kappa_family(two, cf, kBud), kBud);
  CHECK(carrier_of(p).size() == 9);  // discrete base keeps every table
  CHECK(count_classes(p) == 9);

  // Collapsed base: only tables constant across the equal keys survive.
  VSet twin = VSet::table({{Key::atom(0), VSet::table({})},
                           {Key::atom(1), VSet::table({})}});
  VFamily tf = VFamily::constant(twin, oracle::fin_set(3));
  Setoid q = pi_setoid(kappa(twin), kappa_family(twin, tf, kBud), kBud);
  {
    std::size_t keep = 0;  // oracle: h(a)=h(b) among the 9 assignments
    for (int h0 = 0; h0 < 3; ++h0)
      for (int h1 = 0; h1 < 3; ++h1)
        if (h0 == h1) ++keep;
    CHECK(carrier_of(q).size() == keep);
  }
  CHECK(count_classes(q) == 3);

  // Empty base: exactly the empty table.
  VSet zero = numeral(0);
  VFamily zf = VFamily::constant(zero, oracle::fin_set(3));
  Setoid z = pi_setoid(kappa(zero), kappa_family(zero, zf, kBud), kBud);
  CHECK(carrier_of(z).size() == 1);
  CHECK(carrier_of(z)[0] == Key::funtable({}));
  Setoid zs = sigma_setoid(kappa(zero), kappa_family(zero, zf, kBud), kBud);
  CHECK(carrier_of(zs).empty());
}

TEST_CASE("family laws") {
  VSet three = oracle::fin_set(3);
  VFamily g(three, [](const Key& k) { return oracle::fin_set(k.num() + 1); });
  CHECK(check_family_laws(kappa_family(three, g, kBud), kBud).is_holds());

  VSet twin = VSet::table({{Key::atom(0), numeral(1)},
                           {Key::atom(1), numeral(1)}});
  VFamily cf = VFamily::constant(twin, numeral(2));
  CHECK(check_family_laws(kappa_family(twin, cf, kBud), kBud).is_holds());

  // Hand-broken transports.
  Setoid base = codiscrete({Key::atom(0), Key::atom(1)});
  Setoid fib = Setoid::discrete({Key::atom(0), Key::atom(1)});
  Family crushed{
      base, [fib](const Key&) { return fib; },
      [fib](const Key& x, const Key& y) {
        if (x == y) return SetoidMap::identity(fib);
        return SetoidMap::make(fib, fib,
                               [](const Key&) { return Key::atom(0); }, kBud);
      }};
  Verdict v = check_family_laws(crushed, kBud);
  CHECK(v.is_fails());
  CHECK(v.detail.find("inverse") != std::string::npos);

  Family jitter{
      base, [fib](const Key&) { return fib; },
      [fib](const Key&, const Key&) {  // even (x,x) swaps the fiber
        return SetoidMap::make(fib, fib,
                               [](const Key& k) {
                                 return k == Key::atom(0) ? Key::atom(1)
                                                          : Key::atom(0);
                               },
                               kBud);
      }};
  Verdict w = check_family_laws(jitter, kBud);
  CHECK(w.is_fails());
  CHECK(w.detail.find("moves") != std::string::npos);
}

TEST_CASE("family composition") {
  VSet three = oracle::fin_set(3);
  VFamily g(three, [](const Key& k) { return oracle::fin_set(k.num() + 1); });
  Family f = kappa_family(three, g, kBud);

  Setoid idx = Setoid::discrete({Key::atom(10), Key::atom(11)});
  SetoidMap m = SetoidMap::from_table(idx, kappa(three),
                                      {{Key::atom(10), Key::numeral(1)},
                                       {Key::atom(11), Key::numeral(2)}},
                                      kBud);
  Family c = family_compose(f, m);
  CHECK(carrier_of(c.fiber(Key::atom(10))).size() == 2);
  CHECK(carrier_of(c.fiber(Key::atom(11))).size() == 3);
  CHECK(check_family_laws(c, kBud).is_holds());

  SetoidMap stray = SetoidMap::from_table(
      idx, Setoid::discrete({Key::atom(0)}), {{Key::atom(10), Key::atom(0)},
                                              {Key::atom(11), Key::atom(0)}},
      kBud);
  try {
    (void)family_compose(f, stray);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("subsetoid membership and inclusion") {
  Setoid amb = kappa(oracle::fin_set(3));
  SubSetoid s01 = make_sub(amb, {Key::numeral(0), Key::numeral(1)}, 100);
  SubSetoid t012 = make_sub(
      amb, {Key::numeral(0), Key::numeral(1), Key::numeral(2)}, 200);
  SubSetoid s10 = make_sub(amb, {Key::numeral(1), Key::numeral(0)}, 300);

  Verdict m = sub_member(Key::numeral(1), s01, kBud);
  CHECK(m.is_holds());
  CHECK(amb.eq(s01.incl(m.witness()), Key::numeral(1), kBud).is_holds());
  CHECK(sub_member(Key::numeral(2), s01, kBud).is_fails());

  CHECK(sub_subseteq(s01, t012, kBud).is_holds());
  CHECK(sub_subseteq(t012, s01, kBud).is_fails());
  CHECK(sub_equiv(s01, s10, kBud).is_holds());
  CHECK(sub_equiv(s01, t012, kBud).is_fails());
}

TEST_CASE("inclusion routes agree on every subset pair") {
  // Ambient with a collapsed pair of keys: classes {a0,a1} and {a2}.
  VSet amb_v = VSet::table({{Key::atom(0), VSet::table({})},
                            {Key::atom(1), VSet::table({})},
                            {Key::atom(2), numeral(1)}});
  Setoid amb = kappa(amb_v);
  std::vector<Key> keys = carrier_of(amb);
  REQUIRE(keys.size() == 3);

  // All 8 subsets; sub_subseteq cross-checks the mediating-map route
  // internally, so agreement failures would throw.
  std::vector<SubSetoid> subs;
  std::vector<std::vector<Key>> images;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Key> im;
    for (unsigned i = 0; i < 3; ++i)
      if (mask & (1u << i)) im.push_back(keys[i]);
    subs.push_back(make_sub(amb, im, 400 + 10 * mask));
    images.push_back(im);
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      Verdict got = sub_subseteq(subs[i], subs[j], kBud);
      bool want = true;  // oracle: element-wise search up to ambient equality
      for (const Key& x : images[i]) {
        bool found = false;
        for (const Key& y : images[j])
          if (amb.eq(x, y, kBud).is_holds()) found = true;
        if (!found) want = false;
      }
      REQUIRE(got.definitive());
      CHECK(got.is_holds() == want);
    }
}

TEST_CASE("family built from subsetoid fibers") {
  Setoid amb = kappa(oracle::fin_set(3));
  Setoid base = codiscrete({Key::atom(0), Key::atom(1)});
  // Equal fibers presented with different carrier keys and orders.
  auto sub = [&](const Key& x) {
    if (x == Key::atom(0))
      return make_sub(amb, {Key::numeral(0), Key::numeral(1)}, 500);
    return make_sub(amb, {Key::numeral(1), Key::numeral(0)}, 600);
  };
  Family f = family_from_sub(base, sub, kBud);
  SetoidMap t = f.transport(Key::atom(0), Key::atom(1));
  CHECK(t.ext_checked.is_holds());
  // Inclusions commute with the transport.
  SubSetoid s0 = sub(Key::atom(0)), s1 = sub(Key::atom(1));
  for (const Key& u : carrier_of(s0.delta))
    CHECK(amb.eq(s0.incl(u), s1.incl(t(u)), kBud).is_holds());
  CHECK(check_family_laws(f, kBud).is_holds());

  // Unequal fibers over equal base keys surface as a hard error.
  auto bad = [&](const Key& x) {
    if (x == Key::atom(0)) return make_sub(amb, {Key::numeral(0)}, 700);
    return make_sub(amb, {Key::numeral(2)}, 800);
  };
  Family g = family_from_sub(base, bad, kBud);
  try {
    (void)g.transport(Key::atom(0), Key::atom(1));
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEqual);
  }
}

TEST_CASE("indexed family equality") {
  VSet i1 = oracle::fin_set(2);
  VFamily f1(i1, [](const Key& k) { return numeral(k.num() + 1); });

  VSet i2 = VSet::table({{Key::atom(0), numeral(1)},
                         {Key::atom(1), numeral(0)}});
  REQUIRE(eq_v(i1, i2, kBud).is_holds());
  VFamily f2(i2, [](const Key& k) {
    return k == Key::atom(0) ? numeral(2) : numeral(1);
  });
  CHECK(par_eq(i1, f1, i2, f2, kBud).is_holds());

  VFamily f3(i2, [](const Key& k) {
    return k == Key::atom(0) ? numeral(2) : numeral(2);
  });
  CHECK(par_eq(i1, f1, i2, f3, kBud).is_fails());

  CHECK(par_eq(oracle::fin_set(2), f1, oracle::fin_set(3),
               VFamily::constant(oracle::fin_set(3), numeral(1)), kBud)
            .is_fails());

  // Infinite index: pointwise agreement can only be probed.
  VFamily n1 = VFamily::constant(VSet::naturals(), VSet::table({}));
  VFamily n2 = VFamily::constant(VSet::naturals(), VSet::table({}));
  CHECK(par_eq(VSet::naturals(), n1, VSet::naturals(), n2, kBud).truth ==
        Truth::Unknown);
}

TEST_CASE("value-level and setoid-level dependent sums coincide") {
  VSet three = oracle::fin_set(3);
  VFamily g(three, [](const Key& k) { return oracle::fin_set(k.num() + 1); });
  CHECK(check_kappa_sigma_iso(three, g, kBud).is_holds());

  VSet zero = numeral(0);
  CHECK(check_kappa_sigma_iso(zero, VFamily::constant(zero, numeral(2)), kBud)
            .is_holds());

  VSet twin = VSet::table({{Key::atom(0), VSet::table({})},
                           {Key::atom(1), VSet::table({})}});
  CHECK(check_kappa_sigma_iso(twin, VFamily::constant(twin, oracle::fin_set(2)),
                              kBud)
            .is_holds());

  // Equal fibers presented through different keys.
  VSet duo = VSet::table({{Key::atom(0), numeral(1)},
                          {Key::atom(1), numeral(1)}});
  VFamily h(duo, [](const Key& k) {
    if (k == Key::atom(0)) return VSet::table({{Key::atom(5), numeral(0)}});
    return VSet::table({{Key::atom(6), numeral(0)}});
  });
  CHECK(check_kappa_sigma_iso(duo, h, kBud).is_holds());
}

TEST_CASE("value-level and setoid-level dependent products coincide") {
  VSet two = oracle::fin_set(2);
  CHECK(check_kappa_pi_iso(two, VFamily::constant(two, oracle::fin_set(2)),
                           kBud)
            .is_holds());
  VFamily g(two, [](const Key& k) { return oracle::fin_set(k.num() + 1); });
  CHECK(check_kappa_pi_iso(two, g, kBud).is_holds());

  VSet twin = VSet::table({{Key::atom(0), VSet::table({})},
                           {Key::atom(1), VSet::table({})}});
  CHECK(check_kappa_pi_iso(twin, VFamily::constant(twin, oracle::fin_set(3)),
                           kBud)
            .is_holds());

  VSet zero = numeral(0);
  CHECK(check_kappa_pi_iso(zero, VFamily::constant(zero, numeral(3)), kBud)
            .is_holds());
}

TEST_CASE("family respect checker") {
  VSet twin = VSet::table({{Key::atom(0), VSet::table({})},
                           {Key::atom(1), VSet::table({})}});
  CHECK(check_vfamily_ext(VFamily::constant(twin, numeral(2)), kBud)
            .is_holds());

  VFamily bad(twin, [](const Key& k) {
    return k == Key::atom(0) ? numeral(0) : numeral(1);
  });
  CHECK(check_vfamily_ext(bad, kBud).is_fails());

  CHECK(check_vfamily_ext(
            VFamily::constant(VSet::naturals(), VSet::table({})), kBud)
            .truth == Truth::Unknown);
}
