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

#include "vml/interp.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "vml/eq.hpp"
#include "vml/universe.hpp"
#include "vml/zf.hpp"

using namespace vml;
using namespace vml::syn;
using interp::CheckConfig;
using interp::Checker;
using interp::check_judgment;
using interp::VMap;

namespace {

const Budget kBud{20000, 16};
const Key kPoint = Key::numeral(0);

// One-element types: the equality set of a numeral with itself holds a
// single canonical point, and rr picks that point out.
Expr unit_at(std::uint64_t n) {
  Expr t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(t);
  return id_ty(nat(), t, t);
}
Expr unit_elem(std::uint64_t n) {
  Expr t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(t);
  return rr(t);
}

bool holds(const Verdict& v) { return v.truth == Truth::Holds; }
bool bounded(const Verdict& v) { return v.truth == Truth::HoldsBounded; }

}  // namespace

TEST_CASE("context denotations") {
  Checker ck;
  // the empty context is a one-point set
  VSet pt = ck.interp_ctx(ctx_empty());
  CHECK(pt.is_table());
  CHECK(pt.width() == 1);
  CHECK(eq_v(pt.at(kPoint), VSet::empty(), kBud).is_holds());
  // extension by the empty type has no keys at all
  VSet none = ck.interp_ctx(ctx_ext(ctx_empty(), n0()));
  KeyEnum en = none.space().enumerate(16);
  CHECK(en.complete);
  CHECK(en.keys.empty());
  // extension by the naturals streams dependent pairs
  VSet nats = ck.interp_ctx(ctx_ext(ctx_empty(), nat()));
  CHECK(mem_v(pair_v(VSet::empty(), numeral(3)), nats, kBud).is_holds());
  en = nats.space().enumerate(8);
  CHECK(!en.complete);
  CHECK(en.keys.size() >= 8);
  // a two-step extension nests the pairs
  VSet two = ck.interp_ctx(ctx_ext(ctx_ext(ctx_empty(), unit_at(0)),
                                   unit_at(1)));
  KeyEnum e2 = two.space().enumerate(16);
  REQUIRE(e2.complete);
  REQUIRE(e2.keys.size() == 1);
  CHECK(e2.keys[0].tag() == Key::Tag::Pair);
}

TEST_CASE("type denotations at the point") {
  Checker ck;
  Expr E = ctx_empty();
  CHECK(eq_v(ck.interp_ty(nat(), E).at(kPoint), nat_v(), kBud).is_holds());
  CHECK(eq_v(ck.interp_ty(n0(), E).at(kPoint), VSet::empty(), kBud)
            .is_holds());
  CHECK(eq_v(ck.interp_ty(u(0), E).at(kPoint), u_v(0), kBud).is_holds());
  // the one-element types hold the single canonical point
  VSet u2 = ck.interp_ty(unit_at(2), E).at(kPoint);
  CHECK(mem_v(VSet::empty(), u2, kBud).is_holds());
  CHECK(mem_v(numeral(1), u2, kBud).is_fails());
  // a product over an empty base is a single empty graph
  VSet pe = ck.interp_ty(pi(n0(), n0()), E).at(kPoint);
  CHECK(pe.width() == 1);
  CHECK(eq_v(pe, VSet::table({{kPoint, VSet::empty()}}), kBud).is_holds());
  // a sum of two one-element types has two distinct members
  VSet sv = ck.interp_ty(sum(unit_at(0), unit_at(0)), E).at(kPoint);
  KeyEnum en = sv.space().enumerate(8);
  REQUIRE(en.complete);
  CHECK(en.keys.size() == 2);
  CHECK(eq_v(sv.at(en.keys[0]), sv.at(en.keys[1]), kBud).is_fails());
  // squash collapses them
  VSet bv = ck.interp_ty(br(sum(unit_at(0), unit_at(0))), E).at(kPoint);
  KeyEnum eb = bv.space().enumerate(8);
  REQUIRE(eb.keys.size() == 2);
  CHECK(eq_v(bv.at(eb.keys[0]), bv.at(eb.keys[1]), kBud).is_holds());
}

TEST_CASE("numeral terms evaluate to their chain values") {
  Checker ck;
  Expr E = ctx_empty();
  CHECK(eq_v(ck.interp_tm(zero(), E).at(kPoint), numeral(0), kBud)
            .is_holds());
  CHECK(eq_v(ck.interp_tm(succ(succ(zero())), E).at(kPoint), numeral(2),
             kBud)
            .is_holds());
  // pairs project back out
  Expr p = pr(zero(), succ(zero()));
  CHECK(eq_v(ck.interp_tm(pr1(p), E).at(kPoint), numeral(0), kBud)
            .is_holds());
  CHECK(eq_v(ck.interp_tm(pr2(p), E).at(kPoint), numeral(1), kBud)
            .is_holds());
}

TEST_CASE("function terms: graph construction and application") {
  Checker ck;
  Expr E = ctx_empty();
  Expr A = unit_at(0);
  Expr B = unit_at(1);
  // lam builds a one-entry graph; app reads it back
  Expr f = lam(A, B, unit_elem(1));
  VSet fv = ck.interp_tm(f, E).at(kPoint);
  CHECK(fv.width() == 1);
  Expr applied = app(A, B, f, unit_elem(0));
  CHECK(eq_v(ck.interp_tm(applied, E).at(kPoint), VSet::empty(), kBud)
            .is_holds());
  // beta as a judgment
  CHECK(holds(check_judgment(jelteq(ctx_empty(), applied, unit_elem(1), B))));
  // the lam is a member of its product type
  CHECK(holds(check_judgment(jelt(ctx_empty(), f, pi(A, B)))));
  // a codomain with two members separates two functions
  Expr S = sum(A, A);
  Expr fl = lam(A, S, lf(A, A, var_()));
  Expr fr = lam(A, S, rg(A, A, var_()));
  Expr al = app(A, S, fl, unit_elem(0));
  CHECK(eq_v(ck.interp_tm(al, E).at(kPoint), inl_v(VSet::empty()), kBud)
            .is_holds());
  CHECK(holds(check_judgment(jelt(E, al, S))));
  CHECK(check_judgment(jelteq(E, al, app(A, S, fr, unit_elem(0)), S))
            .is_fails());
}

TEST_CASE("recursion iterates the step map") {
  // d = 0, e = succ(previous), c = 2 evaluates to 2
  Checker ck;
  Expr E = ctx_empty();
  Expr three = succ(succ(succ(zero())));
  Expr r = rec(nat(), zero(), succ(var_()), three);
  CHECK(eq_v(ck.interp_tm(r, E).at(kPoint), numeral(3), kBud).is_holds());
  // constant step: rec computes d for c = 0
  Expr r0c = rec(nat(), succ(zero()), var_(), zero());
  CHECK(eq_v(ck.interp_tm(r0c, E).at(kPoint), numeral(1), kBud).is_holds());
  // judgment forms
  CHECK(holds(check_judgment(jelteq(E, r, three, nat()))));
  CHECK(holds(check_judgment(jelt(E, r, nat()))));
}

TEST_CASE("sum branching picks the tagged branch") {
  Checker ck;
  Expr E = ctx_empty();
  Expr A = unit_at(0);
  Expr B = unit_at(1);
  // both branch members denote the empty set; d adds one succ, e adds two,
  // so the scrutinee tag is what separates the results
  Expr d = succ(tmsub(var_(), idsub(ctx_ext(E, A))));
  Expr e = succ(succ(tmsub(var_(), idsub(ctx_ext(E, B)))));
  Expr lc = lf(A, B, unit_elem(0));
  Expr rc = rg(A, B, unit_elem(1));
  Expr sl = sumrec(A, B, nat(), d, e, lc);
  Expr sr = sumrec(A, B, nat(), d, e, rc);
  CHECK(eq_v(ck.interp_tm(sl, E).at(kPoint), numeral(1), kBud).is_holds());
  CHECK(eq_v(ck.interp_tm(sr, E).at(kPoint), numeral(2), kBud).is_holds());
  CHECK(holds(check_judgment(jelt(E, lc, sum(A, B)))));
  CHECK(holds(check_judgment(jelteq(E, sl, succ(zero()), nat()))));
}

TEST_CASE("squash elimination needs a constant branch map") {
  Expr E = ctx_empty();
  Expr A2 = sum(unit_at(0), unit_at(0));  // two distinct members
  // constant branch map: fine, evaluates to its constant value
  Expr k = brin(lf(unit_at(0), unit_at(0), unit_elem(0)));
  Expr w_const = wh(A2, nat(), k, succ(zero()));
  CHECK(holds(check_judgment(jelteq(E, w_const, succ(zero()), nat()))));
  // branch map that looks at the member: rejected
  Expr look = sumrec(
      tysub(unit_at(0), down(A2)), tysub(unit_at(0), down(A2)), nat(),
      zero(), succ(zero()),
      tmsub(var_(), idsub(ctx_ext(E, A2))));
  Expr w_look = wh(A2, nat(), k, look);
  Verdict v = check_judgment(jelt(E, w_look, nat()));
  CHECK(v.is_fails());
  CHECK(v.detail.find("constant") != std::string::npos);
}

TEST_CASE("equality types reflect their endpoints") {
  Expr E = ctx_empty();
  // rr lives in the equality set
  CHECK(holds(check_judgment(jelt(E, unit_elem(0), unit_at(0)))));
  // uniqueness: any member equals the reflexivity element
  Expr t = pr1(pr(unit_elem(0), succ(zero())));
  CHECK(holds(check_judgment(jelteq(E, t, unit_elem(0), unit_at(0)))));
  // an unequal-endpoint equality set is empty
  Expr bad = id_ty(nat(), zero(), succ(zero()));
  Verdict v = check_judgment(jelt(E, unit_elem(0), bad));
  CHECK(v.is_fails());
  // reflection: a member of an equality type forces endpoint equality
  Expr G = ctx_ext(E, id_ty(nat(), zero(), zero()));
  CHECK(holds(check_judgment(
      jelteq(G, tmsub(zero(), down(id_ty(nat(), zero(), zero()))),
             tmsub(zero(), down(id_ty(nat(), zero(), zero()))), nat()))));
}

TEST_CASE("spec-level judgment verdicts") {
  Expr E = ctx_empty();
  CHECK(holds(check_judgment(jelt(E, zero(), nat()))));
  CHECK(check_judgment(jtyeq(E, nat(), n0())).is_fails());
  CHECK(holds(check_judgment(jtyeq(E, nat(), nat()))));
  CHECK(check_judgment(jelt(E, zero(), n0())).is_fails());
  CHECK(holds(check_judgment(jctx(ctx_ext(E, nat())))));
  // ill-scoped input fails up front
  CHECK(check_judgment(jelt(E, var_(), nat())).is_fails());
}

TEST_CASE("bounded contexts report bounded passes") {
  Expr G = ctx_ext(ctx_empty(), nat());
  Verdict v = check_judgment(jelt(G, var_(), nat()));
  CHECK(bounded(v));
  CHECK(v.unrefuted_pass());
  CHECK(!v.is_holds());
  v = check_judgment(jtyeq(G, nat(), tysub(nat(), idsub(G))));
  CHECK(bounded(v));
  // a finite context gives a clean holds for the same shapes
  Expr Gf = ctx_ext(ctx_empty(), unit_at(0));
  CHECK(holds(check_judgment(jelt(Gf, var_(), unit_at(0)))));
  CHECK(holds(check_judgment(jtyeq(Gf, unit_at(0),
                                   tysub(unit_at(0), idsub(Gf))))));
}

TEST_CASE("substitutions denote key maps") {
  Checker ck;
  Expr E = ctx_empty();
  Expr A = unit_at(0);
  Expr G = ctx_ext(E, A);
  // identity and weakening
  CHECK(holds(check_judgment(jsub(idsub(G), G, G))));
  CHECK(holds(check_judgment(jsub(down(A), G, E))));
  // pairing: lands in the extension, and weakening undoes it
  Expr pairs = spair(A, idsub(E), unit_elem(0));
  CHECK(holds(check_judgment(jsub(pairs, E, G))));
  CHECK(holds(check_judgment(
      jsubeq(comp(down(A), pairs), idsub(E), E, E))));
  // the whole-context eta law: pairing the weakening with the variable
  CHECK(holds(check_judgment(
      jsubeq(spair(A, down(A), var_()), idsub(G), G, G))));
  // transport between two presentations of one context
  Expr D = ctx_ext(E, tysub(A, idsub(E)));
  CHECK(holds(check_judgment(jctxeq(G, D))));
  CHECK(holds(check_judgment(jsub(phi(G, D), G, D))));
  // transport to an unequal context is refused (all one-point types are
  // equal, so the target needs a genuinely different extension)
  Expr H = ctx_ext(E, sum(A, A));
  Verdict v = check_judgment(jsub(phi(G, H), G, H));
  CHECK(v.is_fails());
  // derived substitutions check through their expansions
  CHECK(holds(check_judgment(jsub(els(A, unit_elem(0)), E, G))));
  Expr GN = ctx_ext(E, nat());
  Verdict st = check_judgment(jsub(stepsub(E), GN, GN));
  CHECK(st.unrefuted_pass());  // bounded: the context streams
  (void)ck;
}

TEST_CASE("substitution composition laws on instances") {
  Expr E = ctx_empty();
  Expr A = unit_at(0);
  Expr G = ctx_ext(E, A);
  // A[id] == A and a[id] == a
  CHECK(holds(check_judgment(jtyeq(G, tysub(A, idsub(G)), A))));
  CHECK(holds(check_judgment(
      jelteq(E, tmsub(zero(), idsub(E)), zero(), nat()))));
  // A[f . g] == A[f][g]
  Expr f = spair(A, idsub(E), unit_elem(0));  // E -> G
  Expr g = down(A);                           // G -> E
  Expr fg = comp(f, g);                       // G -> G
  CHECK(holds(check_judgment(
      jtyeq(G, tysub(tysub(unit_at(1), f), g),
            tysub(unit_at(1), fg)))));
  CHECK(holds(check_judgment(
      jelteq(G, tmsub(tmsub(unit_elem(1), f), g),
             tmsub(unit_elem(1), fg), tysub(tysub(unit_at(1), f), g)))));
}

TEST_CASE("universe membership judgments") {
  Expr E = ctx_empty();
  CHECK(holds(check_judgment(jelt(E, code_of(nat()), u(0)))));
  CHECK(holds(check_judgment(jelt(E, code_of(n0()), u(0)))));
  CHECK(holds(check_judgment(jelt(E, code_of(unit_at(2)), u(0)))));
  CHECK(holds(check_judgment(
      jelt(E, code_of(pi(unit_at(0), unit_at(1))), u(0)))));
  CHECK(holds(check_judgment(
      jelt(E, code_of(sum(unit_at(0), unit_at(0))), u(0)))));
  CHECK(holds(check_judgment(jelt(E, code_of(br(nat())), u(0)))));
  // the tower is cumulative
  CHECK(holds(check_judgment(jelt(E, code_of(u(0)), u(1)))));
  CHECK(holds(check_judgment(jelt(E, code_of(nat()), u(1)))));
  // equal codes are equal universe elements
  CHECK(holds(check_judgment(
      jelteq(E, code_of(tysub(nat(), idsub(E))), code_of(nat()), u(0)))));
  // a universe is not a member of itself as far as the checker can tell
  Verdict v = check_judgment(jelt(E, code_of(u(0)), u(0)));
  CHECK(!v.unrefuted_pass());
}

TEST_CASE("premise recomputation gates evaluation") {
  Expr E = ctx_empty();
  Expr A = unit_at(0);
  Expr B = unit_at(1);
  // applying a non-function
  Verdict v = check_judgment(jelt(E, app(A, B, zero(), unit_elem(0)), B));
  CHECK(v.is_fails());
  CHECK(v.detail.find("function") != std::string::npos);
  // applying to a non-member argument
  v = check_judgment(
      jelt(E, app(A, B, lam(A, B, unit_elem(1)), succ(zero())), B));
  CHECK(v.is_fails());
  // projecting a non-pair
  v = check_judgment(jelt(E, pr1(zero()), nat()));
  CHECK(v.is_fails());
  // eliminating the empty set with keys around
  v = check_judgment(jelt(E, r0(nat(), zero()), nat()));
  CHECK(v.is_fails());
  // but vacuously fine when the context has no keys
  CHECK(holds(check_judgment(
      jelt(ctx_ext(E, n0()), r0(tysub(nat(), down(n0())), var_()),
           tysub(nat(), down(n0()))))));
}

TEST_CASE("tracing records one line per checked judgment") {
  CheckConfig cfg;
  cfg.trace = true;
  Checker ck(cfg);
  (void)ck.check(jelt(ctx_empty(), zero(), nat()));
  (void)ck.check(jtyeq(ctx_empty(), nat(), n0()));
  REQUIRE(ck.trace_log().size() == 2);
  CHECK(ck.trace_log()[0].find("zero") != std::string::npos);
  CHECK(ck.trace_log()[1].find("fails") != std::string::npos);
  ck.clear_trace();
  CHECK(ck.trace_log().empty());
}
