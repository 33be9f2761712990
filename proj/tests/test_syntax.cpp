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

#include "vml/syntax.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

using namespace vml;
using namespace vml::syn;

namespace {

Expr g_nat() { return ctx_ext(ctx_empty(), nat()); }
Expr g_nat2() { return ctx_ext(g_nat(), nat()); }

// Every op appears at least once across this corpus, inside a tree that the
// scope checker also accepts at the paired context (judgments carry their
// own contexts).
struct Sample {
  Cat cat;
  Expr e;
};

std::vector<Sample> corpus() {
  Expr G = g_nat();
  Expr G2 = g_nat2();
  Expr dn = down(nat());
  std::vector<Sample> out;
  // contexts
  out.push_back({Cat::Ctx, ctx_empty()});
  out.push_back({Cat::Ctx, G});
  out.push_back({Cat::Ctx, ctx_ext(G, pi(nat(), nat()))});
  // types
  out.push_back({Cat::Ty, pi(nat(), nat())});
  out.push_back({Cat::Ty, sigma(nat(), id_ty(nat(), var_(), var_()))});
  out.push_back({Cat::Ty, sum(n0(), nat())});
  out.push_back({Cat::Ty, u(2)});
  out.push_back({Cat::Ty, br(nat())});
  out.push_back({Cat::Ty, tysub(nat(), dn)});
  // terms
  out.push_back({Cat::Tm, succ(succ(zero()))});
  out.push_back({Cat::Tm, lam(nat(), nat(), var_())});
  out.push_back({Cat::Tm, app(nat(), nat(), lam(nat(), nat(), var_()),
                              zero())});
  out.push_back({Cat::Tm, pr(zero(), succ(zero()))});
  out.push_back({Cat::Tm, pr1(pr(zero(), zero()))});
  out.push_back({Cat::Tm, pr2(pr(zero(), zero()))});
  out.push_back({Cat::Tm, rr(zero())});
  out.push_back({Cat::Tm, rec(nat(), zero(), var_(), succ(zero()))});
  out.push_back({Cat::Tm, lf(nat(), n0(), zero())});
  out.push_back({Cat::Tm, rg(n0(), nat(), zero())});
  out.push_back({Cat::Tm, brin(zero())});
  out.push_back({Cat::Tm, tmsub(zero(), dn)});
  out.push_back({Cat::Tm, code_of(pi(nat(), nat()))});
  // substitutions
  out.push_back({Cat::Sb, idsub(G)});
  out.push_back({Cat::Sb, comp(dn, dn)});
  out.push_back({Cat::Sb, dn});
  out.push_back({Cat::Sb, spair(nat(), dn, var_())});
  out.push_back({Cat::Sb, phi(G, G)});
  out.push_back({Cat::Sb, els(nat(), zero())});
  out.push_back({Cat::Sb, lift(nat(), dn)});
  out.push_back({Cat::Sb, stepsub(G)});
  out.push_back({Cat::Sb, sumsublf(nat(), n0())});
  out.push_back({Cat::Sb, sumsubrg(n0(), nat())});
  out.push_back({Cat::Sb, prx(nat())});
  out.push_back({Cat::Sb, pry(nat())});
  out.push_back({Cat::Sb, brsb(nat())});
  // judgments
  out.push_back({Cat::Jg, jctx(G)});
  out.push_back({Cat::Jg, jctxeq(G, G)});
  out.push_back({Cat::Jg, jty(G, tysub(nat(), dn))});
  out.push_back({Cat::Jg, jtyeq(G, nat(), nat())});
  out.push_back({Cat::Jg, jelt(ctx_empty(), zero(), nat())});
  out.push_back({Cat::Jg, jelteq(G, var_(), var_(), nat())});
  out.push_back({Cat::Jg, jsub(dn, G, ctx_empty())});
  out.push_back({Cat::Jg, jsubeq(idsub(G), idsub(G), G, G)});
  // terms and types exercising every remaining op inside one judgment
  out.push_back({Cat::Jg,
                 jelt(G,
                      sumrec(nat(), n0(), nat(), var_(), r0(nat(), var_()),
                             lf(nat(), n0(), var_())),
                      nat())});
  out.push_back({Cat::Jg, jelt(G, wh(nat(), nat(), brin(var_()), var_()),
                               br(nat()))});
  out.push_back({Cat::Jg, jelt(G, code_of(nat()), u(0))});
  (void)G2;
  return out;
}

std::string err_of(const std::function<void()>& thunk, ErrorKind want) {
  try {
    thunk();
  } catch (const Error& e) {
    CHECK(e.kind() == want);
    return e.what();
  }
  FAIL("expected an error");
  return "";
}

}  // namespace

TEST_CASE("printing matches the documented surface form") {
  CHECK(print(jelt(ctx_empty(), zero(), nat())) ==
        "(judg elt (ctx) zero nat)");
  CHECK(print(ctx_ext(ctx_ext(ctx_empty(), nat()), pi(nat(), nat()))) ==
        "(ctx nat (pi nat nat))");
  CHECK(print(u(3)) == "(u 3)");
  CHECK(print(var_()) == "var");
  CHECK(print(tmsub(var_(), down(nat()))) == "(tmsub var (down nat))");
  CHECK(print(spair(nat(), idsub(ctx_empty()), zero())) ==
        "(spair nat (idsub (ctx)) zero)");
  CHECK(print(jsubeq(stepsub(ctx_empty()), stepsub(ctx_empty()),
                     g_nat(), g_nat())) ==
        "(judg sub-eq (stepsub (ctx)) (stepsub (ctx)) (ctx nat) (ctx nat))");
  CHECK(print(rec(nat(), zero(), succ(var_()), succ(zero()))) ==
        "(rec nat zero (succ var) (succ zero))");
}

TEST_CASE("parse and print are mutually inverse") {
  for (const Sample& s : corpus()) {
    std::string text = print(s.e);
    CAPTURE(text);
    Expr back = parse_expr(text, s.cat);
    CHECK(back == s.e);
    CHECK(print(back) == text);
  }
  // print . parse restores the text up to whitespace
  std::string noisy =
      "  (judg   elt (ctx  nat)\n   ; a trailing comment\n  var nat)  ";
  Expr e = parse_expr(noisy, Cat::Jg);
  CHECK(print(e) == "(judg elt (ctx nat) var nat)");
  CHECK(parse_expr(print(e), Cat::Jg) == e);
}

TEST_CASE("structural equality and hashing") {
  Expr a = rec(nat(), zero(), var_(), succ(zero()));
  Expr b = rec(nat(), zero(), var_(), succ(zero()));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(ExprHash{}(a) == ExprHash{}(b));
  CHECK(a != rec(nat(), zero(), var_(), zero()));
  CHECK(u(1) != u(2));
  CHECK(nat() != n0());
  // cheap copies share structure
  Expr c = a;
  CHECK(c == a);
}

TEST_CASE("builders reject category misuse") {
  CHECK_THROWS_AS((void)Expr::make(Op::TySub, {nat(), nat()}), Error);
  CHECK_THROWS_AS((void)Expr::make(Op::TmSucc, {nat()}), Error);
  CHECK_THROWS_AS((void)Expr::make(Op::TmSucc, {zero(), zero()}), Error);
}

TEST_CASE("parse errors carry line and column") {
  auto parse_jg = [](const std::string& s) {
    return [s] { (void)parse_expr(s, Cat::Jg); };
  };
  std::string m;
  m = err_of(parse_jg("(judg elt"), ErrorKind::ParseError);
  CHECK(m.find("1:") != std::string::npos);
  m = err_of(parse_jg("\n\n (judg flavor (ctx))"), ErrorKind::ParseError);
  CHECK(m.find("3:") != std::string::npos);
  CHECK(m.find("flavor") != std::string::npos);
  m = err_of(parse_jg("(judg elt (ctx) zero nat) trailing"),
             ErrorKind::ParseError);
  CHECK(m.find("trailing") != std::string::npos);
  // category mismatch inside a form
  m = err_of(parse_jg("(judg elt (ctx) nat nat)"), ErrorKind::ParseError);
  CHECK(m.find("term") != std::string::npos);
  // u needs a numeric level
  m = err_of([] { (void)parse_expr("(u nat)", Cat::Ty); },
             ErrorKind::ParseError);
  CHECK(m.find("level") != std::string::npos);
  m = err_of([] { (void)parse_expr("u", Cat::Ty); }, ErrorKind::ParseError);
  // a keyword of another category is not a term
  m = err_of([] { (void)parse_expr("pi", Cat::Tm); }, ErrorKind::ParseError);
  CHECK(m.find("pi") != std::string::npos);
}

TEST_CASE("files splice definitions and keep item lines") {
  std::string src =
      "; a tiny library\n"
      "(def-ty N nat)\n"
      "(def-ctx G (ctx N N))\n"
      "(def-tm two (succ (succ zero)))\n"
      "(def-sub w (down N))\n"
      "\n"
      "(judg elt G two N)\n"
      "(judg sub w (ctx N) (ctx))\n";
  SourceFile f = parse_file(src);
  REQUIRE(f.items.size() == 2);
  CHECK(f.items[0].line == 7);
  CHECK(f.items[1].line == 8);
  CHECK(f.items[0].judgment ==
        jelt(g_nat2(), succ(succ(zero())), nat()));
  CHECK(f.items[1].judgment == jsub(down(nat()), g_nat(), ctx_empty()));

  std::string m;
  m = err_of([] { (void)parse_file("(def-ty nat nat)"); },
             ErrorKind::ParseError);
  CHECK(m.find("keyword") != std::string::npos);
  m = err_of([] { (void)parse_file("(def-ty A nat)(def-ty A n0)"); },
             ErrorKind::ParseError);
  CHECK(m.find("already defined") != std::string::npos);
  m = err_of([] { (void)parse_file("(def-ty A nat)(judg ctx A)"); },
             ErrorKind::ParseError);
  CHECK(m.find("context") != std::string::npos);
  m = err_of([] { (void)parse_file("(banner hello)"); },
             ErrorKind::ParseError);
  CHECK(m.find("banner") != std::string::npos);
}

TEST_CASE("substitution domains force codomains") {
  Expr G = g_nat();
  std::string why;

  auto cod = [&](const Expr& f, const Expr& dom) {
    auto dc = infer_ctx_of_sub(f, dom, &why);
    REQUIRE_MESSAGE(dc.has_value(), why);
    CHECK(dc->first == dom);
    return dc->second;
  };

  CHECK(cod(idsub(G), G) == G);
  CHECK(cod(down(nat()), G) == ctx_empty());
  CHECK(cod(els(nat(), zero()), ctx_empty()) == G);
  CHECK(cod(spair(nat(), down(nat()), var_()), G) == G);
  CHECK(cod(phi(G, g_nat2()), G) == g_nat2());
  CHECK(cod(stepsub(ctx_empty()), G) == G);
  CHECK(cod(comp(down(nat()), down(nat())), g_nat2()) == ctx_empty());
  CHECK(cod(sumsublf(nat(), n0()), G) ==
        ctx_ext(ctx_empty(), sum(nat(), n0())));
  CHECK(cod(sumsubrg(n0(), nat()), G) ==
        ctx_ext(ctx_empty(), sum(n0(), nat())));
  CHECK(cod(brsb(nat()), G) == ctx_ext(ctx_empty(), br(nat())));
  // lift: over the pulled-back type, into the extended codomain
  Expr lifted_dom = ctx_ext(G, tysub(nat(), down(nat())));
  CHECK(cod(lift(nat(), down(nat())), lifted_dom) == g_nat());
  // two copies of nat collapse to one
  Expr doubled = ctx_ext(G, tysub(nat(), down(nat())));
  CHECK(cod(prx(nat()), doubled) == G);
  CHECK(cod(pry(nat()), doubled) == G);

  // mismatches are reported, not guessed around
  CHECK(!infer_ctx_of_sub(down(n0()), G, &why));
  CHECK(why.find("down") != std::string::npos);
  CHECK(!infer_ctx_of_sub(idsub(G), g_nat2(), &why));
  CHECK(!infer_ctx_of_sub(phi(g_nat2(), G), G, &why));
  CHECK(!infer_ctx_of_sub(stepsub(G), G, &why));
  CHECK(!infer_ctx_of_sub(comp(down(n0()), down(nat())), g_nat2(), &why));
  CHECK(!infer_ctx_of_sub(prx(nat()), G, &why));
  CHECK(!infer_ctx_of_sub(lift(nat(), down(nat())), g_nat2(), &why));
  CHECK(!infer_ctx_of_sub(nat(), G, &why));
}

TEST_CASE("scope checking accepts the corpus judgments") {
  for (const Sample& s : corpus()) {
    if (s.cat != Cat::Jg) continue;
    std::string text = print(s.e);
    CAPTURE(text);
    Verdict v = well_scoped(s.e);
    CHECK_MESSAGE(v.is_holds(), v.str());
  }
}

TEST_CASE("scope checking names the offender") {
  // a variable needs a nonempty context
  Verdict v = well_scoped(jelt(ctx_empty(), var_(), nat()));
  CHECK(v.is_fails());
  CHECK(v.detail.find("variable") != std::string::npos);
  // substitution used at the wrong context
  v = well_scoped(jty(ctx_empty(), tysub(nat(), down(nat()))));
  CHECK(v.is_fails());
  // composition with a mismatched middle context
  v = well_scoped(jsub(comp(down(pi(nat(), nat())), down(nat())), g_nat2(),
                       ctx_empty()));
  CHECK(v.is_fails());
  // judgment claims a codomain the map does not reach
  v = well_scoped(jsub(down(nat()), g_nat(), g_nat()));
  CHECK(v.is_fails());
  CHECK(v.detail.find("claims") != std::string::npos);
  // body of a lambda may use the bound variable; a sibling may not
  CHECK(well_scoped(jelt(ctx_empty(), lam(nat(), nat(), var_()),
                         pi(nat(), nat())))
            .is_holds());
  CHECK(well_scoped(jelt(ctx_empty(), succ(var_()), nat())).is_fails());
  // non-judgment, non-context input is rejected
  CHECK(well_scoped(nat()).is_fails());
  // contexts go through directly
  CHECK(well_scoped(g_nat2()).is_holds());
  CHECK(well_scoped(ctx_ext(ctx_empty(), tysub(nat(), down(nat()))))
            .is_fails());
}

TEST_CASE("derived substitutions expand to their core forms") {
  Expr G = g_nat();
  CHECK(expand_sub(els(nat(), zero()), ctx_empty()) ==
        spair(nat(), idsub(ctx_empty()), zero()));
  CHECK(expand_sub(stepsub(ctx_empty()), G) ==
        spair(nat(), down(nat()), succ(var_())));
  Expr dnn = down(nat());
  CHECK(expand_sub(sumsublf(nat(), n0()), G) ==
        spair(sum(nat(), n0()), dnn,
              lf(tysub(nat(), dnn), tysub(n0(), dnn), var_())));
  CHECK(expand_sub(sumsubrg(n0(), nat()), G) ==
        spair(sum(n0(), nat()), dnn,
              rg(tysub(n0(), dnn), tysub(nat(), dnn), var_())));
  CHECK(expand_sub(brsb(nat()), G) ==
        spair(br(nat()), dnn, brin(var_())));
  Expr doubled = ctx_ext(G, tysub(nat(), dnn));
  CHECK(expand_sub(prx(nat()), doubled) == down(tysub(nat(), dnn)));
  CHECK(expand_sub(pry(nat()), doubled) ==
        spair(nat(), comp(dnn, down(tysub(nat(), dnn))), var_()));
  Expr lifted_dom = ctx_ext(G, tysub(nat(), dnn));
  CHECK(expand_sub(lift(nat(), dnn), lifted_dom) ==
        spair(nat(), comp(dnn, down(tysub(nat(), dnn))), var_()));
  // core forms pass through untouched
  CHECK(expand_sub(idsub(G), G) == idsub(G));
  CHECK(expand_sub(dnn, G) == dnn);
  // lift checks the shape of the context it is used at
  CHECK_THROWS_AS((void)expand_sub(lift(nat(), dnn), G), Error);
}

TEST_CASE("expansion preserves domain and codomain") {
  Expr G = g_nat();
  Expr dnn = down(nat());
  std::vector<std::pair<Expr, Expr>> inst = {
      {els(nat(), zero()), ctx_empty()},
      {stepsub(ctx_empty()), G},
      {sumsublf(nat(), n0()), G},
      {sumsubrg(n0(), nat()), G},
      {brsb(nat()), G},
      {prx(nat()), ctx_ext(G, tysub(nat(), dnn))},
      {pry(nat()), ctx_ext(G, tysub(nat(), dnn))},
      {lift(nat(), dnn), ctx_ext(G, tysub(nat(), dnn))},
  };
  for (const auto& [s, dom] : inst) {
    CAPTURE(print(s));
    REQUIRE(is_derived_sub(s.op()));
    Expr core = expand_sub(s, dom);
    CHECK(!is_derived_sub(core.op()));
    std::string why;
    auto before = infer_ctx_of_sub(s, dom, &why);
    REQUIRE_MESSAGE(before.has_value(), why);
    auto after = infer_ctx_of_sub(core, dom, &why);
    REQUIRE_MESSAGE(after.has_value(), why);
    CHECK(before->second == after->second);
    CHECK(well_scoped_in(dom, core).is_holds());
  }
}
