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

#include "vml/rules.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace vml {
namespace rules {

using syn::Expr;
using syn::Op;

namespace {

using namespace vml::syn;

// ---------------------------------------------------------------------------
// Seeding. Instance seeds depend on the master seed, the rule name, and the
// instance index only, so a report is reproducible rule by rule.

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base, const std::string& rule,
                            std::uint32_t index) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : rule) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return splitmix(splitmix(base ^ h) + index);
}

// Draws kept free of std::uniform_int_distribution so the stream is identical
// on every standard library.
int pick(Rng& g, int n) { return static_cast<int>(g() % std::uint64_t(n)); }
bool coin(Rng& g) { return pick(g, 2) == 1; }

// ---------------------------------------------------------------------------
// Small closed building blocks.

Expr num_tm(int n) {
  Expr e = zero();
  for (int i = 0; i < n; ++i) e = succ(e);
  return e;
}

// The one-point type at index k: the self-equality of a numeral.
Expr unit_ty(int k) { return id_ty(nat(), num_tm(k), num_tm(k)); }
Expr unit_tm(int k) { return rr(num_tm(k)); }

bool is_unit_shape(const Expr& a) {
  return a.op() == Op::TyId && a.kid(0) == nat() && a.kid(1) == a.kid(2);
}

// A closed inhabited type together with a closed member.
struct TyTm {
  Expr ty;
  Expr tm;
};

TyTm rnd_inhab(Rng& g, int depth) {
  int roll = depth <= 0 ? 0 : pick(g, 10);
  if (roll < 4) {
    int k = pick(g, 4);
    return {unit_ty(k), unit_tm(k)};
  }
  if (roll < 6) {
    TyTm l = rnd_inhab(g, depth - 1);
    TyTm r = rnd_inhab(g, depth - 1);
    if (coin(g)) return {sum(l.ty, r.ty), lf(l.ty, r.ty, l.tm)};
    return {sum(l.ty, r.ty), rg(l.ty, r.ty, r.tm)};
  }
  if (roll < 8) {
    TyTm x = rnd_inhab(g, depth - 1);
    TyTm y = rnd_inhab(g, depth - 1);
    return {sigma(x.ty, y.ty), pr(x.tm, y.tm)};
  }
  if (roll < 9) {
    TyTm x = rnd_inhab(g, depth - 1);
    TyTm y = rnd_inhab(g, depth - 1);
    return {pi(x.ty, y.ty), lam(x.ty, y.ty, y.tm)};
  }
  TyTm x = rnd_inhab(g, depth - 1);
  return {br(x.ty), brin(x.tm)};
}

// A closed type that may be uninhabited; used where only formation matters.
Expr rnd_ty(Rng& g, int depth) {
  if (pick(g, 4) == 0) return n0();
  return rnd_inhab(g, depth).ty;
}

// ---------------------------------------------------------------------------
// Contexts. Extension types are closed and inhabited so that judgments over
// the context quantify over at least one point.

struct CtxGen {
  Expr ctx = ctx_empty();
  std::vector<TyTm> exts;   // extension types with members, innermost first
  std::vector<Expr> bases;  // bases[i] is the context below exts[i]
};

CtxGen rnd_ctx(Rng& g) {
  CtxGen c;
  int n = pick(g, 3);
  for (int i = 0; i < n; ++i) {
    TyTm t = rnd_inhab(g, 2);
    c.bases.push_back(c.ctx);
    c.ctx = ctx_ext(c.ctx, t.ty);
    c.exts.push_back(t);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Alternate presentations. Each dress_* returns something semantically equal
// to its argument but usually written differently, so equality rules get
// non-trivial instances.

Expr dress_ty(Rng& g, const Expr& a, const Expr& amb) {
  switch (pick(g, 3)) {
    case 0:
      return a;
    case 1:
      return tysub(a, idsub(amb));
    default:
      // every one-point type has the same single element
      if (is_unit_shape(a)) return unit_ty(pick(g, 4));
      return tysub(a, idsub(amb));
  }
}

Expr dress_tm(Rng& g, const Expr& a, const Expr& amb) {
  if (coin(g)) return tmsub(a, idsub(amb));
  return a;
}

Expr dress_ctx(Rng& g, const Expr& c) {
  if (c.op() != Op::CtxExt) return c;
  Expr base = coin(g) ? dress_ctx(g, c.kid(0)) : c.kid(0);
  return ctx_ext(base, dress_ty(g, c.kid(1), base));
}

Expr dress_sub(Rng& g, const Expr& f, const Expr& dom, const Expr& cod) {
  switch (pick(g, 3)) {
    case 0:
      return f;
    case 1:
      return comp(f, idsub(dom));
    default:
      return comp(idsub(cod), f);
  }
}

// ---------------------------------------------------------------------------
// Substitutions into a generated context.

struct SubG {
  Expr f;
  Expr dom;
};

// A substitution whose codomain is tgt.ctx, with a fresh domain.
SubG rnd_sub_to(Rng& g, const CtxGen& tgt) {
  bool has_ext = !tgt.exts.empty();
  switch (pick(g, has_ext ? 6 : 4)) {
    case 0:
      return {idsub(tgt.ctx), tgt.ctx};
    case 1: {
      TyTm t = rnd_inhab(g, 1);
      return {down(t.ty), ctx_ext(tgt.ctx, t.ty)};
    }
    case 2: {
      TyTm t = rnd_inhab(g, 1);
      return {comp(idsub(tgt.ctx), down(t.ty)), ctx_ext(tgt.ctx, t.ty)};
    }
    case 3: {
      TyTm t1 = rnd_inhab(g, 1);
      TyTm t2 = rnd_inhab(g, 1);
      Expr mid = ctx_ext(tgt.ctx, t1.ty);
      return {comp(down(t1.ty), down(t2.ty)), ctx_ext(mid, t2.ty)};
    }
    case 4:
      return {els(tgt.exts.back().ty, tgt.exts.back().tm), tgt.bases.back()};
    default:
      return {spair(tgt.exts.back().ty, idsub(tgt.bases.back()),
                    tgt.exts.back().tm),
              tgt.bases.back()};
  }
}

// A substitution into a context known only as an expression.
SubG rnd_sub_to_expr(Rng& g, const Expr& tgt) {
  switch (pick(g, 3)) {
    case 0:
      return {idsub(tgt), tgt};
    case 1: {
      TyTm t = rnd_inhab(g, 1);
      return {down(t.ty), ctx_ext(tgt, t.ty)};
    }
    default: {
      TyTm t = rnd_inhab(g, 1);
      return {comp(idsub(tgt), down(t.ty)), ctx_ext(tgt, t.ty)};
    }
  }
}

// ---------------------------------------------------------------------------
// Dependent families over an extended context.

struct Dep {
  Expr ty;      // lives over amb |> base
  Expr m_open;  // member of ty, over amb |> base
  std::function<Expr(const Expr&)> m_at;    // member of ty[els(base, a)]
  std::function<Expr(const Expr&)> remake;  // same family over an equal base
};

Dep rnd_dep(Rng& g, const Expr& base) {
  if (coin(g)) {
    TyTm t = rnd_inhab(g, 1);
    return {t.ty, t.tm, [t](const Expr&) { return t.tm; },
            [t](const Expr&) { return t.ty; }};
  }
  // the one-point family indexed by the last variable
  auto mk = [](const Expr& b) {
    return id_ty(tysub(b, down(b)), var_(), var_());
  };
  return {mk(base), rr(var_()), [](const Expr& a) { return rr(a); },
          [mk](const Expr& b2) { return mk(b2); }};
}

// ---------------------------------------------------------------------------
// Catalog assembly.

using Gen = std::function<Instance(Rng&)>;

void add(std::vector<RuleCase>& v, const char* name, Gen gen) {
  v.push_back({name, std::move(gen)});
}

// ---- presupposition rules: each judgment exposes its well-formed parts ----

void add_presup(std::vector<RuleCase>& v) {
  add(v, "presup-ctx-eq-l", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D)}, jctx(G.ctx)};
  });
  add(v, "presup-ctx-eq-r", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D)}, jctx(D)};
  });
  add(v, "presup-sub-dom", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)}, jctx(h.dom)};
  });
  add(v, "presup-sub-cod", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)}, jctx(G.ctx)};
  });
  add(v, "presup-ty-ctx", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)}, jctx(G.ctx)};
  });
  add(v, "presup-ty-eq-l", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, G.ctx);
    return {{jtyeq(G.ctx, A, B)}, jty(G.ctx, A)};
  });
  add(v, "presup-ty-eq-r", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, G.ctx);
    return {{jtyeq(G.ctx, A, B)}, jty(G.ctx, B)};
  });
  add(v, "presup-elt-ty", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    return {{jelt(G.ctx, t.tm, t.ty)}, jty(G.ctx, t.ty)};
  });
  add(v, "presup-sub-eq-l", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    Expr h2 = dress_sub(g, h.f, h.dom, G.ctx);
    return {{jsubeq(h.f, h2, h.dom, G.ctx)}, jsub(h.f, h.dom, G.ctx)};
  });
  add(v, "presup-sub-eq-r", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    Expr h2 = dress_sub(g, h.f, h.dom, G.ctx);
    return {{jsubeq(h.f, h2, h.dom, G.ctx)}, jsub(h2, h.dom, G.ctx)};
  });
  add(v, "presup-elt-eq-l", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr b = dress_tm(g, t.tm, G.ctx);
    return {{jelteq(G.ctx, t.tm, b, t.ty)}, jelt(G.ctx, t.tm, t.ty)};
  });
  add(v, "presup-elt-eq-r", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr b = dress_tm(g, t.tm, G.ctx);
    return {{jelteq(G.ctx, t.tm, b, t.ty)}, jelt(G.ctx, b, t.ty)};
  });
}

// ---- general equality and substitution rules ----

void add_general(std::vector<RuleCase>& v) {
  add(v, "ctx-eq-refl", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jctxeq(G.ctx, G.ctx)};
  });
  add(v, "ctx-eq-sym", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D)}, jctxeq(D, G.ctx)};
  });
  add(v, "ctx-eq-tra", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    Expr P = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D), jctxeq(D, P)}, jctxeq(G.ctx, P)};
  });
  add(v, "sub-eq-refl", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)}, jsubeq(h.f, h.f, h.dom, G.ctx)};
  });
  add(v, "sub-eq-sym", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    Expr h2 = dress_sub(g, h.f, h.dom, G.ctx);
    return {{jsubeq(h.f, h2, h.dom, G.ctx)}, jsubeq(h2, h.f, h.dom, G.ctx)};
  });
  add(v, "sub-eq-tra", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    Expr h2 = dress_sub(g, h.f, h.dom, G.ctx);
    Expr h3 = dress_sub(g, h.f, h.dom, G.ctx);
    return {{jsubeq(h.f, h2, h.dom, G.ctx), jsubeq(h2, h3, h.dom, G.ctx)},
            jsubeq(h.f, h3, h.dom, G.ctx)};
  });
  add(v, "sub-id", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jsub(idsub(G.ctx), G.ctx, G.ctx)};
  });
  add(v, "sub-comp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG f = rnd_sub_to(g, G);
    SubG k = rnd_sub_to_expr(g, f.dom);
    return {{jsub(k.f, k.dom, f.dom), jsub(f.f, f.dom, G.ctx)},
            jsub(comp(f.f, k.f), k.dom, G.ctx)};
  });
  add(v, "comp-id-right", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)},
            jsubeq(comp(h.f, idsub(h.dom)), h.f, h.dom, G.ctx)};
  });
  add(v, "comp-id-left", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)},
            jsubeq(comp(idsub(G.ctx), h.f), h.f, h.dom, G.ctx)};
  });
  add(v, "comp-assoc", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG f1 = rnd_sub_to(g, G);
    SubG f2 = rnd_sub_to_expr(g, f1.dom);
    SubG f3 = rnd_sub_to_expr(g, f2.dom);
    return {{jsub(f3.f, f3.dom, f2.dom), jsub(f2.f, f2.dom, f1.dom),
             jsub(f1.f, f1.dom, G.ctx)},
            jsubeq(comp(comp(f1.f, f2.f), f3.f),
                   comp(f1.f, comp(f2.f, f3.f)), f3.dom, G.ctx)};
  });
  add(v, "comp-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG f = rnd_sub_to(g, G);
    Expr f2 = dress_sub(g, f.f, f.dom, G.ctx);
    SubG k = rnd_sub_to_expr(g, f.dom);
    Expr k2 = dress_sub(g, k.f, k.dom, f.dom);
    return {{jsubeq(k.f, k2, k.dom, f.dom), jsubeq(f.f, f2, f.dom, G.ctx)},
            jsubeq(comp(f.f, k.f), comp(f2, k2), k.dom, G.ctx)};
  });
  add(v, "subst-trp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D)}, jsub(phi(G.ctx, D), G.ctx, D)};
  });
  add(v, "subst-trp-irr", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D), jctxeq(G.ctx, D)},
            jsubeq(phi(G.ctx, D), phi(G.ctx, D), G.ctx, D)};
  });
  add(v, "subst-trp-id", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctxeq(G.ctx, G.ctx)},
            jsubeq(phi(G.ctx, G.ctx), idsub(G.ctx), G.ctx, G.ctx)};
  });
  add(v, "subst-trp-fun", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    Expr P = dress_ctx(g, G.ctx);
    return {{jctxeq(G.ctx, D), jctxeq(D, P), jctxeq(G.ctx, P)},
            jsubeq(comp(phi(D, P), phi(G.ctx, D)), phi(G.ctx, P), G.ctx, P)};
  });
  add(v, "ty-eq-refl", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)}, jtyeq(G.ctx, A, A)};
  });
  add(v, "ty-eq-sym", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, G.ctx);
    return {{jtyeq(G.ctx, A, B)}, jtyeq(G.ctx, B, A)};
  });
  add(v, "ty-eq-tra", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, G.ctx);
    Expr C = dress_ty(g, A, G.ctx);
    return {{jtyeq(G.ctx, A, B), jtyeq(G.ctx, B, C)}, jtyeq(G.ctx, A, C)};
  });
  add(v, "tm-eq-refl", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    return {{jelt(G.ctx, t.tm, t.ty)}, jelteq(G.ctx, t.tm, t.tm, t.ty)};
  });
  add(v, "tm-eq-sym", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr b = dress_tm(g, t.tm, G.ctx);
    return {{jelteq(G.ctx, t.tm, b, t.ty)}, jelteq(G.ctx, b, t.tm, t.ty)};
  });
  add(v, "tm-eq-tra", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr b = dress_tm(g, t.tm, G.ctx);
    Expr c = dress_tm(g, t.tm, G.ctx);
    return {{jelteq(G.ctx, t.tm, b, t.ty), jelteq(G.ctx, b, c, t.ty)},
            jelteq(G.ctx, t.tm, c, t.ty)};
  });
  add(v, "elt-ty-eq", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr B = dress_ty(g, t.ty, G.ctx);
    return {{jelt(G.ctx, t.tm, t.ty), jtyeq(G.ctx, t.ty, B)},
            jelt(G.ctx, t.tm, B)};
  });
  add(v, "elt-eq-ty-eq", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr b = dress_tm(g, t.tm, G.ctx);
    Expr B = dress_ty(g, t.ty, G.ctx);
    return {{jelteq(G.ctx, t.tm, b, t.ty), jtyeq(G.ctx, t.ty, B)},
            jelteq(G.ctx, t.tm, b, B)};
  });
  add(v, "ty-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jty(G.ctx, A), jsub(h.f, h.dom, G.ctx)},
            jty(h.dom, tysub(A, h.f))};
  });
  add(v, "ty-eq-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, G.ctx);
    SubG h = rnd_sub_to(g, G);
    return {{jtyeq(G.ctx, A, B), jsub(h.f, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(A, h.f), tysub(B, h.f))};
  });
  add(v, "ty-sub-eq", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    SubG h = rnd_sub_to(g, G);
    Expr h2 = dress_sub(g, h.f, h.dom, G.ctx);
    return {{jty(G.ctx, A), jsubeq(h.f, h2, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(A, h.f), tysub(A, h2))};
  });
  add(v, "ty-sub-id", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)}, jtyeq(G.ctx, tysub(A, idsub(G.ctx)), A)};
  });
  add(v, "ty-sub-comp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    SubG f1 = rnd_sub_to(g, G);
    SubG f2 = rnd_sub_to_expr(g, f1.dom);
    return {{jty(G.ctx, A), jsub(f2.f, f2.dom, f1.dom),
             jsub(f1.f, f1.dom, G.ctx)},
            jtyeq(f2.dom, tysub(A, comp(f1.f, f2.f)),
                  tysub(tysub(A, f1.f), f2.f))};
  });
  add(v, "elt-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jelt(G.ctx, t.tm, t.ty), jsub(h.f, h.dom, G.ctx)},
            jelt(h.dom, tmsub(t.tm, h.f), tysub(t.ty, h.f))};
  });
  add(v, "elt-eq-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    Expr b = dress_tm(g, t.tm, G.ctx);
    SubG h = rnd_sub_to(g, G);
    return {{jelteq(G.ctx, t.tm, b, t.ty), jsub(h.f, h.dom, G.ctx)},
            jelteq(h.dom, tmsub(t.tm, h.f), tmsub(b, h.f),
                   tysub(t.ty, h.f))};
  });
  add(v, "elt-sub-eq", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    SubG h = rnd_sub_to(g, G);
    Expr h2 = dress_sub(g, h.f, h.dom, G.ctx);
    return {{jelt(G.ctx, t.tm, t.ty), jsubeq(h.f, h2, h.dom, G.ctx)},
            jelteq(h.dom, tmsub(t.tm, h.f), tmsub(t.tm, h2),
                   tysub(t.ty, h.f))};
  });
  add(v, "elt-sub-id", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    return {{jelt(G.ctx, t.tm, t.ty)},
            jelteq(G.ctx, tmsub(t.tm, idsub(G.ctx)), t.tm, t.ty)};
  });
  add(v, "elt-sub-comp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm t = rnd_inhab(g, 2);
    SubG f1 = rnd_sub_to(g, G);
    SubG f2 = rnd_sub_to_expr(g, f1.dom);
    return {{jelt(G.ctx, t.tm, t.ty), jsub(f2.f, f2.dom, f1.dom),
             jsub(f1.f, f1.dom, G.ctx)},
            jelteq(f2.dom, tmsub(t.tm, comp(f1.f, f2.f)),
                   tmsub(tmsub(t.tm, f1.f), f2.f),
                   tysub(t.ty, comp(f1.f, f2.f)))};
  });
}

// ---- context formation and extension rules ----

void add_extension(std::vector<RuleCase>& v) {
  add(v, "ctx-empty", [](Rng&) -> Instance {
    return {{}, jctx(ctx_empty())};
  });
  add(v, "ctx-ext", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)}, jctx(ctx_ext(G.ctx, A))};
  });
  add(v, "ctx-ext-eq", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, G.ctx);
    return {{jty(G.ctx, A), jty(G.ctx, B), jtyeq(G.ctx, A, B)},
            jctxeq(ctx_ext(G.ctx, A), ctx_ext(G.ctx, B))};
  });
  add(v, "ctx-ext-eq-gen", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, D);
    return {{jty(G.ctx, A), jty(D, B), jctxeq(G.ctx, D),
             jtyeq(G.ctx, A, tysub(B, phi(G.ctx, D)))},
            jctxeq(ctx_ext(G.ctx, A), ctx_ext(D, B))};
  });
  add(v, "down", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)}, jsub(down(A), ctx_ext(G.ctx, A), G.ctx)};
  });
  add(v, "down-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, D);
    Expr GA = ctx_ext(G.ctx, A);
    Expr DB = ctx_ext(D, B);
    return {{jty(G.ctx, A), jty(D, B), jctxeq(G.ctx, D),
             jtyeq(G.ctx, A, tysub(B, phi(G.ctx, D)))},
            jsubeq(comp(phi(G.ctx, D), down(A)), comp(down(B), phi(GA, DB)),
                   GA, D)};
  });
  add(v, "asm", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)},
            jelt(ctx_ext(G.ctx, A), var_(), tysub(A, down(A)))};
  });
  add(v, "asm-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr D = dress_ctx(g, G.ctx);
    Expr A = rnd_ty(g, 2);
    Expr B = dress_ty(g, A, D);
    Expr GA = ctx_ext(G.ctx, A);
    Expr DB = ctx_ext(D, B);
    return {{jty(G.ctx, A), jty(D, B), jctxeq(G.ctx, D),
             jtyeq(G.ctx, A, tysub(B, phi(G.ctx, D)))},
            jelteq(GA, var_(), tmsub(var_(), phi(GA, DB)),
                   tysub(A, down(A)))};
  });
  add(v, "ext", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    SubG f = rnd_sub_to(g, G);
    Expr a = dress_tm(g, A.tm, f.dom);
    return {{jsub(f.f, f.dom, G.ctx), jty(G.ctx, A.ty),
             jelt(f.dom, a, tysub(A.ty, f.f))},
            jsub(spair(A.ty, f.f, a), f.dom, ctx_ext(G.ctx, A.ty))};
  });
  add(v, "ext-irr", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    SubG f = rnd_sub_to(g, G);
    Expr a = dress_tm(g, A.tm, f.dom);
    Expr pairing = spair(A.ty, f.f, a);
    return {{jsub(f.f, f.dom, G.ctx), jty(G.ctx, A.ty),
             jelt(f.dom, a, tysub(A.ty, f.f)),
             jelt(f.dom, a, tysub(A.ty, f.f))},
            jsubeq(pairing, pairing, f.dom, ctx_ext(G.ctx, A.ty))};
  });
  add(v, "ext-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    SubG f = rnd_sub_to(g, G);
    Expr f2 = dress_sub(g, f.f, f.dom, G.ctx);
    Expr a = dress_tm(g, A.tm, f.dom);
    Expr b = dress_tm(g, A.tm, f.dom);
    return {{jsubeq(f.f, f2, f.dom, G.ctx), jty(G.ctx, A.ty),
             jelt(f.dom, a, tysub(A.ty, f.f)),
             jelt(f.dom, b, tysub(A.ty, f2)),
             jelteq(f.dom, a, b, tysub(A.ty, f.f))},
            jsubeq(spair(A.ty, f.f, a), spair(A.ty, f2, b), f.dom,
                   ctx_ext(G.ctx, A.ty))};
  });
  add(v, "ext-prop-1", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    SubG f = rnd_sub_to(g, G);
    Expr a = dress_tm(g, A.tm, f.dom);
    return {{jsub(f.f, f.dom, G.ctx), jty(G.ctx, A.ty),
             jelt(f.dom, a, tysub(A.ty, f.f))},
            jsubeq(comp(down(A.ty), spair(A.ty, f.f, a)), f.f, f.dom,
                   G.ctx)};
  });
  add(v, "ext-prop-2", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    SubG f = rnd_sub_to(g, G);
    Expr a = dress_tm(g, A.tm, f.dom);
    return {{jsub(f.f, f.dom, G.ctx), jty(G.ctx, A.ty),
             jelt(f.dom, a, tysub(A.ty, f.f))},
            jelteq(f.dom, tmsub(var_(), spair(A.ty, f.f, a)), a,
                   tysub(A.ty, f.f))};
  });
  add(v, "ext-prop-3", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Expr GA = ctx_ext(G.ctx, A.ty);
    return {{jty(G.ctx, A.ty)},
            jsubeq(spair(A.ty, down(A.ty), var_()), idsub(GA), GA, GA)};
  });
  add(v, "ext-comp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    SubG f = rnd_sub_to(g, G);
    Expr a = dress_tm(g, A.tm, f.dom);
    SubG k = rnd_sub_to_expr(g, f.dom);
    return {{jsub(k.f, k.dom, f.dom), jsub(f.f, f.dom, G.ctx),
             jty(G.ctx, A.ty), jelt(f.dom, a, tysub(A.ty, f.f)),
             jelt(k.dom, tmsub(a, k.f), tysub(A.ty, comp(f.f, k.f)))},
            jsubeq(comp(spair(A.ty, f.f, a), k.f),
                   spair(A.ty, comp(f.f, k.f), tmsub(a, k.f)), k.dom,
                   ctx_ext(G.ctx, A.ty))};
  });
  add(v, "els", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Expr a = dress_tm(g, A.tm, G.ctx);
    return {{jelt(G.ctx, a, A.ty)},
            jsub(els(A.ty, a), G.ctx, ctx_ext(G.ctx, A.ty))};
  });
  add(v, "els-exp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Expr a = dress_tm(g, A.tm, G.ctx);
    return {{jelt(G.ctx, a, A.ty)},
            jsubeq(els(A.ty, a), spair(A.ty, idsub(G.ctx), a), G.ctx,
                   ctx_ext(G.ctx, A.ty))};
  });
  add(v, "lift", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jty(G.ctx, A), jsub(h.f, h.dom, G.ctx)},
            jsub(lift(A, h.f), ctx_ext(h.dom, tysub(A, h.f)),
                 ctx_ext(G.ctx, A))};
  });
  add(v, "lift-exp", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    SubG h = rnd_sub_to(g, G);
    Expr ah = tysub(A, h.f);
    return {{jty(G.ctx, A), jsub(h.f, h.dom, G.ctx)},
            jsubeq(lift(A, h.f), spair(A, comp(h.f, down(ah)), var_()),
                   ctx_ext(h.dom, ah), ctx_ext(G.ctx, A))};
  });
}

// ---- function type rules ----

void add_pi(std::vector<RuleCase>& v) {
  add(v, "pi-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    return {{jty(G.ctx, A.ty), jty(ctx_ext(G.ctx, A.ty), B.ty)},
            jty(G.ctx, pi(A.ty, B.ty))};
  });
  add(v, "pi-i", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr GA = ctx_ext(G.ctx, A.ty);
    return {{jty(G.ctx, A.ty), jty(GA, B.ty), jelt(GA, B.m_open, B.ty)},
            jelt(G.ctx, lam(A.ty, B.ty, B.m_open), pi(A.ty, B.ty))};
  });
  add(v, "pi-e", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr GA = ctx_ext(G.ctx, A.ty);
    Expr c = lam(A.ty, B.ty, B.m_open);
    Expr a = dress_tm(g, A.tm, G.ctx);
    return {{jty(G.ctx, A.ty), jty(GA, B.ty),
             jelt(G.ctx, c, pi(A.ty, B.ty)), jelt(G.ctx, a, A.ty)},
            jelt(G.ctx, app(A.ty, B.ty, c, a), tysub(B.ty, els(A.ty, a)))};
  });
  add(v, "pi-beta", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr GA = ctx_ext(G.ctx, A.ty);
    Expr c = lam(A.ty, B.ty, B.m_open);
    Expr a = dress_tm(g, A.tm, G.ctx);
    return {{jty(G.ctx, A.ty), jty(GA, B.ty),
             jelt(G.ctx, c, pi(A.ty, B.ty)), jelt(G.ctx, a, A.ty)},
            jelteq(G.ctx, app(A.ty, B.ty, c, a),
                   tmsub(B.m_open, els(A.ty, a)),
                   tysub(B.ty, els(A.ty, a)))};
  });
  add(v, "pi-eta", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr GA = ctx_ext(G.ctx, A.ty);
    Expr c = lam(A.ty, B.ty, B.m_open);
    Expr aw = tysub(A.ty, down(A.ty));
    Expr bw = tysub(B.ty, lift(A.ty, down(A.ty)));
    Expr inner = app(aw, bw, tmsub(c, down(A.ty)), var_());
    return {{jelt(G.ctx, c, pi(A.ty, B.ty)),
             jelt(GA, var_(), aw),
             jelt(GA, tmsub(c, down(A.ty)), pi(aw, bw))},
            jelteq(G.ctx, lam(A.ty, B.ty, inner), c, pi(A.ty, B.ty))};
  });
  add(v, "pi-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    SubG h = rnd_sub_to(g, G);
    return {{jty(G.ctx, A.ty), jty(ctx_ext(G.ctx, A.ty), B.ty),
             jsub(h.f, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(pi(A.ty, B.ty), h.f),
                  pi(tysub(A.ty, h.f), tysub(B.ty, lift(A.ty, h.f))))};
  });
  add(v, "lam-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr GA = ctx_ext(G.ctx, A.ty);
    SubG h = rnd_sub_to(g, G);
    Expr up = lift(A.ty, h.f);
    return {{jty(G.ctx, A.ty), jty(GA, B.ty), jelt(GA, B.m_open, B.ty),
             jsub(h.f, h.dom, G.ctx)},
            jelteq(h.dom, tmsub(lam(A.ty, B.ty, B.m_open), h.f),
                   lam(tysub(A.ty, h.f), tysub(B.ty, up),
                       tmsub(B.m_open, up)),
                   tysub(pi(A.ty, B.ty), h.f))};
  });
  add(v, "app-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = lam(A.ty, B.ty, B.m_open);
    Expr a = dress_tm(g, A.tm, G.ctx);
    SubG h = rnd_sub_to(g, G);
    Expr up = lift(A.ty, h.f);
    return {{jelt(G.ctx, c, pi(A.ty, B.ty)), jelt(G.ctx, a, A.ty),
             jsub(h.f, h.dom, G.ctx),
             jelt(h.dom, tmsub(c, h.f),
                  pi(tysub(A.ty, h.f), tysub(B.ty, up))),
             jelt(h.dom, tmsub(a, h.f), tysub(A.ty, h.f))},
            jelteq(h.dom, tmsub(app(A.ty, B.ty, c, a), h.f),
                   app(tysub(A.ty, h.f), tysub(B.ty, up), tmsub(c, h.f),
                       tmsub(a, h.f)),
                   tysub(tysub(B.ty, els(A.ty, a)), h.f))};
  });
  add(v, "pi-f-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr A2 = dress_ty(g, A.ty, G.ctx);
    Expr B2 = B.remake(A2);
    Expr GA = ctx_ext(G.ctx, A.ty);
    Expr GA2 = ctx_ext(G.ctx, A2);
    return {{jtyeq(G.ctx, A.ty, A2), jty(GA, B.ty), jty(GA2, B2),
             jtyeq(GA, B.ty, tysub(B2, phi(GA, GA2)))},
            jtyeq(G.ctx, pi(A.ty, B.ty), pi(A2, B2))};
  });
  add(v, "pi-xi", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr GA = ctx_ext(G.ctx, A.ty);
    Expr b2 = dress_tm(g, B.m_open, GA);
    return {{jty(G.ctx, A.ty), jty(GA, B.ty), jelt(GA, B.m_open, B.ty),
             jelt(GA, b2, B.ty), jelteq(GA, B.m_open, b2, B.ty)},
            jelteq(G.ctx, lam(A.ty, B.ty, B.m_open), lam(A.ty, B.ty, b2),
                   pi(A.ty, B.ty))};
  });
  add(v, "app-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = lam(A.ty, B.ty, B.m_open);
    Expr c2 = dress_tm(g, c, G.ctx);
    Expr a = A.tm;
    Expr a2 = dress_tm(g, a, G.ctx);
    Expr P = pi(A.ty, B.ty);
    return {{jelt(G.ctx, c, P), jelt(G.ctx, c2, P),
             jelteq(G.ctx, c, c2, P), jelt(G.ctx, a, A.ty),
             jelt(G.ctx, a2, A.ty), jelteq(G.ctx, a, a2, A.ty)},
            jelteq(G.ctx, app(A.ty, B.ty, c, a), app(A.ty, B.ty, c2, a2),
                   tysub(B.ty, els(A.ty, a)))};
  });
}

// ---- equality type rules ----

void add_id(std::vector<RuleCase>& v) {
  add(v, "id-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr a = T.tm;
    // endpoints may differ: an empty equality type is still a type
    Expr b;
    if (pick(g, 3) == 0) {
      TyTm l = rnd_inhab(g, 1);
      TyTm r = rnd_inhab(g, 1);
      T = {sum(l.ty, r.ty), lf(l.ty, r.ty, l.tm)};
      a = T.tm;
      b = rg(l.ty, r.ty, r.tm);
    } else {
      b = dress_tm(g, a, G.ctx);
    }
    return {{jty(G.ctx, T.ty), jelt(G.ctx, a, T.ty), jelt(G.ctx, b, T.ty)},
            jty(G.ctx, id_ty(T.ty, a, b))};
  });
  add(v, "id-i", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    return {{jelt(G.ctx, T.tm, T.ty)},
            jelt(G.ctx, rr(T.tm), id_ty(T.ty, T.tm, T.tm))};
  });
  add(v, "id-e", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr b = dress_tm(g, T.tm, G.ctx);
    Expr t = rr(coin(g) ? T.tm : b);
    return {{jelt(G.ctx, T.tm, T.ty), jelt(G.ctx, b, T.ty),
             jelt(G.ctx, t, id_ty(T.ty, T.tm, b))},
            jelteq(G.ctx, T.tm, b, T.ty)};
  });
  add(v, "id-uip", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr t = rr(dress_tm(g, T.tm, G.ctx));
    Expr ty = id_ty(T.ty, T.tm, T.tm);
    return {{jelt(G.ctx, T.tm, T.ty), jelt(G.ctx, T.tm, T.ty),
             jelt(G.ctx, t, ty)},
            jelteq(G.ctx, t, rr(T.tm), ty)};
  });
  add(v, "id-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr b = dress_tm(g, T.tm, G.ctx);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jelt(G.ctx, T.tm, T.ty),
             jelt(G.ctx, b, T.ty),
             jelt(h.dom, tmsub(T.tm, h.f), tysub(T.ty, h.f)),
             jelt(h.dom, tmsub(b, h.f), tysub(T.ty, h.f))},
            jtyeq(h.dom, tysub(id_ty(T.ty, T.tm, b), h.f),
                  id_ty(tysub(T.ty, h.f), tmsub(T.tm, h.f),
                        tmsub(b, h.f)))};
  });
  add(v, "rr-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jty(G.ctx, T.ty),
             jelt(G.ctx, T.tm, T.ty)},
            jelteq(h.dom, tmsub(rr(T.tm), h.f), rr(tmsub(T.tm, h.f)),
                   tysub(id_ty(T.ty, T.tm, T.tm), h.f))};
  });
  add(v, "id-f-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr T2 = dress_ty(g, T.ty, G.ctx);
    Expr a = T.tm;
    Expr b = dress_tm(g, a, G.ctx);
    Expr a2 = dress_tm(g, a, G.ctx);
    Expr b2 = dress_tm(g, b, G.ctx);
    return {{jelt(G.ctx, a, T.ty), jelt(G.ctx, a2, T2),
             jelt(G.ctx, b, T.ty), jelt(G.ctx, b2, T2),
             jtyeq(G.ctx, T.ty, T2), jelteq(G.ctx, a, a2, T.ty),
             jelteq(G.ctx, b, b2, T.ty)},
            jtyeq(G.ctx, id_ty(T.ty, a, b), id_ty(T2, a2, b2))};
  });
  add(v, "rr-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr b = dress_tm(g, T.tm, G.ctx);
    return {{jelt(G.ctx, T.tm, T.ty), jelteq(G.ctx, T.tm, b, T.ty)},
            jelteq(G.ctx, rr(T.tm), rr(b), id_ty(T.ty, T.tm, T.tm))};
  });
}

// ---- pair type rules ----

void add_sigma(std::vector<RuleCase>& v) {
  add(v, "sigma-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    return {{jty(G.ctx, A.ty), jty(ctx_ext(G.ctx, A.ty), B.ty)},
            jty(G.ctx, sigma(A.ty, B.ty))};
  });
  add(v, "sigma-i", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr a = dress_tm(g, A.tm, G.ctx);
    Expr b = B.m_at(a);
    return {{jelt(G.ctx, a, A.ty),
             jelt(G.ctx, b, tysub(B.ty, els(A.ty, a)))},
            jelt(G.ctx, pr(a, b), sigma(A.ty, B.ty))};
  });
  add(v, "sigma-e-1", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    return {{jelt(G.ctx, c, sigma(A.ty, B.ty))}, jelt(G.ctx, pr1(c), A.ty)};
  });
  add(v, "sigma-e-2", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    return {{jelt(G.ctx, c, sigma(A.ty, B.ty)),
             jelt(G.ctx, pr1(c), A.ty)},
            jelt(G.ctx, pr2(c), tysub(B.ty, els(A.ty, pr1(c))))};
  });
  add(v, "sigma-c-1", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr a = dress_tm(g, A.tm, G.ctx);
    Expr b = B.m_at(a);
    return {{jelt(G.ctx, a, A.ty),
             jelt(G.ctx, b, tysub(B.ty, els(A.ty, a))),
             jelt(G.ctx, pr(a, b), sigma(A.ty, B.ty))},
            jelteq(G.ctx, pr1(pr(a, b)), a, A.ty)};
  });
  add(v, "sigma-c-2", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr a = dress_tm(g, A.tm, G.ctx);
    Expr b = B.m_at(a);
    return {{jelt(G.ctx, a, A.ty),
             jelt(G.ctx, b, tysub(B.ty, els(A.ty, a))),
             jelt(G.ctx, pr(a, b), sigma(A.ty, B.ty))},
            jelteq(G.ctx, pr2(pr(a, b)), b, tysub(B.ty, els(A.ty, a)))};
  });
  add(v, "sigma-eta", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    Expr S = sigma(A.ty, B.ty);
    return {{jelt(G.ctx, c, S)},
            jelteq(G.ctx, c, pr(pr1(c), pr2(c)), S)};
  });
  add(v, "sigma-f-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr A2 = dress_ty(g, A.ty, G.ctx);
    Expr B2 = B.remake(A2);
    Expr GA = ctx_ext(G.ctx, A.ty);
    Expr GA2 = ctx_ext(G.ctx, A2);
    return {{jtyeq(G.ctx, A.ty, A2), jty(GA, B.ty), jty(GA2, B2),
             jtyeq(GA, B.ty, tysub(B2, phi(GA, GA2)))},
            jtyeq(G.ctx, sigma(A.ty, B.ty), sigma(A2, B2))};
  });
  add(v, "pair-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr a = A.tm;
    Expr a2 = dress_tm(g, a, G.ctx);
    Expr b = B.m_at(a);
    Expr b2 = dress_tm(g, b, G.ctx);
    return {{jelt(G.ctx, a, A.ty), jelteq(G.ctx, a, a2, A.ty),
             jelteq(G.ctx, b, b2, tysub(B.ty, els(A.ty, a)))},
            jelteq(G.ctx, pr(a, b), pr(a2, b2), sigma(A.ty, B.ty))};
  });
  add(v, "pr1-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    Expr c2 = dress_tm(g, c, G.ctx);
    Expr S = sigma(A.ty, B.ty);
    return {{jelt(G.ctx, c, S), jelt(G.ctx, c2, S),
             jelteq(G.ctx, c, c2, S)},
            jelteq(G.ctx, pr1(c), pr1(c2), A.ty)};
  });
  add(v, "pr2-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    Expr c2 = dress_tm(g, c, G.ctx);
    Expr S = sigma(A.ty, B.ty);
    return {{jelt(G.ctx, c, S), jelt(G.ctx, c2, S),
             jelteq(G.ctx, c, c2, S), jelt(G.ctx, pr1(c), A.ty)},
            jelteq(G.ctx, pr2(c), pr2(c2),
                   tysub(B.ty, els(A.ty, pr1(c))))};
  });
  add(v, "sigma-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    SubG h = rnd_sub_to(g, G);
    return {{jty(G.ctx, A.ty), jty(ctx_ext(G.ctx, A.ty), B.ty),
             jsub(h.f, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(sigma(A.ty, B.ty), h.f),
                  sigma(tysub(A.ty, h.f), tysub(B.ty, lift(A.ty, h.f))))};
  });
  add(v, "pair-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr a = A.tm;
    Expr b = B.m_at(a);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jelt(G.ctx, a, A.ty),
             jelt(G.ctx, b, tysub(B.ty, els(A.ty, a)))},
            jelteq(h.dom, tmsub(pr(a, b), h.f),
                   pr(tmsub(a, h.f), tmsub(b, h.f)),
                   tysub(sigma(A.ty, B.ty), h.f))};
  });
  add(v, "pr1-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    SubG h = rnd_sub_to(g, G);
    Expr Sh = sigma(tysub(A.ty, h.f), tysub(B.ty, lift(A.ty, h.f)));
    return {{jsub(h.f, h.dom, G.ctx),
             jelt(G.ctx, c, sigma(A.ty, B.ty)),
             jelt(h.dom, tmsub(c, h.f), Sh)},
            jelteq(h.dom, tmsub(pr1(c), h.f), pr1(tmsub(c, h.f)),
                   tysub(A.ty, h.f))};
  });
  add(v, "pr2-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    Expr c = pr(A.tm, B.m_at(A.tm));
    SubG h = rnd_sub_to(g, G);
    Expr Sh = sigma(tysub(A.ty, h.f), tysub(B.ty, lift(A.ty, h.f)));
    return {{jsub(h.f, h.dom, G.ctx),
             jelt(G.ctx, c, sigma(A.ty, B.ty)),
             jelt(h.dom, tmsub(c, h.f), Sh),
             jelt(h.dom, tmsub(pr1(c), h.f), tysub(A.ty, h.f))},
            jelteq(h.dom, tmsub(pr2(c), h.f), pr2(tmsub(c, h.f)),
                   tysub(tysub(B.ty, lift(A.ty, h.f)),
                         els(tysub(A.ty, h.f), tmsub(pr1(c), h.f))))};
  });
}

// ---- natural number rules ----

// A recursion motive over ctx |> nat, with a base case and a step term
// (the step lives over ctx |> nat |> motive).
struct NatMotive {
  Expr C;
  Expr d;
  Expr e;
};

NatMotive rnd_nat_motive(Rng& g) {
  switch (pick(g, 4)) {
    case 0:
      // counting: start somewhere, apply the successor each step
      return {nat(), num_tm(pick(g, 4)), succ(var_())};
    case 1: {
      // constant type, carrying the accumulator through
      TyTm t = rnd_inhab(g, 1);
      return {t.ty, t.tm, var_()};
    }
    case 2: {
      // constant type, resetting to the same member each step
      TyTm t = rnd_inhab(g, 1);
      return {t.ty, t.tm, t.tm};
    }
    default: {
      // the one-point family over the recursion argument
      Expr c = id_ty(tysub(nat(), down(nat())), var_(), var_());
      return {c, rr(zero()), rr(zero())};
    }
  }
}

void add_nat(std::vector<RuleCase>& v) {
  add(v, "nat-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jty(G.ctx, nat())};
  });
  add(v, "nat-i-zero", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jelt(G.ctx, zero(), nat())};
  });
  add(v, "nat-i-succ", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr a = dress_tm(g, num_tm(pick(g, 6)), G.ctx);
    return {{jelt(G.ctx, a, nat())}, jelt(G.ctx, succ(a), nat())};
  });
  auto nat_e_premises = [](const CtxGen& G, const NatMotive& m) {
    Expr GN = ctx_ext(G.ctx, nat());
    return std::vector<Expr>{
        jty(GN, m.C),
        jelt(G.ctx, m.d, tysub(m.C, els(nat(), zero()))),
        jelt(ctx_ext(GN, m.C), m.e,
             tysub(tysub(m.C, stepsub(G.ctx)), down(m.C)))};
  };
  add(v, "nat-e", [nat_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    NatMotive m = rnd_nat_motive(g);
    Expr c = num_tm(pick(g, 7));
    auto prems = nat_e_premises(G, m);
    prems.push_back(jelt(G.ctx, c, nat()));
    return {prems, jelt(G.ctx, rec(m.C, m.d, m.e, c),
                        tysub(m.C, els(nat(), c)))};
  });
  add(v, "nat-c-zero", [nat_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    NatMotive m = rnd_nat_motive(g);
    return {nat_e_premises(G, m),
            jelteq(G.ctx, rec(m.C, m.d, m.e, zero()), m.d,
                   tysub(m.C, els(nat(), zero())))};
  });
  add(v, "nat-c-succ", [nat_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    NatMotive m = rnd_nat_motive(g);
    Expr a = num_tm(pick(g, 6));
    auto prems = nat_e_premises(G, m);
    prems.push_back(jelt(G.ctx, a, nat()));
    Expr below = rec(m.C, m.d, m.e, a);
    return {prems,
            jelteq(G.ctx, rec(m.C, m.d, m.e, succ(a)),
                   tmsub(m.e, spair(m.C, els(nat(), a), below)),
                   tysub(m.C, els(nat(), succ(a))))};
  });
  add(v, "succ-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr a = num_tm(pick(g, 6));
    Expr b = dress_tm(g, a, G.ctx);
    return {{jelteq(G.ctx, a, b, nat())},
            jelteq(G.ctx, succ(a), succ(b), nat())};
  });
  add(v, "rec-cong", [nat_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    NatMotive m = rnd_nat_motive(g);
    Expr GN = ctx_ext(G.ctx, nat());
    Expr C2 = dress_ty(g, m.C, GN);
    Expr GNC = ctx_ext(GN, m.C);
    Expr GNC2 = ctx_ext(GN, C2);
    Expr d2 = dress_tm(g, m.d, G.ctx);
    Expr e2 = tmsub(m.e, phi(GNC2, GNC));
    Expr c = num_tm(pick(g, 6));
    Expr c2 = dress_tm(g, c, G.ctx);
    Expr c_ty0 = tysub(m.C, els(nat(), zero()));
    Expr step_ty = tysub(tysub(m.C, stepsub(G.ctx)), down(m.C));
    auto prems = nat_e_premises(G, m);
    prems.push_back(jelt(G.ctx, d2, tysub(C2, els(nat(), zero()))));
    prems.push_back(jelt(GNC2, e2,
                         tysub(tysub(C2, stepsub(G.ctx)), down(C2))));
    prems.push_back(jelt(G.ctx, c, nat()));
    prems.push_back(jelt(G.ctx, c2, nat()));
    prems.push_back(jtyeq(GN, m.C, C2));
    prems.push_back(jelteq(G.ctx, m.d, d2, c_ty0));
    prems.push_back(jelteq(GNC, m.e, tmsub(e2, phi(GNC, GNC2)), step_ty));
    prems.push_back(jelteq(G.ctx, c, c2, nat()));
    return {prems,
            jelteq(G.ctx, rec(m.C, m.d, m.e, c), rec(C2, d2, e2, c2),
                   tysub(m.C, els(nat(), c)))};
  });
  add(v, "nat-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(nat(), h.f), nat())};
  });
  add(v, "zero-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)},
            jelteq(h.dom, tmsub(zero(), h.f), zero(), nat())};
  });
  add(v, "succ-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr a = num_tm(pick(g, 6));
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jelt(G.ctx, a, nat())},
            jelteq(h.dom, tmsub(succ(a), h.f), succ(tmsub(a, h.f)),
                   nat())};
  });
  add(v, "rec-sub", [nat_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    NatMotive m = rnd_nat_motive(g);
    Expr c = num_tm(pick(g, 6));
    SubG h = rnd_sub_to(g, G);
    // the lifted map on nat-extended contexts, presented so its domain ends
    // in the bare nat type
    Expr nsub = spair(nat(), comp(h.f, down(nat())), var_());
    Expr Cn = tysub(m.C, nsub);
    Expr csub = lift(m.C, nsub);
    Expr DN = ctx_ext(h.dom, nat());
    auto prems = nat_e_premises(G, m);
    prems.push_back(jelt(G.ctx, c, nat()));
    prems.push_back(jsub(h.f, h.dom, G.ctx));
    prems.push_back(jelt(h.dom, tmsub(m.d, h.f),
                         tysub(Cn, els(nat(), zero()))));
    prems.push_back(jelt(ctx_ext(DN, Cn), tmsub(m.e, csub),
                         tysub(tysub(Cn, stepsub(h.dom)), down(Cn))));
    return {prems,
            jelteq(h.dom, tmsub(rec(m.C, m.d, m.e, c), h.f),
                   rec(Cn, tmsub(m.d, h.f), tmsub(m.e, csub),
                       tmsub(c, h.f)),
                   tysub(tysub(m.C, els(nat(), c)), h.f))};
  });
}

// ---- empty type rules ----

// Element judgments at the empty type only hold over contexts with no
// points, so these generators extend the context by the empty type itself.
void add_n0(std::vector<RuleCase>& v) {
  add(v, "n0-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jty(G.ctx, n0())};
  });
  add(v, "n0-e", [](Rng& g) -> Instance {
    CtxGen G0 = rnd_ctx(g);
    Expr G = ctx_ext(G0.ctx, n0());
    Expr C = coin(g) ? rnd_inhab(g, 1).ty
                     : id_ty(tysub(n0(), down(n0())), var_(), var_());
    Expr c = var_();
    return {{jty(ctx_ext(G, n0()), C), jelt(G, c, n0())},
            jelt(G, r0(C, c), tysub(C, els(n0(), c)))};
  });
  add(v, "r0-cong", [](Rng& g) -> Instance {
    CtxGen G0 = rnd_ctx(g);
    Expr G = ctx_ext(G0.ctx, n0());
    Expr GZ = ctx_ext(G, n0());
    Expr C = rnd_inhab(g, 1).ty;
    Expr C2 = dress_ty(g, C, GZ);
    Expr c = var_();
    Expr c2 = dress_tm(g, c, G);
    return {{jtyeq(GZ, C, C2), jelt(G, c, n0()), jelt(G, c2, n0()),
             jelteq(G, c, c2, n0())},
            jelteq(G, r0(C, c), r0(C2, c2), tysub(C, els(n0(), c)))};
  });
  add(v, "n0-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(n0(), h.f), n0())};
  });
  add(v, "r0-sub", [](Rng& g) -> Instance {
    CtxGen G0 = rnd_ctx(g);
    Expr G = ctx_ext(G0.ctx, n0());
    Expr C = rnd_inhab(g, 1).ty;
    Expr c = var_();
    SubG h = rnd_sub_to_expr(g, G);
    Expr zsub = spair(n0(), comp(h.f, down(n0())), var_());
    return {{jsub(h.f, h.dom, G), jty(ctx_ext(G, n0()), C),
             jelt(G, c, n0()),
             jelt(h.dom, tmsub(c, h.f), tysub(n0(), h.f))},
            jelteq(h.dom, tmsub(r0(C, c), h.f),
                   r0(tysub(C, zsub), tmsub(c, h.f)),
                   tysub(tysub(C, els(n0(), c)), h.f))};
  });
}

// ---- disjoint union rules ----

// A case-analysis motive over ctx |> sum(X, Y), with branch terms over
// ctx |> X and ctx |> Y.
struct SumMotive {
  Expr C;
  Expr d;
  Expr e;
  // the same motive rebuilt over equal presentations of the summands
  std::function<SumMotive(const Expr&, const Expr&)> remake;
};

SumMotive rnd_sum_motive(Rng& g, const Expr& X, const Expr& Y) {
  switch (pick(g, 3)) {
    case 0: {
      // constant motive with closed branches
      TyTm t = rnd_inhab(g, 1);
      SumMotive m{t.ty, t.tm, t.tm, nullptr};
      m.remake = [t](const Expr&, const Expr&) {
        return SumMotive{t.ty, t.tm, t.tm, nullptr};
      };
      return m;
    }
    case 1: {
      // rebuild the scrutinee: both branches re-inject the variable
      auto mk = [](const Expr& x, const Expr& y) {
        return SumMotive{sum(x, y), lf(x, y, var_()), rg(x, y, var_()),
                         nullptr};
      };
      SumMotive m = mk(X, Y);
      m.remake = [mk](const Expr& x2, const Expr& y2) { return mk(x2, y2); };
      return m;
    }
    default: {
      // the one-point family over the scrutinee
      auto mk = [](const Expr& x, const Expr& y) {
        Expr s = sum(x, y);
        return SumMotive{id_ty(tysub(s, down(s)), var_(), var_()),
                         rr(var_()), rr(var_()), nullptr};
      };
      SumMotive m = mk(X, Y);
      m.remake = [mk](const Expr& x2, const Expr& y2) { return mk(x2, y2); };
      return m;
    }
  }
}

void add_sum(std::vector<RuleCase>& v) {
  add(v, "sum-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    Expr Y = rnd_ty(g, 2);
    return {{jty(G.ctx, X), jty(G.ctx, Y)}, jty(G.ctx, sum(X, Y))};
  });
  add(v, "sum-i-lf", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    Expr Y = rnd_ty(g, 2);
    Expr a = dress_tm(g, X.tm, G.ctx);
    return {{jty(G.ctx, Y), jelt(G.ctx, a, X.ty)},
            jelt(G.ctx, lf(X.ty, Y, a), sum(X.ty, Y))};
  });
  add(v, "sum-i-rg", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    Expr b = dress_tm(g, Y.tm, G.ctx);
    return {{jty(G.ctx, X), jelt(G.ctx, b, Y.ty)},
            jelt(G.ctx, rg(X, Y.ty, b), sum(X, Y.ty))};
  });
  auto sum_e_premises = [](const Expr& ctx, const Expr& X, const Expr& Y,
                           const SumMotive& m) {
    Expr S = sum(X, Y);
    return std::vector<Expr>{
        jty(ctx_ext(ctx, S), m.C),
        jelt(ctx_ext(ctx, X), m.d, tysub(m.C, sumsublf(X, Y))),
        jelt(ctx_ext(ctx, Y), m.e, tysub(m.C, sumsubrg(X, Y)))};
  };
  add(v, "sum-e", [sum_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    SumMotive m = rnd_sum_motive(g, X.ty, Y.ty);
    Expr S = sum(X.ty, Y.ty);
    Expr c = coin(g) ? lf(X.ty, Y.ty, X.tm) : rg(X.ty, Y.ty, Y.tm);
    auto prems = sum_e_premises(G.ctx, X.ty, Y.ty, m);
    prems.push_back(jelt(G.ctx, c, S));
    return {prems,
            jelt(G.ctx, sumrec(X.ty, Y.ty, m.C, m.d, m.e, c),
                 tysub(m.C, els(S, c)))};
  });
  add(v, "sum-c-lf", [sum_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    SumMotive m = rnd_sum_motive(g, X.ty, Y.ty);
    Expr S = sum(X.ty, Y.ty);
    Expr a = dress_tm(g, X.tm, G.ctx);
    Expr c = lf(X.ty, Y.ty, a);
    auto prems = sum_e_premises(G.ctx, X.ty, Y.ty, m);
    prems.push_back(jelt(G.ctx, a, X.ty));
    prems.push_back(jelt(G.ctx, c, S));
    return {prems,
            jelteq(G.ctx, sumrec(X.ty, Y.ty, m.C, m.d, m.e, c),
                   tmsub(m.d, els(X.ty, a)), tysub(m.C, els(S, c)))};
  });
  add(v, "sum-c-rg", [sum_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    SumMotive m = rnd_sum_motive(g, X.ty, Y.ty);
    Expr S = sum(X.ty, Y.ty);
    Expr b = dress_tm(g, Y.tm, G.ctx);
    Expr c = rg(X.ty, Y.ty, b);
    auto prems = sum_e_premises(G.ctx, X.ty, Y.ty, m);
    prems.push_back(jelt(G.ctx, b, Y.ty));
    prems.push_back(jelt(G.ctx, c, S));
    return {prems,
            jelteq(G.ctx, sumrec(X.ty, Y.ty, m.C, m.d, m.e, c),
                   tmsub(m.e, els(Y.ty, b)), tysub(m.C, els(S, c)))};
  });
  add(v, "sum-f-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    Expr Y = rnd_ty(g, 2);
    Expr X2 = dress_ty(g, X, G.ctx);
    Expr Y2 = dress_ty(g, Y, G.ctx);
    return {{jtyeq(G.ctx, X, X2), jtyeq(G.ctx, Y, Y2)},
            jtyeq(G.ctx, sum(X, Y), sum(X2, Y2))};
  });
  add(v, "lf-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    Expr Y = rnd_ty(g, 2);
    Expr a = X.tm;
    Expr a2 = dress_tm(g, a, G.ctx);
    return {{jty(G.ctx, Y), jelt(G.ctx, a, X.ty), jelt(G.ctx, a2, X.ty),
             jelteq(G.ctx, a, a2, X.ty)},
            jelteq(G.ctx, lf(X.ty, Y, a), lf(X.ty, Y, a2), sum(X.ty, Y))};
  });
  add(v, "rg-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    Expr b = Y.tm;
    Expr b2 = dress_tm(g, b, G.ctx);
    return {{jty(G.ctx, X), jelt(G.ctx, b, Y.ty), jelt(G.ctx, b2, Y.ty),
             jelteq(G.ctx, b, b2, Y.ty)},
            jelteq(G.ctx, rg(X, Y.ty, b), rg(X, Y.ty, b2), sum(X, Y.ty))};
  });
  add(v, "sumrec-cong", [sum_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    SumMotive m = rnd_sum_motive(g, X.ty, Y.ty);
    Expr X2 = dress_ty(g, X.ty, G.ctx);
    Expr Y2 = dress_ty(g, Y.ty, G.ctx);
    SumMotive m2 = m.remake(X2, Y2);
    Expr S = sum(X.ty, Y.ty);
    Expr S2 = sum(X2, Y2);
    Expr c = coin(g) ? lf(X.ty, Y.ty, X.tm) : rg(X.ty, Y.ty, Y.tm);
    Expr c2 = tmsub(c, idsub(G.ctx));
    Expr GS = ctx_ext(G.ctx, S);
    Expr GS2 = ctx_ext(G.ctx, S2);
    Expr GX = ctx_ext(G.ctx, X.ty);
    Expr GX2 = ctx_ext(G.ctx, X2);
    Expr GY = ctx_ext(G.ctx, Y.ty);
    Expr GY2 = ctx_ext(G.ctx, Y2);
    auto prems = sum_e_premises(G.ctx, X.ty, Y.ty, m);
    auto prems2 = sum_e_premises(G.ctx, X2, Y2, m2);
    prems.insert(prems.end(), prems2.begin(), prems2.end());
    prems.push_back(jelt(G.ctx, c, S));
    prems.push_back(jelt(G.ctx, c2, S2));
    prems.push_back(jtyeq(G.ctx, X.ty, X2));
    prems.push_back(jtyeq(G.ctx, Y.ty, Y2));
    prems.push_back(jtyeq(GS, m.C, tysub(m2.C, phi(GS, GS2))));
    prems.push_back(jelteq(GX, m.d, tmsub(m2.d, phi(GX, GX2)),
                           tysub(m.C, sumsublf(X.ty, Y.ty))));
    prems.push_back(jelteq(GY, m.e, tmsub(m2.e, phi(GY, GY2)),
                           tysub(m.C, sumsubrg(X.ty, Y.ty))));
    prems.push_back(jelteq(G.ctx, c, c2, S));
    return {prems,
            jelteq(G.ctx, sumrec(X.ty, Y.ty, m.C, m.d, m.e, c),
                   sumrec(X2, Y2, m2.C, m2.d, m2.e, c2),
                   tysub(m.C, els(S, c)))};
  });
  add(v, "sum-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    Expr Y = rnd_ty(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jty(G.ctx, X), jty(G.ctx, Y)},
            jtyeq(h.dom, tysub(sum(X, Y), h.f),
                  sum(tysub(X, h.f), tysub(Y, h.f)))};
  });
  add(v, "lf-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    Expr Y = rnd_ty(g, 2);
    Expr a = X.tm;
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jty(G.ctx, X.ty), jty(G.ctx, Y),
             jelt(G.ctx, a, X.ty),
             jelt(h.dom, tmsub(a, h.f), tysub(X.ty, h.f))},
            jelteq(h.dom, tmsub(lf(X.ty, Y, a), h.f),
                   lf(tysub(X.ty, h.f), tysub(Y, h.f), tmsub(a, h.f)),
                   tysub(sum(X.ty, Y), h.f))};
  });
  add(v, "rg-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    Expr b = Y.tm;
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jty(G.ctx, X), jty(G.ctx, Y.ty),
             jelt(G.ctx, b, Y.ty),
             jelt(h.dom, tmsub(b, h.f), tysub(Y.ty, h.f))},
            jelteq(h.dom, tmsub(rg(X, Y.ty, b), h.f),
                   rg(tysub(X, h.f), tysub(Y.ty, h.f), tmsub(b, h.f)),
                   tysub(sum(X, Y.ty), h.f))};
  });
  add(v, "sumrec-sub", [sum_e_premises](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm Y = rnd_inhab(g, 2);
    SumMotive m = rnd_sum_motive(g, X.ty, Y.ty);
    Expr S = sum(X.ty, Y.ty);
    Expr c = coin(g) ? lf(X.ty, Y.ty, X.tm) : rg(X.ty, Y.ty, Y.tm);
    SubG h = rnd_sub_to(g, G);
    Expr Xh = tysub(X.ty, h.f);
    Expr Yh = tysub(Y.ty, h.f);
    // the lifted map on sum-extended contexts, presented so its domain ends
    // in the sum of the pulled-back summands
    Expr ssub = spair(S, comp(h.f, down(sum(Xh, Yh))), var_());
    Expr Cs = tysub(m.C, ssub);
    Expr dl = tmsub(m.d, lift(X.ty, h.f));
    Expr er = tmsub(m.e, lift(Y.ty, h.f));
    auto prems = sum_e_premises(G.ctx, X.ty, Y.ty, m);
    prems.push_back(jsub(h.f, h.dom, G.ctx));
    prems.push_back(jelt(ctx_ext(h.dom, Xh), dl,
                         tysub(Cs, sumsublf(Xh, Yh))));
    prems.push_back(jelt(ctx_ext(h.dom, Yh), er,
                         tysub(Cs, sumsubrg(Xh, Yh))));
    prems.push_back(jelt(G.ctx, c, S));
    prems.push_back(jelt(h.dom, tmsub(c, h.f), sum(Xh, Yh)));
    return {prems,
            jelteq(h.dom, tmsub(sumrec(X.ty, Y.ty, m.C, m.d, m.e, c), h.f),
                   sumrec(Xh, Yh, Cs, dl, er, tmsub(c, h.f)),
                   tysub(tysub(m.C, els(S, c)), h.f))};
  });
}

// ---- universe rules ----

// Closed types whose codes land in the first universe with a definitive
// verdict: finite trees plus the base types.
Expr rnd_code(Rng& g) {
  switch (pick(g, 5)) {
    case 0:
      return nat();
    case 1:
      return n0();
    default:
      return rnd_inhab(g, 2).ty;
  }
}

void add_univ(std::vector<RuleCase>& v) {
  add(v, "u-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jty(G.ctx, u(pick(g, 2)))};
  });
  add(v, "u-el", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_code(g);
    return {{jelt(G.ctx, code_of(A), u(0))}, jty(G.ctx, A)};
  });
  add(v, "u-nat", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jelt(G.ctx, code_of(nat()), u(pick(g, 2)))};
  });
  add(v, "u-n0", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    return {{jctx(G.ctx)}, jelt(G.ctx, code_of(n0()), u(pick(g, 2)))};
  });
  add(v, "u-pi", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    return {{jelt(G.ctx, code_of(A.ty), u(0)),
             jelt(ctx_ext(G.ctx, A.ty), code_of(B.ty), u(0))},
            jelt(G.ctx, code_of(pi(A.ty, B.ty)), u(0))};
  });
  add(v, "u-sigma", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm A = rnd_inhab(g, 2);
    Dep B = rnd_dep(g, A.ty);
    return {{jelt(G.ctx, code_of(A.ty), u(0)),
             jelt(ctx_ext(G.ctx, A.ty), code_of(B.ty), u(0))},
            jelt(G.ctx, code_of(sigma(A.ty, B.ty)), u(0))};
  });
  add(v, "u-sum", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_inhab(g, 2).ty;
    Expr Y = rnd_inhab(g, 2).ty;
    return {{jelt(G.ctx, code_of(X), u(0)), jelt(G.ctx, code_of(Y), u(0))},
            jelt(G.ctx, code_of(sum(X, Y)), u(0))};
  });
  add(v, "u-id", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm T = rnd_inhab(g, 2);
    Expr b = dress_tm(g, T.tm, G.ctx);
    return {{jelt(G.ctx, code_of(T.ty), u(0)), jelt(G.ctx, T.tm, T.ty),
             jelt(G.ctx, b, T.ty)},
            jelt(G.ctx, code_of(id_ty(T.ty, T.tm, b)), u(0))};
  });
  add(v, "u-in-u", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    std::uint64_t k = static_cast<std::uint64_t>(pick(g, 2));
    return {{jctx(G.ctx)}, jelt(G.ctx, code_of(u(k)), u(k + 1))};
  });
  add(v, "u-cumul", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_code(g);
    return {{jelt(G.ctx, code_of(A), u(0))},
            jelt(G.ctx, code_of(A), u(1))};
  });
  add(v, "u-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    SubG h = rnd_sub_to(g, G);
    std::uint64_t k = static_cast<std::uint64_t>(pick(g, 2));
    return {{jsub(h.f, h.dom, G.ctx)},
            jtyeq(h.dom, tysub(u(k), h.f), u(k))};
  });
  add(v, "u-eq-intro", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_code(g);
    Expr B = dress_ty(g, A, G.ctx);
    return {{jelt(G.ctx, code_of(A), u(0)), jelt(G.ctx, code_of(B), u(0)),
             jtyeq(G.ctx, A, B)},
            jelteq(G.ctx, code_of(A), code_of(B), u(0))};
  });
  add(v, "u-eq-elim", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_code(g);
    Expr B = dress_ty(g, A, G.ctx);
    return {{jelteq(G.ctx, code_of(A), code_of(B), u(0))},
            jtyeq(G.ctx, A, B)};
  });
}

// ---- squash type rules ----

void add_br(std::vector<RuleCase>& v) {
  add(v, "br-f", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr A = rnd_ty(g, 2);
    return {{jty(G.ctx, A)}, jty(G.ctx, br(A))};
  });
  add(v, "br-i", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    Expr a = dress_tm(g, X.tm, G.ctx);
    return {{jelt(G.ctx, a, X.ty)},
            jelt(G.ctx, brin(a), br(X.ty))};
  });
  // the constancy premise shared by the eliminator rules: the branch gives
  // equal results on both copies of a doubled context
  auto constancy = [](const Expr& ctx, const Expr& X, const Expr& B,
                      const Expr& b) {
    Expr xw = tysub(X, down(X));
    Expr g2 = ctx_ext(ctx_ext(ctx, X), xw);
    Expr bww = tysub(tysub(B, down(X)), down(xw));
    return jelteq(g2, tmsub(b, prx(X)), tmsub(b, pry(X)), bww);
  };
  add(v, "br-e", [constancy](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm B = rnd_inhab(g, 2);
    Expr k = dress_tm(g, brin(X.tm), G.ctx);
    Expr b = dress_tm(g, B.tm, ctx_ext(G.ctx, X.ty));
    return {{jty(G.ctx, X.ty), jty(G.ctx, B.ty),
             jelt(G.ctx, k, br(X.ty)),
             jelt(ctx_ext(G.ctx, X.ty), b, tysub(B.ty, down(X.ty))),
             constancy(G.ctx, X.ty, B.ty, b)},
            jelt(G.ctx, wh(X.ty, B.ty, k, b), B.ty)};
  });
  add(v, "br-beta", [constancy](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm B = rnd_inhab(g, 2);
    Expr a = dress_tm(g, X.tm, G.ctx);
    Expr b = dress_tm(g, B.tm, ctx_ext(G.ctx, X.ty));
    return {{jty(G.ctx, B.ty), jelt(G.ctx, a, X.ty),
             jelt(ctx_ext(G.ctx, X.ty), b, tysub(B.ty, down(X.ty))),
             constancy(G.ctx, X.ty, B.ty, b)},
            jelteq(G.ctx, wh(X.ty, B.ty, brin(a), b),
                   tmsub(b, els(X.ty, a)), B.ty)};
  });
  add(v, "br-eta", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm B = rnd_inhab(g, 2);
    Expr k = dress_tm(g, brin(X.tm), G.ctx);
    Expr bx = br(X.ty);
    Expr b0 = dress_tm(g, B.tm, ctx_ext(G.ctx, bx));
    Expr bsb = tmsub(b0, brsb(X.ty));
    return {{jty(G.ctx, B.ty), jelt(G.ctx, k, bx),
             jelt(ctx_ext(G.ctx, bx), b0, tysub(B.ty, down(bx))),
             jelt(ctx_ext(G.ctx, X.ty), bsb, tysub(B.ty, down(X.ty)))},
            jelteq(G.ctx, wh(X.ty, B.ty, k, bsb), tmsub(b0, els(bx, k)),
                   B.ty)};
  });
  add(v, "br-irr", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr k1, k2, bx;
    if (coin(g)) {
      // two members of the underlying type that need not be equal
      TyTm l = rnd_inhab(g, 1);
      TyTm r = rnd_inhab(g, 1);
      Expr S = sum(l.ty, r.ty);
      bx = br(S);
      k1 = brin(lf(l.ty, r.ty, l.tm));
      k2 = brin(rg(l.ty, r.ty, r.tm));
    } else {
      TyTm X = rnd_inhab(g, 2);
      bx = br(X.ty);
      k1 = brin(X.tm);
      k2 = dress_tm(g, brin(X.tm), G.ctx);
    }
    return {{jelt(G.ctx, k1, bx), jelt(G.ctx, k2, bx)},
            jelteq(G.ctx, k1, k2, bx)};
  });
  add(v, "br-f-cong", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    Expr X2 = dress_ty(g, X, G.ctx);
    return {{jtyeq(G.ctx, X, X2)}, jtyeq(G.ctx, br(X), br(X2))};
  });
  add(v, "wh-cong", [constancy](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm B = rnd_inhab(g, 2);
    Expr X2 = dress_ty(g, X.ty, G.ctx);
    Expr B2 = dress_ty(g, B.ty, G.ctx);
    Expr k = brin(X.tm);
    Expr k2 = dress_tm(g, k, G.ctx);
    Expr b = B.tm;
    Expr b2 = tmsub(b, idsub(ctx_ext(G.ctx, X2)));
    Expr GX = ctx_ext(G.ctx, X.ty);
    Expr GX2 = ctx_ext(G.ctx, X2);
    return {{jelt(G.ctx, k, br(X.ty)),
             jelt(GX, b, tysub(B.ty, down(X.ty))),
             constancy(G.ctx, X.ty, B.ty, b),
             jelt(G.ctx, k2, br(X2)),
             jelt(GX2, b2, tysub(B2, down(X2))),
             constancy(G.ctx, X2, B2, b2),
             jtyeq(G.ctx, X.ty, X2), jtyeq(G.ctx, B.ty, B2),
             jelteq(G.ctx, k, k2, br(X.ty)),
             jelteq(GX, b, tmsub(b2, phi(GX, GX2)),
                    tysub(B.ty, down(X.ty)))},
            jelteq(G.ctx, wh(X.ty, B.ty, k, b), wh(X2, B2, k2, b2),
                   B.ty)};
  });
  add(v, "br-f-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_ty(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jty(G.ctx, X)},
            jtyeq(h.dom, tysub(br(X), h.f), br(tysub(X, h.f)))};
  });
  add(v, "br-i-sub", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    SubG h = rnd_sub_to(g, G);
    return {{jsub(h.f, h.dom, G.ctx), jelt(G.ctx, X.tm, X.ty)},
            jelteq(h.dom, tmsub(brin(X.tm), h.f), brin(tmsub(X.tm, h.f)),
                   tysub(br(X.ty), h.f))};
  });
  add(v, "wh-sub", [constancy](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    TyTm X = rnd_inhab(g, 2);
    TyTm B = rnd_inhab(g, 2);
    Expr k = brin(X.tm);
    Expr b = B.tm;
    SubG h = rnd_sub_to(g, G);
    Expr Xh = tysub(X.ty, h.f);
    Expr Bh = tysub(B.ty, h.f);
    Expr bl = tmsub(b, lift(X.ty, h.f));
    return {{jsub(h.f, h.dom, G.ctx), jty(G.ctx, X.ty), jty(G.ctx, B.ty),
             jelt(G.ctx, k, br(X.ty)),
             jelt(ctx_ext(G.ctx, X.ty), b, tysub(B.ty, down(X.ty))),
             constancy(G.ctx, X.ty, B.ty, b),
             jelt(h.dom, tmsub(k, h.f), br(Xh)),
             jelt(ctx_ext(h.dom, Xh), bl, tysub(Bh, down(Xh))),
             constancy(h.dom, Xh, Bh, bl)},
            jelteq(h.dom, tmsub(wh(X.ty, B.ty, k, b), h.f),
                   wh(Xh, Bh, tmsub(k, h.f), bl), tysub(B.ty, h.f))};
  });
  add(v, "u-br", [](Rng& g) -> Instance {
    CtxGen G = rnd_ctx(g);
    Expr X = rnd_code(g);
    return {{jelt(G.ctx, code_of(X), u(0))},
            jelt(G.ctx, code_of(br(X)), u(0))};
  });
}

std::vector<RuleCase> build_catalog() {
  std::vector<RuleCase> v;
  add_presup(v);
  add_general(v);
  add_extension(v);
  add_pi(v);
  add_id(v);
  add_sigma(v);
  add_nat(v);
  add_n0(v);
  add_sum(v);
  add_univ(v);
  add_br(v);
  return v;
}

RuleCase broken_rule() {
  // Negative control: well-formed premises, refutable conclusion. Any run
  // that fails to flag this cannot be trusted to flag a real defect.
  return {"injected-broken", [](Rng& g) -> Instance {
            CtxGen G = rnd_ctx(g);
            return {{jctx(G.ctx)}, jtyeq(G.ctx, nat(), n0())};
          }};
}

}  // namespace

const std::vector<RuleCase>& catalog() {
  static const std::vector<RuleCase> cases = build_catalog();
  return cases;
}

Instance gen_instance(const RuleCase& rule, std::uint64_t seed) {
  Rng rng(seed);
  return rule.generate(rng);
}

RuleReport check_rule(const RuleCase& rule, std::uint32_t n_cases,
                      const interp::CheckConfig& cfg,
                      std::uint64_t base_seed) {
  RuleReport rep;
  rep.rule = rule.name;
  interp::Checker ck(cfg);
  for (std::uint32_t i = 0; i < n_cases; ++i) {
    std::uint64_t s = instance_seed(base_seed, rule.name, i);
    rep.seeds.push_back(s);
    Instance inst = gen_instance(rule, s);
    bool premise_bounded = false;
    bool premise_bad = false;
    for (const Expr& p : inst.premises) {
      Verdict pv = ck.check(p);
      if (!pv.unrefuted_pass()) {
        premise_bad = true;
        break;
      }
      if (pv.truth == Truth::HoldsBounded) premise_bounded = true;
    }
    if (premise_bad) {
      ++rep.premise_fails;
      continue;
    }
    Verdict cv = ck.check(inst.conclusion);
    switch (cv.truth) {
      case Truth::Holds:
        premise_bounded ? ++rep.holds_bounded : ++rep.holds;
        break;
      case Truth::HoldsBounded:
        ++rep.holds_bounded;
        break;
      case Truth::Fails:
        ++rep.fails;
        rep.fail_seeds.push_back(s);
        break;
      case Truth::Unknown:
        ++rep.unknown;
        break;
    }
  }
  return rep;
}

std::uint32_t Report::soundness_failures() const {
  std::uint32_t n = 0;
  for (const RuleReport& r : rules) n += r.fails;
  return n;
}

std::vector<std::string> Report::vacuous_rules() const {
  std::vector<std::string> out;
  for (const RuleReport& r : rules)
    if (!r.non_vacuous()) out.push_back(r.rule);
  return out;
}

bool Report::ok() const {
  return soundness_failures() == 0 && vacuous_rules().empty();
}

Report run_suite(const interp::CheckConfig& cfg, std::uint64_t base_seed,
                 std::uint32_t n_cases, bool inject_broken) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.seed = base_seed;
  rep.cases_per_rule = n_cases;
  for (const RuleCase& rc : catalog())
    rep.rules.push_back(check_rule(rc, n_cases, cfg, base_seed));
  if (inject_broken)
    rep.rules.push_back(check_rule(broken_rule(), n_cases, cfg, base_seed));
  auto stop = std::chrono::steady_clock::now();
  rep.elapsed_seconds =
      std::chrono::duration<double>(stop - start).count();
  return rep;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "rule" << std::right << std::setw(7)
     << "holds" << std::setw(9) << "bounded" << std::setw(7) << "fails"
     << std::setw(9) << "unknown" << std::setw(11) << "prem-fails" << "\n";
  std::uint32_t cases = 0;
  for (const RuleReport& rr : r.rules) {
    cases += rr.total();
    os << std::left << std::setw(20) << rr.rule << std::right
       << std::setw(7) << rr.holds << std::setw(9) << rr.holds_bounded
       << std::setw(7) << rr.fails << std::setw(9) << rr.unknown
       << std::setw(11) << rr.premise_fails << "\n";
  }
  os << r.rules.size() << " rules, " << cases << " cases, "
     << r.soundness_failures() << " soundness failures, "
     << r.vacuous_rules().size() << " vacuous rules, " << std::fixed
     << std::setprecision(1) << r.elapsed_seconds << "s, seed " << r.seed
     << "\n";
  return os.str();
}

std::string report_json(const Report& r) {
  nlohmann::json j;
  j["seed"] = r.seed;
  j["cases_per_rule"] = r.cases_per_rule;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["soundness_failures"] = r.soundness_failures();
  j["vacuous_rules"] = r.vacuous_rules();
  j["ok"] = r.ok();
  j["rules"] = nlohmann::json::array();
  for (const RuleReport& rr : r.rules) {
    nlohmann::json e;
    e["rule"] = rr.rule;
    e["holds"] = rr.holds;
    e["holds_bounded"] = rr.holds_bounded;
    e["fails"] = rr.fails;
    e["unknown"] = rr.unknown;
    e["premise_fails"] = rr.premise_fails;
    e["seeds"] = rr.seeds;
    e["fail_seeds"] = rr.fail_seeds;
    j["rules"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace rules
}  // namespace vml
