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

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace vml {
namespace syn {

namespace {

struct OpInfo {
  Op op;
  Cat cat;
  const char* name;
  int arity;         // -1: variable (CtxExt chains in surface form)
  const Cat* kcats;  // kid categories, arity entries
};

constexpr Cat kNone[] = {Cat::Ctx};
constexpr Cat kCtxExt[] = {Cat::Ctx, Cat::Ty};
constexpr Cat kTyTy[] = {Cat::Ty, Cat::Ty};
constexpr Cat kTyTmTm[] = {Cat::Ty, Cat::Tm, Cat::Tm};
constexpr Cat kTy1[] = {Cat::Ty};
constexpr Cat kTySb[] = {Cat::Ty, Cat::Sb};
constexpr Cat kTm1[] = {Cat::Tm};
constexpr Cat kTyTyTm[] = {Cat::Ty, Cat::Ty, Cat::Tm};
constexpr Cat kTyTyTmTm[] = {Cat::Ty, Cat::Ty, Cat::Tm, Cat::Tm};
constexpr Cat kTmTm[] = {Cat::Tm, Cat::Tm};
constexpr Cat kTyTmTmTm[] = {Cat::Ty, Cat::Tm, Cat::Tm, Cat::Tm};
constexpr Cat kTyTm[] = {Cat::Ty, Cat::Tm};
constexpr Cat kSumRec[] = {Cat::Ty, Cat::Ty, Cat::Ty,
                           Cat::Tm, Cat::Tm, Cat::Tm};
constexpr Cat kTmSb[] = {Cat::Tm, Cat::Sb};
constexpr Cat kCtx1[] = {Cat::Ctx};
constexpr Cat kSbSb[] = {Cat::Sb, Cat::Sb};
constexpr Cat kTySbTm[] = {Cat::Ty, Cat::Sb, Cat::Tm};
constexpr Cat kCtxCtx[] = {Cat::Ctx, Cat::Ctx};
constexpr Cat kSbCtxCtx[] = {Cat::Sb, Cat::Ctx, Cat::Ctx};
constexpr Cat kSbSbCtxCtx[] = {Cat::Sb, Cat::Sb, Cat::Ctx, Cat::Ctx};
constexpr Cat kCtxTy[] = {Cat::Ctx, Cat::Ty};
constexpr Cat kCtxTyTy[] = {Cat::Ctx, Cat::Ty, Cat::Ty};
constexpr Cat kCtxTmTy[] = {Cat::Ctx, Cat::Tm, Cat::Ty};
constexpr Cat kCtxTmTmTy[] = {Cat::Ctx, Cat::Tm, Cat::Tm, Cat::Ty};

const OpInfo kOps[] = {
    {Op::CtxEmpty, Cat::Ctx, "ctx", 0, kNone},
    {Op::CtxExt, Cat::Ctx, "ctx", 2, kCtxExt},
    {Op::TyPi, Cat::Ty, "pi", 2, kTyTy},
    {Op::TySigma, Cat::Ty, "sigma", 2, kTyTy},
    {Op::TyId, Cat::Ty, "id", 3, kTyTmTm},
    {Op::TyNat, Cat::Ty, "nat", 0, kNone},
    {Op::TyN0, Cat::Ty, "n0", 0, kNone},
    {Op::TySum, Cat::Ty, "sum", 2, kTyTy},
    {Op::TyU, Cat::Ty, "u", 0, kNone},
    {Op::TyBr, Cat::Ty, "br", 1, kTy1},
    {Op::TySub, Cat::Ty, "tysub", 2, kTySb},
    {Op::TmVar, Cat::Tm, "var", 0, kNone},
    {Op::TmZero, Cat::Tm, "zero", 0, kNone},
    {Op::TmSucc, Cat::Tm, "succ", 1, kTm1},
    {Op::TmLam, Cat::Tm, "lam", 3, kTyTyTm},
    {Op::TmApp, Cat::Tm, "app", 4, kTyTyTmTm},
    {Op::TmPair, Cat::Tm, "pr", 2, kTmTm},
    {Op::TmPr1, Cat::Tm, "pr1", 1, kTm1},
    {Op::TmPr2, Cat::Tm, "pr2", 1, kTm1},
    {Op::TmRr, Cat::Tm, "rr", 1, kTm1},
    {Op::TmRec, Cat::Tm, "rec", 4, kTyTmTmTm},
    {Op::TmR0, Cat::Tm, "r0", 2, kTyTm},
    {Op::TmLf, Cat::Tm, "lf", 3, kTyTyTm},
    {Op::TmRg, Cat::Tm, "rg", 3, kTyTyTm},
    {Op::TmSumRec, Cat::Tm, "sumrec", 6, kSumRec},
    {Op::TmBrIn, Cat::Tm, "brin", 1, kTm1},
    {Op::TmWh, Cat::Tm, "wh", 4, kTyTyTmTm},
    {Op::TmSub, Cat::Tm, "tmsub", 2, kTmSb},
    {Op::TmCode, Cat::Tm, "code", 1, kTy1},
    {Op::SbId, Cat::Sb, "idsub", 1, kCtx1},
    {Op::SbComp, Cat::Sb, "comp", 2, kSbSb},
    {Op::SbDown, Cat::Sb, "down", 1, kTy1},
    {Op::SbPair, Cat::Sb, "spair", 3, kTySbTm},
    {Op::SbPhi, Cat::Sb, "phi", 2, kCtxCtx},
    {Op::SbEls, Cat::Sb, "els", 2, kTyTm},
    {Op::SbLift, Cat::Sb, "lift", 2, kTySb},
    {Op::SbStep, Cat::Sb, "stepsub", 1, kCtx1},
    {Op::SbSumLf, Cat::Sb, "sumsublf", 2, kTyTy},
    {Op::SbSumRg, Cat::Sb, "sumsubrg", 2, kTyTy},
    {Op::SbPrX, Cat::Sb, "prx", 1, kTy1},
    {Op::SbPrY, Cat::Sb, "pry", 1, kTy1},
    {Op::SbBrSb, Cat::Sb, "brsb", 1, kTy1},
    {Op::JgCtx, Cat::Jg, "ctx", 1, kCtx1},
    {Op::JgCtxEq, Cat::Jg, "ctx-eq", 2, kCtxCtx},
    {Op::JgTy, Cat::Jg, "ty", 2, kCtxTy},
    {Op::JgTyEq, Cat::Jg, "ty-eq", 3, kCtxTyTy},
    {Op::JgElt, Cat::Jg, "elt", 3, kCtxTmTy},
    {Op::JgEltEq, Cat::Jg, "elt-eq", 4, kCtxTmTmTy},
    {Op::JgSub, Cat::Jg, "sub", 3, kSbCtxCtx},
    {Op::JgSubEq, Cat::Jg, "sub-eq", 4, kSbSbCtxCtx},
};

// Indexed by the enum; the table must mirror the declaration order.
static_assert(sizeof(kOps) / sizeof(kOps[0]) == 50, "op table out of sync");

const OpInfo& info(Op op) { return kOps[static_cast<std::size_t>(op)]; }

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Cat cat_of(Op op) { return info(op).cat; }
const char* op_name(Op op) { return info(op).name; }

struct Expr::Node {
  Op op;
  std::uint64_t level;
  std::uint64_t hash;
  std::vector<Expr> kids;
};

Expr::Expr() : Expr(make(Op::CtxEmpty, {})) {}
Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::make(Op op, std::vector<Expr> kids, std::uint64_t level) {
  const OpInfo& in = info(op);
  if (static_cast<int>(kids.size()) != in.arity)
    fail(ErrorKind::Internal,
         std::string("arity mismatch building ") + in.name);
  for (int i = 0; i < in.arity; ++i)
    if (kids[static_cast<std::size_t>(i)].cat() != in.kcats[i])
      fail(ErrorKind::Internal,
           std::string("child category mismatch building ") + in.name);
  std::uint64_t h = mix(0x56d4, static_cast<std::uint64_t>(op));
  h = mix(h, level);
  for (const Expr& k : kids) h = mix(h, k.hash());
  auto node = std::make_shared<Node>();
  node->op = op;
  node->level = level;
  node->hash = h;
  node->kids = std::move(kids);
  return Expr(std::move(node));
}

Op Expr::op() const { return node_->op; }
Cat Expr::cat() const { return info(node_->op).cat; }
const std::vector<Expr>& Expr::kids() const { return node_->kids; }
const Expr& Expr::kid(std::size_t i) const { return node_->kids.at(i); }
std::size_t Expr::arity() const { return node_->kids.size(); }
std::uint64_t Expr::level() const { return node_->level; }
std::uint64_t Expr::hash() const { return node_->hash; }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  if (node_->op != other.node_->op || node_->level != other.node_->level)
    return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i)
    if (node_->kids[i] != other.node_->kids[i]) return false;
  return true;
}

Expr ctx_empty() { return Expr::make(Op::CtxEmpty, {}); }
Expr ctx_ext(Expr g, Expr a) {
  return Expr::make(Op::CtxExt, {std::move(g), std::move(a)});
}

Expr pi(Expr a, Expr b) {
  return Expr::make(Op::TyPi, {std::move(a), std::move(b)});
}
Expr sigma(Expr a, Expr b) {
  return Expr::make(Op::TySigma, {std::move(a), std::move(b)});
}
Expr id_ty(Expr a, Expr lhs, Expr rhs) {
  return Expr::make(Op::TyId, {std::move(a), std::move(lhs), std::move(rhs)});
}
Expr nat() { return Expr::make(Op::TyNat, {}); }
Expr n0() { return Expr::make(Op::TyN0, {}); }
Expr sum(Expr a, Expr b) {
  return Expr::make(Op::TySum, {std::move(a), std::move(b)});
}
Expr u(std::uint64_t level) { return Expr::make(Op::TyU, {}, level); }
Expr br(Expr a) { return Expr::make(Op::TyBr, {std::move(a)}); }
Expr tysub(Expr a, Expr f) {
  return Expr::make(Op::TySub, {std::move(a), std::move(f)});
}

Expr var_() { return Expr::make(Op::TmVar, {}); }
Expr zero() { return Expr::make(Op::TmZero, {}); }
Expr succ(Expr a) { return Expr::make(Op::TmSucc, {std::move(a)}); }
Expr lam(Expr a, Expr b, Expr body) {
  return Expr::make(Op::TmLam, {std::move(a), std::move(b), std::move(body)});
}
Expr app(Expr a, Expr b, Expr fn, Expr arg) {
  return Expr::make(
      Op::TmApp, {std::move(a), std::move(b), std::move(fn), std::move(arg)});
}
Expr pr(Expr a, Expr b) {
  return Expr::make(Op::TmPair, {std::move(a), std::move(b)});
}
Expr pr1(Expr c) { return Expr::make(Op::TmPr1, {std::move(c)}); }
Expr pr2(Expr c) { return Expr::make(Op::TmPr2, {std::move(c)}); }
Expr rr(Expr a) { return Expr::make(Op::TmRr, {std::move(a)}); }
Expr rec(Expr c_ty, Expr d, Expr e, Expr c) {
  return Expr::make(
      Op::TmRec, {std::move(c_ty), std::move(d), std::move(e), std::move(c)});
}
Expr r0(Expr c_ty, Expr c) {
  return Expr::make(Op::TmR0, {std::move(c_ty), std::move(c)});
}
Expr lf(Expr a, Expr b, Expr x) {
  return Expr::make(Op::TmLf, {std::move(a), std::move(b), std::move(x)});
}
Expr rg(Expr a, Expr b, Expr y) {
  return Expr::make(Op::TmRg, {std::move(a), std::move(b), std::move(y)});
}
Expr sumrec(Expr a, Expr b, Expr c_ty, Expr d, Expr e, Expr c) {
  return Expr::make(Op::TmSumRec,
                    {std::move(a), std::move(b), std::move(c_ty),
                     std::move(d), std::move(e), std::move(c)});
}
Expr brin(Expr a) { return Expr::make(Op::TmBrIn, {std::move(a)}); }
Expr wh(Expr a, Expr b, Expr k, Expr body) {
  return Expr::make(
      Op::TmWh, {std::move(a), std::move(b), std::move(k), std::move(body)});
}
Expr tmsub(Expr a, Expr f) {
  return Expr::make(Op::TmSub, {std::move(a), std::move(f)});
}
Expr code_of(Expr a) { return Expr::make(Op::TmCode, {std::move(a)}); }

Expr idsub(Expr g) { return Expr::make(Op::SbId, {std::move(g)}); }
Expr comp(Expr f, Expr g) {
  return Expr::make(Op::SbComp, {std::move(f), std::move(g)});
}
Expr down(Expr a) { return Expr::make(Op::SbDown, {std::move(a)}); }
Expr spair(Expr a, Expr f, Expr end) {
  return Expr::make(Op::SbPair,
                    {std::move(a), std::move(f), std::move(end)});
}
Expr phi(Expr g, Expr d) {
  return Expr::make(Op::SbPhi, {std::move(g), std::move(d)});
}
Expr els(Expr a, Expr end) {
  return Expr::make(Op::SbEls, {std::move(a), std::move(end)});
}
Expr lift(Expr a, Expr f) {
  return Expr::make(Op::SbLift, {std::move(a), std::move(f)});
}
Expr stepsub(Expr g) { return Expr::make(Op::SbStep, {std::move(g)}); }
Expr sumsublf(Expr a, Expr b) {
  return Expr::make(Op::SbSumLf, {std::move(a), std::move(b)});
}
Expr sumsubrg(Expr a, Expr b) {
  return Expr::make(Op::SbSumRg, {std::move(a), std::move(b)});
}
Expr prx(Expr a) { return Expr::make(Op::SbPrX, {std::move(a)}); }
Expr pry(Expr a) { return Expr::make(Op::SbPrY, {std::move(a)}); }
Expr brsb(Expr a) { return Expr::make(Op::SbBrSb, {std::move(a)}); }

Expr jctx(Expr g) { return Expr::make(Op::JgCtx, {std::move(g)}); }
Expr jctxeq(Expr g, Expr d) {
  return Expr::make(Op::JgCtxEq, {std::move(g), std::move(d)});
}
Expr jty(Expr g, Expr a) {
  return Expr::make(Op::JgTy, {std::move(g), std::move(a)});
}
Expr jtyeq(Expr g, Expr a, Expr b) {
  return Expr::make(Op::JgTyEq, {std::move(g), std::move(a), std::move(b)});
}
Expr jelt(Expr g, Expr a, Expr ty) {
  return Expr::make(Op::JgElt, {std::move(g), std::move(a), std::move(ty)});
}
Expr jelteq(Expr g, Expr a, Expr b, Expr ty) {
  return Expr::make(
      Op::JgEltEq, {std::move(g), std::move(a), std::move(b), std::move(ty)});
}
Expr jsub(Expr f, Expr g, Expr d) {
  return Expr::make(Op::JgSub, {std::move(f), std::move(g), std::move(d)});
}
Expr jsubeq(Expr f, Expr g2, Expr g, Expr d) {
  return Expr::make(
      Op::JgSubEq, {std::move(f), std::move(g2), std::move(g), std::move(d)});
}

bool is_derived_sub(Op op) {
  switch (op) {
    case Op::SbEls:
    case Op::SbLift:
    case Op::SbStep:
    case Op::SbSumLf:
    case Op::SbSumRg:
    case Op::SbPrX:
    case Op::SbPrY:
    case Op::SbBrSb:
      return true;
    default:
      return false;
  }
}

Expr expand_sub(const Expr& s, const Expr& dom) {
  switch (s.op()) {
    case Op::SbEls:
      // els(a) = <id, a> at the context it is used in.
      return spair(s.kid(0), idsub(dom), s.kid(1));
    case Op::SbLift: {
      // lift(A, h) = <h . down(A[h]), var>; needs dom = D |> A[h].
      const Expr& a = s.kid(0);
      const Expr& h = s.kid(1);
      Expr ah = tysub(a, h);
      if (dom.op() != Op::CtxExt || dom.kid(1) != ah)
        fail(ErrorKind::ScopeError,
             "lift used at a context that does not end in the substituted "
             "type: " + print(dom));
      return spair(a, comp(h, down(ah)), var_());
    }
    case Op::SbStep:
      // stepsub(G) = <down(nat), succ(var)> : G |> nat -> G |> nat.
      return spair(nat(), down(nat()), succ(var_()));
    case Op::SbSumLf: {
      const Expr& a = s.kid(0);
      const Expr& b = s.kid(1);
      Expr w = down(a);
      return spair(sum(a, b), w, lf(tysub(a, w), tysub(b, w), var_()));
    }
    case Op::SbSumRg: {
      const Expr& a = s.kid(0);
      const Expr& b = s.kid(1);
      Expr w = down(b);
      return spair(sum(a, b), w, rg(tysub(a, w), tysub(b, w), var_()));
    }
    case Op::SbPrX:
      // Forget the inner copy: weaken by the outer one.
      return down(tysub(s.kid(0), down(s.kid(0))));
    case Op::SbPrY: {
      // Keep the inner copy: weaken twice, then pair the last variable
      // back on.
      const Expr& a = s.kid(0);
      Expr w2 = comp(down(a), down(tysub(a, down(a))));
      return spair(a, w2, var_());
    }
    case Op::SbBrSb:
      return spair(br(s.kid(0)), down(s.kid(0)), brin(var_()));
    default:
      return s;
  }
}

namespace {

bool scoped_rec(const Expr& ctx, const Expr& e, std::string* bad);

// Computes the codomain of f used at domain `dom`, checking shapes along
// the way. Returns nullopt and sets *why on any mismatch.
std::optional<Expr> cod_rec(const Expr& f, const Expr& dom,
                            std::string* why) {
  auto miss = [&](const std::string& msg) -> std::optional<Expr> {
    if (why) *why = msg + " in " + print(f) + " at " + print(dom);
    return std::nullopt;
  };
  switch (f.op()) {
    case Op::SbId:
      if (f.kid(0) != dom) return miss("identity tagged with another context");
      return dom;
    case Op::SbComp: {
      auto mid = cod_rec(f.kid(1), dom, why);
      if (!mid) return std::nullopt;
      return cod_rec(f.kid(0), *mid, why);
    }
    case Op::SbDown:
      if (dom.op() != Op::CtxExt || dom.kid(1) != f.kid(0))
        return miss("weakening used at a context not ending in its type");
      return dom.kid(0);
    case Op::SbPair: {
      auto base = cod_rec(f.kid(1), dom, why);
      if (!base) return std::nullopt;
      return ctx_ext(*base, f.kid(0));
    }
    case Op::SbPhi:
      if (f.kid(0) != dom) return miss("transport tagged with another domain");
      return f.kid(1);
    case Op::SbEls:
      return ctx_ext(dom, f.kid(0));
    case Op::SbLift: {
      Expr ah = tysub(f.kid(0), f.kid(1));
      if (dom.op() != Op::CtxExt || dom.kid(1) != ah)
        return miss("lift used at a context not ending in the pulled-back "
                    "type");
      auto base = cod_rec(f.kid(1), dom.kid(0), why);
      if (!base) return std::nullopt;
      return ctx_ext(*base, f.kid(0));
    }
    case Op::SbStep:
      if (dom != ctx_ext(f.kid(0), nat()))
        return miss("successor map used away from its nat context");
      return dom;
    case Op::SbSumLf:
      if (dom.op() != Op::CtxExt || dom.kid(1) != f.kid(0))
        return miss("left injection map used at a context not ending in its "
                    "left type");
      return ctx_ext(dom.kid(0), sum(f.kid(0), f.kid(1)));
    case Op::SbSumRg:
      if (dom.op() != Op::CtxExt || dom.kid(1) != f.kid(1))
        return miss("right injection map used at a context not ending in its "
                    "right type");
      return ctx_ext(dom.kid(0), sum(f.kid(0), f.kid(1)));
    case Op::SbPrX:
    case Op::SbPrY: {
      const Expr& a = f.kid(0);
      if (dom.op() != Op::CtxExt || dom.kid(1) != tysub(a, down(a)) ||
          dom.kid(0).op() != Op::CtxExt || dom.kid(0).kid(1) != a)
        return miss("projection used away from a doubled context");
      return dom.kid(0);
    }
    case Op::SbBrSb:
      if (dom.op() != Op::CtxExt || dom.kid(1) != f.kid(0))
        return miss("squash map used at a context not ending in its type");
      return ctx_ext(dom.kid(0), br(f.kid(0)));
    default:
      return miss("not a substitution");
  }
}

// Category-directed scope check; `bad` receives the first offender.
bool scoped_rec(const Expr& ctx, const Expr& e, std::string* bad) {
  auto blame = [&](const char* msg) {
    if (bad && bad->empty())
      *bad = std::string(msg) + ": " + print(e) + " at " + print(ctx);
    return false;
  };
  switch (e.op()) {
    // contexts (ctx argument ignored)
    case Op::CtxEmpty:
      return true;
    case Op::CtxExt:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(e.kid(0), e.kid(1), bad);

    // types
    case Op::TyPi:
    case Op::TySigma:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(ctx_ext(ctx, e.kid(0)), e.kid(1), bad);
    case Op::TyId:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(ctx, e.kid(1), bad) && scoped_rec(ctx, e.kid(2), bad);
    case Op::TyNat:
    case Op::TyN0:
    case Op::TyU:
      return true;
    case Op::TySum:
      return scoped_rec(ctx, e.kid(0), bad) && scoped_rec(ctx, e.kid(1), bad);
    case Op::TyBr:
      return scoped_rec(ctx, e.kid(0), bad);
    case Op::TySub: {
      std::string why;
      auto cod = cod_rec(e.kid(1), ctx, &why);
      if (!cod) return blame("substitution does not leave this context");
      return scoped_rec(ctx, e.kid(1), bad) &&
             scoped_rec(*cod, e.kid(0), bad);
    }

    // terms
    case Op::TmVar:
      if (ctx.op() != Op::CtxExt)
        return blame("variable in the empty context");
      return true;
    case Op::TmZero:
      return true;
    case Op::TmSucc:
    case Op::TmPr1:
    case Op::TmPr2:
    case Op::TmRr:
    case Op::TmBrIn:
      return scoped_rec(ctx, e.kid(0), bad);
    case Op::TmLam:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(ctx_ext(ctx, e.kid(0)), e.kid(1), bad) &&
             scoped_rec(ctx_ext(ctx, e.kid(0)), e.kid(2), bad);
    case Op::TmApp:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(ctx_ext(ctx, e.kid(0)), e.kid(1), bad) &&
             scoped_rec(ctx, e.kid(2), bad) && scoped_rec(ctx, e.kid(3), bad);
    case Op::TmPair:
      return scoped_rec(ctx, e.kid(0), bad) && scoped_rec(ctx, e.kid(1), bad);
    case Op::TmRec: {
      Expr gn = ctx_ext(ctx, nat());
      return scoped_rec(gn, e.kid(0), bad) && scoped_rec(ctx, e.kid(1), bad) &&
             scoped_rec(ctx_ext(gn, e.kid(0)), e.kid(2), bad) &&
             scoped_rec(ctx, e.kid(3), bad);
    }
    case Op::TmR0:
      return scoped_rec(ctx_ext(ctx, n0()), e.kid(0), bad) &&
             scoped_rec(ctx, e.kid(1), bad);
    case Op::TmLf:
    case Op::TmRg:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(ctx, e.kid(1), bad) && scoped_rec(ctx, e.kid(2), bad);
    case Op::TmSumRec: {
      const Expr& a = e.kid(0);
      const Expr& b = e.kid(1);
      return scoped_rec(ctx, a, bad) && scoped_rec(ctx, b, bad) &&
             scoped_rec(ctx_ext(ctx, sum(a, b)), e.kid(2), bad) &&
             scoped_rec(ctx_ext(ctx, a), e.kid(3), bad) &&
             scoped_rec(ctx_ext(ctx, b), e.kid(4), bad) &&
             scoped_rec(ctx, e.kid(5), bad);
    }
    case Op::TmWh:
      return scoped_rec(ctx, e.kid(0), bad) &&
             scoped_rec(ctx, e.kid(1), bad) &&
             scoped_rec(ctx, e.kid(2), bad) &&
             scoped_rec(ctx_ext(ctx, e.kid(0)), e.kid(3), bad);
    case Op::TmCode:
      return scoped_rec(ctx, e.kid(0), bad);
    case Op::TmSub: {
      std::string why;
      auto cod = cod_rec(e.kid(1), ctx, &why);
      if (!cod) return blame("substitution does not leave this context");
      return scoped_rec(ctx, e.kid(1), bad) &&
             scoped_rec(*cod, e.kid(0), bad);
    }

    // substitutions: shape handled by cod_rec; here check the pieces
    case Op::SbId:
    case Op::SbPhi:
    case Op::SbStep: {
      std::string why;
      if (!cod_rec(e, ctx, &why)) return blame("substitution shape mismatch");
      return scoped_rec(ctx, e.kid(0), bad) &&
             (e.arity() < 2 || scoped_rec(ctx, e.kid(1), bad));
    }
    case Op::SbComp: {
      std::string why;
      auto mid = cod_rec(e.kid(1), ctx, &why);
      if (!mid) return blame("inner substitution shape mismatch");
      return scoped_rec(ctx, e.kid(1), bad) && scoped_rec(*mid, e.kid(0), bad);
    }
    case Op::SbDown: {
      std::string why;
      if (!cod_rec(e, ctx, &why)) return blame("substitution shape mismatch");
      return scoped_rec(ctx.kid(0), e.kid(0), bad);
    }
    case Op::SbPair: {
      std::string why;
      auto base = cod_rec(e.kid(1), ctx, &why);
      if (!base) return blame("inner substitution shape mismatch");
      return scoped_rec(ctx, e.kid(1), bad) &&
             scoped_rec(*base, e.kid(0), bad) &&
             scoped_rec(ctx, e.kid(2), bad);
    }
    case Op::SbEls:
      return scoped_rec(ctx, e.kid(0), bad) && scoped_rec(ctx, e.kid(1), bad);
    case Op::SbLift: {
      std::string why;
      if (!cod_rec(e, ctx, &why)) return blame("substitution shape mismatch");
      auto base = cod_rec(e.kid(1), ctx.kid(0), &why);
      return scoped_rec(ctx.kid(0), e.kid(1), bad) &&
             scoped_rec(*base, e.kid(0), bad);
    }
    case Op::SbSumLf:
    case Op::SbSumRg:
    case Op::SbPrX:
    case Op::SbPrY:
    case Op::SbBrSb: {
      std::string why;
      if (!cod_rec(e, ctx, &why)) return blame("substitution shape mismatch");
      // The type arguments live one step below the domain's end.
      Expr base = e.op() == Op::SbPrX || e.op() == Op::SbPrY
                      ? ctx.kid(0).kid(0)
                      : ctx.kid(0);
      for (const Expr& k : e.kids())
        if (!scoped_rec(base, k, bad)) return false;
      return true;
    }

    default:
      return blame("expression out of place");
  }
}

}  // namespace

std::optional<std::pair<Expr, Expr>> infer_ctx_of_sub(const Expr& f,
                                                      const Expr& dom,
                                                      std::string* why) {
  if (f.cat() != Cat::Sb) {
    if (why) *why = "not a substitution: " + print(f);
    return std::nullopt;
  }
  auto cod = cod_rec(f, dom, why);
  if (!cod) return std::nullopt;
  return std::make_pair(dom, *cod);
}

Verdict well_scoped_in(const Expr& ctx, const Expr& e) {
  if (ctx.cat() != Cat::Ctx)
    return Verdict::fails("ambient expression is not a context: " +
                          print(ctx));
  std::string bad;
  if (!scoped_rec(ctx, ctx, &bad))
    return Verdict::fails("ill-scoped ambient context: " + bad);
  bad.clear();
  if (scoped_rec(ctx, e, &bad)) return Verdict::holds();
  return Verdict::fails(bad.empty() ? "ill-scoped" : bad);
}

Verdict well_scoped(const Expr& e) {
  std::string bad;
  switch (e.op()) {
    case Op::JgCtx:
      return well_scoped_in(ctx_empty(), e.kid(0));
    case Op::JgCtxEq: {
      Verdict va = well_scoped_in(ctx_empty(), e.kid(0));
      if (!va.is_holds()) return va;
      return well_scoped_in(ctx_empty(), e.kid(1));
    }
    case Op::JgTy:
      return well_scoped_in(e.kid(0), e.kid(1));
    case Op::JgTyEq: {
      Verdict va = well_scoped_in(e.kid(0), e.kid(1));
      if (!va.is_holds()) return va;
      return well_scoped_in(e.kid(0), e.kid(2));
    }
    case Op::JgElt: {
      Verdict va = well_scoped_in(e.kid(0), e.kid(2));
      if (!va.is_holds()) return va;
      return well_scoped_in(e.kid(0), e.kid(1));
    }
    case Op::JgEltEq: {
      Verdict va = well_scoped_in(e.kid(0), e.kid(3));
      if (!va.is_holds()) return va;
      Verdict vb = well_scoped_in(e.kid(0), e.kid(1));
      if (!vb.is_holds()) return vb;
      return well_scoped_in(e.kid(0), e.kid(2));
    }
    case Op::JgSub:
    case Op::JgSubEq: {
      std::size_t nsubs = e.op() == Op::JgSub ? 1 : 2;
      const Expr& g = e.kid(nsubs);
      const Expr& d = e.kid(nsubs + 1);
      Verdict vg = well_scoped_in(ctx_empty(), g);
      if (!vg.is_holds()) return vg;
      Verdict vd = well_scoped_in(ctx_empty(), d);
      if (!vd.is_holds()) return vd;
      for (std::size_t i = 0; i < nsubs; ++i) {
        Verdict vf = well_scoped_in(g, e.kid(i));
        if (!vf.is_holds()) return vf;
        std::string why;
        auto dc = infer_ctx_of_sub(e.kid(i), g, &why);
        if (!dc) return Verdict::fails(why);
        if (dc->second != d)
          return Verdict::fails("substitution lands in " + print(dc->second) +
                                ", judgment claims " + print(d));
      }
      return Verdict::holds();
    }
    default:
      if (e.cat() == Cat::Ctx) return well_scoped_in(ctx_empty(), e);
      return Verdict::fails(
          "scope check needs a judgment or a context, got: " + print(e));
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_rec(const Expr& e, std::string& out) {
  const OpInfo& in = info(e.op());
  if (e.op() == Op::CtxEmpty || e.op() == Op::CtxExt) {
    // Context chains flatten: (ctx A B C).
    std::vector<const Expr*> tys;
    const Expr* g = &e;
    while (g->op() == Op::CtxExt) {
      tys.push_back(&g->kid(1));
      g = &g->kid(0);
    }
    out += "(ctx";
    for (auto it = tys.rbegin(); it != tys.rend(); ++it) {
      out += ' ';
      print_rec(**it, out);
    }
    out += ')';
    return;
  }
  if (e.op() == Op::TyU) {
    out += "(u " + std::to_string(e.level()) + ")";
    return;
  }
  if (in.arity == 0 && e.cat() != Cat::Jg) {
    out += in.name;
    return;
  }
  out += '(';
  if (e.cat() == Cat::Jg) out += "judg ";
  out += in.name;
  for (const Expr& k : e.kids()) {
    out += ' ';
    print_rec(k, out);
  }
  out += ')';
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { LParen, RParen, Word, End } kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = src_[pos_];
    if (c == '(') {
      advance();
      t.kind = Token::LParen;
      return t;
    }
    if (c == ')') {
      advance();
      t.kind = Token::RParen;
      return t;
    }
    t.kind = Token::Word;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(
                                     src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
      t.text += src_[pos_];
      advance();
    }
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void perr(const Token& t, const std::string& msg) {
  fail(ErrorKind::ParseError, std::to_string(t.line) + ":" +
                                  std::to_string(t.col) + ": " + msg);
}

const char* cat_word(Cat c) {
  switch (c) {
    case Cat::Ctx: return "a context";
    case Cat::Ty: return "a type";
    case Cat::Tm: return "a term";
    case Cat::Sb: return "a substitution";
    case Cat::Jg: return "a judgment";
  }
  return "an expression";
}

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { bump(); }

  Expr expr(Cat want) {
    if (cur_.kind == Token::Word) {
      // Bare words: nullary ops of the wanted category, or a defined name.
      const OpInfo* in = find_word(cur_.text, want);
      if (in) {
        Token t = cur_;
        bump();
        if (in->arity != 0 || in->op == Op::TyU)
          perr(t, std::string(in->name) + " takes arguments");
        return Expr::make(in->op, {});
      }
      auto d = defs_.find(cur_.text);
      if (d != defs_.end()) {
        if (d->second.cat() != want)
          perr(cur_, cur_.text + " names " + cat_word(d->second.cat()) +
                         ", wanted " + cat_word(want));
        bump();
        return d->second;
      }
      perr(cur_, "expected " + std::string(cat_word(want)) + ", got '" +
                     cur_.text + "'");
    }
    if (cur_.kind != Token::LParen)
      perr(cur_, "expected " + std::string(cat_word(want)));
    Token open = cur_;
    bump();
    if (cur_.kind != Token::Word) perr(cur_, "expected a keyword after '('");
    std::string head = cur_.text;
    Token headt = cur_;
    bump();

    if (want == Cat::Jg) {
      if (head != "judg") perr(headt, "expected (judg ...)");
      return judg_body(open);
    }
    if (want == Cat::Ctx) {
      if (head != "ctx") {
        auto d = defs_.find(head);
        perr(headt, d != defs_.end() && d->second.cat() == Cat::Ctx
                        ? "defined names stand alone, without parentheses"
                        : "expected (ctx ...)");
      }
      Expr g = ctx_empty();
      while (cur_.kind != Token::RParen) {
        if (cur_.kind == Token::End) perr(cur_, "unclosed (ctx");
        g = ctx_ext(g, expr(Cat::Ty));
      }
      bump();
      return g;
    }

    const OpInfo* in = find_word(head, want);
    if (!in || (in->arity == 0 && in->op != Op::TyU))
      perr(headt, "unknown " + std::string(cat_word(want)) + " form '" +
                      head + "'");
    if (in->op == Op::TyU) {
      std::uint64_t lvl = integer("universe level");
      expect_rparen(open);
      return u(lvl);
    }
    std::vector<Expr> kids;
    for (int i = 0; i < in->arity; ++i)
      kids.push_back(expr(in->kcats[i]));
    expect_rparen(open);
    return Expr::make(in->op, std::move(kids));
  }

  SourceFile file() {
    SourceFile out;
    while (cur_.kind != Token::End) {
      if (cur_.kind != Token::LParen)
        perr(cur_, "expected a (judg ...) or (def-...) form");
      Token open = cur_;
      bump();
      if (cur_.kind != Token::Word)
        perr(cur_, "expected a keyword after '('");
      std::string head = cur_.text;
      Token headt = cur_;
      bump();
      if (head == "judg") {
        SourceItem item;
        item.line = open.line;
        item.judgment = judg_body(open);
        out.items.push_back(std::move(item));
        continue;
      }
      Cat dcat;
      if (head == "def-ctx") dcat = Cat::Ctx;
      else if (head == "def-ty") dcat = Cat::Ty;
      else if (head == "def-tm") dcat = Cat::Tm;
      else if (head == "def-sub") dcat = Cat::Sb;
      else perr(headt, "unknown top-level form '" + head + "'");
      if (cur_.kind != Token::Word)
        perr(cur_, "expected a name after " + head);
      std::string name = cur_.text;
      if (find_word(name, Cat::Ctx) || find_word(name, Cat::Ty) ||
          find_word(name, Cat::Tm) || find_word(name, Cat::Sb) ||
          name == "judg" || name == "ctx" || name.rfind("def-", 0) == 0)
        perr(cur_, "'" + name + "' is a keyword");
      if (defs_.count(name)) perr(cur_, "'" + name + "' is already defined");
      bump();
      Expr body = expr(dcat);
      expect_rparen(open);
      defs_.emplace(std::move(name), std::move(body));
    }
    return out;
  }

  void expect_end() {
    if (cur_.kind != Token::End) perr(cur_, "trailing input");
  }

 private:
  void bump() { cur_ = lex_.next(); }

  void expect_rparen(const Token& open) {
    if (cur_.kind != Token::RParen)
      perr(cur_.kind == Token::End ? open : cur_,
           cur_.kind == Token::End ? "unclosed '('" : "expected ')'");
    bump();
  }

  std::uint64_t integer(const char* what) {
    if (cur_.kind != Token::Word || cur_.text.empty() ||
        !std::all_of(cur_.text.begin(), cur_.text.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      perr(cur_, std::string("expected ") + what);
    std::uint64_t v = 0;
    try {
      v = std::stoull(cur_.text);
    } catch (const std::out_of_range&) {
      perr(cur_, std::string(what) + " out of range");
    }
    bump();
    return v;
  }

  // Finds the op a surface word denotes in the wanted category. "ctx" is
  // special-cased by the context branch of expr().
  static const OpInfo* find_word(const std::string& w, Cat want) {
    for (const OpInfo& in : kOps) {
      if (in.cat != want) continue;
      if (in.op == Op::CtxEmpty || in.op == Op::CtxExt) continue;
      if (w == in.name) return &in;
    }
    return nullptr;
  }

  Expr judg_body(const Token& open) {
    if (cur_.kind != Token::Word) perr(cur_, "expected a judgment form");
    std::string form = cur_.text;
    const OpInfo* in = nullptr;
    for (const OpInfo& cand : kOps)
      if (cand.cat == Cat::Jg && form == cand.name) in = &cand;
    if (!in) perr(cur_, "unknown judgment form '" + form + "'");
    bump();
    std::vector<Expr> kids;
    for (int i = 0; i < in->arity; ++i)
      kids.push_back(expr(in->kcats[i]));
    expect_rparen(open);
    return Expr::make(in->op, std::move(kids));
  }

  Lexer lex_;
  Token cur_;
  std::map<std::string, Expr> defs_;
};

}  // namespace

Expr parse_expr(const std::string& text, Cat want) {
  Parser p(text);
  Expr e = p.expr(want);
  p.expect_end();
  return e;
}

SourceFile parse_file(const std::string& text) {
  Parser p(text);
  return p.file();
}

}  // namespace syn
}  // namespace vml
