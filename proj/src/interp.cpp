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

#include <limits>

#include "vml/eq.hpp"
#include "vml/universe.hpp"
#include "vml/zf.hpp"

namespace vml {
namespace interp {

using syn::Cat;
using syn::Expr;
using syn::Op;

namespace {

// The one key of the interpreted empty context.
const Key kPoint = Key::numeral(0);

Key require_witness(const Verdict& v, const char* what) {
  if (v.truth == Truth::Unknown)
    fail(ErrorKind::UndecidedEquality, std::string(what) + ": " + v.str());
  if (!v.is_holds())
    fail(ErrorKind::PremiseFails, std::string(what) + ": " + v.str());
  return v.witness();
}

// Substitution premises are strict: an undecided premise is a failed one.
Key strict_witness(const Verdict& v, const char* what) {
  if (!v.is_holds())
    fail(ErrorKind::PremiseFails, std::string(what) + ": " + v.str());
  return v.witness();
}

// Codomain context expression of f used at dom, or ScopeError.
Expr cod_expr(const Expr& f, const Expr& dom) {
  std::string why;
  auto dc = syn::infer_ctx_of_sub(f, dom, &why);
  if (!dc) fail(ErrorKind::ScopeError, why);
  return dc->second;
}

}  // namespace

Checker::Checker(CheckConfig cfg) : cfg_(cfg) {}

VSet Checker::interp_ctx(const Expr& g) {
  auto hit = ctx_memo_.find(g);
  if (hit != ctx_memo_.end()) return hit->second;
  VSet out;
  switch (g.op()) {
    case Op::CtxEmpty:
      out = VSet::table({{kPoint, VSet::empty()}});
      break;
    case Op::CtxExt: {
      VSet base = interp_ctx(g.kid(0));
      VMap ty = interp_ty(g.kid(1), g.kid(0));
      out = sigma_v(base, VFamily(base, ty.assign), cfg_.budget());
      break;
    }
    default:
      fail(ErrorKind::ScopeError, "not a context: " + syn::print(g));
  }
  ctx_memo_.emplace(g, out);
  return out;
}

// Bounded respect check: keys equal in the context must get equal values.
// Runs the assignment on every probed key, so evaluation errors surface
// here deterministically.
static Verdict check_respect(const VSet& ctx,
                             const std::function<VSet(const Key&)>& fn,
                             const Budget& bud) {
  KeyEnum en = ctx.space().enumerate(bud.nat_bound);
  std::vector<VSet> elems, vals;
  elems.reserve(en.keys.size());
  vals.reserve(en.keys.size());
  for (const Key& k : en.keys) {
    elems.push_back(ctx.at(k));
    vals.push_back(fn(k));
  }
  Verdict acc = Verdict::holds();
  bool truncated = !en.complete;
  for (std::size_t i = 0; i < en.keys.size(); ++i) {
    for (std::size_t j = i + 1; j < en.keys.size(); ++j) {
      Verdict ke = eq_v(elems[i], elems[j], bud);
      if (ke.is_fails()) continue;
      if (!ke.is_holds()) {
        truncated = true;  // equality of the keys themselves undecided
        continue;
      }
      Verdict ve = eq_v(vals[i], vals[j], bud);
      if (ve.is_fails())
        return Verdict::fails("equal keys get unequal values at " +
                              en.keys[i].str() + " / " + en.keys[j].str());
      if (!ve.is_holds())
        acc = Verdict::unknown("respect undecided at " + en.keys[i].str() +
                                   " / " + en.keys[j].str(),
                               bud);
    }
  }
  if (!acc.definitive() || acc.is_fails()) return acc;
  if (truncated)
    return Verdict::holds_bounded(
        static_cast<std::uint32_t>(en.keys.size()),
        "respect verified on the probed keys only");
  return Verdict::holds();
}

VMap Checker::interp_ty(const Expr& a, const Expr& g) {
  auto memo_key = std::make_pair(a, g);
  auto hit = ty_memo_.find(memo_key);
  if (hit != ty_memo_.end()) return hit->second;

  const Budget bud = cfg_.budget();
  VSet ctxV = interp_ctx(g);
  std::function<VSet(const Key&)> fn;

  switch (a.op()) {
    case Op::TyNat:
      fn = [](const Key&) { return nat_v(); };
      break;
    case Op::TyN0:
      fn = [](const Key&) { return VSet::empty(); };
      break;
    case Op::TyU: {
      if (a.level() > std::numeric_limits<std::uint32_t>::max())
        fail(ErrorKind::ScopeError, "universe level out of range");
      VSet uv = u_v(static_cast<std::uint32_t>(a.level()));
      fn = [uv](const Key&) { return uv; };
      break;
    }
    case Op::TyPi:
    case Op::TySigma: {
      VMap tyA = interp_ty(a.kid(0), g);
      VMap tyB = interp_ty(a.kid(1), syn::ctx_ext(g, a.kid(0)));
      bool is_pi = a.op() == Op::TyPi;
      fn = [tyA, tyB, is_pi, bud](const Key& x) {
        VSet base = tyA.at(x);
        VFamily fam(base, [tyB, x](const Key& u) {
          return tyB.at(Key::pair(x, u));
        });
        return is_pi ? pi_v(base, fam, bud) : sigma_v(base, fam, bud);
      };
      break;
    }
    case Op::TyId: {
      VMap tyA = interp_ty(a.kid(0), g);
      VMap ts = interp_tm(a.kid(1), g);
      VMap tt = interp_tm(a.kid(2), g);
      fn = [tyA, ts, tt, bud](const Key& x) {
        VSet av = tyA.at(x);
        Key ws = require_witness(mem_v(ts.at(x), av, bud),
                                 "left endpoint outside its type");
        Key wt = require_witness(mem_v(tt.at(x), av, bud),
                                 "right endpoint outside its type");
        return id_v(av, ws, wt, bud);
      };
      break;
    }
    case Op::TySum: {
      VMap tyA = interp_ty(a.kid(0), g);
      VMap tyB = interp_ty(a.kid(1), g);
      fn = [tyA, tyB](const Key& x) { return sum_v(tyA.at(x), tyB.at(x)); };
      break;
    }
    case Op::TyBr: {
      VMap tyA = interp_ty(a.kid(0), g);
      fn = [tyA](const Key& x) { return sq_v(tyA.at(x)); };
      break;
    }
    case Op::TySub: {
      Expr codE = cod_expr(a.kid(1), g);
      SetoidMap sm = interp_sub(a.kid(1), g);
      VMap inner = interp_ty(a.kid(0), codE);
      fn = [sm, inner](const Key& x) { return inner.at(sm(x)); };
      break;
    }
    default:
      fail(ErrorKind::ScopeError, "not a type: " + syn::print(a));
  }

  VMap out{ctxV, std::move(fn), Verdict::fails("unchecked")};
  out.ext_checked = check_respect(ctxV, out.assign, bud);
  ty_memo_.emplace(memo_key, out);
  return out;
}

VMap Checker::interp_tm(const Expr& a, const Expr& g) {
  auto memo_key = std::make_pair(a, g);
  auto hit = tm_memo_.find(memo_key);
  if (hit != tm_memo_.end()) return hit->second;

  const Budget bud = cfg_.budget();
  VSet ctxV = interp_ctx(g);
  std::function<VSet(const Key&)> fn;

  switch (a.op()) {
    case Op::TmVar: {
      if (g.op() != Op::CtxExt)
        fail(ErrorKind::ScopeError, "variable in the empty context");
      VMap tyA = interp_ty(g.kid(1), g.kid(0));
      fn = [tyA](const Key& k) {
        if (k.tag() != Key::Tag::Pair)
          fail(ErrorKind::KeyOutOfRange, "extended context key is not a pair");
        return tyA.at(k.first()).at(k.second());
      };
      break;
    }
    case Op::TmZero:
      fn = [](const Key&) { return numeral(0); };
      break;
    case Op::TmSucc: {
      VMap ta = interp_tm(a.kid(0), g);
      fn = [ta](const Key& x) {
        return VSet::table({{Key::numeral(0), ta.at(x)}});
      };
      break;
    }
    case Op::TmLam: {
      VMap tyA = interp_ty(a.kid(0), g);
      Expr ext = syn::ctx_ext(g, a.kid(0));
      VMap tb = interp_tm(a.kid(2), ext);
      std::uint32_t nb = cfg_.nat_bound;
      fn = [tyA, tb, nb](const Key& x) {
        VSet base = tyA.at(x);
        KeyEnum en = base.space().enumerate(nb);
        if (!en.complete)
          fail(ErrorKind::InfiniteUnsupported,
               "function graph over a space that does not enumerate");
        std::vector<std::pair<Key, VSet>> graph;
        graph.reserve(en.keys.size());
        for (const Key& u : en.keys)
          graph.emplace_back(u,
                             pair_v(base.at(u), tb.at(Key::pair(x, u))));
        return VSet::table(std::move(graph));
      };
      break;
    }
    case Op::TmApp: {
      VMap tyA = interp_ty(a.kid(0), g);
      VMap tyB = interp_ty(a.kid(1), syn::ctx_ext(g, a.kid(0)));
      VMap tc = interp_tm(a.kid(2), g);
      VMap ta = interp_tm(a.kid(3), g);
      fn = [tyA, tyB, tc, ta, bud](const Key& x) {
        VSet base = tyA.at(x);
        VFamily fam(base, [tyB, x](const Key& u) {
          return tyB.at(Key::pair(x, u));
        });
        VSet pv = pi_v(base, fam, bud);
        Key h = require_witness(mem_v(tc.at(x), pv, bud),
                                "applied term is not in the function set");
        Key wa = require_witness(mem_v(ta.at(x), base, bud),
                                 "argument is not in the base");
        return fam.at(wa).at(h.apply(wa));
      };
      break;
    }
    case Op::TmPair: {
      VMap ta = interp_tm(a.kid(0), g);
      VMap tb = interp_tm(a.kid(1), g);
      fn = [ta, tb](const Key& x) { return pair_v(ta.at(x), tb.at(x)); };
      break;
    }
    case Op::TmPr1:
    case Op::TmPr2: {
      VMap tc = interp_tm(a.kid(0), g);
      bool left = a.op() == Op::TmPr1;
      fn = [tc, left, bud](const Key& x) {
        VPair p = unpair_v(tc.at(x), bud);
        return left ? p.first : p.second;
      };
      break;
    }
    case Op::TmRr: {
      // An inhabited equality set holds the single canonical point, so that
      // is what reflexivity denotes. The endpoint still gets evaluated: its
      // errors must surface even though its value is discarded.
      VMap ta = interp_tm(a.kid(0), g);
      fn = [ta](const Key& x) {
        (void)ta.at(x);
        return VSet::empty();
      };
      break;
    }
    case Op::TmRec: {
      VMap tyC = interp_ty(a.kid(0), syn::ctx_ext(g, syn::nat()));
      VMap td = interp_tm(a.kid(1), g);
      Expr ext2 = syn::ctx_ext(syn::ctx_ext(g, syn::nat()), a.kid(0));
      VMap te = interp_tm(a.kid(2), ext2);
      VMap tc = interp_tm(a.kid(3), g);
      fn = [tyC, td, te, tc, bud](const Key& x) {
        Key wn = require_witness(mem_v(tc.at(x), nat_v(), bud),
                                 "recursion target is not a numeral");
        std::uint64_t n = wn.num();
        VSet r = td.at(x);
        for (std::uint64_t i = 0; i < n; ++i) {
          Key xi = Key::pair(x, Key::numeral(i));
          Key wi = require_witness(mem_v(r, tyC.at(xi), bud),
                                   "recursion value leaves the motive");
          r = te.at(Key::pair(xi, wi));
        }
        return r;
      };
      break;
    }
    case Op::TmR0: {
      VMap tc = interp_tm(a.kid(1), g);
      fn = [tc, bud](const Key& x) -> VSet {
        (void)require_witness(mem_v(tc.at(x), VSet::empty(), bud),
                              "eliminating a member of the empty set");
        return VSet::empty();  // unreachable: membership can never hold
      };
      break;
    }
    case Op::TmLf:
    case Op::TmRg: {
      VMap tx = interp_tm(a.kid(2), g);
      bool left = a.op() == Op::TmLf;
      fn = [tx, left](const Key& x) {
        return left ? inl_v(tx.at(x)) : inr_v(tx.at(x));
      };
      break;
    }
    case Op::TmSumRec: {
      VMap tyA = interp_ty(a.kid(0), g);
      VMap tyB = interp_ty(a.kid(1), g);
      VMap td = interp_tm(a.kid(3), syn::ctx_ext(g, a.kid(0)));
      VMap te = interp_tm(a.kid(4), syn::ctx_ext(g, a.kid(1)));
      VMap tc = interp_tm(a.kid(5), g);
      fn = [tyA, tyB, td, te, tc, bud](const Key& x) {
        VSet sv = sum_v(tyA.at(x), tyB.at(x));
        Key w = require_witness(mem_v(tc.at(x), sv, bud),
                                "scrutinee is not in the sum");
        if (w.tag() == Key::Tag::Inl) return td.at(Key::pair(x, w.first()));
        return te.at(Key::pair(x, w.first()));
      };
      break;
    }
    case Op::TmBrIn: {
      VMap ta = interp_tm(a.kid(0), g);
      fn = [ta](const Key& x) {
        (void)ta.at(x);
        return VSet::empty();
      };
      break;
    }
    case Op::TmWh: {
      VMap tyA = interp_ty(a.kid(0), g);
      VMap tk = interp_tm(a.kid(2), g);
      VMap tb = interp_tm(a.kid(3), syn::ctx_ext(g, a.kid(0)));
      std::uint32_t nb = cfg_.nat_bound;
      fn = [tyA, tk, tb, nb, bud](const Key& x) {
        VSet base = tyA.at(x);
        Key w = require_witness(mem_v(tk.at(x), sq_v(base), bud),
                                "scrutinee is not in the squash");
        KeyEnum en = base.space().enumerate(nb);
        if (!en.complete)
          fail(ErrorKind::UndecidedEquality,
               "constancy premise undecidable over an unbounded base");
        for (std::size_t i = 0; i < en.keys.size(); ++i)
          for (std::size_t j = i + 1; j < en.keys.size(); ++j) {
            Verdict c = eq_v(tb.at(Key::pair(x, en.keys[i])),
                             tb.at(Key::pair(x, en.keys[j])), bud);
            if (c.is_fails())
              fail(ErrorKind::PremiseFails,
                   "branch map is not constant: " + c.str());
            if (!c.is_holds())
              fail(ErrorKind::UndecidedEquality,
                   "constancy premise undecided: " + c.str());
          }
        return tb.at(Key::pair(x, w));
      };
      break;
    }
    case Op::TmSub: {
      Expr codE = cod_expr(a.kid(1), g);
      SetoidMap sm = interp_sub(a.kid(1), g);
      VMap inner = interp_tm(a.kid(0), codE);
      fn = [sm, inner](const Key& x) { return inner.at(sm(x)); };
      break;
    }
    case Op::TmCode: {
      VMap tyA = interp_ty(a.kid(0), g);
      fn = tyA.assign;
      break;
    }
    default:
      fail(ErrorKind::ScopeError, "not a term: " + syn::print(a));
  }

  VMap out{ctxV, std::move(fn), Verdict::fails("unchecked")};
  out.ext_checked = check_respect(ctxV, out.assign, cfg_.budget());
  tm_memo_.emplace(memo_key, out);
  return out;
}

SetoidMap Checker::interp_sub(const Expr& f, const Expr& dom) {
  auto memo_key = std::make_pair(f, dom);
  auto hit = sub_memo_.find(memo_key);
  if (hit != sub_memo_.end()) return hit->second;

  const Budget bud = cfg_.budget();
  SetoidMap out;

  if (syn::is_derived_sub(f.op())) {
    out = interp_sub(syn::expand_sub(f, dom), dom);
    sub_memo_.emplace(memo_key, out);
    return out;
  }

  switch (f.op()) {
    case Op::SbId: {
      (void)cod_expr(f, dom);
      out = SetoidMap::identity(kappa(interp_ctx(dom)));
      break;
    }
    case Op::SbComp: {
      Expr midE = cod_expr(f.kid(1), dom);
      SetoidMap mg = interp_sub(f.kid(1), dom);
      SetoidMap mf = interp_sub(f.kid(0), midE);
      out = SetoidMap::make(
          mg.dom, mf.cod,
          [mf, mg](const Key& k) { return mf(mg(k)); }, bud);
      break;
    }
    case Op::SbDown: {
      Expr codE = cod_expr(f, dom);
      out = SetoidMap::make(kappa(interp_ctx(dom)), kappa(interp_ctx(codE)),
                            [](const Key& k) {
                              if (k.tag() != Key::Tag::Pair)
                                fail(ErrorKind::KeyOutOfRange,
                                     "extended context key is not a pair");
                              return k.first();
                            },
                            bud);
      break;
    }
    case Op::SbPair: {
      Expr baseE = cod_expr(f.kid(1), dom);
      SetoidMap mf = interp_sub(f.kid(1), dom);
      VMap tyA = interp_ty(f.kid(0), baseE);
      VMap ta = interp_tm(f.kid(2), dom);
      Expr codE = cod_expr(f, dom);
      out = SetoidMap::make(
          kappa(interp_ctx(dom)), kappa(interp_ctx(codE)),
          [mf, tyA, ta, bud](const Key& u) {
            Key y = mf(u);
            Key w = strict_witness(mem_v(ta.at(u), tyA.at(y), bud),
                                   "pairing premise: end term outside the "
                                   "extension type");
            return Key::pair(y, w);
          },
          bud);
      break;
    }
    case Op::SbPhi: {
      (void)cod_expr(f, dom);
      out = kappa_transport(interp_ctx(f.kid(0)), interp_ctx(f.kid(1)), bud);
      break;
    }
    default:
      fail(ErrorKind::ScopeError, "not a substitution: " + syn::print(f));
  }
  sub_memo_.emplace(memo_key, out);
  return out;
}

Verdict Checker::forall_keys(const VSet& ctx,
                             const std::function<Verdict(const Key&)>& body) {
  KeyEnum en = ctx.space().enumerate(cfg_.nat_bound);
  Verdict acc = Verdict::holds();
  for (const Key& k : en.keys) {
    Verdict v = body(k);
    if (v.is_fails())
      return Verdict::fails("at context key " + k.str() + ": " +
                            (v.detail.empty() ? v.str() : v.detail));
    acc = conj(acc, v);
  }
  if (!en.complete)
    acc = conj(acc, Verdict::holds_bounded(
                        static_cast<std::uint32_t>(en.keys.size()),
                        "context keys probed up to the bound"));
  return acc;
}

Verdict Checker::ctx_valid(const Expr& g) {
  if (g.op() == Op::CtxEmpty) return Verdict::holds();
  Verdict base = ctx_valid(g.kid(0));
  if (base.is_fails()) return base;
  VMap ty = interp_ty(g.kid(1), g.kid(0));
  (void)interp_ctx(g);  // forces the dependent pair set to build
  return conj(base, ty.ext_checked);
}

Verdict Checker::elt_holds(const Expr& g, const Expr& a, const Expr& ty) {
  const Budget bud = cfg_.budget();
  Verdict cv = ctx_valid(g);
  if (cv.is_fails()) return cv;
  VMap tyA = interp_ty(ty, g);
  if (tyA.ext_checked.is_fails()) return tyA.ext_checked;
  VMap ta = interp_tm(a, g);
  if (ta.ext_checked.is_fails()) return ta.ext_checked;
  Verdict pw = forall_keys(tyA.dom_ctx, [&](const Key& x) {
    VSet target = tyA.at(x);
    if (target.gen() == GenKind::UnivGen)
      return check_mem_u(ta.at(x), target.univ_level(), bud);
    return mem_v(ta.at(x), target, bud);
  });
  return conj({cv, tyA.ext_checked, ta.ext_checked, pw});
}

Verdict Checker::check_impl(const Expr& j) {
  const Budget bud = cfg_.budget();
  Verdict sc = syn::well_scoped(j);
  if (!sc.is_holds()) return sc;

  switch (j.op()) {
    case Op::JgCtx:
      return ctx_valid(j.kid(0));
    case Op::JgCtxEq: {
      Verdict a = ctx_valid(j.kid(0));
      if (a.is_fails()) return a;
      Verdict b = ctx_valid(j.kid(1));
      if (b.is_fails()) return b;
      return conj({a, b, eq_v(interp_ctx(j.kid(0)), interp_ctx(j.kid(1)),
                              bud)});
    }
    case Op::JgTy: {
      Verdict cv = ctx_valid(j.kid(0));
      if (cv.is_fails()) return cv;
      return conj(cv, interp_ty(j.kid(1), j.kid(0)).ext_checked);
    }
    case Op::JgTyEq: {
      Verdict cv = ctx_valid(j.kid(0));
      if (cv.is_fails()) return cv;
      VMap ta = interp_ty(j.kid(1), j.kid(0));
      VMap tb = interp_ty(j.kid(2), j.kid(0));
      if (ta.ext_checked.is_fails()) return ta.ext_checked;
      if (tb.ext_checked.is_fails()) return tb.ext_checked;
      Verdict pw = forall_keys(ta.dom_ctx, [&](const Key& x) {
        return eq_v(ta.at(x), tb.at(x), bud);
      });
      return conj({cv, ta.ext_checked, tb.ext_checked, pw});
    }
    case Op::JgElt:
      return elt_holds(j.kid(0), j.kid(1), j.kid(2));
    case Op::JgEltEq: {
      Verdict ea = elt_holds(j.kid(0), j.kid(1), j.kid(3));
      if (ea.is_fails()) return ea;
      Verdict eb = elt_holds(j.kid(0), j.kid(2), j.kid(3));
      if (eb.is_fails()) return eb;
      VMap ta = interp_tm(j.kid(1), j.kid(0));
      VMap tb = interp_tm(j.kid(2), j.kid(0));
      Verdict pw = forall_keys(ta.dom_ctx, [&](const Key& x) {
        return eq_v(ta.at(x), tb.at(x), bud);
      });
      return conj({ea, eb, pw});
    }
    case Op::JgSub: {
      Verdict cg = ctx_valid(j.kid(1));
      if (cg.is_fails()) return cg;
      Verdict cd = ctx_valid(j.kid(2));
      if (cd.is_fails()) return cd;
      SetoidMap m = interp_sub(j.kid(0), j.kid(1));
      VSet domV = interp_ctx(j.kid(1));
      VSet codV = interp_ctx(j.kid(2));
      Verdict rs = check_respect(
          domV, [&](const Key& k) { return codV.at(m(k)); }, bud);
      return conj({cg, cd, rs});
    }
    case Op::JgSubEq: {
      Verdict cg = ctx_valid(j.kid(2));
      if (cg.is_fails()) return cg;
      Verdict cd = ctx_valid(j.kid(3));
      if (cd.is_fails()) return cd;
      SetoidMap mf = interp_sub(j.kid(0), j.kid(2));
      SetoidMap mg = interp_sub(j.kid(1), j.kid(2));
      VSet domV = interp_ctx(j.kid(2));
      VSet codV = interp_ctx(j.kid(3));
      Verdict rf = check_respect(
          domV, [&](const Key& k) { return codV.at(mf(k)); }, bud);
      if (rf.is_fails()) return rf;
      Verdict rg = check_respect(
          domV, [&](const Key& k) { return codV.at(mg(k)); }, bud);
      if (rg.is_fails()) return rg;
      Verdict pw = forall_keys(domV, [&](const Key& x) {
        return eq_v(codV.at(mf(x)), codV.at(mg(x)), bud);
      });
      return conj({cg, cd, rf, rg, pw});
    }
    default:
      return Verdict::fails("not a judgment: " + syn::print(j));
  }
}

Verdict Checker::check(const Expr& j) {
  Verdict out;
  try {
    out = check_impl(j);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::PremiseFails:
      case ErrorKind::NotEqual:
      case ErrorKind::NotAPair:
      case ErrorKind::FamilyNotExtensional:
      case ErrorKind::ScopeError:
      case ErrorKind::IllFormedCode:
      case ErrorKind::DomainMismatch:
        out = Verdict::fails(e.what());
        break;
      case ErrorKind::UndecidedEquality:
      case ErrorKind::InfiniteUnsupported:
        out = Verdict::unknown(e.what(), cfg_.budget());
        break;
      default:
        throw;  // Internal and KeyOutOfRange point at bugs, not inputs
    }
  }
  if (cfg_.trace)
    trace_.push_back(syn::print(j) + " -> " + out.str());
  return out;
}

Verdict check_judgment(const Expr& judgment, const CheckConfig& cfg) {
  Checker c(cfg);
  return c.check(judgment);
}

}  // namespace interp
}  // namespace vml
