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

#ifndef VML_SYNTAX_HPP
#define VML_SYNTAX_HPP

// Abstract syntax for the explicit-substitution term language, with a
// parenthesized surface form. There are five syntactic categories: contexts,
// types, terms, substitutions, and judgments. Variables are nameless: `var`
// is always the last variable of the ambient context, and earlier variables
// are reached by substituting along weakenings. Substitution is explicit: it
// is a node in the tree, never an operation performed on trees.
//
// Derived substitution forms (els, lift, stepsub, sumsublf/rg, prx, pry,
// brsb) are kept as their own nodes so they print back the way they were
// written; expand_sub rewrites one of them to its definition in terms of the
// core forms (idsub, comp, down, spair, phi).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vml/common.hpp"
#include "vml/verdict.hpp"

namespace vml {
namespace syn {

enum class Cat : std::uint8_t { Ctx, Ty, Tm, Sb, Jg };

enum class Op : std::uint8_t {
  // contexts
  CtxEmpty,
  CtxExt,  // (G, A)
  // types
  TyPi,     // (A, B)  B over G |> A
  TySigma,  // (A, B)  B over G |> A
  TyId,     // (A, a, b)
  TyNat,
  TyN0,
  TySum,  // (A, B)
  TyU,    // level in the node's level slot
  TyBr,   // (A)
  TySub,  // (A, f)  A over cod(f)
  // terms
  TmVar,  // last variable of the ambient context
  TmZero,
  TmSucc,    // (a)
  TmLam,     // (A, B, b)      b over G |> A
  TmApp,     // (A, B, c, a)
  TmPair,    // (a, b)
  TmPr1,     // (c)
  TmPr2,     // (c)
  TmRr,      // (a)
  TmRec,     // (C, d, e, c)   C over G |> Nat, e over G |> Nat |> C
  TmR0,      // (C, c)         C over G |> N0
  TmLf,      // (A, B, a)
  TmRg,      // (A, B, b)
  TmSumRec,  // (A, B, C, d, e, c)  C over G |> Sum(A,B), d over G |> A,
             //                     e over G |> B
  TmBrIn,    // (a)
  TmWh,      // (A, B, k, b)   k an element of Br(A), b over G |> A
  TmSub,     // (a, f)         a over cod(f)
  TmCode,    // (A)            the type A used as an element of a universe
  // substitutions, core forms
  SbId,    // (G)             G -> G
  SbComp,  // (f, g)          apply g first, then f
  SbDown,  // (A)             G |> A -> G
  SbPair,  // (A, f, a)       D -> G |> A  where f : D -> G, a over D
  SbPhi,   // (G, D)          transport along a context equality, G -> D
  // substitutions, derived forms
  SbEls,    // (A, a)         G -> G |> A, sends the context to (id, a)
  SbLift,   // (A, f)         D |> A[f] -> G |> A  where f : D -> G
  SbStep,   // (G)            G |> Nat -> G |> Nat, successor on the end
  SbSumLf,  // (A, B)         G |> A -> G |> Sum(A,B)
  SbSumRg,  // (A, B)         G |> B -> G |> Sum(A,B)
  SbPrX,    // (A)            G |> A |> A[down A] -> G |> A, outer copy
  SbPrY,    // (A)            G |> A |> A[down A] -> G |> A, inner copy
  SbBrSb,   // (A)            G |> A -> G |> Br(A)
  // judgments
  JgCtx,     // (G)
  JgCtxEq,   // (G, D)
  JgTy,      // (G, A)
  JgTyEq,    // (G, A, B)
  JgElt,     // (G, a, A)
  JgEltEq,   // (G, a, b, A)
  JgSub,     // (f, G, D)
  JgSubEq,   // (f, g, G, D)
};

Cat cat_of(Op op);
// Surface keyword for the op ("pi", "spair", ...; judgments map to their
// form word: "ctx", "elt-eq", ...).
const char* op_name(Op op);

// Immutable expression tree with structural equality and a cached hash.
// Nodes are shared; copying an Expr is cheap.
class Expr {
 public:
  Expr();  // the empty context
  static Expr make(Op op, std::vector<Expr> kids, std::uint64_t level = 0);

  Op op() const;
  Cat cat() const;
  const std::vector<Expr>& kids() const;
  const Expr& kid(std::size_t i) const;
  std::size_t arity() const;
  std::uint64_t level() const;  // meaningful for TyU only
  std::uint64_t hash() const;

  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const {
    return static_cast<std::size_t>(e.hash());
  }
};

// Builders. Each checks its children's categories and throws Internal on a
// misuse; they are the only way tests and the harness should build trees.
Expr ctx_empty();
Expr ctx_ext(Expr g, Expr a);

Expr pi(Expr a, Expr b);
Expr sigma(Expr a, Expr b);
Expr id_ty(Expr a, Expr lhs, Expr rhs);
Expr nat();
Expr n0();
Expr sum(Expr a, Expr b);
Expr u(std::uint64_t level);
Expr br(Expr a);
Expr tysub(Expr a, Expr f);

Expr var_();
Expr zero();
Expr succ(Expr a);
Expr lam(Expr a, Expr b, Expr body);
Expr app(Expr a, Expr b, Expr fn, Expr arg);
Expr pr(Expr a, Expr b);
Expr pr1(Expr c);
Expr pr2(Expr c);
Expr rr(Expr a);
Expr rec(Expr c_ty, Expr d, Expr e, Expr c);
Expr r0(Expr c_ty, Expr c);
Expr lf(Expr a, Expr b, Expr x);
Expr rg(Expr a, Expr b, Expr y);
Expr sumrec(Expr a, Expr b, Expr c_ty, Expr d, Expr e, Expr c);
Expr brin(Expr a);
Expr wh(Expr a, Expr b, Expr k, Expr body);
Expr tmsub(Expr a, Expr f);
Expr code_of(Expr a);

Expr idsub(Expr g);
Expr comp(Expr f, Expr g);
Expr down(Expr a);
Expr spair(Expr a, Expr f, Expr end);
Expr phi(Expr g, Expr d);
Expr els(Expr a, Expr end);
Expr lift(Expr a, Expr f);
Expr stepsub(Expr g);
Expr sumsublf(Expr a, Expr b);
Expr sumsubrg(Expr a, Expr b);
Expr prx(Expr a);
Expr pry(Expr a);
Expr brsb(Expr a);

Expr jctx(Expr g);
Expr jctxeq(Expr g, Expr d);
Expr jty(Expr g, Expr a);
Expr jtyeq(Expr g, Expr a, Expr b);
Expr jelt(Expr g, Expr a, Expr ty);
Expr jelteq(Expr g, Expr a, Expr b, Expr ty);
Expr jsub(Expr f, Expr g, Expr d);
Expr jsubeq(Expr f, Expr g2, Expr g, Expr d);

// True for the derived substitution ops that expand_sub rewrites.
bool is_derived_sub(Op op);

// One-step expansion of a derived substitution form into core forms. `dom`
// is the domain context the form is used at (needed by els, whose expansion
// mentions the identity on that context). Core forms come back unchanged;
// kids are not expanded recursively. Throws ScopeError when `dom` does not
// have the shape the form needs.
Expr expand_sub(const Expr& s, const Expr& dom);

// Domain/codomain bookkeeping. A substitution expression does not pin its
// own domain (down nat stands for a weakening of any context ending in
// nat), so the domain it is used at must be supplied; the codomain is then
// forced. Returns (dom, cod), or nullopt with a reason in *why.
std::optional<std::pair<Expr, Expr>> infer_ctx_of_sub(
    const Expr& f, const Expr& dom, std::string* why = nullptr);

// Scope check. For a judgment, checks every component against the contexts
// the judgment supplies; for a context, checks it is built from well-scoped
// pieces. Types, terms, and substitutions need an ambient context, so the
// three-argument form checks those. Holds or Fails only; the detail of a
// Fails names the offending node.
Verdict well_scoped(const Expr& judgment_or_ctx);
Verdict well_scoped_in(const Expr& ctx, const Expr& e);

// Printing. Canonical form: lowercase keywords, single spaces, context
// extension chains rendered as (ctx A B ...). parse(print(e)) == e for
// every well-formed tree, and print(parse(s)) == s up to whitespace.
std::string print(const Expr& e);

// Parsing. parse_expr reads exactly one expression of the wanted category;
// trailing input is an error. parse_file reads a whole .vml source:
//   file  := {decl | judg}*
//   decl  := (def-ctx name G) | (def-ty name A) | (def-tm name a)
//          | (def-sub name f)
//   judg  := (judg FORM ARGS)
// Declared names splice in wherever their category is expected. Comments
// run from ';' to end of line. Errors throw ParseError with line:column.
struct SourceItem {
  Expr judgment;
  int line = 0;
};
struct SourceFile {
  std::vector<SourceItem> items;
};
Expr parse_expr(const std::string& text, Cat want);
SourceFile parse_file(const std::string& text);

}  // namespace syn
}  // namespace vml

#endif  // VML_SYNTAX_HPP
