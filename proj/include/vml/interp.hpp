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

#ifndef VML_INTERP_HPP
#define VML_INTERP_HPP

// Semantic judgment checker. Contexts denote set values (the empty context
// is the one-point set, extension is a dependent pair set), types and terms
// denote set-valued assignments over the keys of their context, and
// substitutions denote key maps between contexts. A judgment is checked by
// quantifying its defining condition over the context's keys: equalities by
// bisimulation, element claims by membership search. Finite contexts give
// definitive answers; contexts with infinite key spaces are probed up to the
// configured bound, and a clean bounded pass is reported as holds-bounded,
// never as holds.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vml/common.hpp"
#include "vml/setoid.hpp"
#include "vml/syntax.hpp"
#include "vml/verdict.hpp"
#include "vml/vset.hpp"

namespace vml {
namespace interp {

struct CheckConfig {
  std::uint64_t fuel = 10000;
  std::uint32_t nat_bound = 16;
  bool trace = false;

  Budget budget() const { return Budget{fuel, nat_bound}; }
};

// A set-valued assignment over the keys of an interpreted context, with the
// evidence that it respects the context's key equality.
struct VMap {
  VSet dom_ctx;
  std::function<VSet(const Key&)> assign;
  Verdict ext_checked = Verdict::fails("unchecked");

  VSet at(const Key& k) const { return assign(k); }
};

class Checker {
 public:
  explicit Checker(CheckConfig cfg = CheckConfig{});

  const CheckConfig& config() const { return cfg_; }

  // Interpretations. All expect well-scoped input (checked; ScopeError on
  // violation) and may throw the kernel error kinds; check() folds both
  // into a Verdict instead.
  VSet interp_ctx(const syn::Expr& g);
  VMap interp_ty(const syn::Expr& a, const syn::Expr& g);
  VMap interp_tm(const syn::Expr& a, const syn::Expr& g);
  SetoidMap interp_sub(const syn::Expr& f, const syn::Expr& dom);

  // Checks any of the judgment forms. Never throws for semantic reasons:
  // failed premise recomputation, inequality, and malformed values come
  // back as Fails; exhausted budgets and undecided equalities as Unknown.
  Verdict check(const syn::Expr& judgment);

  // One line per checked judgment when config().trace is set.
  const std::vector<std::string>& trace_log() const { return trace_; }
  void clear_trace() { trace_.clear(); }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<syn::Expr, syn::Expr>& p) const {
      return static_cast<std::size_t>(p.first.hash() * 0x9e3779b97f4a7c15ull ^
                                      p.second.hash());
    }
  };

  Verdict check_impl(const syn::Expr& j);
  Verdict ctx_valid(const syn::Expr& g);
  Verdict elt_holds(const syn::Expr& g, const syn::Expr& a,
                    const syn::Expr& ty);
  // Folds a per-key predicate over the context's keys, bounded on infinite
  // spaces: all pass on a complete enumeration gives Holds, on a truncated
  // one holds-bounded.
  Verdict forall_keys(const VSet& ctx,
                      const std::function<Verdict(const Key&)>& body);

  CheckConfig cfg_;
  std::vector<std::string> trace_;
  std::unordered_map<syn::Expr, VSet, syn::ExprHash> ctx_memo_;
  std::unordered_map<std::pair<syn::Expr, syn::Expr>, VMap, PairHash>
      ty_memo_, tm_memo_;
  std::unordered_map<std::pair<syn::Expr, syn::Expr>, SetoidMap, PairHash>
      sub_memo_;
};

// One-shot convenience wrapper.
Verdict check_judgment(const syn::Expr& judgment,
                       const CheckConfig& cfg = CheckConfig{});

}  // namespace interp
}  // namespace vml

#endif  // VML_INTERP_HPP
