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

#ifndef VML_SETOID_HPP
#define VML_SETOID_HPP

// Setoids: a key space together with a budget-aware equivalence verdict over
// its keys. Maps between setoids carry their extensionality check; families
// over a setoid carry transports indexed by pairs of equal base keys (proof
// witnesses are erased, so a transport may depend only on the endpoints).

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "vml/common.hpp"
#include "vml/key.hpp"
#include "vml/verdict.hpp"
#include "vml/vset.hpp"

namespace vml {

class Setoid {
 public:
  using EqFn = std::function<Verdict(const Key&, const Key&, const Budget&)>;

  Setoid();  // empty finite carrier
  static Setoid finite(std::vector<Key> carrier, EqFn eq);
  static Setoid from_space(KeySpace space, EqFn eq);
  // Carrier by key identity (every key its own class).
  static Setoid discrete(std::vector<Key> carrier);

  const KeySpace& space() const;
  Verdict eq(const Key& a, const Key& b, const Budget& bud = Budget{}) const;
  // Set this setoid was derived from, when built by kappa.
  const std::optional<VSet>& origin() const;

 private:
  struct Node;
  explicit Setoid(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
  friend Setoid kappa(const VSet&);
};

struct SetoidMap {
  Setoid dom, cod;
  std::function<Key(const Key&)> fn;
  Verdict ext_checked = Verdict::fails("unchecked");

  Key operator()(const Key& k) const { return fn(k); }

  // Runs the extensionality check under the budget and stores its verdict.
  static SetoidMap make(Setoid dom, Setoid cod,
                        std::function<Key(const Key&)> fn,
                        const Budget& bud = Budget{});
  static SetoidMap from_table(Setoid dom, Setoid cod,
                              std::vector<std::pair<Key, Key>> entries,
                              const Budget& bud = Budget{});
  static SetoidMap identity(const Setoid& s);
};

// Proof-irrelevant family: fibers over base keys plus transports between the
// fibers of equal keys. transport(x,y) is only meaningful when
// base.eq(x,y) holds; transport(x,x) must be the identity.
struct Family {
  Setoid base;
  std::function<Setoid(const Key&)> fiber;
  std::function<SetoidMap(const Key&, const Key&)> transport;
};

// A setoid injected into an ambient one.
struct SubSetoid {
  Setoid delta;
  SetoidMap incl;  // cod is the ambient setoid
};

// Keys of a set with children equality as the relation.
Setoid kappa(const VSet& a);

// The canonical key correspondence between two equal sets: each key maps to
// the least key of the other side with a matching child. Throws NotEqual
// when the sets are not known to be equal.
SetoidMap kappa_transport(const VSet& a, const VSet& b,
                          const Budget& bud = Budget{});

// Fiberwise kappa of a set family, with kappa_transport transports.
Family kappa_family(const VSet& a, const VFamily& g,
                    const Budget& bud = Budget{});

Verdict check_extensional(const SetoidMap& f, const Budget& bud = Budget{});
Verdict check_vfamily_ext(const VFamily& g, const Budget& bud = Budget{});
// Reflexivity, symmetry, and transitivity over the (bounded) carrier.
Verdict check_equivalence(const Setoid& s, const Budget& bud = Budget{});

Setoid prod_setoid(const Setoid& a, const Setoid& b);
Setoid exp_setoid(const Setoid& a, const Setoid& b,
                  const Budget& bud = Budget{});
Setoid sigma_setoid(const Setoid& a, const Family& f,
                    const Budget& bud = Budget{});
Setoid pi_setoid(const Setoid& a, const Family& f,
                 const Budget& bud = Budget{});

Family family_compose(const Family& f, const SetoidMap& g);
Verdict check_family_laws(const Family& f, const Budget& bud = Budget{});

Verdict sub_member(const Key& a, const SubSetoid& s,
                   const Budget& bud = Budget{});
// Element-wise inclusion, cross-checked against the mediating-map
// characterization; the two must agree on finite carriers.
Verdict sub_subseteq(const SubSetoid& s, const SubSetoid& t,
                     const Budget& bud = Budget{});
Verdict sub_equiv(const SubSetoid& s, const SubSetoid& t,
                  const Budget& bud = Budget{});

// Family of subsetoid carriers with the unique inclusion-compatible
// bijections as transports. All fibers must inject into the same ambient.
Family family_from_sub(const Setoid& base,
                       std::function<SubSetoid(const Key&)> sub,
                       const Budget& bud = Budget{});

// Equality of parameterizations (i, f): the index sets are equal and the
// families agree pointwise across the canonical key correspondence.
Verdict par_eq(const VSet& i1, const VFamily& f1, const VSet& i2,
               const VFamily& f2, const Budget& bud = Budget{});

// The key spaces of the set-level dependent sum/product coincide with the
// setoid-level ones built through kappa: the identity on keys is an
// isomorphism of setoids. Verified by checking the relations coincide and
// the identity is extensional both ways.
Verdict check_kappa_sigma_iso(const VSet& a, const VFamily& g,
                              const Budget& bud = Budget{});
Verdict check_kappa_pi_iso(const VSet& a, const VFamily& g,
                           const Budget& bud = Budget{});

}  // namespace vml

#endif  // VML_SETOID_HPP
