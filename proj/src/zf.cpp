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

#include "vml/zf.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "vml/eq.hpp"

namespace vml {

namespace {

// Distinct member values of s, up to bisimulation. reps holds one value per
// class found; exact is true when every member was classified. Stops early
// once more than cap classes are found (reps then has cap + 1 entries).
struct Classes {
  std::vector<VSet> reps;
  bool exact = true;
};

Classes classify(const std::vector<VSet>& members, std::size_t cap,
                 BudgetState& bs) {
  Classes out;
  for (const VSet& m : members) {
    bool fresh = true;
    for (const VSet& r : out.reps) {
      Verdict v = eq_v(m, r, bs);
      if (v.is_holds()) { fresh = false; break; }
      if (!v.is_fails())
        fail(ErrorKind::UndecidedEquality,
             "member classification undecided: " + v.detail);
    }
    if (fresh) {
      out.reps.push_back(m);
      if (out.reps.size() > cap) return out;
    }
  }
  return out;
}

Classes member_classes(const VSet& s, std::size_t cap, BudgetState& bs) {
  switch (s.gen()) {
    case GenKind::Table: {
      std::vector<VSet> members;
      members.reserve(s.width());
      for (const auto& [k, c] : s.table_children()) members.push_back(c);
      return classify(members, cap, bs);
    }
    case GenKind::NumeralGen:
    case GenKind::UnivGen: {
      // Infinitely many pairwise distinct members; surface just over cap.
      Classes out;
      out.exact = false;
      KeyEnum e = s.space().enumerate(static_cast<std::uint32_t>(cap) + 1);
      for (const Key& k : e.keys) {
        out.reps.push_back(s.at(k));
        if (out.reps.size() > cap) break;
      }
      return out;
    }
    case GenKind::SqGen: {
      auto inh = s.space().inhabited();
      if (!inh.has_value())
        fail(ErrorKind::UndecidedEquality, "squash inhabitation undecided");
      Classes out;
      if (*inh) out.reps.push_back(VSet::empty());
      return out;
    }
    case GenKind::SigmaGen: {
      std::vector<VSet> members;
      KeyEnum e = s.space().enumerate(
          std::min<std::uint32_t>(bs.nat_bound, 6));
      for (const Key& k : e.keys) members.push_back(s.at(k));
      Classes out = classify(members, cap, bs);
      out.exact = e.complete;
      return out;
    }
  }
  fail(ErrorKind::Internal, "bad generator");
}

}  // namespace

VSet pair_v(const VSet& a, const VSet& b) {
  // Kuratowski coding: {{a},{a,b}}. Keys mirror the tagged layout used by
  // coded pair types so certificates line up structurally.
  VSet single = VSet::table({{Key::atom(0), a}});
  VSet both = VSet::table({{Key::inl(Key::atom(0)), a},
                           {Key::inr(Key::atom(0)), b}});
  return VSet::table({{Key::inl(Key::atom(0)), single},
                      {Key::inr(Key::atom(0)), both}});
}

VPair unpair_v(const VSet& p, const Budget& bud) {
  BudgetState bs(bud);
  switch (p.gen()) {
    case GenKind::NumeralGen:
    case GenKind::UnivGen:
      fail(ErrorKind::NotAPair,
           "infinitely many distinct members, a pair has at most two");
    case GenKind::SqGen:
      // Empty, or the singleton of the empty set; neither reads as a pair
      // (a pair's members are nonempty).
      fail(ErrorKind::NotAPair, "a squash is never a pair");
    default:
      break;
  }
  Classes cls = member_classes(p, 2, bs);
  if (cls.reps.size() > 2)
    fail(ErrorKind::NotAPair, "more than two distinct members");
  if (!cls.exact)
    fail(ErrorKind::UndecidedEquality,
         "member count only bounded from below");
  if (cls.reps.empty()) fail(ErrorKind::NotAPair, "the empty set");
  if (cls.reps.size() == 1) {
    Classes inner = member_classes(cls.reps[0], 1, bs);
    if (inner.reps.size() > 1)
      fail(ErrorKind::NotAPair, "sole member is not a singleton");
    if (!inner.exact)
      fail(ErrorKind::UndecidedEquality, "sole member not fully classified");
    if (inner.reps.empty())
      fail(ErrorKind::NotAPair, "sole member is empty");
    return VPair{inner.reps[0], inner.reps[0]};
  }
  Classes c0 = member_classes(cls.reps[0], 2, bs);
  Classes c1 = member_classes(cls.reps[1], 2, bs);
  if (!c0.exact || !c1.exact)
    fail(ErrorKind::UndecidedEquality, "member not fully classified");
  if (c0.reps.size() > 2 || c1.reps.size() > 2 || c0.reps.empty() ||
      c1.reps.empty())
    fail(ErrorKind::NotAPair, "members do not form {x} and {x,y}");
  if (c0.reps.size() == c1.reps.size())
    fail(ErrorKind::NotAPair, "members do not form {x} and {x,y}");
  const Classes& sing = c0.reps.size() == 1 ? c0 : c1;
  const Classes& dbl = c0.reps.size() == 1 ? c1 : c0;
  const VSet& x = sing.reps[0];
  for (int i = 0; i < 2; ++i) {
    Verdict v = eq_v(x, dbl.reps[i], bs);
    if (v.is_holds()) return VPair{x, dbl.reps[1 - i]};
    if (!v.is_fails())
      fail(ErrorKind::UndecidedEquality, "component match undecided");
  }
  fail(ErrorKind::NotAPair, "doubleton does not contain the singleton's member");
}

VSet numeral(std::uint64_t n) {
  // Singleton chain: each numeral is the one-element set of its predecessor,
  // so rank recovers the number and recognition is a single comparison.
  thread_local std::vector<VSet> pool{VSet::empty()};
  while (pool.size() <= n)
    pool.push_back(VSet::table({{Key::numeral(0), pool.back()}}));
  return pool[n];
}

std::optional<std::uint64_t> numeral_of(const VSet& v, const Budget& bud) {
  BudgetState bs(bud);
  std::uint64_t n = 0;
  Verdict out = numeral_shape(v, &n, bs);
  if (out.is_holds()) return n;
  return std::nullopt;
}

VSet nat_v() { return VSet::naturals(); }

VSet sum_v(const VSet& a, const VSet& b) {
  if (!a.is_table() || !b.is_table())
    fail(ErrorKind::InfiniteUnsupported,
         "disjoint sum needs finitely presented arguments");
  std::vector<std::pair<Key, VSet>> kids;
  kids.reserve(a.width() + b.width());
  for (const auto& [k, c] : a.table_children())
    kids.emplace_back(Key::inl(k), pair_v(numeral(0), c));
  for (const auto& [k, c] : b.table_children())
    kids.emplace_back(Key::inr(k), pair_v(numeral(1), c));
  return VSet::table(std::move(kids));
}

VSet inl_v(const VSet& a) { return pair_v(numeral(0), a); }
VSet inr_v(const VSet& b) { return pair_v(numeral(1), b); }

namespace {

// Fibers at interchangeable keys must be interchangeable sets; a definitive
// counterexample rejects the family. Checked on a bounded window so lazily
// generated index spaces stay usable.
void check_family_respects(const VSet& a, const VFamily& g, BudgetState& bs) {
  if (a.space().digest() != g.base.space().digest())
    fail(ErrorKind::DomainMismatch, "family base does not match the index set");
  KeyEnum e = a.space().enumerate(std::min<std::uint32_t>(bs.nat_bound, 8));
  const std::size_t cap = std::min<std::size_t>(e.keys.size(), 12);
  for (std::size_t i = 0; i < cap; ++i) {
    for (std::size_t j = i + 1; j < cap; ++j) {
      Verdict same = eq_v(a.at(e.keys[i]), a.at(e.keys[j]), bs);
      if (!same.is_holds()) continue;
      Verdict fib = eq_v(g.at(e.keys[i]), g.at(e.keys[j]), bs);
      if (fib.is_fails())
        fail(ErrorKind::FamilyNotExtensional,
             "fibers differ at interchangeable keys " + e.keys[i].str() +
                 " and " + e.keys[j].str());
    }
  }
}

}  // namespace

VSet sigma_v(const VSet& a, const VFamily& g, const Budget& bud) {
  BudgetState bs(bud);
  check_family_respects(a, g, bs);
  bool finite = a.is_table();
  std::size_t total = 0;
  if (finite) {
    for (const auto& [k, c] : a.table_children()) {
      VSet fib = g.at(k);
      if (!fib.is_table()) { finite = false; break; }
      total += fib.width();
      if (total > 4096) { finite = false; break; }
    }
  }
  if (!finite) return VSet::sigma_lazy(a, g);
  std::vector<std::pair<Key, VSet>> kids;
  kids.reserve(total);
  for (const auto& [x, cx] : a.table_children()) {
    VSet fib = g.at(x);
    for (const auto& [u, cu] : fib.table_children())
      kids.emplace_back(Key::pair(x, u), pair_v(cx, cu));
  }
  return VSet::table(std::move(kids));
}

VSet pi_v(const VSet& a, const VFamily& g, const Budget& bud) {
  BudgetState bs(bud);
  check_family_respects(a, g, bs);
  if (!a.is_table())
    fail(ErrorKind::InfiniteUnsupported,
         "function space needs a finitely presented index set");
  struct Slot {
    Key x;
    VSet value;                       // child of a at x
    std::vector<Key> choices;        // fiber keys
    VSet fiber;
  };
  std::vector<Slot> slots;
  std::size_t total = 1;
  for (const auto& [x, cx] : a.table_children()) {
    VSet fib = g.at(x);
    if (!fib.is_table())
      fail(ErrorKind::InfiniteUnsupported,
           "function space needs finitely presented fibers");
    Slot s{x, cx, {}, fib};
    for (const auto& [u, cu] : fib.table_children()) s.choices.push_back(u);
    total = total * std::max<std::size_t>(s.choices.size(), 1);
    if (total > 65536)
      fail(ErrorKind::InfiniteUnsupported, "function table too large");
    slots.push_back(std::move(s));
  }
  std::vector<std::pair<Key, VSet>> kids;
  // Odometer over all assignments; empty fibers yield no functions unless
  // the index set itself is empty, which yields exactly one.
  for (const Slot& s : slots)
    if (s.choices.empty()) total = 0;
  std::vector<std::size_t> idx(slots.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<std::pair<Key, Key>> assign;
    assign.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
      assign.emplace_back(slots[i].x, slots[i].choices[idx[i]]);
    // Extensional-choice filter: interchangeable indices must map to
    // interchangeable values.
    bool keep = true;
    for (std::size_t i = 0; keep && i < slots.size(); ++i) {
      for (std::size_t j = i + 1; keep && j < slots.size(); ++j) {
        Verdict same = eq_v(slots[i].value, slots[j].value, bs);
        if (same.is_fails()) continue;
        if (!same.is_holds())
          fail(ErrorKind::UndecidedEquality,
               "index comparison undecided while filtering functions");
        Verdict out = eq_v(slots[i].fiber.at(assign[i].second),
                           slots[j].fiber.at(assign[j].second), bs);
        if (out.is_fails()) keep = false;
        else if (!out.is_holds())
          fail(ErrorKind::UndecidedEquality,
               "value comparison undecided while filtering functions");
      }
    }
    if (keep) {
      std::vector<std::pair<Key, VSet>> graph;
      graph.reserve(slots.size());
      for (std::size_t i = 0; i < slots.size(); ++i)
        graph.emplace_back(slots[i].x,
                           pair_v(slots[i].value,
                                  slots[i].fiber.at(assign[i].second)));
      kids.emplace_back(Key::funtable(assign), VSet::table(std::move(graph)));
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (++idx[i] < slots[i].choices.size()) break;
      idx[i] = 0;
    }
  }
  return VSet::table(std::move(kids));
}

VSet id_v(const VSet& a, const Key& x, const Key& y, const Budget& bud) {
  if (!a.space().contains(x) || !a.space().contains(y))
    fail(ErrorKind::KeyOutOfRange, "identity endpoints outside the index set");
  BudgetState bs(bud);
  Verdict v = eq_v(a.at(x), a.at(y), bs);
  if (v.is_holds())
    return VSet::table({{Key::atom(0), VSet::empty()}});
  if (v.is_fails()) return VSet::empty();
  fail(ErrorKind::UndecidedEquality,
       "identity formation undecided: " + v.detail);
}

VSet sq_v(const VSet& a) { return VSet::squash_of(a); }

}  // namespace vml
