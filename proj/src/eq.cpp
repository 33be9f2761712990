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

#include "vml/eq.hpp"

#include <unordered_map>
#include <utility>

#include "universe_internal.hpp"
#include "vml/zf.hpp"

namespace vml {

namespace {

// Definitive verdicts only, keyed by unordered digest pair. Digests are
// structural, so entries survive node lifetimes; collisions are the usual
// 64-bit-hash engineering assumption.
struct DigestPairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
  }
};

thread_local std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool,
                                DigestPairHash>
    g_cache;

std::pair<std::uint64_t, std::uint64_t> cache_key(const VSet& x, const VSet& y) {
  std::uint64_t a = x.digest(), b = y.digest();
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Verdict eq_impl(const VSet& x, const VSet& y, BudgetState& bs);
Verdict mem_impl(const VSet& x, const VSet& a, BudgetState& bs);

Verdict from_cache_or(const VSet& x, const VSet& y, Verdict v) {
  if (v.definitive()) g_cache.emplace(cache_key(x, y), v.is_holds());
  return v;
}

// Both-tables bisimulation. Structurally terminating; consumes no fuel so
// hereditarily finite comparisons stay definitive.
Verdict eq_tables(const VSet& x, const VSet& y, BudgetState& bs) {
  bool unknown = false;
  std::string unknown_why;
  for (int dir = 0; dir < 2; ++dir) {
    const VSet& from = dir == 0 ? x : y;
    const VSet& to = dir == 0 ? y : x;
    for (const auto& [k, c] : from.table_children()) {
      bool matched = false;
      bool maybe = false;
      for (const auto& [j, d] : to.table_children()) {
        Verdict v = eq_impl(c, d, bs);
        if (v.is_holds()) { matched = true; break; }
        if (!v.is_fails()) { maybe = true; unknown_why = v.detail; }
      }
      if (matched) continue;
      if (maybe) { unknown = true; continue; }
      return Verdict::fails("child at " + k.str() + " of " +
                            (dir == 0 ? "left" : "right") +
                            " side matches no child of the other");
    }
  }
  if (unknown) return Verdict::unknown(unknown_why, bs);
  return Verdict::holds();
}

// x is bisimilar to a member of the lazily generated sigma set with the
// given base and family. Exact for table and numeral bases; for lazy bases
// the least membership witness stands in for its bisimulation class, which
// relies on the family-extensionality precondition of sigma construction.
Verdict sigma_member(const VSet& x, const VSet& base, const VFamily& fam,
                     BudgetState& bs) {
  VPair pq;
  try {
    Budget sub{bs.fuel_left, bs.nat_bound};
    pq = unpair_v(x, sub);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAPair)
      return Verdict::fails("members of a sigma set are pairs; " +
                            std::string(e.what()));
    return Verdict::unknown(e.what(), bs);
  }
  if (base.is_table()) {
    bool unknown = false;
    for (const auto& [y, c] : base.table_children()) {
      Verdict vy = eq_impl(pq.first, c, bs);
      if (vy.is_fails()) continue;
      if (!vy.is_holds()) { unknown = true; continue; }
      Verdict vu = mem_impl(pq.second, fam.at(y), bs);
      if (vu.is_holds())
        return Verdict::holds(Key::pair(y, vu.witness()));
      if (!vu.is_fails()) unknown = true;
    }
    if (unknown) return Verdict::unknown("sigma membership undecided", bs);
    return Verdict::fails("first component " + pq.first.str(0) +
                          " matches no base child");
  }
  Verdict vy = mem_impl(pq.first, base, bs);
  if (vy.is_fails())
    return Verdict::fails("first component matches no base child: " +
                          vy.detail);
  if (!vy.is_holds()) return vy;
  const Key y = vy.witness();
  Verdict vu = mem_impl(pq.second, fam.at(y), bs);
  if (vu.is_holds()) return Verdict::holds(Key::pair(y, vu.witness()));
  if (vu.is_fails())
    return Verdict::fails("second component not in the fiber at " + y.str() +
                          ": " + vu.detail);
  return vu;
}

// Resolves a squash to its finite normal form when the inner space's
// inhabitation is decided: empty or the singleton of the empty set.
std::optional<VSet> squash_normal_form(const VSet& s) {
  auto inh = s.space().inhabited();
  if (!inh.has_value()) return std::nullopt;
  if (!*inh) return VSet::empty();
  return VSet::table({{Key::atom(0), VSet::empty()}});
}

Verdict eq_table_sq(const VSet& t, const VSet& s, BudgetState& bs) {
  auto nf = squash_normal_form(s);
  if (nf.has_value()) return eq_impl(t, *nf, bs);
  // Inhabitation unknown: the squash is empty or {empty}.
  bool unknown = false;
  for (const auto& [k, c] : t.table_children()) {
    Verdict v = eq_impl(c, VSet::empty(), bs);
    if (v.is_fails())
      return Verdict::fails("child at " + k.str() +
                            " is nonempty but squash children are empty");
    if (!v.is_holds()) unknown = true;
  }
  (void)unknown;
  return Verdict::unknown("squash inhabitation undecided", bs);
}

Verdict eq_table_sigma(const VSet& t, const VSet& g, BudgetState& bs) {
  // Every table child must be a sigma member (exact via decomposition).
  bool unknown = false;
  for (const auto& [k, c] : t.table_children()) {
    Verdict v = sigma_member(c, g.sigma_base(), g.sigma_fam(), bs);
    if (v.is_fails())
      return Verdict::fails("table child at " + k.str() +
                            " is not a member of the sigma set: " + v.detail);
    if (!v.is_holds()) unknown = true;
  }
  // Every sigma child must match a table child; only a bounded probe is
  // available, so the converse direction can refute but never confirm.
  KeyEnum e = g.space().enumerate(bs.nat_bound);
  for (const Key& k : e.keys) {
    if (!bs.spend()) return Verdict::unknown("fuel exhausted", bs);
    VSet c = g.at(k);
    bool matched = false;
    bool maybe = false;
    for (const auto& [j, d] : t.table_children()) {
      Verdict v = eq_impl(c, d, bs);
      if (v.is_holds()) { matched = true; break; }
      if (!v.is_fails()) maybe = true;
    }
    if (!matched && !maybe)
      return Verdict::fails("sigma child at " + k.str() +
                            " matches no table child");
    if (!matched) unknown = true;
  }
  if (e.complete && !unknown) return Verdict::holds();
  return Verdict::unknown("sigma set probed only up to the bound", bs);
}

Verdict eq_sq_sq(const VSet& a, const VSet& b, BudgetState& bs) {
  auto ia = a.space().inhabited();
  auto ib = b.space().inhabited();
  if (ia.has_value() && ib.has_value()) {
    if (*ia == *ib) return Verdict::holds();
    return Verdict::fails("one squash is empty, the other is not");
  }
  return Verdict::unknown("squash inhabitation undecided", bs);
}

Verdict eq_sq_sigma(const VSet& s, const VSet& g, BudgetState& bs) {
  auto is_ = s.space().inhabited();
  auto ig = g.space().inhabited();
  if (ig.has_value() && *ig)
    return Verdict::fails("sigma children are pairs, squash children empty");
  if (ig.has_value() && !*ig) {
    if (is_.has_value())
      return *is_ ? Verdict::fails("squash inhabited, sigma set empty")
                  : Verdict::holds();
    return Verdict::unknown("squash inhabitation undecided", bs);
  }
  if (is_.has_value() && !*is_)
    return Verdict::unknown("sigma inhabitation undecided", bs);
  return Verdict::unknown("lazy inhabitation undecided", bs);
}

Verdict eq_sigma_sigma(const VSet& a, const VSet& b, BudgetState& bs) {
  for (int dir = 0; dir < 2; ++dir) {
    const VSet& from = dir == 0 ? a : b;
    const VSet& to = dir == 0 ? b : a;
    KeyEnum e = from.space().enumerate(std::min<std::uint32_t>(bs.nat_bound, 6));
    for (const Key& k : e.keys) {
      if (!bs.spend()) return Verdict::unknown("fuel exhausted", bs);
      Verdict v = sigma_member(from.at(k), to.sigma_base(), to.sigma_fam(), bs);
      if (v.is_fails())
        return Verdict::fails("child at " + k.str() +
                              " has no counterpart: " + v.detail);
    }
  }
  return Verdict::unknown("sigma sets probed only up to the bound", bs);
}

Verdict eq_nat_sigma(const VSet& g, BudgetState& bs) {
  // natV vs sigma generator: every probed sigma child must be a numeral and
  // every probed numeral must be a sigma member; refutations are definitive.
  KeyEnum e = g.space().enumerate(std::min<std::uint32_t>(bs.nat_bound, 6));
  for (const Key& k : e.keys) {
    if (!bs.spend()) return Verdict::unknown("fuel exhausted", bs);
    std::uint64_t n = 0;
    Verdict v = numeral_shape(g.at(k), &n, bs);
    if (v.is_fails())
      return Verdict::fails("sigma child at " + k.str() + " is not a numeral");
  }
  for (std::uint32_t i = 0; i <= bs.nat_bound; ++i) {
    if (!bs.spend()) return Verdict::unknown("fuel exhausted", bs);
    Verdict v = sigma_member(numeral(i), g.sigma_base(), g.sigma_fam(), bs);
    if (v.is_fails())
      return Verdict::fails("numeral " + std::to_string(i) +
                            " is not a member of the sigma set");
  }
  return Verdict::unknown("agreement only up to the probe bound", bs);
}

Verdict eq_univ_sigma(const VSet& g, BudgetState& bs) {
  // The empty set is a universe child; sigma children are pairs, which are
  // never empty, so equality fails outright.
  (void)g;
  (void)bs;
  return Verdict::fails(
      "the empty set is a universe member but sigma children are pairs");
}

Verdict eq_impl(const VSet& x, const VSet& y, BudgetState& bs) {
  if (x.same_node(y)) return Verdict::holds();
  if (auto it = g_cache.find(cache_key(x, y)); it != g_cache.end())
    return it->second ? Verdict::holds()
                      : Verdict::fails("distinct (memoized)");
  Rank rx = x.rank(), ry = y.rank();
  if (rx.known() && ry.known() && !(rx == ry))
    return from_cache_or(
        x, y,
        Verdict::fails("ranks differ: " + rx.str() + " vs " + ry.str()));

  GenKind gx = x.gen(), gy = y.gen();
  // Normalize so the smaller generator tag comes first; equality is
  // symmetric and every mixed case below is written one way.
  if (static_cast<int>(gx) > static_cast<int>(gy)) return eq_impl(y, x, bs);

  if (gx != GenKind::Table || gy != GenKind::Table) {
    if (!bs.spend())
      return Verdict::unknown("fuel exhausted", bs);
  }

  Verdict out = Verdict::unknown("unhandled", bs);
  if (gx == GenKind::Table && gy == GenKind::Table) {
    out = eq_tables(x, y, bs);
  } else if (gx == GenKind::Table && gy == GenKind::NumeralGen) {
    out = Verdict::fails("a finite table cannot exhaust the numerals");
  } else if (gx == GenKind::Table && gy == GenKind::SqGen) {
    out = eq_table_sq(x, y, bs);
  } else if (gx == GenKind::Table && gy == GenKind::SigmaGen) {
    out = eq_table_sigma(x, y, bs);
  } else if (gx == GenKind::Table && gy == GenKind::UnivGen) {
    out = Verdict::fails("a finite table cannot exhaust a universe");
  } else if (gx == GenKind::NumeralGen && gy == GenKind::NumeralGen) {
    out = Verdict::holds();
  } else if (gx == GenKind::NumeralGen && gy == GenKind::SqGen) {
    out = Verdict::fails("numeral 1 is nonempty but squash children are empty");
  } else if (gx == GenKind::NumeralGen && gy == GenKind::SigmaGen) {
    out = eq_nat_sigma(y, bs);
  } else if (gx == GenKind::NumeralGen && gy == GenKind::UnivGen) {
    out = Verdict::fails(
        "a universe holds non-numeral members such as the two-element set");
  } else if (gx == GenKind::SqGen && gy == GenKind::SqGen) {
    out = eq_sq_sq(x, y, bs);
  } else if (gx == GenKind::SqGen && gy == GenKind::SigmaGen) {
    out = eq_sq_sigma(x, y, bs);
  } else if (gx == GenKind::SqGen && gy == GenKind::UnivGen) {
    out = Verdict::fails(
        "a universe holds nonempty members but squash children are empty");
  } else if (gx == GenKind::SigmaGen && gy == GenKind::SigmaGen) {
    out = eq_sigma_sigma(x, y, bs);
  } else if (gx == GenKind::SigmaGen && gy == GenKind::UnivGen) {
    out = eq_univ_sigma(x, bs);
  } else if (gx == GenKind::UnivGen && gy == GenKind::UnivGen) {
    out = x.univ_level() == y.univ_level()
              ? Verdict::holds()
              : Verdict::unknown("universe levels differ; no decision", bs);
  }
  return from_cache_or(x, y, out);
}

Verdict mem_impl(const VSet& x, const VSet& a, BudgetState& bs) {
  switch (a.gen()) {
    case GenKind::Table: {
      bool unknown = false;
      std::string why;
      for (const auto& [k, c] : a.table_children()) {
        Verdict v = eq_impl(x, c, bs);
        if (v.is_holds()) return Verdict::holds(k);
        if (!v.is_fails()) { unknown = true; why = v.detail; }
      }
      if (unknown) return Verdict::unknown(why, bs);
      return Verdict::fails("value matches no child");
    }
    case GenKind::NumeralGen: {
      std::uint64_t n = 0;
      Verdict v = numeral_shape(x, &n, bs);
      if (v.is_holds()) return Verdict::holds(Key::numeral(n));
      return v;
    }
    case GenKind::SqGen: {
      Verdict v = eq_impl(x, VSet::empty(), bs);
      if (v.is_fails())
        return Verdict::fails("squash members are empty: " + v.detail);
      if (!v.is_holds()) return v;
      auto inh = a.space().inhabited();
      if (!inh.has_value())
        return Verdict::unknown("squash inhabitation undecided", bs);
      if (!*inh) return Verdict::fails("the squash is empty");
      return Verdict::holds(*a.space().some_key());
    }
    case GenKind::SigmaGen:
      return sigma_member(x, a.sigma_base(), a.sigma_fam(), bs);
    case GenKind::UnivGen: {
      VSet probe = x;
      if (probe.gen() == GenKind::SqGen) {
        auto nf = squash_normal_form(probe);
        if (nf.has_value()) probe = *nf;
      }
      auto w = univ_internal::member_tree_key(a.univ_level(), probe);
      if (w.has_value()) return Verdict::holds(*w);
      if (probe.gen() == GenKind::UnivGen)
        return Verdict::unknown("universe-in-universe at or above level", bs);
      if (probe.hereditarily_finite() || probe.gen() == GenKind::NumeralGen)
        fail(ErrorKind::Internal, "canonical member lookup missed");
      return Verdict::unknown("no canonical certificate for a lazy member",
                              bs);
    }
  }
  fail(ErrorKind::Internal, "bad generator");
}

}  // namespace

Verdict numeral_shape(const VSet& v, std::uint64_t* n, BudgetState& bs) {
  switch (v.gen()) {
    case GenKind::Table: {
      Rank r = v.rank();
      if (r.kind == Rank::Kind::Infinite)
        return Verdict::fails("infinite rank, numerals are finite");
      if (r.kind == Rank::Kind::Fin) {
        Verdict e = eq_impl(v, numeral(r.n), bs);
        if (e.is_holds()) { *n = r.n; return Verdict::holds(Key::numeral(r.n)); }
        if (e.is_fails())
          return Verdict::fails("rank-" + std::to_string(r.n) +
                                " value differs from that numeral");
        return e;
      }
      return Verdict::unknown("rank undecided", bs);
    }
    case GenKind::NumeralGen:
    case GenKind::UnivGen:
      return Verdict::fails("infinite set, numerals are finite");
    case GenKind::SqGen: {
      auto nf = squash_normal_form(v);
      if (!nf.has_value())
        return Verdict::unknown("squash inhabitation undecided", bs);
      return numeral_shape(*nf, n, bs);
    }
    case GenKind::SigmaGen:
      return Verdict::unknown("sigma generator rank undecided", bs);
  }
  fail(ErrorKind::Internal, "bad generator");
}

Verdict eq_v(const VSet& x, const VSet& y, BudgetState& bs) {
  return eq_impl(x, y, bs);
}

Verdict mem_v(const VSet& x, const VSet& a, BudgetState& bs) {
  return mem_impl(x, a, bs);
}

Verdict eq_v(const VSet& x, const VSet& y, const Budget& b) {
  BudgetState bs(b);
  return eq_impl(x, y, bs);
}

Verdict mem_v(const VSet& x, const VSet& a, const Budget& b) {
  BudgetState bs(b);
  return mem_impl(x, a, bs);
}

Verdict subset_v(const VSet& a, const VSet& b, const Budget& bud) {
  BudgetState bs(bud);
  KeyEnum e = a.space().enumerate(bs.nat_bound);
  bool unknown = !e.complete;
  std::string why = e.complete ? "" : "index space probed only up to the bound";
  for (const Key& k : e.keys) {
    Verdict v = mem_impl(a.at(k), b, bs);
    if (v.is_fails())
      return Verdict::fails("child at " + k.str() + ": " + v.detail);
    if (!v.is_holds()) { unknown = true; why = v.detail; }
  }
  if (unknown) return Verdict::unknown(why, bs);
  return Verdict::holds();
}

void eq_cache_clear() { g_cache.clear(); }
std::size_t eq_cache_size() { return g_cache.size(); }

}  // namespace vml
