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

#include "vml/universe.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "universe_internal.hpp"
#include "vml/eq.hpp"
#include "vml/zf.hpp"

namespace vml {

namespace {

constexpr std::uint64_t kN0 = 0, kN1 = 1, kNat = 2, kIx = 3, kLft = 4,
                        kPlus = 5, kTimes = 6, kSigma = 7, kPi = 8, kW = 9;
constexpr std::uint64_t kFamTable = 0, kFamConst = 1, kFamLft = 2;
// Explicit branch tables and listable code spaces are capped at this many
// keys; beyond it a code no longer counts as finitely keyed.
constexpr std::size_t kSpaceCap = 64;

Key unit_payload() { return Key::numeral(0); }
Key mark_numerals() { return Key::atom(1); }
Key mark_lower_univ() { return Key::atom(2); }

struct CodeView {
  std::uint64_t tag = 0;
  Key payload;   // lft: lower code; plus..w: pair
  bool ok = false;
};

struct FamView {
  std::uint64_t tag = 0;
  Key payload;
  bool ok = false;
};

FamView view_fam(const Key& k) {
  FamView v;
  if (k.tag() != Key::Tag::Pair || k.first().tag() != Key::Tag::Numeral)
    return v;
  v.tag = k.first().num();
  v.payload = k.second();
  switch (v.tag) {
    case kFamTable: v.ok = v.payload.tag() == Key::Tag::FunTable; break;
    case kFamConst: v.ok = true; break;
    case kFamLft: v.ok = v.payload == unit_payload(); break;
    default: break;
  }
  return v;
}

CodeView view_code(const Key& k) {
  CodeView v;
  if (k.tag() != Key::Tag::Pair || k.first().tag() != Key::Tag::Numeral)
    return v;
  v.tag = k.first().num();
  v.payload = k.second();
  switch (v.tag) {
    case kN0: case kN1: case kNat: case kIx:
      v.ok = v.payload == unit_payload();
      break;
    case kLft:
      v.ok = true;
      break;
    case kPlus: case kTimes:
      v.ok = v.payload.tag() == Key::Tag::Pair;
      break;
    case kSigma: case kPi: case kW:
      v.ok = v.payload.tag() == Key::Tag::Pair &&
             view_fam(v.payload.second()).ok;
      break;
    default:
      break;
  }
  return v;
}

Key fam_at(const FamView& f, const Key& u) {
  switch (f.tag) {
    case kFamTable: return f.payload.apply(u);
    case kFamConst: return f.payload;
    case kFamLft: return ucode::lft(u);
  }
  fail(ErrorKind::Internal, "bad family tag");
}

struct LK {
  std::uint32_t level;
  Key k;
  bool operator==(const LK& o) const { return level == o.level && k == o.k; }
};
struct LKHash {
  std::size_t operator()(const LK& x) const {
    return x.k.hash() * 0x9e3779b97f4a7c15ULL + x.level;
  }
};

std::optional<std::vector<Key>> small_keys(std::uint32_t level, const Key& c);

bool fam_wf(std::uint32_t level, const Key& idx_code, const FamView& f) {
  if (!f.ok) return false;
  switch (f.tag) {
    case kFamTable: {
      auto sk = small_keys(level, idx_code);
      if (!sk.has_value()) return false;
      const auto& entries = f.payload.entries();
      if (entries.size() != sk->size()) return false;
      std::vector<Key> want = *sk;
      std::sort(want.begin(), want.end());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].first == want[i])) return false;  // both sorted
        if (!code_wf(level, entries[i].second)) return false;
      }
      return true;
    }
    case kFamConst:
      return code_wf(level, f.payload);
    case kFamLft: {
      CodeView idx = view_code(idx_code);
      return level >= 1 && idx.ok && idx.tag == kIx;
    }
  }
  return false;
}

// Keys of the code's space when it is finitely keyed within the cap.
std::optional<std::vector<Key>> small_keys(std::uint32_t level, const Key& c) {
  thread_local std::unordered_map<LK, std::optional<std::vector<Key>>, LKHash>
      memo;
  LK lk{level, c};
  if (auto it = memo.find(lk); it != memo.end()) return it->second;
  std::optional<std::vector<Key>> out = std::nullopt;
  CodeView v = view_code(c);
  if (v.ok) {
    switch (v.tag) {
      case kN0: out = std::vector<Key>{}; break;
      case kN1: out = std::vector<Key>{Key::atom(0)}; break;
      case kNat: case kIx: break;
      case kLft:
        if (level >= 1) out = small_keys(level - 1, v.payload);
        break;
      case kPlus: {
        auto a = small_keys(level, v.payload.first());
        auto b = small_keys(level, v.payload.second());
        if (a && b && a->size() + b->size() <= kSpaceCap) {
          std::vector<Key> keys;
          for (const Key& u : *a) keys.push_back(Key::inl(u));
          for (const Key& u : *b) keys.push_back(Key::inr(u));
          out = std::move(keys);
        }
        break;
      }
      case kTimes: {
        auto a = small_keys(level, v.payload.first());
        auto b = small_keys(level, v.payload.second());
        if (a && b && a->size() * std::max<std::size_t>(b->size(), 1) <=
                          kSpaceCap) {
          std::vector<Key> keys;
          for (const Key& u : *a)
            for (const Key& w : *b) keys.push_back(Key::pair(u, w));
          out = std::move(keys);
        }
        break;
      }
      case kSigma: {
        auto a = small_keys(level, v.payload.first());
        FamView f = view_fam(v.payload.second());
        if (a && f.ok) {
          std::vector<Key> keys;
          bool good = true;
          for (const Key& u : *a) {
            auto fib = small_keys(level, fam_at(f, u));
            if (!fib || keys.size() + fib->size() > kSpaceCap) {
              good = false;
              break;
            }
            for (const Key& w : *fib) keys.push_back(Key::pair(u, w));
          }
          if (good) out = std::move(keys);
        }
        break;
      }
      case kPi: {
        auto a = small_keys(level, v.payload.first());
        FamView f = view_fam(v.payload.second());
        if (a && f.ok) {
          std::vector<std::vector<Key>> fibs;
          std::size_t total = 1;
          bool good = true;
          for (const Key& u : *a) {
            auto fib = small_keys(level, fam_at(f, u));
            if (!fib) { good = false; break; }
            total *= std::max<std::size_t>(fib->size(), 1);
            if (fib->empty()) total = 0;
            if (total > kSpaceCap) { good = false; break; }
            fibs.push_back(*fib);
          }
          if (good) {
            std::vector<Key> keys;
            std::vector<std::size_t> idx(a->size(), 0);
            for (std::size_t n = 0; n < total; ++n) {
              std::vector<std::pair<Key, Key>> assign;
              for (std::size_t i = 0; i < a->size(); ++i)
                assign.emplace_back((*a)[i], fibs[i][idx[i]]);
              keys.push_back(Key::funtable(std::move(assign)));
              for (std::size_t i = 0; i < a->size(); ++i) {
                if (++idx[i] < fibs[i].size()) break;
                idx[i] = 0;
              }
            }
            out = std::move(keys);
          }
        }
        break;
      }
      case kW: {
        // Finitely many trees only when there are no labels at all or every
        // label branches over an empty space (leaf-only trees).
        auto a = small_keys(level, v.payload.first());
        FamView f = view_fam(v.payload.second());
        if (a && f.ok) {
          std::vector<Key> keys;
          bool good = true;
          for (const Key& u : *a) {
            auto fib = small_keys(level, fam_at(f, u));
            if (!fib || !fib->empty()) { good = false; break; }
            keys.push_back(Key::pair(u, Key::funtable({})));
          }
          if (good) out = std::move(keys);
        }
        break;
      }
      default:
        break;
    }
  }
  memo.emplace(lk, out);
  return out;
}

// Strips lifting, tracking the level the wrapped code lives at.
std::pair<std::uint32_t, Key> unwrap_lft(std::uint32_t level, Key code) {
  CodeView v = view_code(code);
  while (v.ok && v.tag == kLft && level >= 1) {
    --level;
    code = v.payload;
    v = view_code(code);
  }
  return {level, code};
}

bool is_univ_tree_code(std::uint32_t level, const Key& code) {
  // w(ix, fam_lft): its key space is the tree space one level down.
  CodeView v = view_code(code);
  if (!v.ok || v.tag != kW || level < 1) return false;
  CodeView idx = view_code(v.payload.first());
  FamView f = view_fam(v.payload.second());
  return idx.ok && idx.tag == kIx && f.ok && f.tag == kFamLft;
}

VSet decode_unchecked(std::uint32_t level, const Key& t);

}  // namespace

namespace ucode {

Key n0() { return Key::pair(Key::numeral(kN0), unit_payload()); }
Key n1() { return Key::pair(Key::numeral(kN1), unit_payload()); }
Key nat() { return Key::pair(Key::numeral(kNat), unit_payload()); }
Key ix() { return Key::pair(Key::numeral(kIx), unit_payload()); }
Key lft(const Key& lower_code) {
  return Key::pair(Key::numeral(kLft), lower_code);
}
Key plus(const Key& c, const Key& d) {
  return Key::pair(Key::numeral(kPlus), Key::pair(c, d));
}
Key times(const Key& c, const Key& d) {
  return Key::pair(Key::numeral(kTimes), Key::pair(c, d));
}
Key sigma(const Key& c, const Key& fam) {
  return Key::pair(Key::numeral(kSigma), Key::pair(c, fam));
}
Key pi(const Key& c, const Key& fam) {
  return Key::pair(Key::numeral(kPi), Key::pair(c, fam));
}
Key w(const Key& c, const Key& fam) {
  return Key::pair(Key::numeral(kW), Key::pair(c, fam));
}

Key fam_table(std::vector<std::pair<Key, Key>> entries) {
  return Key::pair(Key::numeral(kFamTable),
                   Key::funtable(std::move(entries)));
}
Key fam_const(const Key& c) { return Key::pair(Key::numeral(kFamConst), c); }
Key fam_lft() { return Key::pair(Key::numeral(kFamLft), unit_payload()); }

Key tree(const Key& code, std::vector<std::pair<Key, Key>> branches) {
  return Key::pair(code, Key::funtable(std::move(branches)));
}
Key tree_nat() { return Key::pair(nat(), mark_numerals()); }
Key tree_univ() { return Key::pair(w(ix(), fam_lft()), mark_lower_univ()); }

}  // namespace ucode

bool code_wf(std::uint32_t level, const Key& code) {
  thread_local std::unordered_map<LK, bool, LKHash> memo;
  LK lk{level, code};
  if (auto it = memo.find(lk); it != memo.end()) return it->second;
  bool out = false;
  CodeView v = view_code(code);
  if (v.ok) {
    switch (v.tag) {
      case kN0: case kN1: case kNat:
        out = true;
        break;
      case kIx:
        out = level >= 1;
        break;
      case kLft:
        out = level >= 1 && code_wf(level - 1, v.payload);
        break;
      case kPlus: case kTimes:
        out = code_wf(level, v.payload.first()) &&
              code_wf(level, v.payload.second()) &&
              small_keys(level, code).has_value();
        break;
      case kSigma: case kPi:
        out = code_wf(level, v.payload.first()) &&
              fam_wf(level, v.payload.first(),
                     view_fam(v.payload.second())) &&
              small_keys(level, code).has_value();
        break;
      case kW:
        out = code_wf(level, v.payload.first()) &&
              fam_wf(level, v.payload.first(), view_fam(v.payload.second()));
        break;
      default:
        break;
    }
  }
  memo.emplace(lk, out);
  return out;
}

bool tree_wf(std::uint32_t level, const Key& tree) {
  thread_local std::unordered_map<LK, bool, LKHash> memo;
  LK lk{level, tree};
  if (auto it = memo.find(lk); it != memo.end()) return it->second;
  bool out = false;
  if (tree.tag() == Key::Tag::Pair) {
    const Key code = tree.first();
    const Key br = tree.second();
    if (code_wf(level, code)) {
      if (br.tag() == Key::Tag::FunTable) {
        auto sk = small_keys(level, code);
        if (sk.has_value() && br.entries().size() == sk->size()) {
          std::vector<Key> want = *sk;
          std::sort(want.begin(), want.end());
          out = true;
          for (std::size_t i = 0; out && i < want.size(); ++i) {
            if (!(br.entries()[i].first == want[i])) out = false;
            else if (!tree_wf(level, br.entries()[i].second)) out = false;
          }
        }
      } else if (br == mark_numerals()) {
        auto [lv, base] = unwrap_lft(level, code);
        CodeView v = view_code(base);
        out = v.ok && v.tag == kNat;
      } else if (br == mark_lower_univ()) {
        auto [lv, base] = unwrap_lft(level, code);
        out = is_univ_tree_code(lv, base);
      }
    }
  }
  memo.emplace(lk, out);
  return out;
}

KeySpace code_space(std::uint32_t level, const Key& code) {
  if (!code_wf(level, code))
    fail(ErrorKind::IllFormedCode, "code not well formed at level " +
                                       std::to_string(level) + ": " +
                                       code.str());
  CodeView v = view_code(code);
  switch (v.tag) {
    case kNat:
      return KeySpace::naturals();
    case kIx:
      return KeySpace::codes(level - 1);
    case kLft:
      return code_space(level - 1, v.payload);
    case kW: {
      Key idx = v.payload.first();
      FamView f = view_fam(v.payload.second());
      std::uint32_t lv = level;
      return KeySpace::w_trees(
          code_space(level, idx),
          [lv, f](const Key& u) { return code_space(lv, fam_at(f, u)); },
          code.hash() * 0x9e3779b97f4a7c15ULL + level);
    }
    default: {
      auto sk = small_keys(level, code);
      if (!sk.has_value())
        fail(ErrorKind::Internal, "well-formed finite code without keys");
      return KeySpace::finite(*sk);
    }
  }
}

namespace {

VSet decode_unchecked(std::uint32_t level, const Key& t) {
  const Key code = t.first();
  const Key br = t.second();
  if (br.tag() == Key::Tag::FunTable) {
    std::vector<std::pair<Key, VSet>> kids;
    kids.reserve(br.entries().size());
    for (const auto& [u, sub] : br.entries())
      kids.emplace_back(u, decode_unchecked(level, sub));
    return VSet::table(std::move(kids));
  }
  if (br == mark_numerals()) return VSet::naturals();
  auto [lv, base] = unwrap_lft(level, code);
  (void)base;
  return VSet::universe(lv - 1);
}

}  // namespace

VSet decode_tree(std::uint32_t level, const Key& tree) {
  if (!tree_wf(level, tree))
    fail(ErrorKind::IllFormedCode, "tree not well formed at level " +
                                       std::to_string(level) + ": " +
                                       tree.str());
  return decode_unchecked(level, tree);
}

VSet u_v(std::uint32_t level) { return VSet::universe(level); }

Key lift_code(std::uint32_t from_level, const Key& code) {
  (void)from_level;
  return ucode::lft(code);
}

Key lift_tree(std::uint32_t from_level, const Key& tree) {
  const Key code = tree.first();
  const Key br = tree.second();
  if (br.tag() != Key::Tag::FunTable)
    return Key::pair(ucode::lft(code), br);
  std::vector<std::pair<Key, Key>> lifted;
  lifted.reserve(br.entries().size());
  for (const auto& [u, sub] : br.entries())
    lifted.emplace_back(u, lift_tree(from_level, sub));
  return Key::pair(ucode::lft(code), Key::funtable(std::move(lifted)));
}

Key hf_tree(std::uint32_t level, const VSet& x) {
  if (!x.hereditarily_finite())
    fail(ErrorKind::DomainMismatch,
         "only hereditarily finite values have enumeration trees");
  // Width-n index code: n-fold sum of one-point codes.
  thread_local std::vector<Key> fins{ucode::n0()};
  while (fins.size() <= x.width())
    fins.push_back(ucode::plus(fins.back(), ucode::n1()));
  const Key code = fins[x.width()];
  auto sk = small_keys(level, code);
  if (!sk.has_value() || sk->size() != x.width())
    fail(ErrorKind::Internal, "width code out of step");
  std::vector<std::pair<Key, Key>> branches;
  branches.reserve(x.width());
  for (std::size_t i = 0; i < x.width(); ++i)
    branches.emplace_back((*sk)[i],
                          hf_tree(level, x.table_children()[i].second));
  return ucode::tree(code, std::move(branches));
}

std::optional<Key> cert_for(std::uint32_t level, const VSet& x) {
  VSet probe = x;
  if (probe.gen() == GenKind::SqGen) {
    auto inh = probe.space().inhabited();
    if (!inh.has_value()) return std::nullopt;
    probe = *inh ? VSet::table({{Key::atom(0), VSet::empty()}}) : VSet::empty();
  }
  return univ_internal::member_tree_key(level, probe);
}

Verdict check_mem_u(const VSet& x, std::uint32_t level, const Budget& bud) {
  return mem_v(x, u_v(level), bud);
}

}  // namespace vml

namespace vml::univ_internal {

bool code_key_wf(std::uint32_t level, const Key& k) {
  return code_wf(level, k);
}

bool tree_key_wf(std::uint32_t level, const Key& k) {
  return tree_wf(level, k);
}

std::vector<Key> enumerate_codes(std::uint32_t level, std::uint32_t cap) {
  std::vector<Key> out;
  std::unordered_set<Key, KeyHash> seen;
  auto push = [&](const Key& k) {
    if (out.size() >= cap) return;
    if (!code_wf(level, k)) return;
    if (seen.insert(k).second) out.push_back(k);
  };
  push(ucode::n0());
  push(ucode::n1());
  push(ucode::nat());
  if (level >= 1) {
    push(ucode::ix());
    push(ucode::w(ucode::ix(), ucode::fam_lft()));
    for (const Key& c : enumerate_codes(level - 1, std::min(cap, 6u)))
      push(ucode::lft(c));
  }
  std::vector<Key> base(out.begin(),
                        out.begin() + std::min<std::size_t>(out.size(), 6));
  for (const Key& a : base) {
    for (const Key& b : base) {
      if (out.size() >= cap) break;
      push(ucode::plus(a, b));
      push(ucode::times(a, b));
      push(ucode::sigma(a, ucode::fam_const(b)));
      push(ucode::pi(a, ucode::fam_const(b)));
      push(ucode::w(a, ucode::fam_const(b)));
    }
  }
  return out;
}

std::vector<Key> enumerate_trees(std::uint32_t level, std::uint32_t cap) {
  std::vector<Key> out;
  std::unordered_set<Key, KeyHash> seen;
  auto push = [&](const Key& k) {
    if (out.size() >= cap) return;
    if (!tree_wf(level, k)) return;
    if (seen.insert(k).second) out.push_back(k);
  };
  push(ucode::tree(ucode::n0(), {}));
  push(ucode::tree_nat());
  if (level >= 1) push(ucode::tree_univ());
  for (int round = 0; round < 3 && out.size() < cap; ++round) {
    std::vector<Key> snapshot = out;
    std::vector<Key> pool(
        snapshot.begin(),
        snapshot.begin() + std::min<std::size_t>(snapshot.size(), 4));
    for (const Key& c : enumerate_codes(level, 10)) {
      auto sk = small_keys(level, c);
      if (!sk.has_value() || sk->size() > 2) continue;
      std::size_t total = 1;
      for (std::size_t i = 0; i < sk->size(); ++i) total *= pool.size();
      for (std::size_t n = 0; n < total && out.size() < cap; ++n) {
        std::vector<std::pair<Key, Key>> branches;
        std::size_t rest = n;
        for (const Key& u : *sk) {
          branches.emplace_back(u, pool[rest % pool.size()]);
          rest /= pool.size();
        }
        push(ucode::tree(c, std::move(branches)));
      }
    }
  }
  return out;
}

Key least_code_key(std::uint32_t level) {
  (void)level;
  return ucode::n0();
}

Key least_tree_key(std::uint32_t level) {
  (void)level;
  return ucode::tree(ucode::n0(), {});
}

VSet univ_child(std::uint32_t level, const Key& tree_key) {
  return decode_unchecked(level, tree_key);
}

std::optional<Key> member_tree_key(std::uint32_t level, const VSet& x) {
  if (x.hereditarily_finite()) return hf_tree(level, x);
  if (x.gen() == GenKind::NumeralGen) return ucode::tree_nat();
  if (x.gen() == GenKind::UnivGen && x.univ_level() < level) {
    Key t = ucode::tree_univ();
    for (std::uint32_t lv = x.univ_level() + 1; lv < level; ++lv)
      t = lift_tree(lv, t);
    return t;
  }
  return std::nullopt;
}

}  // namespace vml::univ_internal
