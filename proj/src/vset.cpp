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

#include "vml/vset.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "universe_internal.hpp"
#include "vml/zf.hpp"

namespace vml {

namespace {

std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::atomic<std::uint64_t> g_closure_id{1};

}  // namespace

// ---------------------------------------------------------------------------
// KeySpace

struct KeySpace::Node {
  SpaceKind kind = SpaceKind::Finite;
  std::vector<Key> keys;              // Finite
  std::uint32_t level = 0;            // UnivTrees / Codes
  std::shared_ptr<const VSet> base;   // Sigma
  std::shared_ptr<const VFamily> fam; // Sigma
  std::shared_ptr<const KeySpace> labels;              // WTrees
  std::function<KeySpace(const Key&)> branch;          // WTrees
  std::uint64_t closure_id = 0;                        // WTrees
  std::uint64_t digest = 0;
};

KeySpace::KeySpace(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

KeySpace::KeySpace() {
  auto n = std::make_shared<Node>();
  n->digest = mix64(11, 0);
  node_ = std::move(n);
}

KeySpace KeySpace::finite(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const Key& a, const Key& b) { return a == b; }),
             keys.end());
  auto n = std::make_shared<Node>();
  n->kind = SpaceKind::Finite;
  std::uint64_t d = 11;
  for (const Key& k : keys) d = mix64(d, k.hash());
  n->digest = d;
  n->keys = std::move(keys);
  return KeySpace(std::move(n));
}

KeySpace KeySpace::naturals() {
  auto n = std::make_shared<Node>();
  n->kind = SpaceKind::Naturals;
  n->digest = mix64(12, 0);
  return KeySpace(std::move(n));
}

KeySpace KeySpace::sigma(VSet base, VFamily fam) {
  auto n = std::make_shared<Node>();
  n->kind = SpaceKind::Sigma;
  n->digest = mix64(mix64(13, base.digest()), fam.id);
  n->base = std::make_shared<VSet>(std::move(base));
  n->fam = std::make_shared<VFamily>(std::move(fam));
  return KeySpace(std::move(n));
}

KeySpace KeySpace::univ_trees(std::uint32_t level) {
  auto n = std::make_shared<Node>();
  n->kind = SpaceKind::UnivTrees;
  n->level = level;
  n->digest = mix64(14, level);
  return KeySpace(std::move(n));
}

KeySpace KeySpace::codes(std::uint32_t level) {
  auto n = std::make_shared<Node>();
  n->kind = SpaceKind::Codes;
  n->level = level;
  n->digest = mix64(15, level);
  return KeySpace(std::move(n));
}

KeySpace KeySpace::w_trees(KeySpace labels,
                           std::function<KeySpace(const Key&)> branch,
                           std::uint64_t id) {
  auto n = std::make_shared<Node>();
  n->kind = SpaceKind::WTrees;
  n->labels = std::make_shared<KeySpace>(std::move(labels));
  n->branch = std::move(branch);
  n->closure_id = id ? id : g_closure_id.fetch_add(1);
  n->digest = mix64(mix64(16, n->labels->digest()), n->closure_id);
  return KeySpace(std::move(n));
}

SpaceKind KeySpace::kind() const { return node_->kind; }

const std::vector<Key>& KeySpace::finite_keys() const {
  if (kind() != SpaceKind::Finite)
    fail(ErrorKind::Internal, "finite_keys on non-finite space");
  return node_->keys;
}

std::uint32_t KeySpace::level() const { return node_->level; }
const VSet& KeySpace::sigma_base() const { return *node_->base; }
const VFamily& KeySpace::sigma_fam() const { return *node_->fam; }
const KeySpace& KeySpace::w_labels() const { return *node_->labels; }
KeySpace KeySpace::w_branch(const Key& label) const {
  return node_->branch(label);
}

bool KeySpace::contains(const Key& k) const {
  switch (kind()) {
    case SpaceKind::Finite:
      return std::binary_search(node_->keys.begin(), node_->keys.end(), k);
    case SpaceKind::Naturals:
      return k.tag() == Key::Tag::Numeral;
    case SpaceKind::Sigma: {
      if (k.tag() != Key::Tag::Pair) return false;
      const Key y = k.first();
      if (!node_->base->space().contains(y)) return false;
      return node_->fam->at(y).space().contains(k.second());
    }
    case SpaceKind::UnivTrees:
      return univ_internal::tree_key_wf(node_->level, k);
    case SpaceKind::Codes:
      return univ_internal::code_key_wf(node_->level, k);
    case SpaceKind::WTrees: {
      // sup(label, subtrees): pair(label, funtable over the branch space).
      if (k.tag() != Key::Tag::Pair) return false;
      const Key label = k.first();
      if (!node_->labels->contains(label)) return false;
      const Key br = k.second();
      if (br.tag() != Key::Tag::FunTable) return false;
      KeySpace bs = node_->branch(label);
      KeyEnum be = bs.enumerate(64);
      if (!be.complete) return false;  // only finite branching is checkable
      if (be.keys.size() != br.entries().size()) return false;
      for (std::size_t i = 0; i < be.keys.size(); ++i) {
        if (!(br.entries()[i].first == be.keys[i])) return false;
        if (!contains(br.entries()[i].second)) return false;
      }
      return true;
    }
  }
  return false;
}

KeyEnum KeySpace::enumerate(std::uint32_t bound) const {
  KeyEnum out;
  switch (kind()) {
    case SpaceKind::Finite:
      out.keys = node_->keys;
      out.complete = true;
      return out;
    case SpaceKind::Naturals:
      for (std::uint32_t i = 0; i <= bound; ++i)
        out.keys.push_back(Key::numeral(i));
      out.complete = false;
      return out;
    case SpaceKind::Sigma: {
      KeyEnum base = node_->base->space().enumerate(bound);
      out.complete = base.complete;
      for (const Key& y : base.keys) {
        KeyEnum fib = node_->fam->at(y).space().enumerate(bound);
        if (!fib.complete) out.complete = false;
        for (const Key& u : fib.keys) out.keys.push_back(Key::pair(y, u));
      }
      return out;
    }
    case SpaceKind::UnivTrees:
      out.keys = univ_internal::enumerate_trees(node_->level,
                                                std::min<std::uint32_t>(bound, 24));
      out.complete = false;
      return out;
    case SpaceKind::Codes:
      out.keys = univ_internal::enumerate_codes(node_->level,
                                                std::min<std::uint32_t>(bound, 24));
      out.complete = false;
      return out;
    case SpaceKind::WTrees: {
      // Bottom-up rounds: a round extends the tree pool with every node
      // labelled by an enumerated label whose (finite) branch assignment
      // draws from the current pool. A round that adds nothing under fully
      // complete sub-enumerations means the space was exhausted.
      constexpr std::size_t kCap = 64;
      KeyEnum labels = node_->labels->enumerate(bound);
      bool all_complete = labels.complete;
      std::vector<Key> trees;
      for (std::uint32_t round = 0; round < 5; ++round) {
        std::vector<Key> next = trees;
        for (const Key& label : labels.keys) {
          KeyEnum be = node_->branch(label).enumerate(bound);
          if (!be.complete) { all_complete = false; continue; }
          if (be.keys.empty()) {
            next.push_back(Key::pair(label, Key::funtable({})));
            continue;
          }
          if (trees.empty()) continue;
          std::size_t total = 1;
          for (std::size_t i = 0; i < be.keys.size() && total <= kCap; ++i)
            total *= trees.size();
          if (total > kCap) { all_complete = false; total = kCap; }
          for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rem = idx;
            std::vector<std::pair<Key, Key>> entries;
            for (const Key& bk : be.keys) {
              entries.emplace_back(bk, trees[rem % trees.size()]);
              rem /= trees.size();
            }
            next.push_back(Key::pair(label, Key::funtable(std::move(entries))));
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Key& a, const Key& b) { return a == b; }),
                   next.end());
        if (next.size() == trees.size()) {
          out.keys = std::move(next);
          out.complete = all_complete;
          return out;
        }
        trees = std::move(next);
        if (trees.size() > kCap) { all_complete = false; break; }
      }
      out.keys = std::move(trees);
      out.complete = false;
      return out;
    }
  }
  return out;
}

std::optional<bool> KeySpace::finite() const {
  switch (kind()) {
    case SpaceKind::Finite: return true;
    case SpaceKind::Naturals:
    case SpaceKind::UnivTrees:
    case SpaceKind::Codes: return false;
    case SpaceKind::Sigma: {
      auto bf = node_->base->space().finite();
      if (!bf.has_value()) return std::nullopt;
      if (!*bf) return std::nullopt;
      KeyEnum base = node_->base->space().enumerate(0);
      for (const Key& y : base.keys) {
        auto ff = node_->fam->at(y).space().finite();
        if (!ff.has_value()) return std::nullopt;
        if (!*ff) {
          auto inh = node_->fam->at(y).space().inhabited();
          if (inh.has_value() && *inh) return false;
          return std::nullopt;
        }
      }
      return true;
    }
    case SpaceKind::WTrees: {
      KeyEnum e = enumerate(16);
      if (e.complete) return true;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<bool> KeySpace::inhabited() const {
  switch (kind()) {
    case SpaceKind::Finite: return !node_->keys.empty();
    case SpaceKind::Naturals:
    case SpaceKind::UnivTrees:
    case SpaceKind::Codes: return true;
    case SpaceKind::Sigma:
    case SpaceKind::WTrees: {
      KeyEnum e = enumerate(16);
      if (!e.keys.empty()) return true;
      if (e.complete) return false;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Key> KeySpace::some_key() const {
  switch (kind()) {
    case SpaceKind::Finite:
      if (node_->keys.empty()) return std::nullopt;
      return node_->keys.front();
    case SpaceKind::Naturals: return Key::numeral(0);
    case SpaceKind::UnivTrees:
      return univ_internal::least_tree_key(node_->level);
    case SpaceKind::Codes:
      return univ_internal::least_code_key(node_->level);
    case SpaceKind::Sigma:
    case SpaceKind::WTrees: {
      KeyEnum e = enumerate(16);
      if (e.keys.empty()) return std::nullopt;
      return e.keys.front();
    }
  }
  return std::nullopt;
}

std::uint64_t KeySpace::digest() const { return node_->digest; }

std::string KeySpace::str() const {
  switch (kind()) {
    case SpaceKind::Finite: {
      std::ostringstream os;
      os << "finite[";
      bool sep = false;
      for (const Key& k : node_->keys) {
        if (sep) os << ", ";
        os << k.str();
        sep = true;
      }
      os << ']';
      return os.str();
    }
    case SpaceKind::Naturals: return "naturals";
    case SpaceKind::Sigma: return "sigma-space";
    case SpaceKind::UnivTrees:
      return "univ-trees(" + std::to_string(node_->level) + ")";
    case SpaceKind::Codes:
      return "codes(" + std::to_string(node_->level) + ")";
    case SpaceKind::WTrees: return "w-trees";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// VFamily

VFamily::VFamily(VSet base_, std::function<VSet(const Key&)> fn_)
    : base(std::move(base_)),
      fn(std::move(fn_)),
      id(g_closure_id.fetch_add(1)) {}

VSet VFamily::at(const Key& k) const {
  if (!base.space().contains(k))
    fail(ErrorKind::DomainMismatch,
         "family applied outside its base space: " + k.str());
  return fn(k);
}

VFamily VFamily::constant(VSet base_, VSet value) {
  return VFamily(std::move(base_),
                 [value](const Key&) { return value; });
}

// ---------------------------------------------------------------------------
// VSet

struct VSet::Node {
  KeySpace space;
  GenKind gen = GenKind::Table;
  std::vector<std::pair<Key, VSet>> table;
  std::shared_ptr<const VSet> inner;   // SqGen
  std::shared_ptr<const VSet> base;    // SigmaGen
  std::shared_ptr<const VFamily> fam;  // SigmaGen
  std::uint32_t level = 0;             // UnivGen
  std::uint64_t digest = 0;
  bool hf = false;
  Rank rank = Rank::unknown();
};

VSet::VSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

VSet::VSet() : VSet(empty()) {}

VSet VSet::empty() { return table({}); }

VSet VSet::table(std::vector<std::pair<Key, VSet>> children) {
  std::sort(children.begin(), children.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < children.size(); ++i) {
    if (children[i - 1].first == children[i].first)
      fail(ErrorKind::DomainMismatch,
           "duplicate table key " + children[i].first.str());
  }
  std::vector<Key> keys;
  keys.reserve(children.size());
  for (const auto& [k, v] : children) keys.push_back(k);
  auto n = std::make_shared<Node>();
  n->space = KeySpace::finite(std::move(keys));
  n->gen = GenKind::Table;
  std::uint64_t d = 21;
  bool hf = true;
  Rank r = Rank::fin(0);
  for (const auto& [k, v] : children) {
    d = mix64(mix64(d, k.hash()), v.digest());
    hf = hf && v.hereditarily_finite();
    Rank cr = v.rank();
    switch (cr.kind) {
      case Rank::Kind::Fin:
        if (r.kind == Rank::Kind::Fin) r.n = std::max(r.n, cr.n + 1);
        break;
      case Rank::Kind::Infinite:
        r = Rank::infinite();
        break;
      case Rank::Kind::Unknown:
        if (r.kind == Rank::Kind::Fin) r = Rank::unknown();
        break;
    }
  }
  if (children.empty()) r = Rank::fin(0);
  n->digest = d;
  n->hf = hf;
  n->rank = r;
  n->table = std::move(children);
  return VSet(std::move(n));
}

VSet VSet::naturals() {
  auto n = std::make_shared<Node>();
  n->space = KeySpace::naturals();
  n->gen = GenKind::NumeralGen;
  n->digest = mix64(22, 0);
  n->hf = false;
  n->rank = Rank::infinite();
  return VSet(std::move(n));
}

VSet VSet::squash_of(VSet inner) {
  auto n = std::make_shared<Node>();
  n->space = inner.space();
  n->gen = GenKind::SqGen;
  n->digest = mix64(23, inner.digest());
  n->hf = false;
  auto inh = inner.space().inhabited();
  if (inh.has_value())
    n->rank = *inh ? Rank::fin(1) : Rank::fin(0);
  else
    n->rank = Rank::unknown();
  n->inner = std::make_shared<VSet>(std::move(inner));
  return VSet(std::move(n));
}

VSet VSet::sigma_lazy(VSet base, VFamily fam) {
  auto n = std::make_shared<Node>();
  n->space = KeySpace::sigma(base, fam);
  n->gen = GenKind::SigmaGen;
  n->digest = mix64(mix64(24, base.digest()), fam.id);
  n->hf = false;
  n->rank = Rank::unknown();
  n->base = std::make_shared<VSet>(std::move(base));
  n->fam = std::make_shared<VFamily>(std::move(fam));
  return VSet(std::move(n));
}

VSet VSet::universe(std::uint32_t level) {
  auto n = std::make_shared<Node>();
  n->space = KeySpace::univ_trees(level);
  n->gen = GenKind::UnivGen;
  n->level = level;
  n->digest = mix64(25, level);
  n->hf = false;
  n->rank = Rank::infinite();
  return VSet(std::move(n));
}

const KeySpace& VSet::space() const { return node_->space; }
GenKind VSet::gen() const { return node_->gen; }

VSet VSet::at(const Key& k) const {
  switch (gen()) {
    case GenKind::Table: {
      auto it = std::lower_bound(
          node_->table.begin(), node_->table.end(), k,
          [](const auto& e, const Key& key) { return e.first < key; });
      if (it == node_->table.end() || !(it->first == k))
        fail(ErrorKind::KeyOutOfRange, "no child at key " + k.str());
      return it->second;
    }
    case GenKind::NumeralGen:
      if (k.tag() != Key::Tag::Numeral)
        fail(ErrorKind::KeyOutOfRange,
             "naturals space has no key " + k.str());
      return numeral(k.num());
    case GenKind::SqGen:
      if (!space().contains(k))
        fail(ErrorKind::KeyOutOfRange, "no child at key " + k.str());
      return VSet::empty();
    case GenKind::SigmaGen: {
      if (!space().contains(k))
        fail(ErrorKind::KeyOutOfRange, "no child at key " + k.str());
      const Key y = k.first();
      const Key u = k.second();
      return pair_v(node_->base->at(y), node_->fam->at(y).at(u));
    }
    case GenKind::UnivGen: {
      if (!space().contains(k))
        fail(ErrorKind::KeyOutOfRange, "no child at key " + k.str());
      return univ_internal::univ_child(node_->level, k);
    }
  }
  fail(ErrorKind::Internal, "bad generator");
}

const std::vector<std::pair<Key, VSet>>& VSet::table_children() const {
  if (gen() != GenKind::Table)
    fail(ErrorKind::Internal, "table_children on lazy set");
  return node_->table;
}

const VSet& VSet::sq_inner() const {
  if (gen() != GenKind::SqGen) fail(ErrorKind::Internal, "not a squash");
  return *node_->inner;
}

const VSet& VSet::sigma_base() const {
  if (gen() != GenKind::SigmaGen) fail(ErrorKind::Internal, "not a sigma");
  return *node_->base;
}

const VFamily& VSet::sigma_fam() const {
  if (gen() != GenKind::SigmaGen) fail(ErrorKind::Internal, "not a sigma");
  return *node_->fam;
}

std::uint32_t VSet::univ_level() const {
  if (gen() != GenKind::UnivGen) fail(ErrorKind::Internal, "not a universe");
  return node_->level;
}

std::size_t VSet::width() const {
  if (gen() != GenKind::Table)
    fail(ErrorKind::Internal, "width on lazy set");
  return node_->table.size();
}

bool VSet::hereditarily_finite() const { return node_->hf; }
Rank VSet::rank() const { return node_->rank; }
std::uint64_t VSet::digest() const { return node_->digest; }

std::string VSet::str(std::uint32_t max_probe) const {
  switch (gen()) {
    case GenKind::Table: {
      if (node_->table.empty()) return "empty";
      std::ostringstream os;
      os << "{ ";
      bool sep = false;
      for (const auto& [k, v] : node_->table) {
        if (sep) os << ", ";
        os << v.str(max_probe);
        sep = true;
      }
      os << " }";
      return os.str();
    }
    case GenKind::NumeralGen: return "natv";
    case GenKind::UnivGen: return "univ " + std::to_string(node_->level);
    case GenKind::SqGen:
    case GenKind::SigmaGen: {
      KeyEnum e = space().enumerate(max_probe);
      std::ostringstream os;
      os << "{ ";
      std::uint32_t shown = 0;
      for (const Key& k : e.keys) {
        if (shown == max_probe) break;
        if (shown) os << ", ";
        os << at(k).str(max_probe);
        ++shown;
      }
      if (shown) os << ", ";
      os << "... }";
      return os.str();
    }
  }
  return "?";
}

std::string Rank::str() const {
  switch (kind) {
    case Kind::Fin: return "fin " + std::to_string(n);
    case Kind::Infinite: return "infinite";
    case Kind::Unknown: return "unknown";
  }
  return "?";
}

VSet mk_sup(std::vector<std::pair<Key, VSet>> children) {
  return VSet::table(std::move(children));
}

const KeySpace& index_of(const VSet& v) { return v.space(); }
VSet elem_at(const VSet& v, const Key& k) { return v.at(k); }
Rank rank_of(const VSet& v) { return v.rank(); }
std::uint64_t digest_of(const VSet& v) { return v.digest(); }

}  // namespace vml
