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

#ifndef VML_VSET_HPP
#define VML_VSET_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vml/common.hpp"
#include "vml/key.hpp"

namespace vml {

class VSet;
struct VFamily;

// Kinds of index key spaces. Finite spaces carry their keys; the others are
// enumerable-but-infinite (or not cheaply finite) and are probed under a
// bound. Sigma spaces hold the pair keys of a lazily built sigma set;
// UnivTrees/Codes are the coded-tree and code spaces of the universe tower;
// WTrees are well-founded trees over a node space with coded branching.
enum class SpaceKind : std::uint8_t {
  Finite,
  Naturals,
  Sigma,
  UnivTrees,
  Codes,
  WTrees,
};

struct KeyEnum {
  std::vector<Key> keys;
  bool complete = false;
};

class KeySpace {
 public:
  KeySpace();  // empty finite space

  static KeySpace finite(std::vector<Key> keys);  // sorted, deduplicated
  static KeySpace naturals();
  static KeySpace sigma(VSet base, VFamily fam);
  static KeySpace univ_trees(std::uint32_t level);
  static KeySpace codes(std::uint32_t level);
  static KeySpace w_trees(KeySpace labels,
                          std::function<KeySpace(const Key&)> branch,
                          std::uint64_t id);

  SpaceKind kind() const;
  const std::vector<Key>& finite_keys() const;  // Finite only
  std::uint32_t level() const;                  // UnivTrees/Codes only
  const VSet& sigma_base() const;               // Sigma only
  const VFamily& sigma_fam() const;             // Sigma only
  const KeySpace& w_labels() const;             // WTrees only
  KeySpace w_branch(const Key& label) const;    // WTrees only

  bool contains(const Key& k) const;
  // Canonical bounded enumeration; `complete` is set when every key of the
  // space was produced. For Naturals the bound is the largest numeral probed.
  KeyEnum enumerate(std::uint32_t bound) const;
  std::optional<bool> finite() const;     // nullopt: not cheaply decidable
  std::optional<bool> inhabited() const;  // nullopt: not cheaply decidable
  // A canonical inhabitant when one can be produced (used for determinism of
  // witness choices on squashed sets).
  std::optional<Key> some_key() const;

  std::uint64_t digest() const;
  std::string str() const;

 private:
  struct Node;
  explicit KeySpace(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

// Child assignment generators. Finite spaces always pair with Table; the
// lazy generators keep infinite sets representable without enumeration.
enum class GenKind : std::uint8_t {
  Table,       // explicit children over a finite space
  NumeralGen,  // space Naturals; child at #n is the n-th von Neumann numeral
  SqGen,       // same space as the squashed set; every child is empty
  SigmaGen,    // space Sigma(base, fam); child at (y,u) is <base@y, fam(y)@u>
  UnivGen,     // space UnivTrees(k); child at a tree key is its decoding
};

struct Rank {
  enum class Kind : std::uint8_t { Fin, Infinite, Unknown } kind;
  std::uint64_t n = 0;  // Fin only

  static Rank fin(std::uint64_t n) { return Rank{Kind::Fin, n}; }
  static Rank infinite() { return Rank{Kind::Infinite, 0}; }
  static Rank unknown() { return Rank{Kind::Unknown, 0}; }
  bool known() const { return kind != Kind::Unknown; }
  friend bool operator==(const Rank& a, const Rank& b) {
    return a.kind == b.kind && (a.kind != Kind::Fin || a.n == b.n);
  }
  std::string str() const;
};

// Iterative set values: sup(space, children). Immutable, structurally
// shared. Presentation is preserved exactly as built; no duplicate child is
// ever collapsed behind the caller's back.
class VSet {
 public:
  VSet();  // the empty set

  static VSet empty();
  // Finite table; the space is derived from the entry keys (sorted; duplicate
  // keys rejected with DomainMismatch).
  static VSet table(std::vector<std::pair<Key, VSet>> children);
  static VSet naturals();                      // natV
  static VSet squash_of(VSet inner);           // lazy squash (space kept)
  static VSet sigma_lazy(VSet base, VFamily fam);
  static VSet universe(std::uint32_t level);   // V_level

  const KeySpace& space() const;
  GenKind gen() const;
  // Child at a key of the space; KeyOutOfRange otherwise.
  VSet at(const Key& k) const;
  const std::vector<std::pair<Key, VSet>>& table_children() const;
  const VSet& sq_inner() const;      // SqGen only
  const VSet& sigma_base() const;    // SigmaGen only
  const VFamily& sigma_fam() const;  // SigmaGen only
  std::uint32_t univ_level() const;  // UnivGen only

  std::size_t width() const;  // Table: number of children
  bool is_table() const { return gen() == GenKind::Table; }
  // Hereditarily finite: a table whose children are hereditarily finite.
  bool hereditarily_finite() const;
  Rank rank() const;
  std::uint64_t digest() const;
  bool same_node(const VSet& o) const { return node_ == o.node_; }

  // Structural literal: finite sets in braces, lazy generators by name.
  // `max_probe` children are shown for lazy sets.
  std::string str(std::uint32_t max_probe = 3) const;

 private:
  struct Node;
  explicit VSet(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
  friend class KeySpace;
};

// A set-valued assignment over the keys of a base set. `fn` must be total on
// the base's key space. `id` makes digests of closure-bearing nodes stable
// within a run.
struct VFamily {
  VSet base;
  std::function<VSet(const Key&)> fn;
  std::uint64_t id = 0;

  VFamily() = default;
  VFamily(VSet base_, std::function<VSet(const Key&)> fn_);
  VSet at(const Key& k) const;
  static VFamily constant(VSet base_, VSet value);
};

// Contract-style free functions over the value type.
VSet mk_sup(std::vector<std::pair<Key, VSet>> children);
const KeySpace& index_of(const VSet& v);
VSet elem_at(const VSet& v, const Key& k);
Rank rank_of(const VSet& v);
std::uint64_t digest_of(const VSet& v);

}  // namespace vml

#endif  // VML_VSET_HPP
