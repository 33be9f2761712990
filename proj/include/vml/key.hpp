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

#ifndef VML_KEY_HPP
#define VML_KEY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vml/common.hpp"

namespace vml {

// Index keys: finite first-order data with decidable equality and a total
// order. Keys name positions inside a set's index space; they carry no
// semantic equality of their own.
class Key {
 public:
  enum class Tag : std::uint8_t { Atom, Numeral, Pair, Inl, Inr, FunTable };

  Key() : Key(atom(0)) {}

  static Key atom(std::uint64_t id);
  static Key numeral(std::uint64_t n);
  static Key pair(Key a, Key b);
  static Key inl(Key a);
  static Key inr(Key a);
  // Entries are sorted by argument key; duplicate argument keys are a
  // contract violation (DomainMismatch).
  static Key funtable(std::vector<std::pair<Key, Key>> entries);

  Tag tag() const;
  std::uint64_t num() const;          // Atom id or Numeral value
  Key first() const;                  // Pair left, Inl/Inr payload
  Key second() const;                 // Pair right
  const std::vector<std::pair<Key, Key>>& entries() const;  // FunTable

  // Looks up an argument in a FunTable key; KeyOutOfRange if absent.
  const Key& apply(const Key& arg) const;

  std::size_t hash() const;
  std::string str() const;

  friend bool operator==(const Key& a, const Key& b);
  friend bool operator!=(const Key& a, const Key& b) { return !(a == b); }
  // Total structural order: by tag, then payload, lexicographic.
  friend bool operator<(const Key& a, const Key& b);
  friend int key_cmp(const Key& a, const Key& b);

 private:
  struct Node;
  explicit Key(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const { return k.hash(); }
};

}  // namespace vml

#endif  // VML_KEY_HPP
