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

#include "vml/key.hpp"

#include <algorithm>
#include <sstream>

namespace vml {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::KeyOutOfRange: return "KeyOutOfRange";
    case ErrorKind::NotAPair: return "NotAPair";
    case ErrorKind::InfiniteUnsupported: return "InfiniteUnsupported";
    case ErrorKind::UndecidedEquality: return "UndecidedEquality";
    case ErrorKind::NotEqual: return "NotEqual";
    case ErrorKind::IllFormedCode: return "IllFormedCode";
    case ErrorKind::FamilyNotExtensional: return "FamilyNotExtensional";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PremiseFails: return "PremiseFails";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

struct Key::Node {
  Tag tag;
  std::uint64_t num = 0;
  std::shared_ptr<const Node> a, b;
  std::vector<std::pair<Key, Key>> table;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix-style combine; stable within a build, used for hashing only.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Key Key::atom(std::uint64_t id) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Atom;
  n->num = id;
  n->hash = mix(1, static_cast<std::size_t>(id));
  return Key(std::move(n));
}

Key Key::numeral(std::uint64_t v) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Numeral;
  n->num = v;
  n->hash = mix(2, static_cast<std::size_t>(v));
  return Key(std::move(n));
}

Key Key::pair(Key a, Key b) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Pair;
  n->hash = mix(mix(3, a.hash()), b.hash());
  n->a = a.node_;
  n->b = b.node_;
  return Key(std::move(n));
}

Key Key::inl(Key a) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Inl;
  n->hash = mix(4, a.hash());
  n->a = a.node_;
  return Key(std::move(n));
}

Key Key::inr(Key a) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Inr;
  n->hash = mix(5, a.hash());
  n->a = a.node_;
  return Key(std::move(n));
}

Key Key::funtable(std::vector<std::pair<Key, Key>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].first == entries[i].first)
      fail(ErrorKind::DomainMismatch,
           "funtable key has duplicate argument " + entries[i].first.str());
  }
  auto n = std::make_shared<Node>();
  n->tag = Tag::FunTable;
  std::size_t h = 6;
  for (const auto& [k, v] : entries) h = mix(mix(h, k.hash()), v.hash());
  n->hash = h;
  n->table = std::move(entries);
  return Key(std::move(n));
}

Key::Tag Key::tag() const { return node_->tag; }
std::uint64_t Key::num() const { return node_->num; }
Key Key::first() const { return Key(node_->a); }
Key Key::second() const { return Key(node_->b); }
const std::vector<std::pair<Key, Key>>& Key::entries() const {
  return node_->table;
}

const Key& Key::apply(const Key& arg) const {
  if (tag() != Tag::FunTable)
    fail(ErrorKind::DomainMismatch, "apply on non-funtable key " + str());
  auto it = std::lower_bound(
      node_->table.begin(), node_->table.end(), arg,
      [](const auto& e, const Key& k) { return e.first < k; });
  if (it == node_->table.end() || !(it->first == arg))
    fail(ErrorKind::KeyOutOfRange,
         "funtable has no entry for " + arg.str());
  return it->second;
}

std::size_t Key::hash() const { return node_->hash; }

int key_cmp(const Key& a, const Key& b) {
  if (a.node_ == b.node_) return 0;
  if (a.tag() != b.tag())
    return static_cast<int>(a.tag()) < static_cast<int>(b.tag()) ? -1 : 1;
  switch (a.tag()) {
    case Key::Tag::Atom:
    case Key::Tag::Numeral:
      if (a.num() != b.num()) return a.num() < b.num() ? -1 : 1;
      return 0;
    case Key::Tag::Pair: {
      int c = key_cmp(a.first(), b.first());
      if (c != 0) return c;
      return key_cmp(a.second(), b.second());
    }
    case Key::Tag::Inl:
    case Key::Tag::Inr:
      return key_cmp(a.first(), b.first());
    case Key::Tag::FunTable: {
      const auto& ta = a.entries();
      const auto& tb = b.entries();
      std::size_t n = std::min(ta.size(), tb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = key_cmp(ta[i].first, tb[i].first);
        if (c != 0) return c;
        c = key_cmp(ta[i].second, tb[i].second);
        if (c != 0) return c;
      }
      if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool operator==(const Key& a, const Key& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return key_cmp(a, b) == 0;
}

bool operator<(const Key& a, const Key& b) { return key_cmp(a, b) < 0; }

std::string Key::str() const {
  std::ostringstream os;
  switch (tag()) {
    case Tag::Atom: os << 'a' << num(); break;
    case Tag::Numeral: os << '#' << num(); break;
    case Tag::Pair:
      os << '(' << first().str() << ',' << second().str() << ')';
      break;
    case Tag::Inl: os << "inl " << first().str(); break;
    case Tag::Inr: os << "inr " << first().str(); break;
    case Tag::FunTable: {
      os << "tbl{";
      bool sep = false;
      for (const auto& [k, v] : entries()) {
        if (sep) os << ", ";
        os << k.str() << "->" << v.str();
        sep = true;
      }
      os << '}';
      break;
    }
  }
  return os.str();
}

}  // namespace vml
