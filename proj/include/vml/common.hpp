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

#ifndef VML_COMMON_HPP
#define VML_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vml {

// Error taxonomy shared by the whole kernel. Every kernel failure that is a
// contract violation (not a verdict) is thrown as one of these kinds.
enum class ErrorKind {
  DomainMismatch,        // key not in the expected key space
  KeyOutOfRange,         // elem_at on a key the space does not contain
  NotAPair,              // unpair_v on a set with no pair reading
  InfiniteUnsupported,   // construction needs an enumeration that is infinite
  UndecidedEquality,     // an eager equality decision came back Unknown
  NotEqual,              // a required kernel equality failed to hold
  IllFormedCode,         // universe code/tree malformed for its level
  FamilyNotExtensional,  // family assignment provably breaks kernel equality
  ScopeError,            // expression ill-scoped for its context
  ParseError,            // surface syntax error
  PremiseFails,          // recomputed premise of an eliminator is not Holds
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

// Budget limits for one top-level kernel question. fuel bounds recursion
// steps taken on lazily generated sets; nat_bound bounds how many keys of an
// infinite space are probed. Hereditarily finite comparisons never consume
// fuel: they always terminate and must stay definitive.
struct Budget {
  std::uint64_t fuel = 10000;
  std::uint32_t nat_bound = 16;
};

// Mutable countdown threaded through one evaluation tree.
struct BudgetState {
  std::uint64_t fuel_left;
  std::uint32_t nat_bound;
  bool exhausted = false;

  explicit BudgetState(const Budget& b)
      : fuel_left(b.fuel), nat_bound(b.nat_bound) {}

  // Returns false when the fuel ran out; caller converts to Unknown.
  bool spend(std::uint64_t n = 1) {
    if (fuel_left < n) {
      fuel_left = 0;
      exhausted = true;
      return false;
    }
    fuel_left -= n;
    return true;
  }
};

}  // namespace vml

#endif  // VML_COMMON_HPP
