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

#ifndef VML_VERDICT_HPP
#define VML_VERDICT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vml/common.hpp"
#include "vml/key.hpp"

namespace vml {

// Three-valued answers with witnesses. Holds and Fails are definitive and
// stable under budget increases. HoldsBounded means every probed instance of
// a truncated quantification held: it is a refined Unknown, reported
// distinctly, and may sharpen to Holds or Fails with a larger bound.
enum class Truth : std::uint8_t { Holds, HoldsBounded, Fails, Unknown };

struct Verdict {
  Truth truth = Truth::Unknown;
  std::vector<Key> witnesses;   // Holds: witness keys (least-key canonical)
  std::string detail;           // Fails: counterexample; Unknown: reason
  std::uint64_t fuel = 0;       // budget snapshot for Unknown reporting
  std::uint32_t nat_bound = 0;
  std::uint32_t probed = 0;     // HoldsBounded: how many instances were checked

  static Verdict holds() { return Verdict{Truth::Holds, {}, "", 0, 0, 0}; }
  static Verdict holds(Key w) {
    return Verdict{Truth::Holds, {std::move(w)}, "", 0, 0, 0};
  }
  static Verdict holds_bounded(std::uint32_t probed, std::string note = "") {
    return Verdict{Truth::HoldsBounded, {}, std::move(note), 0, 0, probed};
  }
  static Verdict fails(std::string why) {
    return Verdict{Truth::Fails, {}, std::move(why), 0, 0, 0};
  }
  static Verdict unknown(std::string why, const Budget& b) {
    return Verdict{Truth::Unknown, {}, std::move(why), b.fuel, b.nat_bound, 0};
  }
  static Verdict unknown(std::string why, const BudgetState& b) {
    return Verdict{Truth::Unknown, {}, std::move(why), b.fuel_left,
                   b.nat_bound, 0};
  }

  bool is_holds() const { return truth == Truth::Holds; }
  bool is_fails() const { return truth == Truth::Fails; }
  bool definitive() const { return is_holds() || is_fails(); }
  // Holds or HoldsBounded: nothing contradicted the statement.
  bool unrefuted_pass() const {
    return truth == Truth::Holds || truth == Truth::HoldsBounded;
  }

  const Key& witness() const {
    if (witnesses.empty())
      fail(ErrorKind::Internal, "verdict carries no witness");
    return witnesses.front();
  }

  std::string str() const;
};

const char* truth_name(Truth t);

// Conjunction: Fails dominates, then Unknown, then HoldsBounded.
Verdict conj(const Verdict& a, const Verdict& b);
Verdict conj(std::initializer_list<Verdict> vs);

}  // namespace vml

#endif  // VML_VERDICT_HPP
