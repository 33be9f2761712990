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

#include "vml/verdict.hpp"

namespace vml {

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::Holds: return "holds";
    case Truth::HoldsBounded: return "holds-bounded";
    case Truth::Fails: return "fails";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

std::string Verdict::str() const {
  std::string out = truth_name(truth);
  if (truth == Truth::Holds && !witnesses.empty())
    out += " (witness " + witnesses.front().str() + ")";
  if (truth == Truth::HoldsBounded)
    out += " (probed " + std::to_string(probed) + ")";
  if (!detail.empty()) out += ": " + detail;
  if (truth == Truth::Unknown)
    out += " [fuel " + std::to_string(fuel) + ", bound " +
           std::to_string(nat_bound) + "]";
  return out;
}

Verdict conj(const Verdict& a, const Verdict& b) {
  if (a.is_fails()) return a;
  if (b.is_fails()) return b;
  if (a.truth == Truth::Unknown) return a;
  if (b.truth == Truth::Unknown) return b;
  if (a.truth == Truth::HoldsBounded) return a;
  if (b.truth == Truth::HoldsBounded) return b;
  return a;  // both hold; keep the left witness if any
}

Verdict conj(std::initializer_list<Verdict> vs) {
  Verdict out = Verdict::holds();
  for (const Verdict& v : vs) out = conj(out, v);
  return out;
}

}  // namespace vml
