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

#ifndef VML_RULES_HPP
#define VML_RULES_HPP

// Soundness harness for the closure rules of the judgment calculus. Every
// rule in the catalog comes with a seeded instance generator that builds the
// rule's premise judgments and conclusion judgment over small finite
// contexts. Checking a rule runs many seeded instances through the semantic
// checker; an instance whose premises all pass but whose conclusion is
// refuted is a soundness failure. Undecided conclusions are tallied, never
// failures: the checker is a semi-decision procedure and rules that quantify
// over the naturals can only be probed.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "vml/interp.hpp"
#include "vml/syntax.hpp"

namespace vml {
namespace rules {

// One generated instance: the premise judgments and the conclusion judgment,
// all well-scoped by construction.
struct Instance {
  std::vector<syn::Expr> premises;
  syn::Expr conclusion;
};

using Rng = std::mt19937_64;

struct RuleCase {
  std::string name;
  std::function<Instance(Rng&)> generate;
};

// Aggregate over the seeded instances of one rule. An instance lands in
// exactly one bucket:
//   holds          every premise and the conclusion hold on a complete sweep
//   holds_bounded  everything passed but some verdict was probe-bounded
//   fails          premises passed, conclusion refuted (soundness failure)
//   unknown        premises passed, conclusion undecided
//   premise_fails  some premise was refuted or undecided
struct RuleReport {
  std::string rule;
  std::uint32_t holds = 0;
  std::uint32_t holds_bounded = 0;
  std::uint32_t fails = 0;
  std::uint32_t unknown = 0;
  std::uint32_t premise_fails = 0;
  std::vector<std::uint64_t> seeds;       // per-instance seeds, in run order
  std::vector<std::uint64_t> fail_seeds;  // seeds of the failing instances

  std::uint32_t total() const {
    return holds + holds_bounded + fails + unknown + premise_fails;
  }
  // A rule must pass somewhere with its premises established, otherwise the
  // run never exercised it.
  bool non_vacuous() const { return holds + holds_bounded > 0; }
};

struct Report {
  std::vector<RuleReport> rules;
  std::uint64_t seed = 0;
  std::uint32_t cases_per_rule = 0;
  double elapsed_seconds = 0.0;

  std::uint32_t soundness_failures() const;
  std::vector<std::string> vacuous_rules() const;
  bool ok() const;
};

// The full rule catalog; stable order, unique names. Built once.
const std::vector<RuleCase>& catalog();

// Deterministic: the same seed reproduces the same instance.
Instance gen_instance(const RuleCase& rule, std::uint64_t seed);

// Runs n_cases seeded instances of one rule. Instance seeds are derived from
// base_seed and the rule name, so reports are reproducible and independent
// of catalog order.
RuleReport check_rule(const RuleCase& rule, std::uint32_t n_cases,
                      const interp::CheckConfig& cfg,
                      std::uint64_t base_seed = 0);

// Runs the whole catalog. When inject_broken is set, a deliberately unsound
// extra rule is appended as a negative control; a healthy harness must
// report its failures.
Report run_suite(const interp::CheckConfig& cfg, std::uint64_t base_seed = 0,
                 std::uint32_t n_cases = 20, bool inject_broken = false);

// Human-readable table and machine-readable JSON for the same report.
std::string report_text(const Report& r);
std::string report_json(const Report& r);

}  // namespace rules
}  // namespace vml

#endif  // VML_RULES_HPP
