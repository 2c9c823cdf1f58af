#pragma once

#include <json.hpp>

#include "sl2calc/verify.hpp"

namespace sl2calc::verify {

/// Schema: {suite, instances_checked, skipped, failures:[{instance, inputs,
/// expected, got, branch}], elapsed_ms}. Deterministic apart from elapsed_ms.
inline nlohmann::json report_to_json(const SuiteReport& rep) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"instance", f.instance},
                        {"inputs", f.inputs},
                        {"expected", f.expected},
                        {"got", f.got},
                        {"branch", f.branch}});
  }
  return nlohmann::json{{"suite", rep.suite},
                        {"instances_checked", rep.instances_checked},
                        {"skipped", rep.skipped},
                        {"failures", failures},
                        {"elapsed_ms", rep.elapsed_ms}};
}

inline nlohmann::json mutation_report_to_json(const MutationReport& rep) {
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : rep.outcomes) outcomes.push_back({{"knob", o.knob}, {"failures", o.failures}});
  return nlohmann::json{{"baseline_failures", rep.baseline_failures},
                        {"outcomes", outcomes},
                        {"passed", rep.passed()}};
}

}  // namespace sl2calc::verify
