#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2calc/rational.hpp"
#include "sl2calc/sl2type.hpp"

namespace sl2calc::verify {

/// Every suite sweeps an enumerated instance space where each check is
/// independent and side-effect-free. `parallel` partitions the space across
/// OpenMP workers; `serial` is the reference loop kept for testing — the
/// two must produce identical reports.
enum class RunMode { serial, parallel };

struct Failure {
  std::uint64_t instance = 0;  // position in the enumeration order
  std::string inputs;          // reproduction data (CLI-style expressions)
  std::string expected;
  std::string got;
  std::string branch;          // branch trace of the rule applications
};

struct SuiteReport {
  std::string suite;
  std::uint64_t instances_checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Failure> failures;  // ordered by instance
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

// All suites take the largest type total to enumerate (the guard caps it).

/// Applies every calculus operation to every valid input (pair) and checks
/// that outputs validate or error cleanly; tensor instances also check
/// commutativity including branch selection.
SuiteReport check_parity_closure(int max_total, RunMode mode = RunMode::parallel);

/// Tensoring with the trivial type fixes every type (the even orthogonal
/// law on its stated domain, plus the forced trivial (x) trivial case),
/// and same-family restriction maps trivial to trivial.
SuiteReport check_trivial_laws(int max_total, RunMode mode = RunMode::parallel);

/// Same-family restriction composes: n -> m -> k equals n -> k whenever
/// every application takes the generic branch. Also checked for GL.
SuiteReport check_transitivity(int max_total, RunMode mode = RunMode::parallel);

/// The partial-sum threshold implementation agrees exactly with the
/// from-scratch maximization below on every symplectic type.
SuiteReport check_decay_oracle(int max_total, RunMode mode = RunMode::parallel);

/// recipe_type . build_recipe is the identity, and every chain step is
/// reproduced by the lift rule.
SuiteReport check_recipe_roundtrip(int max_total, RunMode mode = RunMode::parallel);

/// Frozen worked examples, one or more per rule branch and numeric table;
/// the backstop that makes every rule constant observable.
SuiteReport check_golden_values(RunMode mode = RunMode::serial);

std::vector<SuiteReport> run_all(int max_total, RunMode mode = RunMode::parallel);

/// Independent reference for the symplectic threshold: recomputes every
/// partial sum and pairing from scratch and maximizes naively. Raises
/// Errc::hypothesis_violated on the trivial type, like the module path.
Rational lp_threshold_bruteforce(const SL2Type& t);

struct MutationOutcome {
  std::string knob;
  std::uint64_t failures = 0;  // across all suites with this knob corrupted
};

struct MutationReport {
  std::uint64_t baseline_failures = 0;  // must be 0 for the test to mean anything
  std::vector<MutationOutcome> outcomes;

  bool passed() const;
};

/// Corrupts each rule constant in turn (offset +1) and reruns the suites;
/// every corruption must trip at least one failure.
MutationReport mutation_self_test(int max_total);

}  // namespace sl2calc::verify
