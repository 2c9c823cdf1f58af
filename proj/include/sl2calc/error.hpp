#pragma once

#include <stdexcept>
#include <string>

namespace sl2calc {

// Every failure mode the engine can report. Domain errors (anything except
// parse_error) map to CLI exit status 1; parse_error maps to 2.
enum class Errc {
  overflow,            // positive entries exceed the normalization target
  wrong_total,         // partition total does not match the group
  bad_parity,          // a bad-parity part has odd multiplicity
  illegal_pair,        // unsupported (source, target) group combination
  rank_mismatch,       // ranks of a legal pair do not line up
  rank_too_small,      // dual-pair lift with target rank below source
  undefined_case,      // formula leaves its domain and no stated branch applies
  hypothesis_violated, // input outside a bound's stated hypothesis
  bound_exceeded,      // enumeration request above the guard
  empty_odds,          // lift chain requested for an empty part list
  parity_mismatch,     // lift chain part count has the wrong parity
  unsupported_group,   // operation not defined for this group family
  inconsistent,        // recipe fails its internal invariants
  parse_error,         // malformed command-line expression
  internal,            // engine invariant breach (never expected)
};

const char* errc_name(Errc code);

class CalcError : public std::runtime_error {
 public:
  CalcError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw CalcError(code, message);
}

}  // namespace sl2calc
