// Internal to the verification suites: the instance-sweep runner shared by
// the suite translation units. Not installed.
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "sl2calc/verify.hpp"

namespace sl2calc::verify {

struct Outcome {
  enum Kind { ok, skip, failed } kind = ok;
  Failure failure;
};

inline Outcome pass() { return Outcome{}; }
inline Outcome skipped() { return Outcome{Outcome::skip, {}}; }

inline Outcome fail_case(std::string inputs, std::string expected, std::string got,
                         std::string branch = "") {
  Outcome o;
  o.kind = Outcome::failed;
  o.failure.inputs = std::move(inputs);
  o.failure.expected = std::move(expected);
  o.failure.got = std::move(got);
  o.failure.branch = std::move(branch);
  return o;
}

// The per-instance kernel: checks are independent and side-effect-free, so
// the sweep parallelizes over the raw index space. The serial branch is the
// reference implementation; reports from both modes must match exactly
// (failures are reordered by instance index before merging).
template <class Item, class Fn>
SuiteReport run_items(std::string name, const std::vector<Item>& items, Fn&& fn, RunMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = std::move(name);
  const std::int64_t n = static_cast<std::int64_t>(items.size());
  std::vector<unsigned char> kinds(items.size(), Outcome::ok);
  std::vector<Failure> failures;

  auto one = [&](std::int64_t idx) -> Outcome {
    try {
      return fn(items[static_cast<size_t>(idx)]);
    } catch (const std::exception& e) {  // a check function must not throw
      return fail_case("instance " + std::to_string(idx), "no exception from the check itself",
                       e.what());
    }
  };

  if (mode == RunMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<Failure> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t idx = 0; idx < n; ++idx) {
        Outcome o = one(idx);
        kinds[static_cast<size_t>(idx)] = static_cast<unsigned char>(o.kind);
        if (o.kind == Outcome::failed) {
          o.failure.instance = static_cast<std::uint64_t>(idx);
          local.push_back(std::move(o.failure));
        }
      }
#pragma omp critical
      failures.insert(failures.end(), std::make_move_iterator(local.begin()),
                      std::make_move_iterator(local.end()));
    }
#else
    mode = RunMode::serial;
#endif
  }
  if (mode == RunMode::serial) {
    for (std::int64_t idx = 0; idx < n; ++idx) {
      Outcome o = one(idx);
      kinds[static_cast<size_t>(idx)] = static_cast<unsigned char>(o.kind);
      if (o.kind == Outcome::failed) {
        o.failure.instance = static_cast<std::uint64_t>(idx);
        failures.push_back(std::move(o.failure));
      }
    }
  }

  std::sort(failures.begin(), failures.end(),
            [](const Failure& a, const Failure& b) { return a.instance < b.instance; });
  rep.failures = std::move(failures);
  for (unsigned char k : kinds) {
    if (k == Outcome::skip)
      ++rep.skipped;
    else
      ++rep.instances_checked;
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace sl2calc::verify
