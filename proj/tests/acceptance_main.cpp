// Acceptance suite: runs every acceptance criterion at its stated bound and
// tolerance, printing one pass/fail line per criterion. Exits non-zero when
// any criterion fails.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "sl2calc/calculus.hpp"
#include "sl2calc/decay.hpp"
#include "sl2calc/mutation.hpp"
#include "sl2calc/recipes.hpp"
#include "sl2calc/verify.hpp"

using namespace sl2calc;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

SL2Type mk(GroupKind g, std::vector<int> parts) {
  return SL2Type::make(g, Partition(std::move(parts)));
}

// 1. Bracket normalization of the worked sequence, under 1 ms.
void criterion_1() {
  Partition warmup = normalize({-3, -1, 0, 3, 5}, 10);
  auto t0 = std::chrono::steady_clock::now();
  Partition got = normalize({-3, -1, 0, 3, 5}, 10);
  double elapsed = ms_since(t0);
  bool ok = got == Partition({5, 3, 1, 1}) && warmup == got && elapsed < 1.0;
  std::ostringstream detail;
  detail << "got " << got.to_string() << " in " << elapsed << " ms";
  report(1, "golden normalization", ok, detail.str());
}

// 2. Decomposition of the worked Sp22 type.
void criterion_2() {
  auto [odds, doubled] = decompose_type(mk(sp(11), {5, 5, 5, 3, 2, 2, 1}));
  bool ok = odds == Partition({5, 3, 1}) && doubled == Partition({5, 2});
  report(2, "golden decomposition", ok, odds.to_string() + " + 2x" + doubled.to_string());
}

// 3. Exponent sequence of Sp10[7,2,2] and its threshold against the oracle.
void criterion_3() {
  SL2Type t = mk(sp(5), {7, 2, 2});
  ExpSequence exp = exp_sequence(t);
  ExpSequence want{{Rational(3), Rational(2), Rational(1), Rational(1, 2), Rational(1, 2)}};
  Rational p = lp_threshold_sp(t).p_threshold;
  Rational oracle = verify::lp_threshold_bruteforce(t);
  bool ok = exp == want && p == Rational(5) && p == oracle;
  report(3, "golden exponents and threshold", ok,
         "exp " + exp.to_string() + ", p " + p.to_string() + ", oracle " + oracle.to_string());
}

// 4. Tempered threshold exactly 2; the full-rank doubled-twos threshold is
// 2(m+1)/m for m in 2..10 (through the full type where one exists, i.e.
// even m, and through the exponent-level maximization for every m).
void criterion_4() {
  bool ok = true;
  std::string detail;
  for (int m = 2; m <= 10; ++m) {
    Rational tempered = lp_threshold_sp(tempered_type(sp(m))).p_threshold;
    if (tempered != Rational(2)) {
      ok = false;
      detail = "tempered Sp" + std::to_string(2 * m) + " gave " + tempered.to_string();
      break;
    }
    Rational want(2 * (m + 1), m);
    std::vector<Rational> halves(static_cast<size_t>(m), Rational(1, 2));
    if (lp_threshold_from_exp(halves) != want) {
      ok = false;
      detail = "exponent-level m=" + std::to_string(m);
      break;
    }
    if (m % 2 == 0) {
      std::vector<int> parts(static_cast<size_t>(m), 2);
      parts.push_back(1);
      if (lp_threshold_sp(mk(sp(m), parts)).p_threshold != want) {
        ok = false;
        detail = "full-type m=" + std::to_string(m);
        break;
      }
    }
  }
  report(4, "golden thresholds (tempered=2, full-rank 2(m+1)/m, m=2..10)", ok, detail);
}

void suite_criterion(int number, const std::string& name, const verify::SuiteReport& rep,
                     double budget_ms) {
  std::ostringstream detail;
  detail << rep.instances_checked << " checked, " << rep.skipped << " skipped, "
         << rep.failures.size() << " failures, " << rep.elapsed_ms << " ms";
  bool ok = rep.passed() && rep.elapsed_ms < budget_ms && rep.instances_checked > 0;
  if (!rep.failures.empty()) {
    const auto& f = rep.failures.front();
    detail << "; first: " << f.inputs << " expected " << f.expected << " got " << f.got;
  }
  report(number, name, ok, detail.str());
}

// 5-7. The law suites at their stated bounds and budgets.
void criteria_5_to_7() {
  suite_criterion(5, "trivial laws, type totals <= 13",
                  verify::check_trivial_laws(13, verify::RunMode::parallel), 10000.0);
  suite_criterion(6, "restriction transitivity, 2n <= 12",
                  verify::check_transitivity(13, verify::RunMode::parallel), 30000.0);
  suite_criterion(7, "parity closure, type totals <= 12",
                  verify::check_parity_closure(12, verify::RunMode::parallel), 60000.0);
}

// 8. Recipe round trip at totals <= 13, chain steps reproduced by the lift.
void criterion_8() {
  suite_criterion(8, "recipe round trip, type totals <= 13",
                  verify::check_recipe_roundtrip(13, verify::RunMode::parallel), 30000.0);
}

// 9. Enumeration counts against brute-force partition filtering, and oracle
// equality for every rank within the guard.
void criterion_9() {
  bool ok = enumerate_types(sp(1)).size() == 2 && enumerate_types(sp(2)).size() == 4 &&
            enumerate_types(o_even(2)).size() == 3;
  std::uint64_t compared = 0;
  std::string detail;
  for (int size = 1; size <= kEnumerationGuard && ok; ++size) {
    std::vector<GroupKind> groups;
    groups.push_back(gl(size));
    if (size % 2 == 1 && size >= 3) groups.push_back(sp((size - 1) / 2));
    if (size % 2 == 0) {
      groups.push_back(o_even(size / 2));
      groups.push_back(so_odd(size / 2));
    }
    for (GroupKind g : groups) {
      if (g.type_total() > kEnumerationGuard) continue;
      auto got = enumerate_types(g);
      auto want = oracle::valid_types(g);
      compared += want.size();
      if (got.size() != want.size()) {
        ok = false;
        detail = g.name() + " count " + std::to_string(got.size()) + " vs " +
                 std::to_string(want.size());
        break;
      }
      for (const auto& t : got) {
        if (want.count(t.partition().parts()) == 0) {
          ok = false;
          detail = g.name() + " lists " + t.to_string();
          break;
        }
      }
    }
  }
  if (detail.empty()) detail = std::to_string(compared) + " types compared across the guard";
  report(9, "enumeration counts match brute force", ok, detail);
}

// 10. Convergence predicate boundary cases.
void criterion_10() {
  bool ok = li_converges(DualPair::gl_gl, 4, 6, 2) && !li_converges(DualPair::gl_gl, 4, 6, 3) &&
            li_converges(DualPair::o_sp, 4, 6, 2) && !li_converges(DualPair::o_sp, 4, 6, 3) &&
            !li_converges(DualPair::sp_o, 4, 6, 2) && li_converges(DualPair::sp_o, 4, 6, 1);
  report(10, "convergence predicate truth table", ok);
}

// 11. Corrupting any single rule constant trips at least one suite.
void criterion_11() {
  verify::MutationReport rep = verify::mutation_self_test(9);
  std::ostringstream detail;
  detail << rep.outcomes.size() << " constants";
  for (const auto& o : rep.outcomes)
    if (o.failures == 0) detail << "; missed " << o.knob;
  if (rep.baseline_failures != 0) detail << "; baseline failures " << rep.baseline_failures;
  report(11, "mutation self-test", rep.passed(), detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criteria_5_to_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed" << std::endl;
  return 1;
}
