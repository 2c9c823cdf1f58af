// Frozen worked examples covering every rule branch and numeric table. The
// expected values are literals on purpose: they stay put when a constant in
// the engine is corrupted, which is what makes the mutation self-test bite.
#include <functional>

#include "sl2calc/calculus.hpp"
#include "sl2calc/decay.hpp"
#include "sl2calc/mutation.hpp"
#include "sl2calc/recipes.hpp"
#include "sl2calc/verify.hpp"
#include "verify_internal.hpp"

namespace sl2calc::verify {

namespace {

struct GoldenCase {
  std::string name;
  std::function<std::string()> run;  // empty string = pass, otherwise "expected vs got"
};

std::string diff(const std::string& expected, const std::string& got) {
  return "expected " + expected + ", got " + got;
}

// Rule application against a frozen output partition and branch.
GoldenCase tr(std::string name, std::function<TypeResult()> fn, std::vector<int> parts,
              std::string branch, bool conjectural = false) {
  return {std::move(name), [fn = std::move(fn), parts = std::move(parts),
                            branch = std::move(branch), conjectural]() -> std::string {
            TypeResult res = fn();
            Partition want(parts);
            if (res.result.partition() != want)
              return diff(want.to_string(), res.result.partition().to_string());
            if (res.branch != branch) return diff("branch " + branch, res.branch);
            if (res.conjectural != conjectural) return "conjectural flag mismatch";
            return "";
          }};
}

GoldenCase rational_eq(std::string name, std::function<Rational()> fn, Rational want) {
  return {std::move(name), [fn = std::move(fn), want]() -> std::string {
            Rational got = fn();
            if (got != want) return diff(want.to_string(), got.to_string());
            return "";
          }};
}

GoldenCase check(std::string name, std::function<std::string()> fn) {
  return {std::move(name), std::move(fn)};
}

SL2Type mk(GroupKind g, std::vector<int> parts) { return SL2Type::make(g, Partition(std::move(parts))); }

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;

  // -- normalization and shifting ---------------------------------------------
  cases.push_back(check("normalize pads with ones", [] {
    Partition got = normalize({-3, -1, 0, 3, 5}, 10);
    Partition want({5, 3, 1, 1});
    return got == want ? "" : diff(want.to_string(), got.to_string());
  }));
  cases.push_back(check("normalize overflow is an error", [] {
    try {
      normalize({5, 5}, 8);
      return std::string("expected an overflow error");
    } catch (const CalcError& e) {
      return e.code() == Errc::overflow ? std::string() : std::string("wrong error code");
    }
  }));
  cases.push_back(check("entry-wise shift renormalizes", [] {
    Partition got = shift(Partition({2, 2, 7}), 4, 7);
    Partition want({3, 1, 1, 1, 1});
    return got == want ? "" : diff(want.to_string(), got.to_string());
  }));

  // -- distinguished types ------------------------------------------------------
  cases.push_back(check("one-dimensional types", [] {
    if (trivial_type(sp(5)).partition() != Partition({11})) return std::string("Sp10 head");
    if (trivial_type(o_even(4)).partition() != Partition({7, 1})) return std::string("O8 head");
    if (trivial_type(gl(5)).partition() != Partition({5})) return std::string("GL5 head");
    if (trivial_type(so_odd(4)).partition() != Partition({8})) return std::string("SO9 head");
    return std::string();
  }));
  cases.push_back(check("tempered types are all ones", [] {
    if (tempered_type(gl(3)).partition() != Partition({1, 1, 1})) return std::string("GL3");
    if (tempered_type(sp(2)).partition() != Partition({1, 1, 1, 1, 1})) return std::string("Sp4");
    if (tempered_type(o_even(2)).partition() != Partition({1, 1, 1, 1})) return std::string("O4");
    return std::string();
  }));
  cases.push_back(check("enumeration counts", [] {
    if (enumerate_types(sp(1)).size() != 2) return std::string("Sp2 count");
    if (enumerate_types(sp(2)).size() != 4) return std::string("Sp4 count");
    if (enumerate_types(o_even(2)).size() != 3) return std::string("O4 count");
    return std::string();
  }));

  // -- general linear rules -----------------------------------------------------
  cases.push_back(tr("gl levi induction mixes blocks",
                     [] { return gl_induce_levi({mk(gl(2), {2}), mk(gl(3), {3})}, 5); },
                     {1, 1, 1, 1, 1}, kGenericBranch));
  cases.push_back(tr("gl levi induction single block is the identity",
                     [] { return gl_induce_levi({mk(gl(5), {5})}, 5); }, {5}, kGenericBranch));
  cases.push_back(tr("gl restriction of the trivial type",
                     [] { return gl_restrict(mk(gl(5), {5}), 3); }, {3}, kGenericBranch));
  cases.push_back(tr("gl restriction drops shifted parts",
                     [] { return gl_restrict(mk(gl(10), {5, 3, 1, 1}), 6); },
                     {1, 1, 1, 1, 1, 1}, kGenericBranch));
  cases.push_back(tr("gl tensor of one-dimensional types",
                     [] { return gl_tensor(mk(gl(4), {4}), mk(gl(4), {4})); }, {4},
                     kGenericBranch));
  cases.push_back(tr("gl tensor of tempered types",
                     [] { return gl_tensor(mk(gl(3), {1, 1, 1}), mk(gl(3), {1, 1, 1})); },
                     {1, 1, 1}, kGenericBranch));

  // -- Siegel induction ----------------------------------------------------------
  cases.push_back(tr("siegel induction is tempered",
                     [] { return classical_induce_siegel(mk(gl(2), {1, 1}), Family::Sp); },
                     {1, 1, 1, 1, 1}, kGenericBranch));
  cases.push_back(tr("siegel induction of a character into even O, odd rank",
                     [] { return classical_induce_siegel(mk(gl(3), {3}), Family::Oeven); },
                     {2, 2, 1, 1}, "exceptional:one-dimensional"));
  cases.push_back(tr("siegel induction of a character into even O, even rank",
                     [] { return classical_induce_siegel(mk(gl(4), {4}), Family::Oeven); },
                     {2, 2, 2, 2}, "exceptional:one-dimensional"));

  // -- induction up to GL ----------------------------------------------------------
  cases.push_back(tr("induction to gl is tempered",
                     [] { return classical_induce_to_gl(mk(o_even(2), {3, 1})); }, {1, 1, 1, 1},
                     kGenericBranch));
  cases.push_back(tr("induction of a symplectic character to gl",
                     [] { return classical_induce_to_gl(mk(sp(2), {5})); }, {2, 2},
                     "exceptional:one-dimensional"));

  // -- pair induction ---------------------------------------------------------------
  cases.push_back(tr("pair induction shifts the larger factor",
                     [] {
                       return classical_induce_pair(mk(sp(1), {1, 1, 1}), mk(sp(3), {5, 1, 1}));
                     },
                     {3, 1, 1, 1, 1, 1, 1}, kGenericBranch));
  cases.push_back(tr("pair induction of two symplectic characters",
                     [] { return classical_induce_pair(mk(sp(1), {3}), mk(sp(2), {5})); },
                     {3, 2, 2}, "exceptional:pair-of-characters"));

  // -- Siegel restriction --------------------------------------------------------------
  cases.push_back(tr("siegel restriction of the trivial symplectic type",
                     [] { return classical_restrict_siegel(mk(sp(5), {11})); }, {5},
                     kGenericBranch));
  cases.push_back(tr("siegel restriction, two odd parts",
                     [] { return classical_restrict_siegel(mk(o_even(4), {5, 3})); }, {2, 2},
                     "exceptional:two-part-odd"));
  cases.push_back(tr("siegel restriction, equal even parts",
                     [] { return classical_restrict_siegel(mk(o_even(4), {4, 4})); }, {2, 2},
                     "exceptional:two-part-even"));

  // -- restriction from GL ----------------------------------------------------------------
  cases.push_back(tr("restriction from gl, single part",
                     [] { return classical_restrict_from_gl(mk(gl(6), {6}), Family::Oeven); },
                     {5, 1}, kGenericBranch));
  cases.push_back(tr("restriction from gl to sp, two even parts",
                     [] { return classical_restrict_from_gl(mk(gl(8), {6, 2}), Family::Sp); },
                     {5, 2, 2}, "exceptional:two-part-even"));
  cases.push_back(tr("restriction from gl to sp, two odd parts",
                     [] { return classical_restrict_from_gl(mk(gl(8), {5, 3}), Family::Sp); },
                     {3, 2, 2, 1, 1}, "exceptional:two-part-odd"));

  // -- same-family restriction ----------------------------------------------------------
  cases.push_back(tr("same-family restriction renormalizes",
                     [] { return classical_restrict_same_family(mk(sp(5), {7, 2, 2}), 3); },
                     {3, 1, 1, 1, 1}, kGenericBranch));
  cases.push_back(tr("same-family restriction keeps trivial trivial",
                     [] { return classical_restrict_same_family(mk(o_even(4), {7, 1}), 2); },
                     {3, 1}, kGenericBranch));

  // -- classical tensor --------------------------------------------------------------------
  cases.push_back(tr("tensor with the trivial symplectic type",
                     [] { return classical_tensor(mk(sp(3), {7}), mk(sp(3), {3, 2, 2})); },
                     {3, 2, 2}, kGenericBranch));
  cases.push_back(tr("symplectic tensor washes out",
                     [] { return classical_tensor(mk(sp(3), {5, 1, 1}), mk(sp(3), {3, 2, 2})); },
                     {1, 1, 1, 1, 1, 1, 1}, kGenericBranch));
  cases.push_back(tr("even orthogonal tensor, two-part factors",
                     [] { return classical_tensor(mk(o_even(4), {5, 3}), mk(o_even(4), {5, 3})); },
                     {3, 2, 2, 1}, "exceptional:two-part-odd"));
  cases.push_back(tr("even orthogonal trivial pair is forced",
                     [] { return classical_tensor(mk(o_even(3), {5, 1}), mk(o_even(3), {5, 1})); },
                     {5, 1}, "exceptional:trivial-pair"));

  // -- theta lifts ------------------------------------------------------------------------------
  cases.push_back(tr("lift from even O appends an odd part",
                     [] { return theta_lift_type(mk(o_even(2), {3, 1}), sp(4)); }, {5, 3, 1},
                     kGenericBranch));
  cases.push_back(tr("lift from sp appends an odd part",
                     [] { return theta_lift_type(mk(sp(1), {3}), o_even(4)); }, {5, 3},
                     kGenericBranch));
  cases.push_back(tr("lift from the trivial-group marker",
                     [] { return theta_lift_type(mk(sp(0), {1}), o_even(2)); }, {3, 1},
                     kGenericBranch));
  cases.push_back(tr("lift reaching the worked exponent example",
                     [] { return theta_lift_type(mk(o_even(2), {2, 2}), sp(5)); }, {7, 2, 2},
                     kGenericBranch));

  // -- odd orthogonal rules (conjectural) ------------------------------------------------------
  cases.push_back(tr("odd orthogonal siegel induction",
                     [] { return conj_induce_siegel(mk(gl(2), {2})); }, {1, 1, 1, 1},
                     kGenericBranch, true));
  cases.push_back(tr("odd orthogonal induction to gl",
                     [] { return conj_induce_to_gl(mk(so_odd(2), {2, 2})); }, {1, 1, 1, 1, 1},
                     kGenericBranch, true));
  cases.push_back(tr("orthogonal pair induction across parities",
                     [] { return conj_induce_pair(mk(so_odd(1), {2}), mk(o_even(4), {7, 1})); },
                     {4, 1, 1, 1, 1, 1, 1}, kGenericBranch, true));
  cases.push_back(tr("odd orthogonal siegel restriction",
                     [] { return conj_restrict_siegel(mk(so_odd(2), {4})); }, {2},
                     kGenericBranch, true));
  cases.push_back(tr("restriction from gl to an odd orthogonal group",
                     [] { return conj_restrict_from_gl(mk(gl(5), {5})); }, {4}, kGenericBranch,
                     true));
  cases.push_back(tr("orthogonal restriction, odd to odd",
                     [] { return conj_restrict_orthogonal(mk(so_odd(3), {3, 3}), so_odd(2)); },
                     {1, 1, 1, 1}, kGenericBranch, true));
  cases.push_back(tr("orthogonal restriction, even to odd",
                     [] { return conj_restrict_orthogonal(mk(o_even(4), {5, 3}), so_odd(2)); },
                     {2, 1, 1}, kGenericBranch, true));
  cases.push_back(tr("odd orthogonal tensor",
                     [] { return conj_tensor(mk(so_odd(2), {4}), mk(so_odd(2), {2, 2})); },
                     {2, 2}, kGenericBranch, true));

  // -- exponent sequences and thresholds ---------------------------------------------------------
  cases.push_back(check("exponent sequence of the worked example", [] {
    ExpSequence got = exp_sequence(mk(sp(5), {7, 2, 2}));
    ExpSequence want{{Rational(3), Rational(2), Rational(1), Rational(1, 2), Rational(1, 2)}};
    return got == want ? "" : diff(want.to_string(), got.to_string());
  }));
  cases.push_back(check("exponent sequence of a tempered type", [] {
    ExpSequence got = exp_sequence(mk(sp(3), {1, 1, 1, 1, 1, 1, 1}));
    ExpSequence want{{Rational(0), Rational(0), Rational(0)}};
    return got == want ? "" : diff(want.to_string(), got.to_string());
  }));
  cases.push_back(check("exponent sequence truncates to the rank", [] {
    ExpSequence got = exp_sequence(mk(sp(3), {7}));
    ExpSequence want{{Rational(3), Rational(2), Rational(1)}};
    return got == want ? "" : diff(want.to_string(), got.to_string());
  }));
  cases.push_back(rational_eq("tempered threshold is 2",
                              [] { return lp_threshold_sp(mk(sp(3), {1, 1, 1, 1, 1, 1, 1})).p_threshold; },
                              Rational(2)));
  cases.push_back(rational_eq("threshold of the worked example is 5",
                              [] { return lp_threshold_sp(mk(sp(5), {7, 2, 2})).p_threshold; },
                              Rational(5)));
  cases.push_back(rational_eq("full-rank doubled-twos threshold",
                              [] { return lp_threshold_sp(mk(sp(4), {2, 2, 2, 2, 1})).p_threshold; },
                              Rational(5, 2)));

  // -- the decay table -----------------------------------------------------------------------------
  cases.push_back(rational_eq("table: even O, largest part 2",
                              [] {
                                return decay_q_table(mk(o_even(4), {2, 2, 1, 1, 1, 1})).p_threshold;
                              },
                              Rational(6)));
  cases.push_back(rational_eq("table: even O, largest part odd",
                              [] {
                                return decay_q_table(mk(o_even(5), {3, 1, 1, 1, 1, 1, 1, 1})).p_threshold;
                              },
                              Rational(8)));
  cases.push_back(rational_eq("table: sp, largest part 2",
                              [] { return decay_q_table(mk(sp(4), {2, 2, 1, 1, 1, 1, 1})).p_threshold; },
                              Rational(4)));
  cases.push_back(rational_eq("table: sp, largest part odd",
                              [] { return decay_q_table(mk(sp(5), {7, 2, 2})).p_threshold; },
                              Rational(10)));

  // -- lift bounds, convergence, margins -----------------------------------------------------------
  cases.push_back(check("lift decay bound", [] {
    DecayBound b = theta_p_bound(Family::Oeven, 2, 4);
    if (b.p_raw != Rational(4)) return diff("4", b.p_raw.to_string());
    DecayBound s = theta_p_bound(Family::Sp, 2, 5);
    if (s.p_raw != Rational(4)) return diff("4", s.p_raw.to_string());
    DecayBound floor = theta_p_bound(Family::Oeven, 3, 3);
    if (floor.p_raw != Rational(2) || floor.p_threshold != Rational(2))
      return diff("2", floor.p_threshold.to_string());
    return std::string();
  }));
  cases.push_back(check("lift bound matches the worked threshold", [] {
    // O4[2,2] lifts to Sp10[7,2,2]; the direct threshold, the lift bound
    // and the table at delta = 2 all give 5.
    Rational direct = lp_threshold_sp(mk(sp(5), {7, 2, 2})).p_threshold;
    Rational lift = theta_p_bound(Family::Oeven, 2, 5).p_raw;
    Rational table = decay_q_table(mk(sp(5), {7, 2, 2}), Rational(2)).p_threshold;
    if (direct != Rational(5)) return diff("5", direct.to_string());
    if (lift != direct) return diff(direct.to_string(), lift.to_string());
    if (table != direct) return diff(direct.to_string(), table.to_string());
    return std::string();
  }));
  cases.push_back(check("convergence truth table", [] {
    if (!li_converges(DualPair::gl_gl, 3, 4, 1)) return std::string("gl at the boundary");
    if (li_converges(DualPair::gl_gl, 3, 4, 2)) return std::string("gl past the boundary");
    if (!li_converges(DualPair::o_sp, 4, 6, 2)) return std::string("o_sp at the boundary");
    if (li_converges(DualPair::o_sp, 4, 6, 3)) return std::string("o_sp past the boundary");
    if (li_converges(DualPair::sp_o, 4, 6, 2)) return std::string("sp_o needs strictness");
    if (!li_converges(DualPair::sp_o, 4, 6, 1)) return std::string("sp_o strict case");
    return std::string();
  }));
  cases.push_back(rational_eq("generic margin",
                              [] { return ramanujan_margin(5, RamanujanCase::lambda2_generic); },
                              Rational(7, 10)));
  cases.push_back(rational_eq("boundary margin",
                              [] { return ramanujan_margin(5, RamanujanCase::lambda2_boundary); },
                              Rational(1, 10)));

  // -- decomposition, chains, recipes ---------------------------------------------------------------
  cases.push_back(check("decomposition of the worked type", [] {
    auto [odds, doubled] = decompose_type(mk(sp(11), {5, 5, 5, 3, 2, 2, 1}));
    if (odds != Partition({5, 3, 1})) return diff("[5,3,1]", odds.to_string());
    if (doubled != Partition({5, 2})) return diff("[5,2]", doubled.to_string());
    return std::string();
  }));
  cases.push_back(check("decomposition of doubled evens", [] {
    auto [odds, doubled] = decompose_type(mk(o_even(4), {2, 2, 2, 2}));
    if (!odds.empty()) return diff("[]", odds.to_string());
    if (doubled != Partition({2, 2})) return diff("[2,2]", doubled.to_string());
    return std::string();
  }));
  cases.push_back(check("chain seeded at an even orthogonal character", [] {
    auto chain = theta_chain(Family::Sp, {1, 3, 5});
    if (chain.size() != 2) return std::string("length");
    if (!(chain[0].group == o_even(2)) || chain[0].type_after.partition() != Partition({3, 1}))
      return std::string("first step");
    if (!(chain[1].group == sp(4)) || chain[1].type_after.partition() != Partition({5, 3, 1}))
      return std::string("second step");
    return std::string();
  }));
  cases.push_back(check("chain seeded at a symplectic character", [] {
    auto chain = theta_chain(Family::Sp, {7});
    if (chain.size() != 1) return std::string("length");
    if (!(chain[0].group == sp(3)) || chain[0].type_after.partition() != Partition({7}))
      return std::string("seed");
    return std::string();
  }));
  cases.push_back(check("chain into an even orthogonal target", [] {
    auto chain = theta_chain(Family::Oeven, {3, 5});
    if (chain.size() != 2) return std::string("length");
    if (!(chain[0].group == sp(1)) || chain[0].type_after.partition() != Partition({3}))
      return std::string("seed");
    if (!(chain[1].group == o_even(4)) || chain[1].type_after.partition() != Partition({5, 3}))
      return std::string("lift step");
    return std::string();
  }));
  cases.push_back(check("recipe for the worked type", [] {
    RepRecipe r = build_recipe(mk(sp(11), {5, 5, 5, 3, 2, 2, 1}));
    if (!(r.base == sp(4))) return std::string("base " + r.base.name());
    if (r.levi_blocks != std::vector<int>{5, 2}) return std::string("levi blocks");
    if (r.chain.empty() || r.chain.back().type_after.partition() != Partition({5, 3, 1}))
      return std::string("chain top");
    return std::string();
  }));
  // Cross-rule spot check, recorded at small rank: lifting and then
  // restricting back down the same family lands on these frozen types.
  cases.push_back(check("lift then same-family restriction, recorded", [] {
    TypeResult lifted = theta_lift_type(mk(o_even(2), {3, 1}), sp(4));
    if (lifted.result.partition() != Partition({5, 3, 1}))
      return diff("[5,3,1]", lifted.result.partition().to_string());
    TypeResult back = classical_restrict_same_family(lifted.result, 2);
    if (back.result.partition() != Partition({1, 1, 1, 1, 1}))
      return diff("[1,1,1,1,1]", back.result.partition().to_string());

    TypeResult lifted2 = theta_lift_type(mk(o_even(2), {2, 2}), sp(5));
    TypeResult back2 = classical_restrict_same_family(lifted2.result, 3);
    if (back2.result.partition() != Partition({3, 1, 1, 1, 1}))
      return diff("[3,1,1,1,1]", back2.result.partition().to_string());
    return std::string();
  }));

  cases.push_back(check("levi-only recipe evaluation", [] {
    RepRecipe r;
    r.target = sp(2);
    r.base = sp(0);
    r.levi_blocks = {2};
    r.distinct_odds = Partition({1});
    r.doubled = Partition({2});
    SL2Type got = recipe_type(r);
    Partition want({2, 2, 1});
    return got.partition() == want ? "" : diff(want.to_string(), got.partition().to_string());
  }));

  return cases;
}

}  // namespace

SuiteReport check_golden_values(RunMode mode) {
  std::vector<GoldenCase> cases = golden_cases();
  return run_items("golden-values", cases,
                   [](const GoldenCase& c) {
                     std::string err = c.run();
                     if (err.empty()) return pass();
                     return fail_case(c.name, "the frozen value", err);
                   },
                   mode);
}

std::vector<SuiteReport> run_all(int max_total, RunMode mode) {
  std::vector<SuiteReport> out;
  out.push_back(check_golden_values(mode));
  out.push_back(check_parity_closure(max_total, mode));
  out.push_back(check_trivial_laws(max_total, mode));
  out.push_back(check_transitivity(max_total, mode));
  out.push_back(check_decay_oracle(max_total, mode));
  out.push_back(check_recipe_roundtrip(max_total, mode));
  return out;
}

bool MutationReport::passed() const {
  if (baseline_failures != 0) return false;
  for (const auto& o : outcomes)
    if (o.failures == 0) return false;
  return !outcomes.empty();
}

MutationReport mutation_self_test(int max_total) {
  mutation::clear_all();
  auto total_failures = [&]() {
    std::uint64_t total = 0;
    for (const auto& rep : run_all(max_total, RunMode::serial)) total += rep.failures.size();
    return total;
  };
  MutationReport report;
  report.baseline_failures = total_failures();
  for (int k = 0; k < mutation::knob_count(); ++k) {
    auto knob = static_cast<mutation::Knob>(k);
    mutation::set(knob, 1);
    report.outcomes.push_back({mutation::knob_name(knob), total_failures()});
    mutation::clear_all();
  }
  return report;
}

}  // namespace sl2calc::verify
