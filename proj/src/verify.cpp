#include "sl2calc/verify.hpp"

#include <functional>
#include <numeric>

#include "sl2calc/calculus.hpp"
#include "sl2calc/decay.hpp"
#include "sl2calc/mutation.hpp"
#include "sl2calc/recipes.hpp"
#include "verify_internal.hpp"

namespace sl2calc::verify {

namespace {

// ---- enumeration catalogs ----------------------------------------------------

struct Catalog {
  std::vector<GroupKind> groups;
  std::vector<std::vector<SL2Type>> types;

  int add(GroupKind g) {
    groups.push_back(g);
    types.push_back(enumerate_types(g));
    return static_cast<int>(groups.size()) - 1;
  }
  int find(GroupKind g) const {
    for (size_t i = 0; i < groups.size(); ++i)
      if (groups[i] == g) return static_cast<int>(i);
    return -1;
  }
};

Catalog build_catalog(int max_total) {
  Catalog cat;
  for (int n = 1; n <= max_total; ++n) cat.add(gl(n));
  for (int r = 1; 2 * r + 1 <= max_total; ++r) cat.add(sp(r));
  for (int r = 1; 2 * r <= max_total; ++r) cat.add(o_even(r));
  for (int r = 1; 2 * r <= max_total; ++r) cat.add(so_odd(r));
  return cat;
}

bool is_clean_domain_error(const CalcError& e) {
  return e.code() == Errc::undefined_case || e.code() == Errc::overflow;
}

// ---- parity closure -----------------------------------------------------------

enum class Op {
  gl_restrict_op,
  gl_tensor_op,
  gl_induce_op,
  siegel_induce,
  induce_to_gl,
  induce_pair,
  siegel_restrict,
  from_gl_restrict,
  same_family_restrict,
  tensor,
  theta,
  conj_siegel_induce,
  conj_induce_to_gl,
  conj_induce_pair,
  conj_siegel_restrict,
  conj_from_gl,
  conj_restrict_orth,
  conj_tensor_op,
};

struct ClosureCall {
  Op op;
  int g1 = -1, i1 = -1;
  int g2 = -1, i2 = -1;
  int aux = 0;  // target rank, or Family as int, depending on op
};

std::string describe(const Catalog& cat, const ClosureCall& c) {
  const SL2Type& a = cat.types[static_cast<size_t>(c.g1)][static_cast<size_t>(c.i1)];
  auto second = [&]() -> const SL2Type& {
    return cat.types[static_cast<size_t>(c.g2)][static_cast<size_t>(c.i2)];
  };
  switch (c.op) {
    case Op::gl_restrict_op: return "restrict " + a.to_string() + " --to GL" + std::to_string(c.aux);
    case Op::gl_tensor_op: return "tensor " + a.to_string() + " " + second().to_string();
    case Op::gl_induce_op:
      return "induce " + a.to_string() + " " + second().to_string() + " --to GL" +
             std::to_string(a.group().rank + second().group().rank);
    case Op::siegel_induce:
      return "induce " + a.to_string() + " --to " +
             GroupKind{static_cast<Family>(c.aux), a.group().rank}.name();
    case Op::induce_to_gl:
      return "induce " + a.to_string() + " --to GL" + std::to_string(2 * a.group().rank);
    case Op::induce_pair:
      return "induce " + a.to_string() + " " + second().to_string() + " --to " +
             GroupKind{a.group().family, a.group().rank + second().group().rank}.name();
    case Op::siegel_restrict:
      return "restrict " + a.to_string() + " --to GL" + std::to_string(a.group().rank);
    case Op::from_gl_restrict:
      return "restrict " + a.to_string() + " --to " +
             GroupKind{static_cast<Family>(c.aux), a.group().rank / 2}.name();
    case Op::same_family_restrict:
      return "restrict " + a.to_string() + " --to " +
             GroupKind{a.group().family, c.aux}.name();
    case Op::tensor: return "tensor " + a.to_string() + " " + second().to_string();
    case Op::theta:
      return "theta-lift " + a.to_string() + " --to " +
             GroupKind{a.group().family == Family::Oeven ? Family::Sp : Family::Oeven, c.aux}
                 .name();
    case Op::conj_siegel_induce:
      return "induce " + a.to_string() + " --to SO" + std::to_string(2 * a.group().rank + 1);
    case Op::conj_induce_to_gl:
      return "induce " + a.to_string() + " --to GL" + std::to_string(2 * a.group().rank + 1);
    case Op::conj_induce_pair:
      return "induce " + a.to_string() + " " + second().to_string();
    case Op::conj_siegel_restrict:
      return "restrict " + a.to_string() + " --to GL" + std::to_string(a.group().rank);
    case Op::conj_from_gl:
      return "restrict " + a.to_string() + " --to SO" + std::to_string(a.group().rank);
    case Op::conj_restrict_orth:
      return "restrict " + a.to_string() + " --to " + orthogonal_of_size(c.aux).name();
    case Op::conj_tensor_op: return "tensor " + a.to_string() + " " + second().to_string();
  }
  return "?";
}

TypeResult invoke(const Catalog& cat, const ClosureCall& c) {
  const SL2Type& a = cat.types[static_cast<size_t>(c.g1)][static_cast<size_t>(c.i1)];
  auto second = [&]() -> const SL2Type& {
    return cat.types[static_cast<size_t>(c.g2)][static_cast<size_t>(c.i2)];
  };
  switch (c.op) {
    case Op::gl_restrict_op: return gl_restrict(a, c.aux);
    case Op::gl_tensor_op: return gl_tensor(a, second());
    case Op::gl_induce_op:
      return gl_induce_levi({a, second()}, a.group().rank + second().group().rank);
    case Op::siegel_induce: return classical_induce_siegel(a, static_cast<Family>(c.aux));
    case Op::induce_to_gl: return classical_induce_to_gl(a);
    case Op::induce_pair: return classical_induce_pair(a, second());
    case Op::siegel_restrict: return classical_restrict_siegel(a);
    case Op::from_gl_restrict: return classical_restrict_from_gl(a, static_cast<Family>(c.aux));
    case Op::same_family_restrict: return classical_restrict_same_family(a, c.aux);
    case Op::tensor: return classical_tensor(a, second());
    case Op::theta:
      return theta_lift_type(
          a, GroupKind{a.group().family == Family::Oeven ? Family::Sp : Family::Oeven, c.aux});
    case Op::conj_siegel_induce: return conj_induce_siegel(a);
    case Op::conj_induce_to_gl: return conj_induce_to_gl(a);
    case Op::conj_induce_pair: return conj_induce_pair(a, second());
    case Op::conj_siegel_restrict: return conj_restrict_siegel(a);
    case Op::conj_from_gl: return conj_restrict_from_gl(a);
    case Op::conj_restrict_orth: return conj_restrict_orthogonal(a, orthogonal_of_size(c.aux));
    case Op::conj_tensor_op: return conj_tensor(a, second());
  }
  fail(Errc::internal, "unreachable");
}

bool is_binary_tensor(Op op) {
  return op == Op::gl_tensor_op || op == Op::tensor || op == Op::conj_tensor_op;
}

Outcome closure_check(const Catalog& cat, const ClosureCall& c) {
  auto what = [&] { return describe(cat, c); };
  try {
    TypeResult res = invoke(cat, c);
    if (!is_valid_type(res.result.group(), res.result.partition())) {
      return fail_case(what(), "a parity-valid output type", res.result.to_string(), res.branch);
    }
    if (is_binary_tensor(c.op)) {
      ClosureCall swapped = c;
      std::swap(swapped.g1, swapped.g2);
      std::swap(swapped.i1, swapped.i2);
      TypeResult other = invoke(cat, swapped);
      if (other.result != res.result || other.branch != res.branch) {
        return fail_case(what(), "a commutative tensor including branch selection",
                         res.result.to_string() + "/" + res.branch + " vs " +
                             other.result.to_string() + "/" + other.branch,
                         res.branch);
      }
    }
    return pass();
  } catch (const CalcError& e) {
    if (is_clean_domain_error(e)) {
      if (is_binary_tensor(c.op)) {
        // The swapped call must fail the same way.
        ClosureCall swapped = c;
        std::swap(swapped.g1, swapped.g2);
        std::swap(swapped.i1, swapped.i2);
        try {
          TypeResult other = invoke(cat, swapped);
          return fail_case(what(), "a symmetric domain error", "swapped order returned " +
                                                                   other.result.to_string());
        } catch (const CalcError& e2) {
          if (e2.code() == e.code()) return pass();
          return fail_case(what(), std::string("error ") + errc_name(e.code()) + " in both orders",
                           errc_name(e2.code()));
        }
      }
      return pass();
    }
    return fail_case(what(), "a valid type or a clean domain error",
                     std::string(errc_name(e.code())) + ": " + e.what());
  }
}

std::vector<ClosureCall> closure_calls(const Catalog& cat, int max_total) {
  std::vector<ClosureCall> calls;
  auto types_of = [&](int g) { return static_cast<int>(cat.types[static_cast<size_t>(g)].size()); };

  for (int g = 0; g < static_cast<int>(cat.groups.size()); ++g) {
    GroupKind gk = cat.groups[static_cast<size_t>(g)];
    int nt = types_of(g);
    switch (gk.family) {
      case Family::GL: {
        for (int i = 0; i < nt; ++i) {
          for (int m = 1; m <= gk.rank; ++m)
            calls.push_back({Op::gl_restrict_op, g, i, -1, -1, m});
          for (int j = i; j < nt; ++j) calls.push_back({Op::gl_tensor_op, g, i, g, j, 0});
          if (2 * gk.rank + 1 <= max_total)
            calls.push_back({Op::siegel_induce, g, i, -1, -1, static_cast<int>(Family::Sp)});
          if (2 * gk.rank <= max_total) {
            calls.push_back({Op::siegel_induce, g, i, -1, -1, static_cast<int>(Family::Oeven)});
            calls.push_back({Op::conj_siegel_induce, g, i, -1, -1, 0});
          }
          if (gk.rank % 2 == 0 && gk.rank >= 2) {
            calls.push_back({Op::from_gl_restrict, g, i, -1, -1, static_cast<int>(Family::Sp)});
            calls.push_back({Op::from_gl_restrict, g, i, -1, -1, static_cast<int>(Family::Oeven)});
          }
          if (gk.rank % 2 == 1 && gk.rank >= 3)
            calls.push_back({Op::conj_from_gl, g, i, -1, -1, 0});
        }
        // Two-block Levi inductions into GL_{rank + other}.
        for (int g2 = 0; g2 < static_cast<int>(cat.groups.size()); ++g2) {
          GroupKind gk2 = cat.groups[static_cast<size_t>(g2)];
          if (gk2.family != Family::GL || gk.rank + gk2.rank > max_total || g2 < g) continue;
          for (int i = 0; i < nt; ++i)
            for (int j = 0; j < types_of(g2); ++j)
              calls.push_back({Op::gl_induce_op, g, i, g2, j, 0});
        }
        break;
      }
      case Family::Sp:
      case Family::Oeven: {
        bool is_o = gk.family == Family::Oeven;
        for (int i = 0; i < nt; ++i) {
          if (2 * gk.rank <= max_total) calls.push_back({Op::induce_to_gl, g, i, -1, -1, 0});
          calls.push_back({Op::siegel_restrict, g, i, -1, -1, 0});
          for (int m = 1; m < gk.rank; ++m)
            calls.push_back({Op::same_family_restrict, g, i, -1, -1, m});
          for (int j = i; j < nt; ++j) calls.push_back({Op::tensor, g, i, g, j, 0});
          if (is_o) {
            for (int n2 = gk.rank; 2 * n2 + 1 <= max_total; ++n2)
              calls.push_back({Op::theta, g, i, -1, -1, n2});
          } else {
            for (int n2 = gk.rank + 1; 2 * n2 <= max_total; ++n2)
              calls.push_back({Op::theta, g, i, -1, -1, n2});
          }
        }
        // Same-family pair inductions within the bound.
        for (int g2 = g; g2 < static_cast<int>(cat.groups.size()); ++g2) {
          GroupKind gk2 = cat.groups[static_cast<size_t>(g2)];
          if (gk2.family != gk.family) continue;
          int dst_total = GroupKind{gk.family, gk.rank + gk2.rank}.type_total();
          if (dst_total > max_total) continue;
          for (int i = 0; i < nt; ++i)
            for (int j = 0; j < types_of(g2); ++j)
              calls.push_back({Op::induce_pair, g, i, g2, j, 0});
        }
        break;
      }
      case Family::SOodd: {
        for (int i = 0; i < nt; ++i) {
          if (2 * gk.rank + 1 <= max_total) calls.push_back({Op::conj_induce_to_gl, g, i, -1, -1, 0});
          calls.push_back({Op::conj_siegel_restrict, g, i, -1, -1, 0});
          for (int j = i; j < nt; ++j) calls.push_back({Op::conj_tensor_op, g, i, g, j, 0});
        }
        break;
      }
    }
  }

  // Mixed-parity orthogonal pairs: inductions and restrictions through the
  // conjectural rules (at least one factor of odd size).
  for (int g = 0; g < static_cast<int>(cat.groups.size()); ++g) {
    GroupKind a = cat.groups[static_cast<size_t>(g)];
    if (!a.is_orthogonal()) continue;
    for (int g2 = g; g2 < static_cast<int>(cat.groups.size()); ++g2) {
      GroupKind b = cat.groups[static_cast<size_t>(g2)];
      if (!b.is_orthogonal()) continue;
      if (a.family != Family::SOodd && b.family != Family::SOodd) continue;
      GroupKind dst = orthogonal_of_size(a.size() + b.size());
      if (dst.type_total() > max_total) continue;
      for (int i = 0; i < types_of(g); ++i)
        for (int j = 0; j < types_of(g2); ++j)
          calls.push_back({Op::conj_induce_pair, g, i, g2, j, 0});
    }
    for (int g2 = 0; g2 < static_cast<int>(cat.groups.size()); ++g2) {
      GroupKind b = cat.groups[static_cast<size_t>(g2)];
      if (!b.is_orthogonal() || b.size() >= a.size()) continue;
      if (a.family != Family::SOodd && b.family != Family::SOodd) continue;
      for (int i = 0; i < types_of(g); ++i)
        calls.push_back({Op::conj_restrict_orth, g, i, -1, -1, b.size()});
    }
  }
  return calls;
}

}  // namespace

SuiteReport check_parity_closure(int max_total, RunMode mode) {
  Catalog cat = build_catalog(max_total);
  auto calls = closure_calls(cat, max_total);
  return run_items("parity-closure", calls,
                   [&](const ClosureCall& c) { return closure_check(cat, c); }, mode);
}

// ---- trivial laws --------------------------------------------------------------

namespace {

struct LawItem {
  enum Kind { tensor_law, restrict_law, gl_twist_law } kind = tensor_law;
  GroupKind g;
  int i = 0;  // type index for tensor/twist laws
  int m = 0;  // restriction target rank
};

Outcome law_check(const Catalog& cat, const LawItem& it) {
  if (it.kind == LawItem::restrict_law) {
    auto what = [&] {
      return "restrict " + trivial_type(it.g).to_string() + " --to " +
             GroupKind{it.g.family, it.m}.name();
    };
    try {
      TypeResult res = classical_restrict_same_family(trivial_type(it.g), it.m);
      SL2Type want = trivial_type(GroupKind{it.g.family, it.m});
      if (res.result != want)
        return fail_case(what(), want.to_string(), res.result.to_string(), res.branch);
      return pass();
    } catch (const std::exception& e) {
      return fail_case(what(), "the trivial type of the smaller group", e.what());
    }
  }

  int gi = cat.find(it.g);
  const SL2Type& t = cat.types[static_cast<size_t>(gi)][static_cast<size_t>(it.i)];
  SL2Type one = trivial_type(it.g);
  auto what = [&] { return "tensor " + one.to_string() + " " + t.to_string(); };
  if (it.kind == LawItem::tensor_law && it.g.family == Family::Oeven &&
      t.partition() != one.partition() &&
      t.partition().largest() > 2 * it.g.rank - 3) {
    return skipped();  // outside the law's stated domain
  }
  try {
    TypeResult left = it.kind == LawItem::gl_twist_law ? gl_tensor(one, t) : classical_tensor(one, t);
    TypeResult right = it.kind == LawItem::gl_twist_law ? gl_tensor(t, one) : classical_tensor(t, one);
    if (left.result.partition() != t.partition() || right.result.partition() != t.partition()) {
      return fail_case(what(), t.to_string(),
                       left.result.to_string() + " / " + right.result.to_string(), left.branch);
    }
    return pass();
  } catch (const std::exception& e) {
    return fail_case(what(), t.to_string(), e.what());
  }
}

}  // namespace

SuiteReport check_trivial_laws(int max_total, RunMode mode) {
  Catalog cat = build_catalog(max_total);
  std::vector<LawItem> items;
  for (int g = 0; g < static_cast<int>(cat.groups.size()); ++g) {
    GroupKind gk = cat.groups[static_cast<size_t>(g)];
    int nt = static_cast<int>(cat.types[static_cast<size_t>(g)].size());
    if (gk.family == Family::Sp || gk.family == Family::Oeven) {
      for (int i = 0; i < nt; ++i) items.push_back({LawItem::tensor_law, gk, i, 0});
      for (int m = 1; m < gk.rank; ++m) items.push_back({LawItem::restrict_law, gk, 0, m});
    } else if (gk.family == Family::GL) {
      for (int i = 0; i < nt; ++i) items.push_back({LawItem::gl_twist_law, gk, i, 0});
    }
  }
  return run_items("trivial-laws", items, [&](const LawItem& it) { return law_check(cat, it); },
                   mode);
}

// ---- transitivity ---------------------------------------------------------------

namespace {

struct TransItem {
  GroupKind g;
  int i = 0;
  int m = 0, k = 0;  // n > m > k
};

Outcome transitivity_check(const Catalog& cat, const TransItem& it) {
  int gi = cat.find(it.g);
  const SL2Type& t = cat.types[static_cast<size_t>(gi)][static_cast<size_t>(it.i)];
  auto what = [&] {
    return "restrict " + t.to_string() + " via rank " + std::to_string(it.m) + " to rank " +
           std::to_string(it.k);
  };
  auto step = [&](const SL2Type& s, int target) {
    return it.g.family == Family::GL ? gl_restrict(s, target)
                                     : classical_restrict_same_family(s, target);
  };
  try {
    TypeResult first = step(t, it.m);
    TypeResult second = step(first.result, it.k);
    TypeResult direct = step(t, it.k);
    if (first.branch != kGenericBranch || second.branch != kGenericBranch ||
        direct.branch != kGenericBranch) {
      return skipped();  // composition is asserted on all-generic paths only
    }
    if (second.result != direct.result) {
      return fail_case(what(), direct.result.to_string(), second.result.to_string(),
                       first.branch + ";" + second.branch + ";" + direct.branch);
    }
    return pass();
  } catch (const std::exception& e) {
    return fail_case(what(), "equal two-step and direct restrictions", e.what());
  }
}

}  // namespace

SuiteReport check_transitivity(int max_total, RunMode mode) {
  Catalog cat = build_catalog(max_total);
  std::vector<TransItem> items;
  for (int g = 0; g < static_cast<int>(cat.groups.size()); ++g) {
    GroupKind gk = cat.groups[static_cast<size_t>(g)];
    if (gk.family == Family::SOodd) continue;
    int nt = static_cast<int>(cat.types[static_cast<size_t>(g)].size());
    for (int m = 2; m < gk.rank; ++m)
      for (int k = 1; k < m; ++k)
        for (int i = 0; i < nt; ++i) items.push_back({gk, i, m, k});
  }
  return run_items("transitivity", items,
                   [&](const TransItem& it) { return transitivity_check(cat, it); }, mode);
}

// ---- decay oracle -----------------------------------------------------------------

Rational lp_threshold_bruteforce(const SL2Type& t) {
  if (t.group().family != Family::Sp || t.group().rank < 1)
    fail(Errc::unsupported_group, "brute-force threshold is for Sp");
  int m = t.group().rank;

  // Rebuild the exponent multiset directly from the parts.
  std::vector<Rational> exps;
  for (int part : t.partition().parts())
    for (int j = 0; j < part; ++j) exps.emplace_back(part - 1 - 2 * j, 2);
  std::sort(exps.begin(), exps.end(), [](const Rational& a, const Rational& b) { return b < a; });

  Rational best(2);
  for (int i = 1; i <= m; ++i) {
    Rational partial(0);
    for (int j = 0; j < i; ++j) partial += exps[static_cast<size_t>(j)];  // from scratch
    Rational pairing(0);
    for (int j = 1; j <= i; ++j) pairing += Rational(m - j + 1);
    Rational ratio = partial / pairing;
    if (!(ratio < Rational(1)))
      fail(Errc::hypothesis_violated, "exponent ratio reaches 1 (trivial type)");
    Rational candidate = Rational(2) / (Rational(1) - ratio);
    if (best < candidate) best = candidate;
  }
  return best;
}

namespace {

struct TypeItem {
  GroupKind g;
  int i = 0;
};

Outcome decay_oracle_check(const Catalog& cat, const TypeItem& it) {
  int gi = cat.find(it.g);
  const SL2Type& t = cat.types[static_cast<size_t>(gi)][static_cast<size_t>(it.i)];
  auto what = [&] { return "decay " + t.to_string(); };

  bool module_error = false, oracle_error = false;
  Rational module_value, oracle_value;
  try {
    module_value = lp_threshold_sp(t).p_threshold;
  } catch (const CalcError& e) {
    if (e.code() != Errc::hypothesis_violated)
      return fail_case(what(), "threshold or trivial-type error", e.what());
    module_error = true;
  }
  try {
    oracle_value = lp_threshold_bruteforce(t);
  } catch (const CalcError& e) {
    if (e.code() != Errc::hypothesis_violated)
      return fail_case(what(), "threshold or trivial-type error", e.what());
    oracle_error = true;
  }
  if (module_error != oracle_error) {
    return fail_case(what(), "both paths agreeing on whether a threshold exists",
                     module_error ? "module error only" : "oracle error only");
  }
  if (!module_error && module_value != oracle_value) {
    return fail_case(what(), oracle_value.to_string(), module_value.to_string());
  }
  return pass();
}

}  // namespace

SuiteReport check_decay_oracle(int max_total, RunMode mode) {
  Catalog cat = build_catalog(max_total);
  std::vector<TypeItem> items;
  for (int g = 0; g < static_cast<int>(cat.groups.size()); ++g) {
    GroupKind gk = cat.groups[static_cast<size_t>(g)];
    if (gk.family != Family::Sp) continue;
    int nt = static_cast<int>(cat.types[static_cast<size_t>(g)].size());
    for (int i = 0; i < nt; ++i) items.push_back({gk, i});
  }
  return run_items("decay-oracle", items,
                   [&](const TypeItem& it) { return decay_oracle_check(cat, it); }, mode);
}

// ---- recipe round trip ---------------------------------------------------------------

namespace {

Outcome roundtrip_check(const Catalog& cat, const TypeItem& it) {
  int gi = cat.find(it.g);
  const SL2Type& t = cat.types[static_cast<size_t>(gi)][static_cast<size_t>(it.i)];
  auto what = [&] { return "recipe " + t.to_string(); };
  try {
    RepRecipe r = build_recipe(t);
    SL2Type back = recipe_type(r);
    if (back != t) return fail_case(what(), t.to_string(), back.to_string());

    bool want_odd = it.g.family == Family::Sp;
    if ((r.distinct_odds.size() % 2 == 1) != want_odd)
      return fail_case(what(), "distinct-odd count parity matching the family",
                       std::to_string(r.distinct_odds.size()) + " parts");

    for (size_t s = 1; s < r.chain.size(); ++s) {
      if (r.chain[s].group.family == r.chain[s - 1].group.family)
        return fail_case(what(), "alternating chain families", r.chain[s].group.name());
      TypeResult lifted = theta_lift_type(r.chain[s - 1].type_after, r.chain[s].group);
      if (lifted.result != r.chain[s].type_after) {
        return fail_case(what(), r.chain[s].type_after.to_string(), lifted.result.to_string(),
                         "chain step " + std::to_string(s));
      }
    }
    if (!r.chain.empty() && !(r.chain.back().group == r.base))
      return fail_case(what(), "chain ending at the base group", r.chain.back().group.name());
    return pass();
  } catch (const std::exception& e) {
    return fail_case(what(), "a recipe evaluating back to the input", e.what());
  }
}

}  // namespace

SuiteReport check_recipe_roundtrip(int max_total, RunMode mode) {
  Catalog cat = build_catalog(max_total);
  std::vector<TypeItem> items;
  for (int g = 0; g < static_cast<int>(cat.groups.size()); ++g) {
    GroupKind gk = cat.groups[static_cast<size_t>(g)];
    if (gk.family != Family::Sp && gk.family != Family::Oeven) continue;
    int nt = static_cast<int>(cat.types[static_cast<size_t>(g)].size());
    for (int i = 0; i < nt; ++i) items.push_back({gk, i});
  }
  return run_items("recipe-roundtrip", items,
                   [&](const TypeItem& it) { return roundtrip_check(cat, it); }, mode);
}

}  // namespace sl2calc::verify
