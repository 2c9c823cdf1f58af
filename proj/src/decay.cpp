#include "sl2calc/decay.hpp"

#include <algorithm>

#include "sl2calc/mutation.hpp"

namespace sl2calc {

namespace {

using mutation::Knob;
using mutation::offset;

void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

GroupKind even_rank_group(const SL2Type& t, const char* what) {
  GroupKind g = t.group();
  if ((g.family != Family::Sp && g.family != Family::Oeven) || g.rank < 1) {
    fail(Errc::unsupported_group,
         std::string(what) + " is defined for Sp and even O of rank >= 1, got " + g.name());
  }
  return g;
}

}  // namespace

std::string ExpSequence::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].to_string();
  }
  out += ')';
  return out;
}

ExpSequence exp_sequence(const SL2Type& t) {
  GroupKind g = even_rank_group(t, "the exponent sequence");
  int m = g.rank;
  std::vector<Rational> all;
  all.reserve(static_cast<size_t>(g.type_total()));
  for (int part : t.partition().parts()) {
    // (part-1)/2, (part-3)/2, ..., -(part-1)/2 — `part` entries of step -1.
    int top = part - 1 + offset(Knob::exp_entry);
    for (int j = 0; j < part; ++j) all.emplace_back(top - 2 * j, 2);
  }
  std::sort(all.begin(), all.end(), [](const Rational& a, const Rational& b) { return b < a; });
  all.resize(static_cast<size_t>(m));
  return ExpSequence{std::move(all)};
}

Rational lp_threshold_from_exp(const std::vector<Rational>& exp) {
  int m = static_cast<int>(exp.size());
  require(m >= 1, Errc::hypothesis_violated, "empty exponent sequence");
  Rational best(2);
  Rational partial(0);
  for (int i = 1; i <= m; ++i) {
    partial += exp[static_cast<size_t>(i - 1)];
    Rational rho_pairing(static_cast<std::int64_t>(i) * m - static_cast<std::int64_t>(i) * (i - 1) / 2 +
                         offset(Knob::rho_pairing));
    Rational ratio = partial / rho_pairing;
    require(ratio < Rational(1), Errc::hypothesis_violated,
            "exponent ratio reaches 1 (no L^p decay; trivial type)");
    Rational candidate = Rational(2) / (Rational(1) - ratio);
    if (best < candidate) best = candidate;
  }
  return best;
}

DecayBound lp_threshold_sp(const SL2Type& t) {
  require(t.group().family == Family::Sp && t.group().rank >= 1, Errc::unsupported_group,
          "the pairing criterion is computed for Sp only, got " + t.group().name());
  Rational p = lp_threshold_from_exp(exp_sequence(t).entries);
  return DecayBound{p, Rational(2) / p, p, "pairing-criterion"};
}

DecayBound decay_q_table(const SL2Type& t, const Rational& delta) {
  GroupKind g = even_rank_group(t, "the decay table");
  int m = g.rank;
  require(m >= 2, Errc::hypothesis_violated, "the decay table needs rank >= 2");
  require(t.partition() != trivial_type(g).partition(), Errc::hypothesis_violated,
          "the decay table excludes the trivial type");
  require(!(delta < Rational(0)), Errc::hypothesis_violated, "delta must be >= 0");
  for (const auto& [value, mult] : t.partition().multiplicities()) {
    require(value <= 2 || mult == 1, Errc::hypothesis_violated,
            "parts greater than 2 must be distinct; " + std::to_string(value) + " repeats");
  }
  int lambda = t.partition().largest();
  require(lambda == 2 || lambda % 2 == 1, Errc::hypothesis_violated,
          "largest part must be 2 or odd, got " + std::to_string(lambda));

  Rational numerator, denominator;
  if (g.family == Family::Oeven && lambda == 2) {
    numerator = Rational(2 * m - 2);
    denominator = Rational(m - 3 + offset(Knob::q_table_o_two)) + delta;
  } else if (g.family == Family::Oeven) {
    numerator = Rational(2 * (2 * m - 2));
    denominator = Rational(2 * m - 5 - lambda + offset(Knob::q_table_o_odd)) + delta;
  } else if (lambda == 2) {
    numerator = Rational(2 * m);
    denominator = Rational(m - 2 + offset(Knob::q_table_sp_two)) + delta;
  } else {
    numerator = Rational(4 * m);
    denominator = Rational(2 * m - 1 - lambda + offset(Knob::q_table_sp_odd)) + delta;
  }
  require(Rational(0) < denominator, Errc::hypothesis_violated,
          "the table bound is vacuous here; a larger delta is required");
  Rational q = numerator / denominator;
  Rational clamped = q < Rational(2) ? Rational(2) : q;  // tempered floor
  return DecayBound{clamped, Rational(2) / clamped, q, "decay-table"};
}

DecayBound theta_p_bound(Family h_family, int m, int n) {
  require(h_family == Family::Sp || h_family == Family::Oeven, Errc::unsupported_group,
          "lift bound is stated for Sp and even O sources");
  require(m >= 1 && n >= m, Errc::rank_too_small, "lift bound needs 1 <= m <= n");
  int e = h_family == Family::Sp ? 1 : 0;
  Rational raw(2 * n - 2 * e + offset(Knob::theta_p_bound), m);
  Rational p = raw < Rational(2) ? Rational(2) : raw;
  return DecayBound{p, Rational(2) / p, raw, "theta-lift-bound"};
}

bool li_converges(DualPair pair, int m, int n, int lambda) {
  require(m >= 1 && n >= 1 && lambda >= 1, Errc::illegal_pair,
          "convergence predicate needs positive sizes");
  if (pair != DualPair::gl_gl) {
    require(m % 2 == 0 && n % 2 == 0, Errc::illegal_pair,
            "classical dual pairs need even group sizes");
  }
  if (pair == DualPair::sp_o) {
    return m + lambda <= n - 1 + offset(Knob::li_sp_margin);
  }
  return m + lambda <= n;
}

Rational ramanujan_margin(int m, RamanujanCase which) {
  require(m >= 2, Errc::hypothesis_violated, "margin needs rank >= 2");
  if (which == RamanujanCase::lambda2_generic) {
    // 1/2 + 1/m
    return Rational(m + 2 + offset(Knob::ramanujan_generic), 2 * m);
  }
  return Rational(1, 2 * m + offset(Knob::ramanujan_boundary));
}

}  // namespace sl2calc
