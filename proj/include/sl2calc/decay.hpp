#pragma once

#include <string>
#include <vector>

#include "sl2calc/rational.hpp"
#include "sl2calc/sl2type.hpp"

namespace sl2calc {

/// Leading-exponent sequence of a type: the sorted concatenation of the
/// arithmetic progressions (p-1)/2, (p-3)/2, ..., -(p-1)/2 over the parts,
/// truncated to the first `rank` entries. Non-increasing by construction.
struct ExpSequence {
  std::vector<Rational> entries;

  bool operator==(const ExpSequence&) const = default;
  std::string to_string() const;
};

/// A matrix-coefficient decay statement: coefficients lie in L^p for every
/// p > p_threshold, equivalently are bounded by a multiple of
/// Xi^(2/p_threshold). Thresholds are open bounds stored as the infimum and
/// never drop below the tempered floor of 2; `p_raw` keeps the unclamped
/// formula value.
struct DecayBound {
  Rational p_threshold;
  Rational xi_exponent;
  Rational p_raw;
  std::string source;
};

/// Exponent sequence for a type on Sp_{2m} or O_{2m} (rank >= 1).
ExpSequence exp_sequence(const SL2Type& t);

/// L^p threshold for a symplectic type via the pairing criterion: with
/// partial sums s_i of the exponents and <rho,w_i> = i*m - i*(i-1)/2, the
/// threshold is max_i 2/(1 - s_i/<rho,w_i>). Requires every ratio < 1,
/// which fails exactly for the trivial type (no L^p decay at all); that
/// case raises Errc::hypothesis_violated.
DecayBound lp_threshold_sp(const SL2Type& t);

/// Same maximization from a raw exponent sequence of length m.
Rational lp_threshold_from_exp(const std::vector<Rational>& exp);

/// Threshold table for Sp_{2m}/O_{2m} under the hypothesis: type nontrivial,
/// m >= 2, all parts > 2 distinct, largest part lambda either 2 or odd.
///   O,  lambda = 2 :   (2m-2)/(m-3+delta)
///   O,  lambda odd: 2(2m-2)/(2m-5-lambda+delta)
///   Sp, lambda = 2 :     2m/(m-2+delta)
///   Sp, lambda odd:      4m/(2m-1-lambda+delta)
/// A non-positive denominator means the bound is vacuous at this delta and
/// raises Errc::hypothesis_violated.
DecayBound decay_q_table(const SL2Type& t, const Rational& delta = Rational(0));

/// Decay bound for a lift across the dual pair (H of rank m) -> (G of rank
/// n >= m): p_raw = (2n - 2e)/m with e = 0 for orthogonal H, 1 for
/// symplectic H; p_threshold clamps at the tempered floor 2.
DecayBound theta_p_bound(Family h_family, int m, int n);

enum class DualPair { gl_gl, o_sp, sp_o };

/// Absolute convergence of the lift integral in the group-size convention
/// (m, n are defining-space sizes, even for the classical pairs):
/// m + lambda <= n for GL or orthogonal H, strict for symplectic H.
bool li_converges(DualPair pair, int m, int n, int lambda);

enum class RamanujanCase { lambda2_generic, lambda2_boundary };

/// Admissible Ramanujan-error margin for the lambda = 2 threshold
/// computation: 1/2 + 1/m in the generic case, 1/(2m) at the m+2 = n
/// boundary.
Rational ramanujan_margin(int m, RamanujanCase which);

}  // namespace sl2calc
