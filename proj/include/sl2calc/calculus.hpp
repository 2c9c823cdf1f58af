#pragma once

#include <string>
#include <vector>

#include "sl2calc/sl2type.hpp"

namespace sl2calc {

/// Result of a rule application: the output type plus provenance — which
/// rule fired, which branch it took, and whether the rule is conjectural
/// (the odd orthogonal analogues are stated without proof and without
/// exceptional cases, so their outputs are flagged).
struct TypeResult {
  SL2Type result;
  std::string rule;    // e.g. "classical.restrict-same-family"
  std::string branch;  // "generic" or "exceptional:<name>"
  bool conjectural = false;
};

inline constexpr const char* kGenericBranch = "generic";

/// A rep is treated as one-dimensional iff its type equals the trivial type
/// of its group. The exceptional branches below key off this.
bool is_one_dimensional(const SL2Type& t);

// ---- general linear rules --------------------------------------------------

/// Parabolic induction from a Levi GL_{m_1} x ... x GL_{m_k} of GL_n:
/// every block entry shifts by -(n - m_i), then normalize to n.
TypeResult gl_induce_levi(const std::vector<SL2Type>& blocks, int n);

/// Restriction GL_n -> GL_m (1 <= m <= n): shift by n - m.
TypeResult gl_restrict(const SL2Type& t, int m);

/// Tensor product on GL_n: entries lambda_i + tau_j - n over all pairs.
TypeResult gl_tensor(const SL2Type& a, const SL2Type& b);

// ---- symplectic / even orthogonal rules ------------------------------------
// G_{2n} below is Sp_{2n} or O_{2n}; epsilon is +1 for O_{2n}, -1 for Sp_{2n}.

/// Induction from the Siegel Levi GL_n up to G_{2n}. Tempered, except that a
/// one-dimensional character induced to O_{2n} gives [2,...,2] (n even) or
/// [2,...,2,1,1] (n odd).
TypeResult classical_induce_siegel(const SL2Type& t_gl, Family dst_family);

/// Induction from G_{2n} up to GL_{2n}. Tempered, except that a
/// one-dimensional character of Sp_{2n} gives [2,...,2].
TypeResult classical_induce_to_gl(const SL2Type& t);

/// Induction from G_{2a} x G_{2b} (same family, inputs reordered so a <= b)
/// up to G_{2a+2b}: the larger factor's type shifts by 2a. Exception: two
/// symplectic one-dimensional characters give [2b-2a+1,2,...,2].
TypeResult classical_induce_pair(const SL2Type& t_first, const SL2Type& t_second);

/// Restriction G_{2n} -> Siegel Levi GL_n: shift by n - epsilon. Exception
/// for two-part O_{2n} types [l1,l2] with 1 < l1 <= l2: [l2-n+1,2,...,2]
/// (both odd) or [2,...,2] (l1 = l2 = n even).
TypeResult classical_restrict_siegel(const SL2Type& t);

/// Restriction GL_{2n} -> G_{2n}: [2*largest-2n-epsilon,1,...,1]. Exception
/// for two-part types into Sp_{2n}: [l2-l1+1,2,...,2] (both even) or
/// [l2-l1+1,1,1,2,...,2] (both odd).
TypeResult classical_restrict_from_gl(const SL2Type& t_gl, Family dst_family);

/// Restriction G_{2n} -> G_{2m}, m < n, same family: shift by 2n - 2m.
TypeResult classical_restrict_same_family(const SL2Type& t, int m);

/// Tensor product on G_{2n}: entries lambda_i + tau_j - 2n + epsilon.
/// Exceptions on O_{2n}: two-part pairs with small parts > 1 take the
/// explicit two-head form, and trivial (x) trivial is forced to trivial
/// (the generic formula leaves its domain there). Any other overflow is
/// reported as Errc::undefined_case.
TypeResult classical_tensor(const SL2Type& a, const SL2Type& b);

// ---- theta lift -------------------------------------------------------------

/// Appends the dual-pair tower part: O_{2m} -> Sp_{2n} (n >= m) appends
/// 2n-2m+1; Sp_{2m} -> O_{2n} (n > m) appends 2n-2m-1.
TypeResult theta_lift_type(const SL2Type& t, GroupKind dst);

// ---- odd orthogonal rules (conjectural) -------------------------------------
// Stated without exceptional branches; every result carries conjectural=true.
// Formula outputs that fail the parity rules are surfaced as
// Errc::undefined_case rather than returned.

/// GL_n -> O_{2n+1}: tempered.
TypeResult conj_induce_siegel(const SL2Type& t_gl);

/// O_{2n+1} -> GL_{2n+1}: tempered.
TypeResult conj_induce_to_gl(const SL2Type& t);

/// O_a x O_b -> O_{a+b} (sizes a <= b after reordering, at least one odd):
/// the larger factor's type shifts by a.
TypeResult conj_induce_pair(const SL2Type& t_first, const SL2Type& t_second);

/// O_{2n+1} -> GL_n: shift by n.
TypeResult conj_restrict_siegel(const SL2Type& t);

/// GL_{2n+1} -> O_{2n+1}: [2*largest-2n-2,1,...,1].
TypeResult conj_restrict_from_gl(const SL2Type& t_gl);

/// O_a -> O_b, b < a, at least one size odd: shift by a - b (sizes).
TypeResult conj_restrict_orthogonal(const SL2Type& t, GroupKind dst);

/// Tensor product on O_{2n+1}: entries lambda_i + tau_j - 2n.
TypeResult conj_tensor(const SL2Type& a, const SL2Type& b);

// ---- dispatchers (used by the CLI) ------------------------------------------

/// Routes a restriction to the rule matching (source, target); throws
/// Errc::illegal_pair when no rule applies.
TypeResult restrict_type(const SL2Type& t, GroupKind dst);

/// Routes an induction of one or more factors to `dst`.
TypeResult induce_type(const std::vector<SL2Type>& factors, GroupKind dst);

/// Routes a tensor product (both factors on the same group).
TypeResult tensor_type(const SL2Type& a, const SL2Type& b);

}  // namespace sl2calc
