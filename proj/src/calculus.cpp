#include "sl2calc/calculus.hpp"

#include <algorithm>

#include "sl2calc/mutation.hpp"

namespace sl2calc {

namespace {

using mutation::Knob;
using mutation::offset;

int epsilon_of(Family f) {
  if (f == Family::Oeven) return 1;
  if (f == Family::Sp) return -1;
  fail(Errc::internal, "epsilon defined only for Sp and O-even");
}

// Wraps SL2Type::make for the proven rules: their outputs are guaranteed
// valid, so a validation failure here is an engine invariant breach.
SL2Type checked(GroupKind group, Partition parts, const std::string& rule) {
  try {
    return SL2Type::make(group, std::move(parts));
  } catch (const CalcError& e) {
    fail(Errc::internal, rule + " produced an invalid type: " + e.what());
  }
}

// Builds [heads..., 2,...,2] filling up to `total`.
Partition pad_with_twos(std::vector<int> heads, int total) {
  int fill = 2 + offset(Knob::exceptional_pad);
  long long head_sum = 0;
  for (int h : heads) {
    if (h < 1) fail(Errc::internal, "exceptional branch head entry " + std::to_string(h));
    head_sum += h;
  }
  long long rem = total - head_sum;
  if (rem < 0 || rem % 2 != 0)
    fail(Errc::internal, "exceptional branch cannot pad to total " + std::to_string(total));
  heads.insert(heads.end(), static_cast<size_t>(rem / 2), fill);
  return Partition(std::move(heads));
}

// Conjectural rules have no stated exceptional branches; when the formula
// output is not a valid type we refuse to guess and report it as undefined.
TypeResult conj_result(GroupKind group, const std::vector<int>& entries, const std::string& rule) {
  try {
    Partition p = normalize(entries, group.type_total());
    return TypeResult{SL2Type::make(group, std::move(p)), rule, kGenericBranch, true};
  } catch (const CalcError& e) {
    fail(Errc::undefined_case,
         rule + ": conjectural formula leaves its domain (" + e.what() + ")");
  }
}

void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace

bool is_one_dimensional(const SL2Type& t) {
  return t.partition() == trivial_type(t.group()).partition();
}

// ---- general linear rules --------------------------------------------------

TypeResult gl_induce_levi(const std::vector<SL2Type>& blocks, int n) {
  require(!blocks.empty(), Errc::illegal_pair, "Levi induction needs at least one block");
  int rank_sum = 0;
  for (const auto& b : blocks) {
    require(b.group().family == Family::GL, Errc::illegal_pair,
            "Levi induction blocks must be general linear, got " + b.group().name());
    rank_sum += b.group().rank;
  }
  require(rank_sum == n, Errc::rank_mismatch,
          "Levi blocks have total rank " + std::to_string(rank_sum) + ", expected " +
              std::to_string(n));
  std::vector<int> entries;
  for (const auto& b : blocks) {
    int shift_by = n - b.group().rank + offset(Knob::gl_induce_shift);
    for (int part : b.partition().parts()) entries.push_back(part - shift_by);
  }
  const std::string rule = "gl.induce-levi";
  return TypeResult{checked(gl(n), normalize(entries, n), rule), rule, kGenericBranch, false};
}

TypeResult gl_restrict(const SL2Type& t, int m) {
  require(t.group().family == Family::GL, Errc::illegal_pair,
          "general linear restriction from " + t.group().name());
  int n = t.group().rank;
  require(m >= 1 && m <= n, Errc::rank_mismatch,
          "restriction target GL" + std::to_string(m) + " from GL" + std::to_string(n));
  const std::string rule = "gl.restrict";
  Partition p = shift(t.partition(), n - m + offset(Knob::gl_restrict_shift), m);
  return TypeResult{checked(gl(m), std::move(p), rule), rule, kGenericBranch, false};
}

TypeResult gl_tensor(const SL2Type& a, const SL2Type& b) {
  require(a.group() == b.group() && a.group().family == Family::GL, Errc::illegal_pair,
          "tensor factors must live on one general linear group");
  int n = a.group().rank;
  std::vector<int> entries;
  entries.reserve(a.partition().parts().size() * b.partition().parts().size());
  for (int x : a.partition().parts())
    for (int y : b.partition().parts())
      entries.push_back(x + y - n + offset(Knob::gl_tensor_shift));
  const std::string rule = "gl.tensor";
  return TypeResult{checked(gl(n), normalize(entries, n), rule), rule, kGenericBranch, false};
}

// ---- symplectic / even orthogonal rules ------------------------------------

TypeResult classical_induce_siegel(const SL2Type& t_gl, Family dst_family) {
  require(t_gl.group().family == Family::GL, Errc::illegal_pair,
          "Siegel induction starts from a general linear type");
  require(dst_family == Family::Sp || dst_family == Family::Oeven, Errc::illegal_pair,
          "Siegel induction targets Sp or even O");
  int n = t_gl.group().rank;
  require(n >= 1, Errc::rank_mismatch, "Siegel induction needs rank >= 1");
  GroupKind dst{dst_family, n};
  const std::string rule = "classical.induce-siegel";
  if (dst_family == Family::Oeven && is_one_dimensional(t_gl)) {
    std::vector<int> heads = (n % 2 == 0) ? std::vector<int>{} : std::vector<int>{1, 1};
    return TypeResult{checked(dst, pad_with_twos(heads, dst.type_total()), rule), rule,
                      "exceptional:one-dimensional", false};
  }
  return TypeResult{tempered_type(dst), rule, kGenericBranch, false};
}

TypeResult classical_induce_to_gl(const SL2Type& t) {
  Family f = t.group().family;
  require(f == Family::Sp || f == Family::Oeven, Errc::illegal_pair,
          "induction to GL starts from Sp or even O, got " + t.group().name());
  int n = t.group().rank;
  GroupKind dst = gl(2 * n);
  const std::string rule = "classical.induce-to-gl";
  if (f == Family::Sp && is_one_dimensional(t)) {
    return TypeResult{checked(dst, pad_with_twos({}, 2 * n), rule), rule,
                      "exceptional:one-dimensional", false};
  }
  return TypeResult{tempered_type(dst), rule, kGenericBranch, false};
}

TypeResult classical_induce_pair(const SL2Type& t_first, const SL2Type& t_second) {
  Family f = t_first.group().family;
  require(f == Family::Sp || f == Family::Oeven, Errc::illegal_pair,
          "pair induction is for Sp or even O factors");
  require(t_second.group().family == f, Errc::illegal_pair,
          "pair induction factors must share a family");
  // The formulas assume the first factor is the smaller one.
  const SL2Type* small = &t_first;
  const SL2Type* large = &t_second;
  if (small->group().rank > large->group().rank) std::swap(small, large);
  int a = small->group().rank;
  int b = large->group().rank;
  require(a >= 1, Errc::rank_mismatch, "pair induction needs ranks >= 1");
  GroupKind dst{f, a + b};
  const std::string rule = "classical.induce-pair";
  if (f == Family::Sp && is_one_dimensional(*small) && is_one_dimensional(*large)) {
    int head = 2 * b - 2 * a + 1 + offset(Knob::pair_induce_head);
    return TypeResult{checked(dst, pad_with_twos({head}, dst.type_total()), rule), rule,
                      "exceptional:pair-of-characters", false};
  }
  Partition p =
      shift(large->partition(), 2 * a + offset(Knob::pair_induce_shift), dst.type_total());
  return TypeResult{checked(dst, std::move(p), rule), rule, kGenericBranch, false};
}

TypeResult classical_restrict_siegel(const SL2Type& t) {
  Family f = t.group().family;
  require(f == Family::Sp || f == Family::Oeven, Errc::illegal_pair,
          "Siegel restriction starts from Sp or even O, got " + t.group().name());
  int n = t.group().rank;
  const std::string rule = "classical.restrict-siegel";
  const auto& parts = t.partition().parts();
  if (f == Family::Oeven && parts.size() == 2 && parts[1] > 1) {
    int large = parts[0], small = parts[1];
    if (small % 2 != 0) {
      int head = large - n + 1 + offset(Knob::siegel_restrict_head);
      // The two closed forms are forced equal by large + small = 2n.
      if (head != n + 1 - small)
        fail(Errc::internal, "two-part Siegel restriction heads disagree");
      return TypeResult{checked(gl(n), pad_with_twos({head}, n), rule), rule,
                        "exceptional:two-part-odd", false};
    }
    if (small != n || large != n)
      fail(Errc::internal, "even two-part type must be [n,n]");
    return TypeResult{checked(gl(n), pad_with_twos({}, n), rule), rule,
                      "exceptional:two-part-even", false};
  }
  Partition p = shift(t.partition(), n - epsilon_of(f) + offset(Knob::siegel_restrict_shift), n);
  return TypeResult{checked(gl(n), std::move(p), rule), rule, kGenericBranch, false};
}

TypeResult classical_restrict_from_gl(const SL2Type& t_gl, Family dst_family) {
  require(t_gl.group().family == Family::GL, Errc::illegal_pair,
          "restriction from GL starts from a general linear type");
  require(dst_family == Family::Sp || dst_family == Family::Oeven, Errc::illegal_pair,
          "restriction from GL targets Sp or even O");
  int size = t_gl.group().rank;
  require(size % 2 == 0, Errc::rank_mismatch,
          "restriction to " + std::string(family_name(dst_family)) + " needs an even GL rank");
  int n = size / 2;
  GroupKind dst{dst_family, n};
  const std::string rule = "classical.restrict-from-gl";
  const auto& parts = t_gl.partition().parts();
  if (dst_family == Family::Sp && parts.size() == 2) {
    int large = parts[0], small = parts[1];
    int head = large - small + 1 + offset(Knob::from_gl_exceptional_head);
    std::vector<int> heads = (small % 2 == 0) ? std::vector<int>{head}
                                              : std::vector<int>{head, 1, 1};
    return TypeResult{checked(dst, pad_with_twos(heads, dst.type_total()), rule), rule,
                      small % 2 == 0 ? "exceptional:two-part-even" : "exceptional:two-part-odd",
                      false};
  }
  int head = 2 * parts[0] - 2 * n - epsilon_of(dst_family) + offset(Knob::from_gl_head);
  Partition p = normalize({head}, dst.type_total());
  return TypeResult{checked(dst, std::move(p), rule), rule, kGenericBranch, false};
}

TypeResult classical_restrict_same_family(const SL2Type& t, int m) {
  Family f = t.group().family;
  require(f == Family::Sp || f == Family::Oeven, Errc::illegal_pair,
          "same-family restriction is for Sp or even O");
  int n = t.group().rank;
  require(m >= 1 && m < n, Errc::rank_mismatch,
          "same-family restriction needs 1 <= m < n, got m=" + std::to_string(m) +
              " n=" + std::to_string(n));
  GroupKind dst{f, m};
  const std::string rule = "classical.restrict-same-family";
  Partition p =
      shift(t.partition(), 2 * n - 2 * m + offset(Knob::same_family_shift), dst.type_total());
  return TypeResult{checked(dst, std::move(p), rule), rule, kGenericBranch, false};
}

TypeResult classical_tensor(const SL2Type& a, const SL2Type& b) {
  require(a.group() == b.group(), Errc::rank_mismatch,
          "tensor factors must live on the same group");
  Family f = a.group().family;
  require(f == Family::Sp || f == Family::Oeven, Errc::illegal_pair,
          "classical tensor is for Sp or even O, got " + a.group().name());
  int n = a.group().rank;
  GroupKind dst = a.group();
  const std::string rule = "classical.tensor";

  const auto& pa = a.partition().parts();
  const auto& pb = b.partition().parts();
  if (f == Family::Oeven && pa.size() == 2 && pb.size() == 2 && pa[1] > 1 && pb[1] > 1 &&
      pa[0] + pb[0] > 2 * n - 1) {
    // Order the factors so the first one has the smaller small part.
    const std::vector<int>* l = &pa;
    const std::vector<int>* t = &pb;
    if ((*l)[1] > (*t)[1]) std::swap(l, t);
    int base = 2 * n - 1 + offset(Knob::tensor_exceptional_base);
    if ((*l)[1] % 2 != 0) {
      std::vector<int> heads = {(*l)[0] + (*t)[0] - base, (*l)[0] + (*t)[1] - base};
      return TypeResult{checked(dst, pad_with_twos(std::move(heads), dst.type_total()), rule),
                        rule, "exceptional:two-part-odd", false};
    }
    return TypeResult{checked(dst, pad_with_twos({}, dst.type_total()), rule), rule,
                      "exceptional:two-part-even", false};
  }

  std::vector<int> entries;
  entries.reserve(pa.size() * pb.size());
  int shift_by = 2 * n - epsilon_of(f) - offset(Knob::tensor_shift);
  for (int x : pa)
    for (int y : pb) entries.push_back(x + y - shift_by);
  try {
    Partition p = normalize(entries, dst.type_total());
    return TypeResult{checked(dst, std::move(p), rule), rule, kGenericBranch, false};
  } catch (const CalcError& e) {
    if (e.code() != Errc::overflow) throw;
    if (f == Family::Oeven && is_one_dimensional(a) && is_one_dimensional(b)) {
      // The generic formula leaves its domain here, but tensoring with a
      // one-dimensional character cannot change the type.
      return TypeResult{trivial_type(dst), rule, "exceptional:trivial-pair", false};
    }
    fail(Errc::undefined_case,
         rule + ": generic formula leaves its domain and no stated branch applies (" +
             a.to_string() + " (x) " + b.to_string() + ")");
  }
}

// ---- theta lift -------------------------------------------------------------

TypeResult theta_lift_type(const SL2Type& t, GroupKind dst) {
  Family src_f = t.group().family;
  int m = t.group().rank;
  int n = dst.rank;
  const std::string rule = "theta.lift";
  int appended = 0;
  if (src_f == Family::Oeven && dst.family == Family::Sp) {
    require(m >= 1, Errc::rank_mismatch, "lift source rank must be >= 1");
    require(n >= m, Errc::rank_too_small,
            "lift " + t.group().name() + " -> " + dst.name() + " needs n >= m");
    appended = 2 * n - 2 * m + 1 + offset(Knob::theta_append_o_to_sp);
  } else if (src_f == Family::Sp && dst.family == Family::Oeven) {
    // Rank 0 (the trivial-group marker with type [1]) is a legal seed here.
    require(n > m, Errc::rank_too_small,
            "lift " + t.group().name() + " -> " + dst.name() + " needs n > m");
    appended = 2 * n - 2 * m - 1 + offset(Knob::theta_append_sp_to_o);
  } else {
    fail(Errc::illegal_pair,
         "no dual pair lifts " + t.group().name() + " to " + dst.name());
  }
  std::vector<int> parts = t.partition().parts();
  parts.push_back(appended);
  return TypeResult{checked(dst, Partition(std::move(parts)), rule), rule, kGenericBranch, false};
}

// ---- odd orthogonal rules (conjectural) -------------------------------------

TypeResult conj_induce_siegel(const SL2Type& t_gl) {
  require(t_gl.group().family == Family::GL, Errc::illegal_pair,
          "odd orthogonal Siegel induction starts from a general linear type");
  int n = t_gl.group().rank;
  return TypeResult{tempered_type(so_odd(n)), "odd-orthogonal.induce-siegel", kGenericBranch,
                    true};
}

TypeResult conj_induce_to_gl(const SL2Type& t) {
  require(t.group().family == Family::SOodd, Errc::illegal_pair,
          "induction to GL from an odd orthogonal type, got " + t.group().name());
  int n = t.group().rank;
  return TypeResult{tempered_type(gl(2 * n + 1)), "odd-orthogonal.induce-to-gl", kGenericBranch,
                    true};
}

TypeResult conj_induce_pair(const SL2Type& t_first, const SL2Type& t_second) {
  require(t_first.group().is_orthogonal() && t_second.group().is_orthogonal(), Errc::illegal_pair,
          "orthogonal pair induction needs two orthogonal factors");
  const SL2Type* small = &t_first;
  const SL2Type* large = &t_second;
  if (small->group().size() > large->group().size()) std::swap(small, large);
  int a = small->group().size();
  int b = large->group().size();
  GroupKind dst = orthogonal_of_size(a + b);
  std::vector<int> entries;
  for (int part : large->partition().parts())
    entries.push_back(part - a - offset(Knob::conj_pair_induce_shift));
  return conj_result(dst, entries, "odd-orthogonal.induce-pair");
}

TypeResult conj_restrict_siegel(const SL2Type& t) {
  require(t.group().family == Family::SOodd, Errc::illegal_pair,
          "odd orthogonal Siegel restriction, got " + t.group().name());
  int n = t.group().rank;
  std::vector<int> entries;
  for (int part : t.partition().parts())
    entries.push_back(part - n - offset(Knob::conj_siegel_restrict_shift));
  return conj_result(gl(n), entries, "odd-orthogonal.restrict-siegel");
}

TypeResult conj_restrict_from_gl(const SL2Type& t_gl) {
  require(t_gl.group().family == Family::GL && t_gl.group().rank % 2 == 1, Errc::illegal_pair,
          "restriction to an odd orthogonal group starts from an odd-rank GL type");
  int n = (t_gl.group().rank - 1) / 2;
  require(n >= 1, Errc::rank_mismatch, "restriction target rank must be >= 1");
  int head = 2 * t_gl.partition().parts()[0] - 2 * n - 2 + offset(Knob::conj_from_gl_head);
  return conj_result(so_odd(n), {head}, "odd-orthogonal.restrict-from-gl");
}

TypeResult conj_restrict_orthogonal(const SL2Type& t, GroupKind dst) {
  require(t.group().is_orthogonal() && dst.is_orthogonal(), Errc::illegal_pair,
          "orthogonal restriction needs orthogonal source and target");
  int a = t.group().size();
  int b = dst.size();
  require(b < a, Errc::rank_mismatch, "orthogonal restriction needs a smaller target");
  std::vector<int> entries;
  for (int part : t.partition().parts())
    entries.push_back(part - (a - b) - offset(Knob::conj_orthogonal_shift));
  return conj_result(dst, entries, "odd-orthogonal.restrict-orthogonal");
}

TypeResult conj_tensor(const SL2Type& a, const SL2Type& b) {
  require(a.group() == b.group() && a.group().family == Family::SOodd, Errc::illegal_pair,
          "odd orthogonal tensor needs two types on one odd orthogonal group");
  int total = a.group().type_total();
  std::vector<int> entries;
  for (int x : a.partition().parts())
    for (int y : b.partition().parts())
      entries.push_back(x + y - total - offset(Knob::conj_tensor_shift));
  return conj_result(a.group(), entries, "odd-orthogonal.tensor");
}

// ---- dispatchers -------------------------------------------------------------

TypeResult restrict_type(const SL2Type& t, GroupKind dst) {
  Family sf = t.group().family;
  Family df = dst.family;
  int sr = t.group().rank;
  if (sf == Family::GL && df == Family::GL) return gl_restrict(t, dst.rank);
  if ((sf == Family::Sp || sf == Family::Oeven) && df == Family::GL && dst.rank == sr)
    return classical_restrict_siegel(t);
  if (sf == Family::GL && (df == Family::Sp || df == Family::Oeven) && sr == 2 * dst.rank)
    return classical_restrict_from_gl(t, df);
  if (sf == df && (sf == Family::Sp || sf == Family::Oeven))
    return classical_restrict_same_family(t, dst.rank);
  if (sf == Family::SOodd && df == Family::GL && dst.rank == sr)
    return conj_restrict_siegel(t);
  if (sf == Family::GL && df == Family::SOodd && sr == 2 * dst.rank + 1)
    return conj_restrict_from_gl(t);
  if (t.group().is_orthogonal() && dst.is_orthogonal())
    return conj_restrict_orthogonal(t, dst);
  fail(Errc::illegal_pair,
       "no restriction rule for " + t.group().name() + " -> " + dst.name());
}

TypeResult induce_type(const std::vector<SL2Type>& factors, GroupKind dst) {
  require(!factors.empty(), Errc::illegal_pair, "induction needs at least one factor");
  if (factors.size() == 1) {
    const SL2Type& t = factors[0];
    Family sf = t.group().family;
    if (sf == Family::GL && dst.family == Family::GL) return gl_induce_levi(factors, dst.rank);
    if (sf == Family::GL && (dst.family == Family::Sp || dst.family == Family::Oeven) &&
        dst.rank == t.group().rank)
      return classical_induce_siegel(t, dst.family);
    if (sf == Family::GL && dst.family == Family::SOodd && dst.rank == t.group().rank)
      return conj_induce_siegel(t);
    if ((sf == Family::Sp || sf == Family::Oeven) && dst.family == Family::GL &&
        dst.rank == 2 * t.group().rank)
      return classical_induce_to_gl(t);
    if (sf == Family::SOodd && dst.family == Family::GL && dst.rank == 2 * t.group().rank + 1)
      return conj_induce_to_gl(t);
    fail(Errc::illegal_pair,
         "no induction rule for " + t.group().name() + " -> " + dst.name());
  }
  bool all_gl = true;
  for (const auto& f : factors) all_gl = all_gl && f.group().family == Family::GL;
  if (all_gl && dst.family == Family::GL) return gl_induce_levi(factors, dst.rank);
  if (factors.size() == 2) {
    const SL2Type& x = factors[0];
    const SL2Type& y = factors[1];
    if (x.group().family == y.group().family &&
        (x.group().family == Family::Sp || x.group().family == Family::Oeven)) {
      require(dst.family == x.group().family &&
                  dst.rank == x.group().rank + y.group().rank,
              Errc::rank_mismatch,
              "pair induction target must be " +
                  GroupKind{x.group().family, x.group().rank + y.group().rank}.name());
      return classical_induce_pair(x, y);
    }
    if (x.group().is_orthogonal() && y.group().is_orthogonal()) {
      require(dst.is_orthogonal() && dst.size() == x.group().size() + y.group().size(),
              Errc::rank_mismatch, "orthogonal pair induction target size must be " +
                                       std::to_string(x.group().size() + y.group().size()));
      return conj_induce_pair(x, y);
    }
  }
  fail(Errc::illegal_pair, "no induction rule for this factor combination");
}

TypeResult tensor_type(const SL2Type& a, const SL2Type& b) {
  require(a.group() == b.group(), Errc::rank_mismatch,
          "tensor factors must live on the same group: " + a.group().name() + " vs " +
              b.group().name());
  switch (a.group().family) {
    case Family::GL: return gl_tensor(a, b);
    case Family::Sp:
    case Family::Oeven: return classical_tensor(a, b);
    case Family::SOodd: return conj_tensor(a, b);
  }
  fail(Errc::internal, "unreachable");
}

}  // namespace sl2calc
