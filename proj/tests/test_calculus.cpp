#include <doctest.h>

#include "sl2calc/calculus.hpp"
#include "sl2calc/mutation.hpp"

using namespace sl2calc;

namespace {
SL2Type mk(GroupKind g, std::vector<int> parts) {
  return SL2Type::make(g, Partition(std::move(parts)));
}
}  // namespace

TEST_CASE("levi induction shifts blocks into the big group") {
  TypeResult r = gl_induce_levi({mk(gl(2), {2}), mk(gl(3), {3})}, 5);
  CHECK(r.result.partition() == Partition({1, 1, 1, 1, 1}));
  CHECK(r.branch == kGenericBranch);

  CHECK(gl_induce_levi({mk(gl(4), {3, 1})}, 4).result.partition() == Partition({3, 1}));
  CHECK(gl_induce_levi({mk(gl(1), {1}), mk(gl(1), {1})}, 2).result.partition() ==
        Partition({1, 1}));
}

TEST_CASE("gl restriction") {
  CHECK(gl_restrict(mk(gl(5), {5}), 3).result.partition() == Partition({3}));
  CHECK(gl_restrict(mk(gl(10), {5, 3, 1, 1}), 6).result.partition() ==
        Partition({1, 1, 1, 1, 1, 1}));
  SL2Type t = mk(gl(6), {4, 2});
  CHECK(gl_restrict(t, 6).result == t);
}

TEST_CASE("gl tensor") {
  SL2Type any = mk(gl(4), {2, 1, 1});
  CHECK(gl_tensor(mk(gl(4), {4}), any).result == any);
  CHECK(gl_tensor(mk(gl(4), {4}), mk(gl(4), {4})).result.partition() == Partition({4}));
  CHECK(gl_tensor(mk(gl(3), {1, 1, 1}), mk(gl(3), {1, 1, 1})).result.partition() ==
        Partition({1, 1, 1}));
}

TEST_CASE("siegel induction and its one-dimensional branch") {
  CHECK(classical_induce_siegel(mk(gl(3), {2, 1}), Family::Sp).result.partition() ==
        Partition({1, 1, 1, 1, 1, 1, 1}));
  // A character into Sp stays tempered.
  TypeResult sp_char = classical_induce_siegel(mk(gl(3), {3}), Family::Sp);
  CHECK(sp_char.branch == kGenericBranch);
  CHECK(sp_char.result.partition() == Partition({1, 1, 1, 1, 1, 1, 1}));

  TypeResult odd = classical_induce_siegel(mk(gl(3), {3}), Family::Oeven);
  CHECK(odd.result.partition() == Partition({2, 2, 1, 1}));
  CHECK(odd.branch == "exceptional:one-dimensional");
  TypeResult even = classical_induce_siegel(mk(gl(4), {4}), Family::Oeven);
  CHECK(even.result.partition() == Partition({2, 2, 2, 2}));
}

TEST_CASE("induction up to gl and its symplectic character branch") {
  CHECK(classical_induce_to_gl(mk(o_even(2), {3, 1})).result.partition() ==
        Partition({1, 1, 1, 1}));
  TypeResult r = classical_induce_to_gl(mk(sp(2), {5}));
  CHECK(r.result.partition() == Partition({2, 2}));
  CHECK(r.branch == "exceptional:one-dimensional");
  CHECK(classical_induce_to_gl(mk(o_even(2), {2, 2})).result.partition() ==
        Partition({1, 1, 1, 1}));
}

TEST_CASE("pair induction") {
  TypeResult generic = classical_induce_pair(mk(sp(1), {1, 1, 1}), mk(sp(3), {5, 1, 1}));
  CHECK(generic.result.partition() == Partition({3, 1, 1, 1, 1, 1, 1}));
  CHECK(generic.branch == kGenericBranch);

  TypeResult chars = classical_induce_pair(mk(sp(1), {3}), mk(sp(2), {5}));
  CHECK(chars.result.partition() == Partition({3, 2, 2}));
  CHECK(chars.branch == "exceptional:pair-of-characters");

  // Factors arrive in either order.
  CHECK(classical_induce_pair(mk(sp(3), {5, 1, 1}), mk(sp(1), {1, 1, 1})).result ==
        generic.result);

  // Two even orthogonal characters stay on the generic formula.
  TypeResult o_chars = classical_induce_pair(mk(o_even(1), {1, 1}), mk(o_even(2), {3, 1}));
  CHECK(o_chars.branch == kGenericBranch);
  CHECK(o_chars.result.partition() == Partition({1, 1, 1, 1, 1, 1}));

  CHECK_THROWS_AS(classical_induce_pair(mk(sp(1), {3}), mk(o_even(2), {3, 1})), CalcError);
}

TEST_CASE("siegel restriction and the two-part branches") {
  CHECK(classical_restrict_siegel(mk(sp(5), {11})).result.partition() == Partition({5}));
  CHECK(classical_restrict_siegel(mk(sp(5), {7, 2, 2})).result.partition() ==
        Partition({1, 1, 1, 1, 1}));
  CHECK(classical_restrict_siegel(mk(o_even(4), {7, 1})).result.partition() == Partition({4}));

  TypeResult odd = classical_restrict_siegel(mk(o_even(4), {5, 3}));
  CHECK(odd.result.partition() == Partition({2, 2}));
  CHECK(odd.branch == "exceptional:two-part-odd");

  TypeResult even = classical_restrict_siegel(mk(o_even(4), {4, 4}));
  CHECK(even.result.partition() == Partition({2, 2}));
  CHECK(even.branch == "exceptional:two-part-even");

  TypeResult big = classical_restrict_siegel(mk(o_even(5), {7, 3}));
  CHECK(big.result.partition() == Partition({3, 2}));
}

TEST_CASE("restriction from gl and the symplectic two-part branch") {
  CHECK(classical_restrict_from_gl(mk(gl(6), {6}), Family::Sp).result.partition() ==
        Partition({7}));
  CHECK(classical_restrict_from_gl(mk(gl(6), {6}), Family::Oeven).result.partition() ==
        Partition({5, 1}));
  CHECK(classical_restrict_from_gl(mk(gl(6), {1, 1, 1, 1, 1, 1}), Family::Sp)
            .result.partition() == Partition({1, 1, 1, 1, 1, 1, 1}));

  TypeResult even = classical_restrict_from_gl(mk(gl(8), {6, 2}), Family::Sp);
  CHECK(even.result.partition() == Partition({5, 2, 2}));
  CHECK(even.branch == "exceptional:two-part-even");

  TypeResult odd = classical_restrict_from_gl(mk(gl(8), {5, 3}), Family::Sp);
  CHECK(odd.result.partition() == Partition({3, 2, 2, 1, 1}));
  CHECK(odd.branch == "exceptional:two-part-odd");

  // k = 2 into even O stays generic.
  TypeResult o_two = classical_restrict_from_gl(mk(gl(8), {6, 2}), Family::Oeven);
  CHECK(o_two.branch == kGenericBranch);
  CHECK(o_two.result.partition() == Partition({3, 1, 1, 1, 1, 1}));
}

TEST_CASE("same-family restriction") {
  CHECK(classical_restrict_same_family(mk(sp(5), {7, 2, 2}), 3).result.partition() ==
        Partition({3, 1, 1, 1, 1}));
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) {
      CHECK(classical_restrict_same_family(trivial_type(sp(n)), m).result ==
            trivial_type(sp(m)));
      CHECK(classical_restrict_same_family(trivial_type(o_even(n)), m).result ==
            trivial_type(o_even(m)));
    }
  CHECK_THROWS_AS(classical_restrict_same_family(mk(sp(3), {7}), 3), CalcError);
}

TEST_CASE("classical tensor, generic and exceptional") {
  SL2Type t = mk(sp(3), {3, 2, 2});
  CHECK(classical_tensor(mk(sp(3), {7}), t).result == t);
  CHECK(classical_tensor(mk(sp(3), {5, 1, 1}), t).result.partition() ==
        Partition({1, 1, 1, 1, 1, 1, 1}));

  TypeResult exc = classical_tensor(mk(o_even(4), {5, 3}), mk(o_even(4), {5, 3}));
  CHECK(exc.result.partition() == Partition({3, 2, 2, 1}));
  CHECK(exc.branch == "exceptional:two-part-odd");

  TypeResult even = classical_tensor(mk(o_even(4), {4, 4}), mk(o_even(4), {4, 4}));
  CHECK(even.result.partition() == Partition({2, 2, 2, 2}));
  CHECK(even.branch == "exceptional:two-part-even");

  TypeResult forced = classical_tensor(mk(o_even(3), {5, 1}), mk(o_even(3), {5, 1}));
  CHECK(forced.result.partition() == Partition({5, 1}));
  CHECK(forced.branch == "exceptional:trivial-pair");
}

TEST_CASE("the undefined tensor case is reachable when a rule is corrupted") {
  // With the generic-shift constant corrupted, trivial (x) non-trivial on
  // even O overflows and no stated branch matches.
  mutation::set(mutation::Knob::tensor_shift, 1);
  try {
    classical_tensor(mk(o_even(3), {5, 1}), mk(o_even(3), {3, 1, 1, 1}));
    mutation::clear_all();
    FAIL("expected an undefined-case error");
  } catch (const CalcError& e) {
    mutation::clear_all();
    CHECK(e.code() == Errc::undefined_case);
  }
}

TEST_CASE("theta lift") {
  CHECK(theta_lift_type(mk(o_even(2), {3, 1}), sp(4)).result.partition() ==
        Partition({5, 3, 1}));
  CHECK(theta_lift_type(mk(o_even(2), {3, 1}), sp(3)).result.partition() ==
        Partition({3, 3, 1}));
  CHECK(theta_lift_type(mk(o_even(2), {3, 1}), sp(2)).result.partition() ==
        Partition({3, 1, 1}));
  CHECK(theta_lift_type(mk(sp(1), {3}), o_even(4)).result.partition() == Partition({5, 3}));
  CHECK(theta_lift_type(mk(sp(0), {1}), o_even(2)).result.partition() == Partition({3, 1}));

  try {
    theta_lift_type(mk(o_even(2), {3, 1}), sp(1));
    FAIL("expected rank error");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::rank_too_small);
  }
  try {
    theta_lift_type(mk(sp(2), {5}), o_even(2));
    FAIL("expected rank error");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::rank_too_small);
  }
  CHECK_THROWS_AS(theta_lift_type(mk(gl(3), {3}), sp(4)), CalcError);
}

TEST_CASE("odd orthogonal rules carry the conjectural flag") {
  TypeResult r1 = conj_induce_siegel(mk(gl(2), {2}));
  CHECK(r1.conjectural);
  CHECK(r1.result.partition() == Partition({1, 1, 1, 1}));

  CHECK(conj_induce_to_gl(mk(so_odd(2), {2, 2})).result.partition() ==
        Partition({1, 1, 1, 1, 1}));

  TypeResult r6 = conj_restrict_orthogonal(mk(so_odd(3), {3, 3}), so_odd(2));
  CHECK(r6.conjectural);
  CHECK(r6.result.partition() == Partition({1, 1, 1, 1}));

  SL2Type t = mk(so_odd(3), {4, 1, 1});
  CHECK(conj_tensor(mk(so_odd(3), {6}), t).result == t);

  CHECK(conj_restrict_siegel(mk(so_odd(2), {4})).result.partition() == Partition({2}));
  CHECK(conj_restrict_from_gl(mk(gl(5), {5})).result.partition() == Partition({4}));
  CHECK(conj_induce_pair(mk(so_odd(1), {2}), mk(o_even(4), {7, 1})).result.partition() ==
        Partition({4, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("dispatchers route by group shapes and reject illegal pairs") {
  CHECK(restrict_type(mk(sp(5), {7, 2, 2}), sp(3)).rule == "classical.restrict-same-family");
  CHECK(restrict_type(mk(sp(5), {7, 2, 2}), gl(5)).rule == "classical.restrict-siegel");
  CHECK(restrict_type(mk(gl(8), {6, 2}), sp(4)).rule == "classical.restrict-from-gl");
  CHECK(restrict_type(mk(gl(10), {5, 3, 1, 1}), gl(6)).rule == "gl.restrict");
  CHECK(restrict_type(mk(so_odd(3), {3, 3}), gl(3)).rule == "odd-orthogonal.restrict-siegel");
  CHECK(restrict_type(mk(o_even(4), {5, 3}), so_odd(2)).rule ==
        "odd-orthogonal.restrict-orthogonal");
  CHECK(restrict_type(mk(gl(7), {7}), so_odd(3)).rule == "odd-orthogonal.restrict-from-gl");

  CHECK(induce_type({mk(gl(3), {3})}, o_even(3)).rule == "classical.induce-siegel");
  CHECK(induce_type({mk(sp(2), {5})}, gl(4)).rule == "classical.induce-to-gl");
  CHECK(induce_type({mk(sp(1), {3}), mk(sp(2), {5})}, sp(3)).rule == "classical.induce-pair");
  CHECK(induce_type({mk(gl(2), {2}), mk(gl(3), {3})}, gl(5)).rule == "gl.induce-levi");
  CHECK(induce_type({mk(gl(3), {3})}, so_odd(3)).rule == "odd-orthogonal.induce-siegel");
  CHECK(induce_type({mk(so_odd(1), {2}), mk(o_even(2), {3, 1})}, so_odd(3)).rule ==
        "odd-orthogonal.induce-pair");

  CHECK(tensor_type(mk(gl(4), {4}), mk(gl(4), {2, 2})).rule == "gl.tensor");
  CHECK(tensor_type(mk(sp(3), {7}), mk(sp(3), {7})).rule == "classical.tensor");
  CHECK(tensor_type(mk(so_odd(2), {4}), mk(so_odd(2), {4})).rule == "odd-orthogonal.tensor");

  CHECK_THROWS_AS(restrict_type(mk(sp(5), {7, 2, 2}), sp(5)), CalcError);
  CHECK_THROWS_AS(restrict_type(mk(sp(5), {7, 2, 2}), gl(4)), CalcError);
  CHECK_THROWS_AS(restrict_type(mk(sp(5), {7, 2, 2}), o_even(3)), CalcError);
  CHECK_THROWS_AS(induce_type({mk(sp(1), {3}), mk(sp(2), {5})}, sp(4)), CalcError);
  CHECK_THROWS_AS(tensor_type(mk(sp(2), {5}), mk(sp(3), {7})), CalcError);
}

TEST_CASE("tensor commutativity holds across enumerated small groups") {
  for (GroupKind g : {sp(2), o_even(2), o_even(3), so_odd(2)}) {
    auto types = enumerate_types(g);
    for (const auto& a : types)
      for (const auto& b : types) {
        TypeResult x = tensor_type(a, b);
        TypeResult y = tensor_type(b, a);
        CHECK(x.result == y.result);
        CHECK(x.branch == y.branch);
      }
  }
}

TEST_CASE("one-dimensional detection is by type equality with the trivial type") {
  CHECK(is_one_dimensional(trivial_type(sp(4))));
  CHECK(is_one_dimensional(trivial_type(o_even(4))));
  CHECK(!is_one_dimensional(tempered_type(sp(4))));
  CHECK(!is_one_dimensional(mk(o_even(4), {5, 3})));
}
