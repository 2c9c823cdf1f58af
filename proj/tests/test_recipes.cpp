#include <doctest.h>

#include "sl2calc/recipes.hpp"

using namespace sl2calc;

namespace {
SL2Type mk(GroupKind g, std::vector<int> parts) {
  return SL2Type::make(g, Partition(std::move(parts)));
}
}  // namespace

TEST_CASE("decomposition splits distinct odds from doubled parts") {
  auto [odds, doubled] = decompose_type(mk(sp(11), {5, 5, 5, 3, 2, 2, 1}));
  CHECK(odds == Partition({5, 3, 1}));
  CHECK(doubled == Partition({5, 2}));

  auto [odds2, doubled2] = decompose_type(mk(sp(4), {5, 3, 1}));
  CHECK(odds2 == Partition({5, 3, 1}));
  CHECK(doubled2.empty());

  auto [odds3, doubled3] = decompose_type(mk(o_even(4), {2, 2, 2, 2}));
  CHECK(odds3.empty());
  CHECK(doubled3 == Partition({2, 2}));
}

TEST_CASE("reconstruction invariant: odds + doubled twice = the type") {
  for (GroupKind g : {sp(4), sp(5), o_even(4), o_even(5)}) {
    for (const auto& t : enumerate_types(g)) {
      auto [odds, doubled] = decompose_type(t);
      std::vector<int> parts(odds.parts());
      for (int d : doubled.parts()) {
        parts.push_back(d);
        parts.push_back(d);
      }
      CHECK(Partition(parts) == t.partition());
      // The leftover odd parts are distinct.
      for (size_t i = 1; i < odds.parts().size(); ++i)
        CHECK(odds.parts()[i - 1] != odds.parts()[i]);
    }
  }
}

TEST_CASE("lift chains") {
  auto chain = theta_chain(Family::Sp, {1, 3, 5});
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].group == o_even(2));
  CHECK(chain[0].type_after.partition() == Partition({3, 1}));
  CHECK(chain[1].group == sp(4));
  CHECK(chain[1].type_after.partition() == Partition({5, 3, 1}));

  auto single = theta_chain(Family::Sp, {7});
  REQUIRE(single.size() == 1);
  CHECK(single[0].group == sp(3));
  CHECK(single[0].type_after.partition() == Partition({7}));

  auto even = theta_chain(Family::Oeven, {3, 5});
  REQUIRE(even.size() == 2);
  CHECK(even[0].group == sp(1));
  CHECK(even[1].group == o_even(4));
  CHECK(even[1].type_after.partition() == Partition({5, 3}));

  auto longer = theta_chain(Family::Oeven, {1, 3, 5, 7});
  REQUIRE(longer.size() == 3);
  CHECK(longer[0].group == o_even(2));
  CHECK(longer[1].group == sp(4));
  CHECK(longer[2].group == o_even(8));
  CHECK(longer[2].type_after.partition() == Partition({7, 5, 3, 1}));

  CHECK_THROWS_AS(theta_chain(Family::Sp, {}), CalcError);
  CHECK_THROWS_AS(theta_chain(Family::Sp, {3, 5}), CalcError);      // even count into Sp
  CHECK_THROWS_AS(theta_chain(Family::Oeven, {3, 5, 7}), CalcError);
  CHECK_THROWS_AS(theta_chain(Family::Sp, {3, 3, 5}), CalcError);   // repeated part
  CHECK_THROWS_AS(theta_chain(Family::Sp, {2, 3, 5}), CalcError);   // even part
}

TEST_CASE("recipes for the worked examples") {
  RepRecipe r = build_recipe(mk(sp(11), {5, 5, 5, 3, 2, 2, 1}));
  CHECK(r.base == sp(4));
  CHECK(r.levi_blocks == std::vector<int>{5, 2});
  REQUIRE_FALSE(r.chain.empty());
  CHECK(r.chain.back().type_after.partition() == Partition({5, 3, 1}));
  CHECK(recipe_type(r) == mk(sp(11), {5, 5, 5, 3, 2, 2, 1}));

  RepRecipe trivial = build_recipe(mk(sp(3), {7}));
  CHECK(trivial.base == sp(3));
  CHECK(trivial.levi_blocks.empty());
  REQUIRE(trivial.chain.size() == 1);
  CHECK(trivial.chain[0].group == sp(3));

  RepRecipe tempered = build_recipe(mk(sp(3), {1, 1, 1, 1, 1, 1, 1}));
  CHECK(tempered.base == sp(0));
  CHECK(tempered.chain.empty());
  CHECK(tempered.distinct_odds == Partition({1}));
  CHECK(tempered.levi_blocks == std::vector<int>{1, 1, 1});
  CHECK(recipe_type(tempered) == mk(sp(3), {1, 1, 1, 1, 1, 1, 1}));

  RepRecipe doubled = build_recipe(mk(o_even(4), {2, 2, 2, 2}));
  CHECK(doubled.base == o_even(0));
  CHECK(doubled.chain.empty());
  CHECK(doubled.levi_blocks == std::vector<int>{2, 2});
}

TEST_CASE("recipes reject odd orthogonal targets") {
  CHECK_THROWS_AS(build_recipe(mk(so_odd(2), {4})), CalcError);
}

TEST_CASE("round trip over every type at small rank") {
  for (GroupKind g : {sp(1), sp(2), sp(3), sp(4), sp(5), o_even(1), o_even(2), o_even(3),
                      o_even(4), o_even(5), o_even(6)}) {
    for (const auto& t : enumerate_types(g)) {
      RepRecipe r = build_recipe(t);
      CHECK(recipe_type(r) == t);
      if (!r.chain.empty()) {
        CHECK(r.chain.back().group == r.base);
        for (size_t i = 1; i < r.chain.size(); ++i) {
          TypeResult lifted = theta_lift_type(r.chain[i - 1].type_after, r.chain[i].group);
          CHECK(lifted.result == r.chain[i].type_after);
        }
      }
      bool want_odd = g.family == Family::Sp;
      CHECK((r.distinct_odds.size() % 2 == 1) == want_odd);
    }
  }
}

TEST_CASE("inconsistent recipes are rejected") {
  RepRecipe r;
  r.target = sp(2);
  r.base = sp(1);  // ranks do not add up
  r.levi_blocks = {2};
  CHECK_THROWS_AS(recipe_type(r), CalcError);

  RepRecipe levi_only;
  levi_only.target = sp(2);
  levi_only.base = sp(0);
  levi_only.levi_blocks = {2};
  CHECK(recipe_type(levi_only).partition() == Partition({2, 2, 1}));

  RepRecipe wrong_family;
  wrong_family.target = sp(2);
  wrong_family.base = o_even(0);
  wrong_family.levi_blocks = {2};
  CHECK_THROWS_AS(recipe_type(wrong_family), CalcError);
}
