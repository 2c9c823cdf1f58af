#include <doctest.h>

#include "oracle.hpp"
#include "sl2calc/sl2type.hpp"

using namespace sl2calc;

TEST_CASE("group kinds know their sizes and totals") {
  CHECK(gl(5).size() == 5);
  CHECK(gl(5).type_total() == 5);
  CHECK(sp(5).size() == 10);
  CHECK(sp(5).type_total() == 11);
  CHECK(o_even(4).size() == 8);
  CHECK(o_even(4).type_total() == 8);
  CHECK(so_odd(3).size() == 7);
  CHECK(so_odd(3).type_total() == 6);
  CHECK(sp(5).name() == "Sp10");
  CHECK(so_odd(3).name() == "SO7");
  CHECK(orthogonal_of_size(8) == o_even(4));
  CHECK(orthogonal_of_size(7) == so_odd(3));
}

TEST_CASE("validation enforces totals and bad parity") {
  CHECK(validate(sp(1), Partition({3})).to_string() == "Sp2[3]");
  CHECK(validate(o_even(2), Partition({2, 2})).to_string() == "O4[2,2]");

  try {
    validate(sp(2), Partition({4, 1}));
    FAIL("expected bad parity");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::bad_parity);
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
  try {
    validate(sp(2), Partition({3, 1}));
    FAIL("expected wrong total");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::wrong_total);
  }
  try {
    validate(so_odd(2), Partition({3, 1}));
    FAIL("expected bad parity");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::bad_parity);
  }
}

TEST_CASE("distinguished types validate for every family and small rank") {
  for (int r = 1; r <= 8; ++r) {
    for (GroupKind g : {gl(r), sp(r), o_even(r), so_odd(r)}) {
      CHECK(is_valid_type(g, trivial_type(g).partition()));
      CHECK(is_valid_type(g, tempered_type(g).partition()));
    }
  }
  CHECK(trivial_type(sp(5)).partition() == Partition({11}));
  CHECK(trivial_type(o_even(4)).partition() == Partition({7, 1}));
  CHECK(trivial_type(o_even(1)).partition() == Partition({1, 1}));
  CHECK(trivial_type(gl(5)).partition() == Partition({5}));
  CHECK(trivial_type(so_odd(4)).partition() == Partition({8}));
  CHECK(tempered_type(gl(3)).partition() == Partition({1, 1, 1}));
}

TEST_CASE("enumeration matches the stated counts and order") {
  auto sp2 = enumerate_types(sp(1));
  REQUIRE(sp2.size() == 2);
  CHECK(sp2[0].partition() == Partition({3}));
  CHECK(sp2[1].partition() == Partition({1, 1, 1}));

  auto sp4 = enumerate_types(sp(2));
  REQUIRE(sp4.size() == 4);
  CHECK(sp4[0].partition() == Partition({5}));
  CHECK(sp4[1].partition() == Partition({3, 1, 1}));
  CHECK(sp4[2].partition() == Partition({2, 2, 1}));
  CHECK(sp4[3].partition() == Partition({1, 1, 1, 1, 1}));

  CHECK(enumerate_types(o_even(2)).size() == 3);
  CHECK(enumerate_types(so_odd(2)).size() == 4);
}

TEST_CASE("enumeration agrees with the independent oracle") {
  for (int r = 1; r <= 7; ++r) {
    for (GroupKind g : {gl(r), sp(r), o_even(r), so_odd(r)}) {
      auto got = enumerate_types(g);
      auto want = oracle::valid_types(g);
      REQUIRE(got.size() == want.size());
      for (const auto& t : got) CHECK(want.count(t.partition().parts()) == 1);
    }
  }
}

TEST_CASE("every enumerated type validates; every omitted partition does not") {
  for (GroupKind g : {sp(3), o_even(3), so_odd(3)}) {
    auto types = enumerate_types(g);
    std::set<std::vector<int>> listed;
    for (const auto& t : types) listed.insert(t.partition().parts());
    for (const auto& p : all_partitions(g.type_total())) {
      CHECK(is_valid_type(g, p) == (listed.count(p.parts()) == 1));
    }
  }
}

TEST_CASE("the enumeration guard is enforced") {
  CHECK_NOTHROW(enumerate_types(sp(3), 7));
  try {
    enumerate_types(sp(21));
    FAIL("expected the guard");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::bound_exceeded);
  }
}
