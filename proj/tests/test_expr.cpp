#include <doctest.h>

#include "sl2calc/expr.hpp"
#include "sl2calc/rational.hpp"

using namespace sl2calc;

TEST_CASE("type expressions parse") {
  SL2Type t = parse_type_expr("Sp10[7,2,2]");
  CHECK(t.group() == sp(5));
  CHECK(t.partition() == Partition({7, 2, 2}));

  CHECK(parse_type_expr("O8[5,3]").group() == o_even(4));
  CHECK(parse_type_expr("SO7[3,3]").group() == so_odd(3));
  CHECK(parse_type_expr("GL5[4,1]").group() == gl(5));

  // Whitespace-insensitive, parts in any order.
  CHECK(parse_type_expr(" Sp10 [ 2, 7, 2 ] ") == parse_type_expr("Sp10[7,2,2]"));
}

TEST_CASE("parse and render are inverse on canonical expressions") {
  for (GroupKind g : {gl(5), sp(3), o_even(4), so_odd(3)}) {
    for (const auto& t : enumerate_types(g)) {
      CHECK(parse_type_expr(render_type_expr(t)) == t);
    }
  }
}

TEST_CASE("structural parse errors carry positions") {
  for (const char* bad : {"Sp10", "Sp10[", "Sp10[]", "Sp10[7,,2]", "Sp10[7;2]", "Sp10[7]x",
                          "Zp4[3]", "Sp9[7,2]", "O7[3,3]", "SO8[3,3]", "GL0[1]", "Sp10[0,11]",
                          "Sp10[-1,11]"}) {
    try {
      parse_type_expr(bad);
      FAIL("expected a parse error for ", bad);
    } catch (const CalcError& e) {
      CHECK(e.code() == Errc::parse_error);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
}

TEST_CASE("validation errors propagate from well-formed expressions") {
  try {
    parse_type_expr("Sp4[4,1]");
    FAIL("expected bad parity");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::bad_parity);
  }
  try {
    parse_type_expr("Sp4[3,1]");
    FAIL("expected wrong total");
  } catch (const CalcError& e) {
    CHECK(e.code() == Errc::wrong_total);
  }
}

TEST_CASE("group expressions parse alone") {
  CHECK(parse_group("Sp6") == sp(3));
  CHECK(parse_group(" GL7 ") == gl(7));
  CHECK_THROWS_AS(parse_group("Sp6[3]"), CalcError);
  CHECK_THROWS_AS(parse_group("Sp7"), CalcError);
}

TEST_CASE("rationals parse") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), CalcError);
  CHECK_THROWS_AS(parse_rational("a/b"), CalcError);
  CHECK_THROWS_AS(parse_rational(""), CalcError);
}
