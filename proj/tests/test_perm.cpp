#include "doctest.h"
#include "groupkit/perm.hpp"

using namespace gk;

TEST_CASE("composition is left-to-right") {
  Perm a = parse_cycles("(1,2)", 4);
  Perm b = parse_cycles("(2,3)", 4);
  // apply a then b: 1 -> 2 -> 3
  CHECK((a * b)(0) == 2);
  CHECK((b * a)(0) == 1);
  CHECK(to_cycle_string(a * b) == "(1,3,2)");
}

TEST_CASE("inverse and identity") {
  Perm p = parse_cycles("(1,2,3,4)(5,6)", 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(Perm::identity(6).is_identity());
  CHECK(parse_cycles("()", 5).is_identity());
}

TEST_CASE("conjugation relabels cycles") {
  Perm g = parse_cycles("(1,2)", 4);
  Perm x = parse_cycles("(1,3)", 4);
  CHECK(to_cycle_string(conjugate(g, x)) == "(2,3)");
  // conjugate(g, x) = x^-1 g x
  CHECK(conjugate(g, x) == x.inverse() * g * x);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(parse_cycles("(1,2,3)(4,5)", 5)) == 6);
  CHECK(element_order(parse_cycles("(1,2,3,4)", 4)) == 4);
  CHECK(element_order(Perm::identity(3)) == 1);
}

TEST_CASE("power matches repeated multiplication") {
  Perm p = parse_cycles("(1,2,3,4,5)", 5);
  Perm acc = Perm::identity(5);
  for (int k = 0; k <= 12; ++k) {
    CHECK(power(p, k) == acc);
    acc = acc * p;
  }
}

TEST_CASE("cycle notation round-trips") {
  for (const char* s : {"()", "(1,2)", "(1,2,3)(4,5)", "(2,4)(3,6,5)"}) {
    Perm p = parse_cycles(s, 6);
    CHECK(parse_cycles(to_cycle_string(p), 6) == p);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,5)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2)", 4), ParseError);
  try {
    parse_cycles("(1,9)", 4, 7, 5);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 7);
    CHECK(e.col == 5 + 4);  // the '9', offset by col_offset
  }
}

TEST_CASE("single-point cycles are fixed points") {
  CHECK(parse_cycles("(1)(2)(3)", 3).is_identity());
  CHECK(parse_cycles("(2)(1,3)", 3) == parse_cycles("(1,3)", 3));
}
