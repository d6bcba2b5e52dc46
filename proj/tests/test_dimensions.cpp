#include "doctest.h"
#include "qcalc/dimension.hpp"

using namespace qcalc;

TEST_CASE("dimension construction drops zero exponents") {
  Dimension d = Dimension::from_exponents(
      {{"m", Rational(1)}, {"s", Rational(0)}, {"kg", Rational(0)}});
  CHECK(d == Dimension::base("m"));
  CHECK(d.exponents().size() == 1);
  CHECK(Dimension::from_exponents({}).is_dimensionless());
  CHECK(Dimension{}.is_dimensionless());
}

TEST_CASE("dimension group operations") {
  Dimension m = Dimension::base("m");
  Dimension s = Dimension::base("s");
  Dimension v = m * s.inverse();

  CHECK(v.exponent_of("m") == Rational(1));
  CHECK(v.exponent_of("s") == Rational(-1));
  CHECK(v.exponent_of("kg") == Rational(0));
  CHECK((v * v.inverse()).is_dimensionless());
  CHECK((m * m) == m.pow(Rational(2)));
  CHECK(m.pow(Rational(0)).is_dimensionless());
  CHECK(m.pow(Rational(1, 2)).exponent_of("m") == Rational(1, 2));
  CHECK((s * s.inverse() * m) == m);
}

TEST_CASE("dimension rendering") {
  Dimension m = Dimension::base("m");
  Dimension s = Dimension::base("s");
  CHECK(Dimension{}.to_string() == "1");
  CHECK(m.to_string() == "m");
  CHECK((m * s.pow(Rational(-2))).to_string() == "m*s^(-2)");
  CHECK(Dimension::base("Hz").pow(Rational(-1, 2)).to_string() ==
        "Hz^(-1/2)");
  CHECK((Dimension::base("kg") * m * s.pow(Rational(-2))).to_string() ==
        "kg*m*s^(-2)");
  CHECK(m.pow(Rational(2)).to_string() == "m^(2)");
}

TEST_CASE("dimension parsing is the exact inverse of rendering") {
  for (const char* text :
       {"1", "m", "m*s^(-2)", "Hz^(-1/2)", "kg*m^(2)*s^(-3)", "x_1^(5)"}) {
    auto d = Dimension::parse(text);
    REQUIRE(d.has_value());
    CHECK(d->to_string() == text);
  }
  CHECK(!Dimension::parse(""));
  CHECK(!Dimension::parse("m^2"));      // exponents need parentheses
  CHECK(!Dimension::parse("m*m"));      // duplicate symbol
  CHECK(!Dimension::parse("m^(0)"));    // zero exponent is not canonical
  CHECK(!Dimension::parse("s*m"));      // wrong sort order
  CHECK(!Dimension::parse("m^(1)"));    // exponent 1 is omitted
  CHECK(!Dimension::parse("2m"));
  CHECK(!Dimension::parse("m^(1/0)"));
  CHECK(!Dimension::parse("m *s"));
}

TEST_CASE("dimension ordering is total and stable") {
  Dimension a = Dimension::base("m");
  Dimension b = Dimension::base("s");
  CHECK(a < b);
  CHECK(!(b < a));
  CHECK(!(a < a));
  CHECK((a < a * b) != (a * b < a));  // some strict order holds
}
