#include <doctest.h>

#include <torusmod/expr.hpp>
#include <torusmod/rational.hpp>
#include <torusmod/value.hpp>

#include <cmath>
#include <numbers>

using namespace torusmod;

TEST_CASE("rational parsing") {
  bool dec = true;
  CHECK(parse_rational("-3/6", &dec) == Rational(-1, 2));
  CHECK_FALSE(dec);
  CHECK(parse_rational("0.0625", &dec) == Rational(1, 16));
  CHECK(dec);
  CHECK(parse_rational("7") == Rational(7));
  CHECK_FALSE(try_parse_rational("1/0").has_value());
  CHECK_FALSE(try_parse_rational("x").has_value());
  CHECK(to_string(Rational(-14, 4)) == "-7/2");
}

TEST_CASE("rational helpers") {
  CHECK(mod(Rational(-1, 3), Rational(1)) == Rational(2, 3));
  CHECK(mod(Rational(25, 2) - Rational(1, 2), Rational(24)) == Rational(12));
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(is_integer(Rational(4, 2)));
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
}

TEST_CASE("exact values multiply in closed form") {
  Value s = sqrt(Value(Rational(1, 2)));
  Value p = s * s;
  REQUIRE(p.is_exact());
  CHECK(p.identical(Value(Rational(1, 2))));

  Value z = Value::root_of_unity(Rational(1, 8));
  Value z8 = z * z * z * z * z * z * z * z;
  CHECK(z8.identical(Value(1)));
  CHECK(z.inverse().identical(z.conj()));
}

TEST_CASE("sums stay exact only along a common ray") {
  Value a = sqrt(Value(2)) + sqrt(Value(8));
  REQUIRE(a.is_exact());
  CHECK(a.identical(sqrt(Value(18))));

  Value b = Value(1) + Value::imag_unit();
  CHECK_FALSE(b.is_exact());
  CHECK(std::abs(b.to_complex() - Complex(1, 1)) < 1e-15);

  Value c = Value(Rational(1, 2)) - Value(Rational(1, 2));
  CHECK(c.is_exact());
  CHECK(c.is_zero());
}

TEST_CASE("principal square root branch") {
  CHECK(std::abs(principal_sqrt(Complex(-1, 0)) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(principal_sqrt(Complex(-1, -0.0)) - Complex(0, 1)) < 1e-15);
  Value s = sqrt(Value(-4));
  REQUIRE(s.is_exact());
  CHECK(s.identical(Value(2) * Value::imag_unit()));
}

TEST_CASE("expression parser: sqrt(-2)/2 is exact") {
  Value v = parse_expr("sqrt(-2)/2");
  REQUIRE(v.is_exact());
  CHECK(v.rho2() == Rational(1, 2));
  CHECK(v.phase() == Rational(1, 4));
  CHECK(std::abs(v.to_complex() - Complex(0, std::sqrt(2.0) / 2)) < 1e-15);
}

TEST_CASE("expression parser: exponentials and pi") {
  Value r = parse_expr("exp(-4*pi*i/5)");
  REQUIRE(r.is_exact());
  CHECK(r.phase() == Rational(3, 5));

  Value w = parse_expr("2*pi*i");
  REQUIRE(w.is_exact());
  CHECK(w.pi_pow() == 1);
  CHECK(std::abs(w.to_complex() - Complex(0, 2 * std::numbers::pi)) < 1e-14);

  Value g = parse_expr("(1 + sqrt(5))/2");
  CHECK_FALSE(g.is_exact());
  CHECK(std::abs(g.to_complex().real() - std::numbers::phi) < 1e-15);

  CHECK_FALSE(parse_expr("0.5").is_exact());
  CHECK(parse_expr("1/2", false).is_exact() == false);
}

TEST_CASE("expression parser errors carry a column") {
  try {
    parse_expr("1 + * 2");
    FAIL("expected ExprError");
  } catch (const ExprError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_expr("sqrt(2"), ExprError);
  CHECK_THROWS_AS(parse_expr("foo"), ExprError);
  CHECK_THROWS_AS(parse_expr("1/0"), std::exception);
}

TEST_CASE("canonical text round-trips") {
  for (const char* text : {"0", "-7/3", "sqrt(-2)/2", "exp(2*pi*i/16)", "pi", "-pi*i", "1/sqrt(2)", "3*pi*pi/4"}) {
    Value v = parse_expr(text);
    CAPTURE(text);
    CAPTURE(v.to_string());
    CHECK(parse_expr(v.to_string()).identical(v));
  }
}
