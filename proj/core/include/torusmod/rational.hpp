#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace torusmod {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p", "-p", "p/q" and plain decimals such as "0.0625". Decimals are
// converted exactly; `was_decimal` reports whether that happened.
Rational parse_rational(std::string_view text, bool* was_decimal = nullptr);
std::optional<Rational> try_parse_rational(std::string_view text, bool* was_decimal = nullptr);

// Base-10 digit string; leading zeros are not an octal prefix.
Integer parse_integer(std::string_view digits);
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
Integer floor_of(const Rational& r);

// Representative of r modulo m in [0, m).
Rational mod(const Rational& r, const Rational& m);
inline Rational frac(const Rational& r) { return mod(r, Rational(1)); }

double to_double(const Rational& r);

// Exact square root when r = s^2 for a rational s >= 0.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace torusmod
