#include "torusmod/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace torusmod {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text, bool* was_decimal) {
  if (was_decimal) *was_decimal = false;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return std::nullopt;
    Integer den = parse_integer(q);
    if (den == 0) return std::nullopt;
    r = Rational(parse_integer(p), den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto ip = text.substr(0, dot), fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) return std::nullopt;
    Integer num = parse_integer(std::string(ip) + std::string(fp));
    Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(fp.size()));
    r = Rational(num, den);
    if (was_decimal) *was_decimal = true;
  } else {
    if (!all_digits(text)) return std::nullopt;
    r = Rational(parse_integer(text));
  }
  return neg ? Rational(-r) : r;
}

Rational parse_rational(std::string_view text, bool* was_decimal) {
  auto r = try_parse_rational(text, was_decimal);
  if (!r) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  return *r;
}

Integer parse_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  if (digits.empty()) return Integer(0);
  return Integer(std::string(digits));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer floor_of(const Rational& r) {
  Integer q, rem;
  boost::multiprecision::divide_qr(numerator(r), denominator(r), q, rem);
  if (rem < 0) q -= 1;
  return q;
}

Rational mod(const Rational& r, const Rational& m) {
  Rational x = r / m;
  return (x - Rational(floor_of(x))) * m;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer n = numerator(r), d = denominator(r);
  Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace torusmod
