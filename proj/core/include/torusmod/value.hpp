#pragma once

#include "torusmod/rational.hpp"

#include <complex>
#include <string>

namespace torusmod {

using Complex = std::complex<double>;

// A complex constant that stays exact while it has the closed form
//   sqrt(rho2) * exp(2 pi i * phase) * pi^pi_pow,   rho2 >= 0, phase in [0,1),
// and degrades to a complex double otherwise.
class Value {
 public:
  Value() = default;  // exact zero
  Value(long v) : Value(Rational(v)) {}
  Value(const Rational& r);
  explicit Value(Complex z) : exact_(false), z_(z) {}

  static Value polar(const Rational& rho2, const Rational& phase, int pi_pow = 0);
  static Value pi() { return polar(Rational(1), Rational(0), 1); }
  static Value imag_unit() { return polar(Rational(1), Rational(1, 4)); }
  static Value root_of_unity(const Rational& turns) { return polar(Rational(1), turns); }

  bool is_exact() const { return exact_; }
  bool is_zero() const { return exact_ ? rho2_ == 0 : z_ == Complex(0.0, 0.0); }
  const Rational& rho2() const { return rho2_; }
  const Rational& phase() const { return phase_; }
  int pi_pow() const { return pi_pow_; }

  Complex to_complex() const;
  Value as_float() const { return Value(to_complex()); }

  Value operator-() const;
  Value conj() const;
  Value inverse() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b) { return a + (-b); }
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b) { return a * b.inverse(); }
  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }

  // Structural equality: both exact with identical form, or both float with identical bits.
  bool identical(const Value& o) const;

  // Canonical text accepted back by parse_expr.
  std::string to_string() const;

 private:
  bool exact_ = true;
  Rational rho2_{0};
  Rational phase_{0};
  int pi_pow_ = 0;
  Complex z_{0.0, 0.0};
};

// Principal branch: sqrt(|z|) e^{i arg(z)/2}, arg in (-pi, pi].
Value sqrt(const Value& v);
// Exact only for purely imaginary rational multiples of pi.
Value exp(const Value& v);

// Principal square root on doubles with the same branch rule.
Complex principal_sqrt(Complex z);

}  // namespace torusmod
