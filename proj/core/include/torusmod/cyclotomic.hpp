#pragma once

#include "torusmod/rational.hpp"
#include "torusmod/value.hpp"

#include <optional>
#include <vector>

namespace torusmod {

// Element of the cyclotomic field Q(zeta_n), zeta_n = e^{2 pi i / n}, stored in the power
// basis 1, zeta, ..., zeta^{phi(n)-1}. Operands from different fields are lifted to the
// compositum Q(zeta_lcm) first, so arithmetic and zero tests are exact.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : n_(1), c_{r} {}
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

  static Cyclotomic root_of_unity(const Rational& turns);
  // sqrt(r) for r >= 0 via quadratic Gauss sums.
  static Cyclotomic sqrt_rational(const Rational& r);
  // Exact values without powers of pi.
  static std::optional<Cyclotomic> from_value(const Value& v);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic lifted(int m) const;  // m must be a multiple of conductor()
  Cyclotomic conj() const;
  Cyclotomic inverse() const;  // throws std::domain_error on zero
  Complex to_complex() const;

  // Square root when the element is a rational multiple of a root of unity; of the two
  // roots, the one nearer to `hint` is returned.
  std::optional<Cyclotomic> sqrt_near(Complex hint) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  // Reduces sum_k p[k] zeta_n^k (any length) to the power basis.
  static Cyclotomic reduce(int n, std::vector<Rational> p);

  int n_;
  std::vector<Rational> c_;
};

}  // namespace torusmod
