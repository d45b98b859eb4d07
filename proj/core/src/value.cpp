#include "torusmod/value.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace torusmod {

namespace {

Rational norm_phase(const Rational& p) { return frac(p); }

Complex unit_phase(const Rational& phase) {
  if (phase == 0) return {1.0, 0.0};
  if (phase == Rational(1, 4)) return {0.0, 1.0};
  if (phase == Rational(1, 2)) return {-1.0, 0.0};
  if (phase == Rational(3, 4)) return {0.0, -1.0};
  const double t = 2.0 * std::numbers::pi * to_double(phase);
  return {std::cos(t), std::sin(t)};
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Value::Value(const Rational& r) {
  rho2_ = r * r;
  phase_ = r < 0 ? Rational(1, 2) : Rational(0);
}

Value Value::polar(const Rational& rho2, const Rational& phase, int pi_pow) {
  if (rho2 < 0) throw std::invalid_argument("negative squared modulus");
  Value v;
  v.rho2_ = rho2;
  if (rho2 != 0) {
    v.phase_ = norm_phase(phase);
    v.pi_pow_ = pi_pow;
  }
  return v;
}

Complex Value::to_complex() const {
  if (!exact_) return z_;
  if (rho2_ == 0) return {0.0, 0.0};
  double mag;
  if (auto r = exact_sqrt(rho2_)) mag = to_double(*r);
  else mag = std::sqrt(to_double(rho2_));
  if (pi_pow_ != 0) mag *= std::pow(std::numbers::pi, pi_pow_);
  return mag * unit_phase(phase_);
}

Value Value::operator-() const {
  if (!exact_) return Value(-z_);
  if (rho2_ == 0) return *this;
  return polar(rho2_, phase_ + Rational(1, 2), pi_pow_);
}

Value Value::conj() const {
  if (!exact_) return Value(std::conj(z_));
  if (rho2_ == 0) return *this;
  return polar(rho2_, -phase_, pi_pow_);
}

Value Value::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!exact_) return Value(1.0 / z_);
  return polar(1 / rho2_, -phase_, -pi_pow_);
}

Value operator*(const Value& a, const Value& b) {
  if (a.exact_ && b.exact_) {
    if (a.rho2_ == 0 || b.rho2_ == 0) return Value();
    return Value::polar(a.rho2_ * b.rho2_, a.phase_ + b.phase_, a.pi_pow_ + b.pi_pow_);
  }
  return Value(a.to_complex() * b.to_complex());
}

Value operator+(const Value& a, const Value& b) {
  if (a.exact_ && b.exact_) {
    if (a.rho2_ == 0) return b;
    if (b.rho2_ == 0) return a;
    if (a.pi_pow_ == b.pi_pow_) {
      Rational dphase = frac(a.phase_ - b.phase_);
      if (dphase == 0 || dphase == Rational(1, 2)) {
        if (auto r = exact_sqrt(a.rho2_ / b.rho2_)) {
          // a = s * b with s = +-r real, so a + b = (1 + s) b
          Rational factor = 1 + (dphase == 0 ? *r : Rational(-*r));
          if (factor == 0) return Value();
          return Value(factor) * b;
        }
      }
    }
  }
  return Value(a.to_complex() + b.to_complex());
}

bool Value::identical(const Value& o) const {
  if (exact_ != o.exact_) return false;
  if (exact_) return rho2_ == o.rho2_ && phase_ == o.phase_ && pi_pow_ == o.pi_pow_;
  return z_ == o.z_;
}

std::string Value::to_string() const {
  if (!exact_) {
    if (z_.imag() == 0.0) return fmt_double(z_.real());
    return "(" + fmt_double(z_.real()) + ")+(" + fmt_double(z_.imag()) + ")*i";
  }
  if (rho2_ == 0) return "0";
  std::string mag;
  if (auto r = exact_sqrt(rho2_)) mag = torusmod::to_string(*r);
  else mag = "sqrt(" + torusmod::to_string(rho2_) + ")";
  for (int k = 0; k < pi_pow_; ++k) mag = mag == "1" ? "pi" : mag + "*pi";
  for (int k = 0; k < -pi_pow_; ++k) mag += "/pi";
  if (phase_ == 0) return mag;
  if (phase_ == Rational(1, 2)) return "-" + mag;
  if (phase_ == Rational(1, 4)) return mag + "*i";
  if (phase_ == Rational(3, 4)) return "-" + mag + "*i";
  return mag + "*exp(2*pi*i*" + torusmod::to_string(phase_) + ")";
}

Complex principal_sqrt(Complex z) {
  // A signed zero imaginary part must not push the negative axis to arg = -pi.
  const double arg = z.imag() == 0.0 ? std::arg(Complex(z.real(), 0.0)) : std::arg(z);
  return std::sqrt(std::abs(z)) * std::exp(Complex(0.0, arg / 2.0));
}

Value sqrt(const Value& v) {
  if (v.is_exact()) {
    if (v.is_zero()) return v;
    auto r = exact_sqrt(v.rho2());
    if (r && v.pi_pow() % 2 == 0) {
      // arg in (-pi, pi] corresponds to phase in (-1/2, 1/2]
      Rational p = v.phase() > Rational(1, 2) ? Rational(v.phase() - 1) : v.phase();
      return Value::polar(*r, p / 2, v.pi_pow() / 2);
    }
  }
  return Value(principal_sqrt(v.to_complex()));
}

Value exp(const Value& v) {
  if (v.is_exact()) {
    if (v.is_zero()) return Value(1);
    bool imaginary = v.phase() == Rational(1, 4) || v.phase() == Rational(3, 4);
    if (imaginary && v.pi_pow() == 1) {
      if (auto r = exact_sqrt(v.rho2())) {
        // v = +- i pi r
        Rational s = v.phase() == Rational(1, 4) ? *r : Rational(-*r);
        return Value::root_of_unity(s / 2);
      }
    }
  }
  return Value(std::exp(v.to_complex()));
}

}  // namespace torusmod
