#include "torusmod/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace torusmod {

namespace {

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<Integer>> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Integer> p(n + 1, 0);  // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& q = cyclotomic_polynomial(d);
    const int dq = static_cast<int>(q.size()) - 1;
    std::vector<Integer> quot(p.size() - dq, 0);
    for (int k = static_cast<int>(p.size()) - 1; k >= dq; --k) {
      Integer lead = p[k];
      quot[k - dq] = lead;
      for (int j = 0; j <= dq; ++j) p[k - dq + j] -= lead * q[j];
    }
    p = std::move(quot);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic sqrt_prime(const Integer& p) {
  if (p == 2) return Cyclotomic::root_of_unity(Rational(1, 8)) + Cyclotomic::root_of_unity(Rational(7, 8));
  if (p > 100000) throw std::domain_error("sqrt_rational: prime factor too large for an exact Gauss sum");
  const long pl = p.convert_to<long>();
  Cyclotomic g;
  for (long a = 1; a < pl; ++a) {
    long r = 1, base = a % pl;
    for (long e = (pl - 1) / 2; e; e >>= 1) {
      if (e & 1) r = r * base % pl;
      base = base * base % pl;
    }
    Cyclotomic z = Cyclotomic::root_of_unity(Rational(a, pl));
    g += r == 1 ? z : -z;
  }
  // g^2 = (-1)^{(p-1)/2} p with g on the positive real or imaginary axis.
  return pl % 4 == 1 ? g : -Cyclotomic::root_of_unity(Rational(1, 4)) * g;
}

}  // namespace

Cyclotomic Cyclotomic::reduce(int n, std::vector<Rational> p) {
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<Rational> q(std::max(n, deg), Rational(0));
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) q[k % n] += p[k];
  for (int k = n - 1; k >= deg; --k) {
    if (q[k] == 0) continue;
    Rational lead = q[k];
    for (int j = 0; j < deg; ++j)
      if (phi[j] != 0) q[k - deg + j] -= lead * phi[j];
    q[k] = 0;
  }
  q.resize(deg);
  return Cyclotomic(n, std::move(q));
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& turns) {
  Rational t = frac(turns);
  const Integer& den = boost::multiprecision::denominator(t);
  if (den > 1000000) throw std::domain_error("root_of_unity: order too large");
  const int n = den.convert_to<int>();
  std::vector<Rational> p(n, Rational(0));
  p[boost::multiprecision::numerator(t).convert_to<int>()] = 1;
  return reduce(n, std::move(p));
}

Cyclotomic Cyclotomic::sqrt_rational(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt_rational: negative argument");
  if (r == 0) return Cyclotomic();
  const Integer den = boost::multiprecision::denominator(r);
  Integer m = boost::multiprecision::numerator(r) * den;
  Integer outside = 1;
  Cyclotomic root(1);
  for (Integer p = 2; p * p <= m; ++p) {
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    for (int i = 0; i < k / 2; ++i) outside *= p;
    if (k % 2) root *= sqrt_prime(p);
  }
  if (m > 1) root *= sqrt_prime(m);
  return Cyclotomic(Rational(outside, den)) * root;
}

std::optional<Cyclotomic> Cyclotomic::from_value(const Value& v) {
  if (!v.is_exact() || v.pi_pow() != 0) return std::nullopt;
  if (v.is_zero()) return Cyclotomic();
  return sqrt_rational(v.rho2()) * root_of_unity(v.phase());
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return std::nullopt;
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == n_) return *this;
  if (m % n_) throw std::invalid_argument("Cyclotomic::lifted: not a multiple of the conductor");
  const int s = m / n_;
  std::vector<Rational> p(m, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) p[k * s] = c_[k];
  return reduce(m, std::move(p));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> p(n_, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) p[(n_ - static_cast<int>(k)) % n_] += c_[k];
  return reduce(n_, std::move(p));
}

Complex Cyclotomic::to_complex() const {
  Complex z = 0.0;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) z += to_double(c_[k]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n_);
  return z;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.lifted(m), y = b.lifted(m);
  for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.lifted(m), y = b.lifted(m);
  std::vector<Rational> p(m, Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j)
      if (y.c_[j] != 0) p[(i + j) % m] += x.c_[i] * y.c_[j];
  }
  return Cyclotomic::reduce(m, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero");
  const int d = static_cast<int>(c_.size());
  // Column j holds the coordinates of x * zeta^j; solve M y = 1.
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, Rational(0)));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> p(n_, Rational(0));
    for (int k = 0; k < d; ++k) p[(k + j) % n_] += c_[k];
    Cyclotomic col = reduce(n_, std::move(p));
    for (int i = 0; i < d; ++i) M[i][j] = col.c_[i];
  }
  M[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && M[piv][col] == 0) ++piv;
    if (piv == d) throw std::domain_error("Cyclotomic::inverse: singular multiplication map");
    std::swap(M[piv], M[col]);
    Rational inv = 1 / M[col][col];
    for (int k = col; k <= d; ++k) M[col][k] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == col || M[i][col] == 0) continue;
      Rational f = M[i][col];
      for (int k = col; k <= d; ++k) M[i][k] -= f * M[col][k];
    }
  }
  std::vector<Rational> y(d);
  for (int i = 0; i < d; ++i) y[i] = M[i][d];
  return Cyclotomic(n_, std::move(y));
}

std::optional<Cyclotomic> Cyclotomic::sqrt_near(Complex hint) const {
  if (is_zero()) return Cyclotomic();
  const int m = std::lcm(n_, 2);
  const Cyclotomic x = lifted(m);
  for (int k = 0; k < m; ++k) {
    auto r = (x * root_of_unity(Rational(-k, m))).as_rational();
    if (!r || *r <= 0) continue;
    Cyclotomic root = sqrt_rational(*r) * root_of_unity(Rational(k, 2 * m));
    if (std::abs(root.to_complex() - hint) > std::abs(root.to_complex() + hint)) root = -root;
    return root;
  }
  return std::nullopt;
}

}  // namespace torusmod
