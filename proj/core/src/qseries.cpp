#include "torusmod/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torusmod {

QSeries operator+(const QSeries& a, const QSeries& b) {
  Rational shift = b.offset - a.offset;
  if (!is_integer(shift)) throw std::invalid_argument("adding q-series with incompatible offsets");
  const QSeries& lo = shift >= 0 ? a : b;
  const QSeries& hi = shift >= 0 ? b : a;
  long k = static_cast<long>(floor_of(shift >= 0 ? shift : Rational(-shift)));
  int trunc = std::min<long>(lo.truncation(), hi.truncation() + k);
  QSeries out{lo.offset, std::vector<Rational>(std::max(trunc, 0))};
  for (int n = 0; n < out.truncation(); ++n) {
    out.coeffs[n] = lo.coeffs[n];
    if (n >= k) out.coeffs[n] += hi.coeffs[n - k];
  }
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int trunc = std::min(a.truncation(), b.truncation());
  QSeries out{a.offset + b.offset, std::vector<Rational>(trunc)};
  for (int i = 0; i < trunc; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; i + j < trunc; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

QSeries operator*(const Rational& k, const QSeries& a) {
  QSeries out = a;
  for (auto& c : out.coeffs) c *= k;
  return out;
}

Evaluation eval_qseries(const QSeries& s, Complex tau) {
  if (!(tau.imag() > 0)) throw std::domain_error("eval_qseries: Im tau must be positive");
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  const Complex q = std::exp(two_pi_i * tau);
  Complex sum = 0.0, qn = 1.0;
  std::vector<double> mags(s.coeffs.size());
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    double c = to_double(s.coeffs[n]);
    sum += c * qn;
    mags[n] = std::abs(c);
    qn *= q;
  }
  // Tail: assume the ratio of consecutive terms stays at its largest recent value.
  double tail = 0.0;
  const std::size_t m = mags.size();
  if (m >= 2) {
    double ratio = 0.0, last = 0.0;
    for (std::size_t n = (m > 11 ? m - 11 : 0); n + 1 < m; ++n)
      if (mags[n] > 0) ratio = std::max(ratio, mags[n + 1] / mags[n]);
    for (std::size_t n = m; n-- > 0;)
      if (mags[n] > 0) {
        last = mags[n] * std::pow(std::abs(q), static_cast<double>(n));
        break;
      }
    double r = ratio * std::abs(q);
    tail = r < 1 ? last * r / (1 - r) : INFINITY;
  }
  const Complex lead = std::exp(two_pi_i * to_double(s.offset) * tau);
  return {lead * sum, std::abs(lead) * tail};
}

namespace {

WPoly& addto(WPoly& a, const WPoly& b, const Rational& k = Rational(1)) {
  for (const auto& [d, c] : b) {
    Rational v = a[d] + k * c;
    if (v == 0) a.erase(d);
    else a[d] = v;
  }
  return a;
}

WPoly mul(const WPoly& a, const WPoly& b) {
  WPoly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      Rational v = out[da + db] + ca * cb;
      if (v == 0) out.erase(da + db);
      else out[da + db] = v;
    }
  return out;
}

// Shared recurrence. With f_k = D^k y, the y^m coefficient of exp(D) y is
// B_{m-1} + sum_{k>=2} f_k[m]/k!, and f_k[m] only involves B_j with j <= m-2.
template <class T, class Add, class Mul, class Scale>
std::vector<T> solve_exp_derivation(int order, const std::vector<T>& target, const T& zero, Add add, Mul mul,
                                    Scale scale) {
  const int top = order + 1;
  std::vector<T> B(order + 1, zero);  // B[j], j >= 1
  // f[k][m] for k >= 1
  std::vector<std::vector<T>> f(top + 1, std::vector<T>(top + 1, zero));
  Rational fact(1);
  std::vector<Rational> inv_fact(top + 1, Rational(1));
  for (int k = 1; k <= top; ++k) {
    fact *= k;
    inv_fact[k] = 1 / fact;
  }
  for (int m = 2; m <= top; ++m) {
    T acc = zero;
    for (int k = 2; k <= m - 1; ++k) {
      T v = zero;
      for (int j = 1; j <= m - k; ++j) {
        if (m - j < k) break;
        v = add(v, scale(mul(B[j], f[k - 1][m - j]), Rational(m - j)));
      }
      f[k][m] = v;
      acc = add(acc, scale(v, inv_fact[k]));
    }
    B[m - 1] = add(target[m], scale(acc, Rational(-1)));
    f[1][m] = B[m - 1];
  }
  return B;
}

}  // namespace

std::vector<Rational> log1p_coeffs(int degree) {
  std::vector<Rational> t(degree + 1, Rational(0));
  for (int m = 1; m <= degree; ++m) t[m] = Rational(m % 2 == 1 ? 1 : -1, m);
  return t;
}

std::vector<Rational> compute_B_coeffs(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  return solve_exp_derivation<Rational>(
      order, log1p_coeffs(order + 1), Rational(0), [](const Rational& a, const Rational& b) { return Rational(a + b); },
      [](const Rational& a, const Rational& b) { return Rational(a * b); },
      [](const Rational& a, const Rational& k) { return Rational(a * k); });
}

std::vector<WPoly> compute_A_coeffs(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  // (1/w) log(1 + w y) = sum_m (-1)^{m+1} w^{m-1} y^m / m
  std::vector<WPoly> target(order + 2);
  for (int m = 1; m <= order + 1; ++m) target[m][m - 1] = Rational(m % 2 == 1 ? 1 : -1, m);
  return solve_exp_derivation<WPoly>(
      order, target, WPoly{}, [](WPoly a, const WPoly& b) { return addto(a, b); },
      [](const WPoly& a, const WPoly& b) { return mul(a, b); },
      [](const WPoly& a, const Rational& k) {
        WPoly out;
        if (k != 0)
          for (const auto& [d, c] : a) out[d] = c * k;
        return out;
      });
}

Value a_coeff_value(const WPoly& a) {
  Value two_pi_i = Value(2) * Value::pi() * Value::imag_unit();
  Value out;
  for (const auto& [d, c] : a) {
    Value term(c);
    for (int k = 0; k < d; ++k) term *= two_pi_i;
    out += term;
  }
  return out;
}

std::vector<Rational> apply_exp_derivation(const std::vector<Rational>& B, int degree) {
  // D(y^n) = sum_j B_j n y^{n+j}; sum D^k y / k! until the terms vanish below the degree cap.
  std::vector<Rational> total(degree + 1, Rational(0)), term(degree + 1, Rational(0));
  term[1] = 1;
  Rational fact(1);
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) fact *= k;
    for (int n = 0; n <= degree; ++n) total[n] += term[n] / fact;
    std::vector<Rational> next(degree + 1, Rational(0));
    for (int n = 1; n <= degree; ++n) {
      if (term[n] == 0) continue;
      for (int j = 1; j < static_cast<int>(B.size()) && n + j <= degree; ++j) next[n + j] += B[j] * n * term[n];
    }
    term.swap(next);
  }
  return total;
}

std::vector<QSeries> free_fermion_characters(int order) {
  // P(x) = prod_{n>=1} (1 + x^{2n-1}) with x = q^{1/2}; vacuum/energy are its even/odd parts.
  const int xdeg = 2 * order + 1;
  std::vector<Rational> P(xdeg + 1, Rational(0));
  P[0] = 1;
  for (int k = 1; k <= xdeg; k += 2)
    for (int i = xdeg; i >= k; --i) P[i] += P[i - k];
  QSeries vac{Rational(-1, 48), std::vector<Rational>(order + 1)};
  QSeries eps{Rational(23, 48), std::vector<Rational>(order + 1)};
  for (int n = 0; n <= order; ++n) {
    vac.coeffs[n] = P[2 * n];
    eps.coeffs[n] = P[2 * n + 1];
  }
  // prod_{n>=1} (1 + q^n)
  QSeries spin{Rational(1, 24), std::vector<Rational>(order + 1, Rational(0))};
  spin.coeffs[0] = 1;
  for (int k = 1; k <= order; ++k)
    for (int i = order; i >= k; --i) spin.coeffs[i] += spin.coeffs[i - k];
  return {vac, eps, spin};
}

double s_transform_residual(const CharacterSet& chars, const Eigen::MatrixXcd& S, Complex tau) {
  const int n = static_cast<int>(chars.size());
  if (S.rows() != n || S.cols() != n) throw std::invalid_argument("S matrix size does not match the characters");
  const Complex stau = -1.0 / tau;
  Eigen::VectorXcd at(n), ats(n);
  for (int a = 0; a < n; ++a) {
    at(a) = eval_qseries(chars[a], tau).value;
    ats(a) = eval_qseries(chars[a], stau).value;
  }
  return (ats - S * at).cwiseAbs().maxCoeff();
}

double t_transform_residual(const CharacterSet& chars, const FusionRing& ring, Complex tau) {
  double res = 0.0;
  for (int a = 0; a < static_cast<int>(chars.size()); ++a) {
    double w = to_double(ring.h(a) - ring.central_charge() / 24);
    Complex ph = std::polar(1.0, 2.0 * std::numbers::pi * w);
    res = std::max(res, std::abs(eval_qseries(chars[a], tau + 1.0).value - ph * eval_qseries(chars[a], tau).value));
  }
  return res;
}

std::vector<Rational> t_transform_termwise(const CharacterSet& chars, const FusionRing& ring) {
  std::vector<Rational> out;
  for (int a = 0; a < static_cast<int>(chars.size()); ++a)
    out.push_back(frac(chars[a].offset - (ring.h(a) - ring.central_charge() / 24)));
  return out;
}

PartitionResult partition_function(const FullFieldAlgebraSpec& ffa, const CharacterSet& left, const CharacterSet& right,
                                   Complex tau) {
  const int vac = ffa.vacuum_sector();
  if (vac < 0) throw std::runtime_error("unsupported at character level: no vacuum sector");
  for (std::size_t n = 0; n < ffa.sectors.size(); ++n) {
    Complex d = ffa.coefficient(static_cast<int>(n), vac, static_cast<int>(n));
    if (std::abs(d - 1.0) > 1e-12) throw std::runtime_error("unsupported at character level: non-diagonal d");
  }
  auto Z = [&](Complex t) {
    Complex z = 0.0;
    for (const auto& s : ffa.sectors)
      z += eval_qseries(left.at(s.left), t).value * std::conj(eval_qseries(right.at(s.right), t).value);
    return z;
  };
  PartitionResult out;
  out.z = Z(tau);
  out.s_residual = std::abs(Z(-1.0 / tau) - out.z);
  out.t_residual = std::abs(Z(tau + 1.0) - out.z);
  // Each term q^{oL+i} conj(q)^{oR+j} is T-invariant iff oL - oR is an integer.
  Rational worst(0), worst_dist(0);
  for (const auto& s : ffa.sectors) {
    Rational defect = frac(left.at(s.left).offset - right.at(s.right).offset);
    Rational dist = defect > Rational(1, 2) ? Rational(1 - defect) : defect;
    if (dist > worst_dist) {
      worst_dist = dist;
      worst = defect;
    }
  }
  out.t_termwise_defect = worst;
  return out;
}

}  // namespace torusmod
