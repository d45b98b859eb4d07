#pragma once

// Reference computations that share no code paths with the library beyond its data types.

#include <torusmod/category_io.hpp>
#include <torusmod/modular.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

using torusmod::CategoryData;
using torusmod::Complex;

inline Complex turn(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

inline const CategoryData& category(const std::string& name) {
  static std::map<std::string, CategoryData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, torusmod::load_category(name)).first;
  return it->second;
}

inline std::shared_ptr<const torusmod::ModularEngine> engine(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const torusmod::ModularEngine>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_shared<const torusmod::ModularEngine>(category(name))).first;
  return it->second;
}

// Quadruples (a,b,c,d) where (a x b) x c and a x (b x c) disagree in multiplicity of d.
inline std::vector<std::array<int, 4>> associativity_failures(const torusmod::FusionRing& ring) {
  const int n = ring.size();
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int left = 0, right = 0;
          for (int x = 0; x < n; ++x) {
            left += ring.N(a, b, x) * ring.N(x, c, d);
            right += ring.N(b, c, x) * ring.N(a, x, d);
          }
          if (left != right) out.push_back({a, b, c, d});
        }
  return out;
}

// Usual textbook matrix [F^{abc}_d]_{ef}: e labels (ab), f labels (bc).
inline Complex fb(const CategoryData& cat, int a, int b, int c, int d, int e, int f) {
  auto it = cat.F.find({a, b, c, d, f, e});
  return it == cat.F.end() ? Complex{} : it->second.to_complex();
}

inline Complex rb(const CategoryData& cat, int a, int b, int c) {
  auto it = cat.R.find({a, b, c});
  return it == cat.R.end() ? Complex{} : it->second.to_complex();
}

// [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}
inline double pentagon(const CategoryData& cat) {
  const int n = cat.size();
  double res = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              for (int g = 0; g < n; ++g)
                for (int k = 0; k < n; ++k)
                  for (int l = 0; l < n; ++l) {
                    Complex lhs = fb(cat, f, c, d, e, g, l) * fb(cat, a, b, l, e, f, k);
                    Complex rhs = 0.0;
                    for (int h = 0; h < n; ++h)
                      rhs += fb(cat, a, b, c, g, f, h) * fb(cat, a, h, d, e, g, k) * fb(cat, b, c, d, k, h, l);
                    res = std::max(res, std::abs(lhs - rhs));
                  }
  return res;
}

// Both hexagons, checked on admissible vertices only.
inline double hexagons(const CategoryData& cat) {
  const int n = cat.size();
  const auto& N = cat.ring;
  double res = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int g = 0; g < n; ++g) {
              if (!N.admissible(a, c, e) || !N.admissible(e, b, d) || !N.admissible(c, b, g) ||
                  !N.admissible(a, g, d))
                continue;
              Complex l1 = rb(cat, c, a, e) * fb(cat, a, c, b, d, e, g) * rb(cat, c, b, g);
              Complex l2 = fb(cat, a, c, b, d, e, g) / (rb(cat, a, c, e) * rb(cat, b, c, g));
              Complex r1 = 0.0, r2 = 0.0;
              for (int f = 0; f < n; ++f) {
                if (!N.admissible(a, b, f) || !N.admissible(c, f, d)) continue;
                r1 += fb(cat, c, a, b, d, e, f) * rb(cat, c, f, d) * fb(cat, a, b, c, d, f, g);
                r2 += fb(cat, c, a, b, d, e, f) / rb(cat, f, c, d) * fb(cat, a, b, c, d, f, g);
              }
              res = std::max({res, std::abs(l1 - r1), std::abs(l2 - r2)});
            }
  return res;
}

// Ising characters from theta and eta quotients, evaluated without truncation concerns:
//   chi_0 +- chi_{1/2} = sqrt(theta_{3,4} / eta),  chi_{1/16} = sqrt(theta_2 / (2 eta)).
// Returned in the order (vacuum, energy, spin).
inline std::array<Complex, 3> ising_characters(Complex tau) {
  const Complex q = std::exp(2.0 * std::numbers::pi * Complex(0, 1) * tau);
  auto qpow = [&](double r) { return std::exp(2.0 * std::numbers::pi * Complex(0, 1) * r * tau); };
  Complex eta_prod = 1.0, th3 = 1.0, th4 = 1.0, th2 = 0.0;
  Complex qn = 1.0;
  for (int k = 1; k < 2000; ++k) {
    qn *= q;
    eta_prod *= 1.0 - qn;
    if (std::abs(qn) < 1e-300) break;
  }
  for (int k = 1; k < 200; ++k) {
    Complex t = qpow(k * k / 2.0);
    th3 += 2.0 * t;
    th4 += 2.0 * (k % 2 ? -1.0 : 1.0) * t;
    if (std::abs(t) < 1e-300) break;
  }
  for (int k = 0; k < 200; ++k) {
    Complex t = qpow(k * (k + 1) / 2.0);
    th2 += t;
    if (std::abs(t) < 1e-300) break;
  }
  // The q^{-1/48} and q^{1/16 - 1/48} prefactors are taken out before the square roots.
  const Complex plus = qpow(-1.0 / 48) * std::sqrt(th3 / eta_prod);
  const Complex minus = qpow(-1.0 / 48) * std::sqrt(th4 / eta_prod);
  const Complex spin = qpow(1.0 / 16 - 1.0 / 48) * std::sqrt(th2 / eta_prod);
  return {(plus + minus) / 2.0, (plus - minus) / 2.0, spin};
}

// Least-squares S from chi_a(-1/tau) = sum_b S_ab chi_b(tau) over sample points.
template <class Chars>
Eigen::MatrixXcd fit_s(Chars&& chars, const std::vector<Complex>& taus) {
  const int m = static_cast<int>(taus.size());
  const int n = static_cast<int>(chars(taus[0]).size());
  Eigen::MatrixXcd X(m, n), Y(m, n);
  for (int i = 0; i < m; ++i) {
    auto at = chars(taus[i]);
    auto st = chars(-1.0 / taus[i]);
    for (int b = 0; b < n; ++b) {
      X(i, b) = at[b];
      Y(i, b) = st[b];
    }
  }
  Eigen::MatrixXcd St = X.colPivHouseholderQr().solve(Y);
  return St.transpose();
}

inline std::vector<Complex> samples_near(Complex tau) {
  return {tau, tau + Complex(0.07, 0.0), tau + Complex(-0.05, 0.11), tau + Complex(0.13, 0.23),
          tau + Complex(-0.17, 0.05), tau + Complex(0.02, 0.31)};
}

// Eigenvalues e^{2 pi i s (h_c - h_a - h_b)} of the double braiding of a around b.
inline std::vector<Complex> monodromy_spectrum(const CategoryData& cat, int a, int b, int s) {
  std::vector<Complex> out;
  for (int c = 0; c < cat.size(); ++c)
    if (cat.ring.admissible(a, b, c)) out.push_back(turn(s * (cat.h(c) - cat.h(a) - cat.h(b))));
  return out;
}

// Greedy matching distance between two multisets of complex numbers of equal size.
inline double multiset_distance(std::vector<Complex> x, std::vector<Complex> y) {
  if (x.size() != y.size()) return INFINITY;
  double worst = 0.0;
  for (Complex v : x) {
    auto it = std::min_element(y.begin(), y.end(),
                               [&](Complex p, Complex q) { return std::abs(p - v) < std::abs(q - v); });
    worst = std::max(worst, std::abs(*it - v));
    y.erase(it);
  }
  return worst;
}

inline std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace oracle
