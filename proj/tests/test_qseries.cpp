#include <doctest.h>

#include "oracles.hpp"

#include <torusmod/category_io.hpp>
#include <torusmod/fullfield.hpp>
#include <torusmod/qseries.hpp>

#include <cmath>
#include <numbers>

using namespace torusmod;

namespace {

// Coefficients of prod_{n>=1} (1 + s x^{2n-1}) in x = q^{1/2}, up to x^deg.
std::vector<long long> fermion_product(int sign, int deg) {
  std::vector<long long> p(deg + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= deg; k += 2)
    for (int j = deg; j >= k; --j) p[j] += sign * p[j - k];
  return p;
}

using Series = std::vector<Rational>;

Series mul_trunc(const Series& x, const Series& y, int deg) {
  Series out(deg + 1, Rational(0));
  for (int i = 0; i <= deg && i < static_cast<int>(x.size()); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= deg && j < static_cast<int>(y.size()); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

TEST_CASE("first B coefficients") {
  auto B = compute_B_coeffs(2);
  CHECK(B[1] == Rational(-1, 2));
  CHECK(B[2] == Rational(1, 12));
}

TEST_CASE("B coefficients satisfy the Julia equation of log(1+y)") {
  // The generator V(y) = sum_j B_j y^{j+1} of f(y) = log(1+y) obeys V(f(y)) = f'(y) V(y).
  const int deg = 16;
  auto B = compute_B_coeffs(deg);
  Series V(deg + 1, Rational(0)), L(deg + 1, Rational(0)), inv1p(deg + 1, Rational(0));
  for (int j = 1; j + 1 <= deg; ++j) V[j + 1] = B[j];
  for (int m = 1; m <= deg; ++m) L[m] = Rational(m % 2 ? 1 : -1, m);
  for (int k = 0; k <= deg; ++k) inv1p[k] = k % 2 ? -1 : 1;
  Series lhs(deg + 1, Rational(0)), power = L;
  for (int j = 1; j + 1 <= deg; ++j) {
    power = mul_trunc(power, L, deg);  // L^{j+1}
    for (int m = 0; m <= deg; ++m) lhs[m] += B[j] * power[m];
  }
  Series rhs = mul_trunc(V, inv1p, deg);
  for (int m = 0; m <= deg; ++m) {
    CAPTURE(m);
    CHECK(lhs[m] == rhs[m]);
  }
}

TEST_CASE("exponential of the derivation reproduces log(1+y)") {
  auto B = compute_B_coeffs(20);
  auto lhs = apply_exp_derivation(B, 20);
  auto rhs = log1p_coeffs(20);
  REQUIRE(lhs.size() == rhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == rhs[k]);
  CHECK(rhs[1] == 1);
  CHECK(rhs[2] == Rational(-1, 2));
}

TEST_CASE("A coefficients are (2 pi i)^j B_j") {
  auto B = compute_B_coeffs(30);
  auto A = compute_A_coeffs(30);
  for (int j = 1; j <= 30; ++j) {
    CAPTURE(j);
    REQUIRE(A[j].size() <= 1);
    if (B[j] == 0) {
      CHECK(A[j].empty());
      continue;
    }
    REQUIRE(A[j].count(j) == 1);
    CHECK(A[j].at(j) == B[j]);
  }
  Value a1 = a_coeff_value(A[1]);
  REQUIRE(a1.is_exact());
  CHECK(a1.identical(Value::pi() * Value::imag_unit() * Value(-1)));
  Value a2 = a_coeff_value(A[2]);
  REQUIRE(a2.is_exact());
  CHECK(a2.identical(Value(Rational(-1, 3)) * Value::pi() * Value::pi()));
}

TEST_CASE("Ising characters from the fermion products") {
  auto chars = free_fermion_characters(30);
  const QSeries& vac = chars[0];
  const QSeries& eps = chars[1];
  const QSeries& sig = chars[2];
  CHECK(vac.offset == Rational(-1, 48));
  CHECK(eps.offset == Rational(1, 2) - Rational(1, 48));
  CHECK(sig.offset == Rational(1, 16) - Rational(1, 48));
  CHECK(eps.coeffs[0] == 1);
  CHECK(vac.coeffs[0] == 1);

  // Even and odd parts of prod (1 + x^{2n-1}) with x = q^{1/2}.
  auto plus = fermion_product(1, 61), minus = fermion_product(-1, 61);
  for (int n = 0; n <= 30; ++n) {
    CHECK(vac.coeffs[n] == (plus[2 * n] + minus[2 * n]) / 2);
    CHECK(eps.coeffs[n] == (plus[2 * n + 1] - minus[2 * n + 1]) / 2);
  }
  // prod (1 + q^n)
  std::vector<long long> s(31, 0);
  s[0] = 1;
  for (int k = 1; k <= 30; ++k)
    for (int j = 30; j >= k; --j) s[j] += s[j - k];
  for (int n = 0; n <= 30; ++n) CHECK(sig.coeffs[n] == s[n]);
}

TEST_CASE("truncated Ising characters agree with theta quotients") {
  auto chars = free_fermion_characters(400);
  for (Complex tau : {Complex(0, 1), Complex(0.3, 0.8), Complex(0.1, 1.2)}) {
    auto ref = oracle::ising_characters(tau);
    for (int a = 0; a < 3; ++a) CHECK(std::abs(eval_qseries(chars[a], tau).value - ref[a]) < 1e-12);
  }
}

TEST_CASE("q-series evaluation") {
  QSeries one{Rational(0), {Rational(1)}};
  CHECK(std::abs(eval_qseries(one, Complex(0, 1)).value - 1.0) < 1e-15);

  QSeries q1{Rational(1), {Rational(1)}};
  CHECK(std::abs(eval_qseries(q1, Complex(0, 1)).value - std::exp(-2 * std::numbers::pi)) < 1e-15);

  CHECK_THROWS_AS(eval_qseries(one, Complex(0.5, 0)), std::domain_error);
  CHECK_THROWS_AS(eval_qseries(one, Complex(0.5, -1)), std::domain_error);

  auto c400 = free_fermion_characters(400), c800 = free_fermion_characters(800);
  auto e400 = eval_qseries(c400[0], Complex(0, 1)), e800 = eval_qseries(c800[0], Complex(0, 1));
  CHECK(std::abs(e400.value - e800.value) < 1e-12);
  CHECK(e400.tail_bound < 1e-12);
}

TEST_CASE("q-series arithmetic keeps the shorter truncation") {
  QSeries a{Rational(0), {1, 2, 3}};
  QSeries b{Rational(1), {1, 1}};
  QSeries s = a + b;
  CHECK(s.truncation() == 3);
  CHECK(s.coeffs[1] == 3);
  CHECK(s.coeffs[2] == 4);
  QSeries p = a * b;
  CHECK(p.offset == 1);
  CHECK(p.truncation() == 2);
  CHECK(p.coeffs[1] == 3);
  QSeries k = Rational(1, 2) * a;
  CHECK(k.coeffs[2] == Rational(3, 2));
}

TEST_CASE("character transforms") {
  const auto& triv = oracle::category("trivial");
  auto tc = load_characters(triv, 10);
  CHECK(s_transform_residual(tc, Eigen::MatrixXcd::Ones(1, 1), Complex(0, 1)) < 1e-15);

  const auto& is = oracle::category("ising");
  auto chars = load_characters(is, 400);
  Eigen::MatrixXcd S = oracle::engine("ising")->s_matrix(0).m;
  for (Complex tau : {Complex(0, 1), Complex(0.3, 0.8)}) CHECK(s_transform_residual(chars, S, tau) < 1e-8);

  Eigen::MatrixXcd bad = S;
  const int sig = is.ring.find("sig");
  bad(sig, sig) = 1.0;
  CHECK(s_transform_residual(chars, bad, Complex(0, 1)) > 1e-2);

  for (Rational r : t_transform_termwise(chars, is.ring)) CHECK(r == 0);
  CHECK(t_transform_residual(chars, is.ring, Complex(0.1, 1.2)) < 1e-12);

  auto fib_chars = load_characters(oracle::category("fibonacci"), 400);
  CHECK(s_transform_residual(fib_chars, oracle::engine("fibonacci")->s_matrix(0).m, Complex(0, 1)) < 1e-8);
}

TEST_CASE("wrong spin weight spoils the termwise T identity") {
  CategoryData cat = oracle::category("ising");
  auto chars = load_characters(cat, 50);
  const int sig = cat.ring.find("sig");
  cat.ring.set_h(sig, Rational(1, 8));
  auto defects = t_transform_termwise(chars, cat.ring);
  CHECK(defects[sig] != 0);
}

TEST_CASE("diagonal partition functions") {
  auto triv = build_diagonal_ffa(oracle::engine("trivial"));
  auto tc = load_characters(triv.left->cat(), 10);
  auto zt = partition_function(triv, tc, tc, Complex(0, 1));
  CHECK(std::abs(zt.z - 1.0) < 1e-15);

  auto ffa = build_diagonal_ffa(oracle::engine("ising"));
  auto chars = load_characters(ffa.left->cat(), 400);
  for (Complex tau : {Complex(0, 1), Complex(0.3, 0.8)}) {
    auto r = partition_function(ffa, chars, chars, tau);
    CHECK(r.s_residual < 1e-8);
    CHECK(r.t_residual < 1e-8);
    CHECK(r.t_termwise_defect == 0);
  }
  auto ref = oracle::ising_characters(Complex(0, 1));
  double zref = std::norm(ref[0]) + std::norm(ref[1]) + std::norm(ref[2]);
  CHECK(std::abs(partition_function(ffa, chars, chars, Complex(0, 1)).z - zref) < 1e-12);

  auto odd = ffa;
  odd.d[{1, 0, 1}] = Value(2);
  CHECK_THROWS(partition_function(odd, chars, chars, Complex(0, 1)));
}
