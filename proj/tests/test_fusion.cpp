#include <doctest.h>

#include "oracles.hpp"

#include <torusmod/fusion.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace torusmod;

namespace {

FusionRing z3_ring() {
  FusionRing r({"0", "1", "2"}, 0, {0, 2, 1});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r.set_N(a, b, (a + b) % 3, 1);
  r.set_h(1, Rational(1, 3));
  r.set_h(2, Rational(1, 3));
  r.set_central_charge(Rational(2));
  return r;
}

Eigen::MatrixXcd ising_s() {
  const double r = std::sqrt(2.0);
  Eigen::MatrixXcd s(3, 3);
  s << 1, 1, r, 1, 1, -r, r, -r, 0;
  return s / 2.0;
}

}  // namespace

TEST_CASE("bundled fusion rings pass validation") {
  for (auto name : {"trivial", "ising", "fibonacci"}) {
    CAPTURE(name);
    CHECK(validate_fusion_ring(oracle::category(name).ring).empty());
    CHECK(oracle::associativity_failures(oracle::category(name).ring).empty());
  }
  CHECK(validate_fusion_ring(z3_ring()).empty());
}

TEST_CASE("removing sig x sig -> eps breaks associativity") {
  FusionRing r = oracle::category("ising").ring;
  const int s = r.find("sig"), eps = r.find("eps"), e = r.unit();
  r.set_N(s, s, eps, 0);
  auto expected = oracle::associativity_failures(r);
  REQUIRE_FALSE(expected.empty());
  std::vector<std::string> reported;
  for (const auto& i : validate_fusion_ring(r))
    if (i.kind == "associativity") reported.push_back(i.message);
  CHECK(reported.size() == expected.size());
  // eps x (sig x sig) has lost its unit channel while (eps x sig) x sig keeps it.
  bool found = std::find(expected.begin(), expected.end(), std::array<int, 4>{eps, s, s, e}) != expected.end();
  CHECK(found);
  // Both bracketings of sig x sig x sig still contain sig exactly once.
  bool sigma4 = std::find(expected.begin(), expected.end(), std::array<int, 4>{s, s, s, s}) != expected.end();
  CHECK_FALSE(sigma4);
}

TEST_CASE("wrong dual field is reported") {
  FusionRing r = z3_ring();
  FusionRing bad({"0", "1", "2"}, 0, {0, 1, 2});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) bad.set_N(a, b, (a + b) % 3, 1);
  auto issues = validate_fusion_ring(bad);
  CHECK(std::any_of(issues.begin(), issues.end(), [](const auto& i) { return i.kind == "dual"; }));
  CHECK(duals_from_fusion(r) == std::vector<int>{0, 2, 1});
}

TEST_CASE("quantum dimensions") {
  CHECK(quantum_dimensions(oracle::category("trivial").ring)[0] == doctest::Approx(1.0));

  const auto& fib = oracle::category("fibonacci").ring;
  auto d = quantum_dimensions(fib);
  const double dt = d[fib.find("t")];
  CHECK(std::abs(dt * dt - (1.0 + dt)) < 1e-12);
  CHECK(dt > 1.0);

  const auto& is = oracle::category("ising").ring;
  auto di = quantum_dimensions(is);
  CHECK(std::abs(di[is.find("sig")] - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(di[is.find("eps")] - 1.0) < 1e-12);

  auto dz = quantum_dimensions(z3_ring());
  for (int a = 0; a < 3; ++a) CHECK(std::abs(dz[a] - dz[z3_ring().dual(a)]) < 1e-12);
}

TEST_CASE("charge conjugation") {
  CHECK(charge_conjugation(oracle::category("trivial").ring) == Eigen::MatrixXi::Identity(1, 1));
  CHECK(charge_conjugation(oracle::category("ising").ring) == Eigen::MatrixXi::Identity(3, 3));
  Eigen::MatrixXi c = charge_conjugation(z3_ring());
  Eigen::MatrixXi expect(3, 3);
  expect << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  CHECK(c == expect);
}

TEST_CASE("Verlinde formula reproduces fusion rules") {
  auto one = verlinde_fusion_from_S(Eigen::MatrixXcd::Ones(1, 1));
  CHECK(one.at(0, 0, 0) == 1);

  auto v = verlinde_fusion_from_S(ising_s());
  const auto& ring = oracle::category("ising").ring;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(v.at(a, b, c) == ring.N(a, b, c));
  CHECK(v.residual < 1e-12);
}

TEST_CASE("random unitary is not fusion compatible") {
  std::mt19937 gen(7);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Complex(g(gen), g(gen));
  Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
  CHECK_THROWS_AS(verlinde_fusion_from_S(u), NotFusionCompatible);
}
