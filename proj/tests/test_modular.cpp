#include <doctest.h>

#include "oracles.hpp"

#include <torusmod/category_io.hpp>
#include <torusmod/fusion.hpp>
#include <torusmod/modular.hpp>

#include <cmath>
#include <numbers>

using namespace torusmod;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXcd ising_closed_form() {
  const double r = std::sqrt(2.0);
  Eigen::MatrixXcd s(3, 3);
  s << 1, 1, r, 1, 1, -r, r, -r, 0;
  return s / 2.0;
}

Eigen::MatrixXcd fibonacci_closed_form() {
  const double phi = std::numbers::phi;
  Eigen::MatrixXcd s(2, 2);
  s << 1, phi, phi, -1;
  return s / std::sqrt(2.0 + phi);
}

// Direct partial sum of a q-series; no tail handling.
Complex eval_direct(const QSeries& s, Complex tau) {
  Complex acc = 0.0;
  for (std::size_t n = 0; n < s.coeffs.size(); ++n)
    acc += to_double(s.coeffs[n]) * std::exp(2.0 * std::numbers::pi * Complex(0, 1) * (to_double(s.offset) + n) * tau);
  return acc;
}

}  // namespace

TEST_CASE("alpha and beta at the unit insertion are identities") {
  for (auto name : {"trivial", "ising", "fibonacci"}) {
    auto eng = oracle::engine(name);
    const int e = eng->cat().unit();
    auto a = eng->alpha_matrix(e), b = eng->beta_matrix(e);
    CHECK(max_abs(a - Eigen::MatrixXcd::Identity(a.rows(), a.cols())) < 1e-12);
    CHECK(max_abs(b - a) < 1e-12);
  }
  CHECK(oracle::engine("trivial")->alpha_matrix(0).size() == 1);
}

TEST_CASE("alpha restricted to a channel has the monodromy spectrum") {
  for (auto name : {"ising", "fibonacci"}) {
    auto eng = oracle::engine(name);
    const auto& cat = eng->cat();
    for (int a2 = 0; a2 < cat.size(); ++a2) {
      auto basis = eng->two_point_basis(a2);
      auto A = eng->alpha_matrix(a2);
      const Complex ph = oracle::turn(-cat.h(a2));
      for (int a1 = 0; a1 < cat.size(); ++a1) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (basis[i].channel == a1) idx.push_back(static_cast<int>(i));
        if (idx.empty()) continue;
        Eigen::MatrixXcd blk(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
          for (std::size_t j = 0; j < idx.size(); ++j) blk(i, j) = A(idx[i], idx[j]) / ph;
        auto ev = oracle::eigenvalues(blk);
        const int a2d = cat.dual(a2);
        double dist = std::min(oracle::multiset_distance(ev, oracle::monodromy_spectrum(cat, a1, a2d, 1)),
                               oracle::multiset_distance(ev, oracle::monodromy_spectrum(cat, a1, a2d, -1)));
        CAPTURE(name);
        CAPTURE(a1);
        CAPTURE(a2);
        CHECK(dist < 1e-12);
      }
    }
  }
}

TEST_CASE("S alpha = beta S on every insertion") {
  for (auto name : {"trivial", "ising", "fibonacci"}) {
    auto eng = oracle::engine(name);
    for (int a2 = 0; a2 < eng->size(); ++a2) {
      CAPTURE(name);
      CAPTURE(a2);
      CHECK(eng->check_salpha_betas(a2) < 1e-10);
    }
  }
}

TEST_CASE("conjugated braiding breaks S alpha = beta S") {
  CategoryData cat = oracle::category("ising");
  for (auto& [k, v] : cat.R) v = v.conj();
  ModularEngine eng(cat);
  CHECK(eng.check_salpha_betas(cat.ring.find("sig")) > 1e-3);
}

TEST_CASE("S at the unit insertion matches closed forms") {
  auto s0 = oracle::engine("trivial")->s_matrix(0);
  CHECK(std::abs(s0.m(0, 0) - 1.0) < 1e-15);
  CHECK(max_abs(oracle::engine("ising")->s_matrix(0).m - ising_closed_form()) < 1e-12);
  CHECK(max_abs(oracle::engine("fibonacci")->s_matrix(0).m - fibonacci_closed_form()) < 1e-12);
}

TEST_CASE("Ising S agrees with the theta-function character oracle") {
  Eigen::MatrixXcd s = oracle::engine("ising")->s_matrix(0).m;
  for (Complex tau : {Complex(0, 1), Complex(0.3, 0.8)}) {
    Eigen::MatrixXcd fit = oracle::fit_s(oracle::ising_characters, oracle::samples_near(tau));
    CHECK(max_abs(fit - s) < 1e-8);
  }
}

TEST_CASE("Fibonacci S agrees with its character transform") {
  const auto& cat = oracle::category("fibonacci");
  CharacterSet chars = load_characters(cat, 400);
  auto eval = [&](Complex tau) {
    std::vector<Complex> out;
    for (const auto& c : chars) out.push_back(eval_direct(c, tau));
    return out;
  };
  Eigen::MatrixXcd fit = oracle::fit_s(eval, oracle::samples_near(Complex(0, 1)));
  CHECK(max_abs(fit - oracle::engine("fibonacci")->s_matrix(0).m) < 1e-8);
}

TEST_CASE("S squared is charge conjugation and S inverse is S") {
  for (auto name : {"trivial", "ising", "fibonacci"}) {
    auto eng = oracle::engine(name);
    SMatrix s = eng->s_matrix(eng->cat().unit());
    Eigen::MatrixXcd c = charge_conjugation(eng->cat().ring).cast<Complex>();
    CHECK(max_abs(s.m * s.m - c) < 1e-9);
    CHECK(max_abs(eng->s_inverse(eng->cat().unit()).m - s.m) < 1e-12);
    CHECK(eng->check_s_e_column() < 1e-12);
    for (int a3 = 0; a3 < eng->size(); ++a3) CHECK(eng->check_s_inverse(a3) < 1e-10);
  }
}

TEST_CASE("Ising one-point space with the energy insertion") {
  auto eng = oracle::engine("ising");
  const int eps = eng->cat().ring.find("eps"), sig = eng->cat().ring.find("sig");
  SMatrix s = eng->s_matrix(eps);
  REQUIRE(s.channels == std::vector<int>{sig});
  CHECK(std::abs(std::abs(s.m(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("Verlinde round trip from the computed S") {
  for (auto name : {"trivial", "ising", "fibonacci"}) {
    auto eng = oracle::engine(name);
    auto v = verlinde_fusion_from_S(eng->s_matrix(eng->cat().unit()).m);
    const auto& ring = eng->cat().ring;
    for (int a = 0; a < ring.size(); ++a)
      for (int b = 0; b < ring.size(); ++b)
        for (int c = 0; c < ring.size(); ++c) CHECK(v.at(a, b, c) == ring.N(a, b, c));
  }
}

TEST_CASE("symmetry of S under insertion duality") {
  for (auto name : {"trivial", "ising", "fibonacci"}) {
    auto eng = oracle::engine(name);
    for (int a3 = 0; a3 < eng->size(); ++a3) {
      CAPTURE(name);
      CAPTURE(a3);
      CHECK(eng->check_symmetry(a3) < 1e-10);
    }
  }
}
