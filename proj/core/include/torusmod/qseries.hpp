#pragma once

#include "torusmod/fullfield.hpp"
#include "torusmod/rational.hpp"
#include "torusmod/value.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace torusmod {

// sum_{n < coeffs.size()} coeffs[n] q^{offset + n}; terms at n >= size() are unknown.
struct QSeries {
  Rational offset{0};
  std::vector<Rational> coeffs;

  int truncation() const { return static_cast<int>(coeffs.size()); }
};

QSeries operator+(const QSeries& a, const QSeries& b);  // offsets must differ by an integer
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& k, const QSeries& a);

struct Evaluation {
  Complex value;
  double tail_bound;  // geometric estimate of the omitted terms
};

// q^{r} is taken as e^{2 pi i r tau}. Throws std::domain_error when Im tau <= 0.
Evaluation eval_qseries(const QSeries& s, Complex tau);

// Polynomial in w = 2 pi i with rational coefficients, stored sparsely by degree.
using WPoly = std::map<int, Rational>;

// exp(sum_j B_j y^{j+1} d/dy) y = log(1 + y); B[j] = B_j for 1 <= j <= order, B[0] = 0.
std::vector<Rational> compute_B_coeffs(int order);
// exp(sum_j A_j y^{j+1} d/dy) y = (1/w) log(1 + w y), solved over Q[w]; indexed like B.
std::vector<WPoly> compute_A_coeffs(int order);
// A_j as an exact value (numerically (2 pi i)^j B_j when the identity holds)
Value a_coeff_value(const WPoly& a);

// Coefficients of exp(sum_j B_j y^{j+1} d/dy) y through y^degree, by repeated application.
std::vector<Rational> apply_exp_derivation(const std::vector<Rational>& B, int degree);
std::vector<Rational> log1p_coeffs(int degree);  // index = power of y

// Ising characters (vacuum, energy, spin) with coeffs[0..order].
std::vector<QSeries> free_fermion_characters(int order);

// Characters indexed by label id of the category they belong to.
using CharacterSet = std::vector<QSeries>;

// max_a |chi_a(-1/tau) - sum_b S_ab chi_b(tau)|
double s_transform_residual(const CharacterSet& chars, const Eigen::MatrixXcd& S, Complex tau);
// max_a |chi_a(tau+1) - e^{2 pi i (h_a - c/24)} chi_a(tau)|
double t_transform_residual(const CharacterSet& chars, const FusionRing& ring, Complex tau);
// Per label, (offset - (h_a - c/24)) mod 1; the termwise T identity is exact iff all are 0.
std::vector<Rational> t_transform_termwise(const CharacterSet& chars, const FusionRing& ring);

struct PartitionResult {
  Complex z;
  double s_residual;  // |Z(-1/tau) - Z(tau)|
  double t_residual;  // |Z(tau+1) - Z(tau)|
  Rational t_termwise_defect;  // max over sectors of the termwise phase defect, mod 1
};

// Z = sum_n chi^L_{rL(n)} conj(chi^R_{rR(n)}); requires d_{n,vac}^{n} = 1 for every sector.
PartitionResult partition_function(const FullFieldAlgebraSpec& ffa, const CharacterSet& left,
                                   const CharacterSet& right, Complex tau);

}  // namespace torusmod
