#pragma once

#include "torusmod/rational.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace torusmod {

struct Label {
  int id = 0;
  std::string name;
};

class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> names, int unit, std::vector<int> dual);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int a) const { return labels_.at(a); }
  int unit() const { return unit_; }
  int dual(int a) const { return dual_.at(a); }
  const std::vector<int>& duals() const { return dual_; }
  int find(const std::string& name) const;  // -1 when absent

  int N(int a, int b, int c) const { return n_[index(a, b, c)]; }
  void set_N(int a, int b, int c, int v) { n_[index(a, b, c)] = v; }
  bool admissible(int a, int b, int c) const { return N(a, b, c) != 0; }
  bool multiplicity_free() const;

  const Rational& h(int a) const { return h_.at(a); }
  void set_h(int a, const Rational& v) { h_.at(a) = v; }
  const Rational& central_charge() const { return c_; }
  void set_central_charge(const Rational& c) { c_ = c; }

  // Set when weights or central charge came from decimal input.
  bool approximate() const { return approximate_; }
  void set_approximate(bool v) { approximate_ = v; }

 private:
  std::size_t index(int a, int b, int c) const {
    const std::size_t n = labels_.size();
    return (static_cast<std::size_t>(a) * n + b) * n + c;
  }

  std::vector<Label> labels_;
  int unit_ = 0;
  std::vector<int> dual_;
  std::vector<int> n_;
  std::vector<Rational> h_;
  Rational c_{0};
  bool approximate_ = false;
};

struct ValidationIssue {
  std::string kind;  // "dual", "unit", "associativity", "weights"
  std::string message;
};
using ValidationReport = std::vector<ValidationIssue>;

ValidationReport validate_fusion_ring(const FusionRing& ring);

// Perron-Frobenius dimensions; throws std::runtime_error when iteration stalls.
std::vector<double> quantum_dimensions(const FusionRing& ring, double tol = 1e-14, int max_iter = 100000);

// Dual map read off from N_{ab}^e (independent of the stored dual field).
std::vector<int> duals_from_fusion(const FusionRing& ring);

Eigen::MatrixXi charge_conjugation(const FusionRing& ring);

struct VerlindeResult {
  int n = 0;
  std::vector<int> N;  // N[(a*n+b)*n+c]
  double residual = 0.0;
  int at(int a, int b, int c) const { return N[(static_cast<std::size_t>(a) * n + b) * n + c]; }
};

class NotFusionCompatible : public std::runtime_error {
 public:
  NotFusionCompatible(const std::string& m, double residual) : std::runtime_error(m), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Row/column 0 is taken as the unit.
VerlindeResult verlinde_fusion_from_S(const Eigen::MatrixXcd& S, double tol = 1e-6);

}  // namespace torusmod
