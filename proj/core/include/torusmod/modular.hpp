#pragma once

#include "torusmod/sigma.hpp"

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <vector>

namespace torusmod {

// Basis element Psi(Y_{a a1}^{a1} (x) Y_{a2 a2'}^{a}) of the genus-one two-point space for a2.
struct TwoPointIndex {
  int middle;   // a
  int channel;  // a1
  bool operator==(const TwoPointIndex&) const = default;
};

struct SMatrix {
  int insertion = 0;
  std::vector<int> channels;  // one-point basis Y_{a3 a1}^{a1}, ordered by a1
  Eigen::MatrixXcd m;
  int index_of(int channel) const;
};

class ModularEngine {
 public:
  explicit ModularEngine(std::shared_ptr<const SymbolData> sym);
  explicit ModularEngine(CategoryData cat);

  const SymbolData& symbols() const { return *sym_; }
  const CategoryData& cat() const { return sym_->cat(); }
  int size() const { return sym_->size(); }

  std::vector<int> one_point_channels(int a3) const;
  std::vector<TwoPointIndex> two_point_basis(int a2) const;

  // Operator matrices: T(Psi_i) = sum_j T(i,j) Psi_j.
  Eigen::MatrixXcd alpha_matrix(int a2) const;
  Eigen::MatrixXcd beta_matrix(int a2) const;
  // Block-diagonal S on the two-point basis of a2.
  Eigen::MatrixXcd s_two_point(int a2) const;

  Complex s_ee() const { return s_ee_; }
  SMatrix s_matrix(int a3) const;
  SMatrix s_inverse(int a3, double max_condition = 1e12) const;

  double check_salpha_betas(int a2) const;
  double check_symmetry(int a3) const;
  double check_s_inverse(int a3) const;
  // max_a |S(e)[a][e] - S_e^e / F_a|
  double check_s_e_column() const;

 private:
  Eigen::MatrixXcd raw_s(int a3, const std::vector<int>& ch) const;

  std::shared_ptr<const SymbolData> sym_;
  Complex s_ee_{1.0, 0.0};
};

}  // namespace torusmod
