#pragma once

#include "torusmod/modular.hpp"

#include <array>
#include <map>
#include <optional>
#include <memory>
#include <string>
#include <vector>

namespace torusmod {

struct Sector {
  int left, right;
};

struct FullFieldAlgebraSpec {
  std::shared_ptr<const ModularEngine> left, right;
  std::vector<Sector> sectors;
  // d[{l, m, n}] is d_{mn}^{l}; absent entries are zero.
  std::map<std::array<int, 3>, Value> d;
  std::string left_basis = "canonical";
  std::string right_basis = "dual";

  Complex coefficient(int l, int m, int n) const;
  int vacuum_sector() const;  // -1 when (e, e) is not a sector
};

FullFieldAlgebraSpec build_diagonal_ffa(std::shared_ptr<const ModularEngine> cat);

struct TCheck {
  bool pass;
  Rational defect;  // (cL - cR) mod 24, in [0, 24)
};
TCheck check_t_invariance(const Rational& cL, const Rational& cR);
TCheck check_t_invariance(const FullFieldAlgebraSpec& ffa);

// Sectors whose weights differ by a non-integer.
std::vector<int> single_valuedness_check(const FullFieldAlgebraSpec& ffa);

using SFamily = std::map<int, SMatrix>;  // by insertion label
SFamily left_s_family(const FullFieldAlgebraSpec& ffa);
// S^{-1} on the right side, expressed in the right basis named by ffa.right_basis.
SFamily right_s_inverse_family(const FullFieldAlgebraSpec& ffa);

double check_s_invariance(const FullFieldAlgebraSpec& ffa, const SFamily& SL, const SFamily& SRinv);
double check_s_invariance(const FullFieldAlgebraSpec& ffa);

// The same identity in exact cyclotomic arithmetic, so a zero residual is exactly zero. Empty
// when some F, R or d constant has no exact form (decimal input, sums of surds, overrides).
std::optional<double> check_s_invariance_exact(const FullFieldAlgebraSpec& ffa);

}  // namespace torusmod
