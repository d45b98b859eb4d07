#pragma once

#include "torusmod/symbols.hpp"

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace torusmod {

// Elements of S3 acting on intertwiner types. Composite elements are fixed words in
// the generators (applied right to left):
//   s123 = s12 s23,  s132 = s23 s12,  s13 = s12 s23 s12.
enum class Perm { id, s12, s23, s13, s123, s132 };
inline constexpr std::array<Perm, 6> kAllPerms{Perm::id, Perm::s12, Perm::s23, Perm::s13, Perm::s123, Perm::s132};

const char* perm_name(Perm g);
Perm compose(Perm g, Perm h);  // g after h

// Type (a, b; c) of Y_{ab}^{c}; multiplicity-free so it names a basis element.
struct Triple {
  int a, b, c;
  auto operator<=>(const Triple&) const = default;
};

struct Term {
  Complex coef;
  Triple el;
};

class SymbolData {
 public:
  explicit SymbolData(CategoryData cat, double tol = 1e-9);

  const CategoryData& cat() const { return cat_; }
  int size() const { return cat_.size(); }
  int unit() const { return cat_.unit(); }
  int dual(int a) const { return cat_.dual(a); }

  std::vector<Triple> triples() const;

  // sigma12(Y_{ab}^c) = s12(a,b;c) Y_{ba}^c
  Complex s12(int a, int b, int c) const;
  // sigma23(Y_{ab}^c) = t(a,b;c) Y_{ac'}^{b'}
  Complex t(int a, int b, int c) const;
  Complex q(int a, int b, int c) const;  // sigma123 scalar
  Complex p(int a, int b, int c) const;  // sigma132 scalar

  Term act(Perm g, const Triple& y) const;
  Term act(Perm g, const Term& y) const;

  // Max violation of sigma12^2 = sigma23^2 = 1, the braid relation and the composition
  // law act(g h) = act(g) act(h) over all basis elements.
  double group_law_residual() const;
  // Max violation of the constraints the derived sigma23 scalars are solved from.
  double sigma23_residual() const { return t_residual_; }
  bool sigma23_solved() const { return t_solved_; }

  Complex fa(int a) const;
  Complex sqrt_fa(int a) const;

  // <y1, y2> for y1 of type (a1,a2;a3) and y2 of type (a1',a2';a3').
  Complex pairing(const Triple& y1, const Triple& y2) const;
  // The sqrt(F)-normalized form of the same pair.
  Complex normalized_pairing(const Triple& y1, const Triple& y2) const;
  // Coefficient k with Y'_{a1'a2'}^{a3'} = k Y_{a1'a2'}^{a3'} dual to Y_{a1a2}^{a3}.
  Complex dual_coefficient(int a1, int a2, int a3) const;

  // max over admissible (a3,a2) of |F(s12(Y_{a3a2}^{a2}) (x) s12(s13(Y'...)); Y_{ea2} (x) Y_{a2a2'}^e) - F_{a2}/F_{a3}|
  double f_coef2_residual() const;

 private:
  void solve_sigma23();

  CategoryData cat_;
  double tol_;
  std::map<Triple, Complex> t_;
  std::vector<Complex> fa_;
  double t_residual_ = 0.0;
  bool t_solved_ = true;
};

}  // namespace torusmod
