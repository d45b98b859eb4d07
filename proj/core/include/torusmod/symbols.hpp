#pragma once

#include "torusmod/fusion.hpp"
#include "torusmod/value.hpp"

#include <Eigen/Dense>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusmod {

// F^{a1 a2 a3}_d[b][c]: coefficient taking the product pair
// Y_{a1 b}^{d} (x) Y_{a2 a3}^{b} to the iterate pair Y_{c a3}^{d} (x) Y_{a1 a2}^{c}.
struct FIndex {
  int a1, a2, a3, d, b, c;
  auto operator<=>(const FIndex&) const = default;
};

// R^{ab}_c, also used for the sigma23 scalar table t(a,b;c).
struct RIndex {
  int a, b, c;
  auto operator<=>(const RIndex&) const = default;
};

struct BraidIndex {
  int r, a1, a2, a3, d;
  auto operator<=>(const BraidIndex&) const = default;
};

enum class Sigma23Convention { derived, table };

class IncompleteData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CategoryData {
  std::string name;
  FusionRing ring;
  std::map<FIndex, Value> F;
  std::map<RIndex, Value> R;
  Sigma23Convention sigma23 = Sigma23Convention::derived;
  std::map<RIndex, Value> sigma23_table;
  std::string basis = "canonical";
  std::map<BraidIndex, Eigen::MatrixXcd> braiding_override;

  int size() const { return ring.size(); }
  int unit() const { return ring.unit(); }
  int dual(int a) const { return ring.dual(a); }
  double h(int a) const { return to_double(ring.h(a)); }

  bool f_admissible(const FIndex& k) const;
  // Zero for absent entries.
  Complex f(int a1, int a2, int a3, int d, int b, int c) const;
  Complex r(int a, int b, int c) const;

  std::string describe(const FIndex& k) const;
};

// Throws IncompleteData naming the first admissible F/R index without an entry.
void require_complete(const CategoryData& cat);
// Throws Unsupported for categories with some N > 1.
void require_multiplicity_free(const CategoryData& cat);

struct Block {
  std::vector<int> rows, cols;
  Eigen::MatrixXcd m;
  int row_of(int label) const;
  int col_of(int label) const;
  bool empty() const { return rows.empty() && cols.empty(); }
};

// Rows b with N_{a2a3}^b N_{a1b}^d != 0, columns c with N_{a1a2}^c N_{ca3}^d != 0.
Block f_block(const CategoryData& cat, int a1, int a2, int a3, int d);
// Rows c, columns b.
Block f_inverse_block(const CategoryData& cat, int a1, int a2, int a3, int d);

double pentagon_check(const CategoryData& cat);
double hexagon_check(const CategoryData& cat);
// max_a |F^{a a' e}_e[a'][e] - 1|
double normalization_residual(const CategoryData& cat);
bool normalization_exact(const CategoryData& cat);
// max |R^{ab}_c R^{ba}_c - e^{2 pi i (h_c - h_a - h_b)}|
double ribbon_residual(const CategoryData& cat);

// B^{(r)} on the block (a1,a2,a3,d); rows follow f_block(a1,a2,a3,d).rows, columns
// follow f_block(a2,a1,a3,d).rows. B^{(+1)}(a1,a2) and B^{(-1)}(a2,a1) are inverse.
Block braiding_move(const CategoryData& cat, int r, int a1, int a2, int a3, int d);

// (B^{(-1)})^2 on the block (a1, a2', a2, a1): rows and columns are the middle label.
Block monodromy(const CategoryData& cat, int a1, int a2);

}  // namespace torusmod
