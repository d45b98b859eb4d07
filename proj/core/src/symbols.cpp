#include "torusmod/symbols.hpp"

#include <algorithm>
#include <cmath>

namespace torusmod {

bool CategoryData::f_admissible(const FIndex& k) const {
  return ring.admissible(k.a2, k.a3, k.b) && ring.admissible(k.a1, k.b, k.d) &&
         ring.admissible(k.a1, k.a2, k.c) && ring.admissible(k.c, k.a3, k.d);
}

Complex CategoryData::f(int a1, int a2, int a3, int d, int b, int c) const {
  auto it = F.find({a1, a2, a3, d, b, c});
  return it == F.end() ? Complex(0.0) : it->second.to_complex();
}

Complex CategoryData::r(int a, int b, int c) const {
  auto it = R.find({a, b, c});
  return it == R.end() ? Complex(0.0) : it->second.to_complex();
}

std::string CategoryData::describe(const FIndex& k) const {
  auto nm = [&](int a) { return ring.label(a).name; };
  return "F[" + nm(k.a1) + "," + nm(k.a2) + "," + nm(k.a3) + "," + nm(k.d) + "," + nm(k.b) + "," + nm(k.c) + "]";
}

void require_multiplicity_free(const CategoryData& cat) {
  if (!cat.ring.multiplicity_free()) throw Unsupported("unsupported: S3 action data required (fusion multiplicity > 1)");
}

void require_complete(const CategoryData& cat) {
  require_multiplicity_free(cat);
  const int n = cat.size();
  auto nm = [&](int a) { return cat.ring.label(a).name; };
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        for (int d = 0; d < n; ++d)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              FIndex k{a1, a2, a3, d, b, c};
              if (cat.f_admissible(k) && !cat.F.count(k)) throw IncompleteData("incomplete data: missing " + cat.describe(k));
            }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cat.ring.admissible(a, b, c) && !cat.R.count({a, b, c}))
          throw IncompleteData("incomplete data: missing R[" + nm(a) + "," + nm(b) + "," + nm(c) + "]");
}

int Block::row_of(int label) const {
  auto it = std::find(rows.begin(), rows.end(), label);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int Block::col_of(int label) const {
  auto it = std::find(cols.begin(), cols.end(), label);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

Block f_block(const CategoryData& cat, int a1, int a2, int a3, int d) {
  const auto& N = cat.ring;
  Block blk;
  for (int b = 0; b < cat.size(); ++b)
    if (N.admissible(a2, a3, b) && N.admissible(a1, b, d)) blk.rows.push_back(b);
  for (int c = 0; c < cat.size(); ++c)
    if (N.admissible(a1, a2, c) && N.admissible(c, a3, d)) blk.cols.push_back(c);
  blk.m.resize(blk.rows.size(), blk.cols.size());
  for (std::size_t i = 0; i < blk.rows.size(); ++i)
    for (std::size_t j = 0; j < blk.cols.size(); ++j) {
      FIndex k{a1, a2, a3, d, blk.rows[i], blk.cols[j]};
      auto it = cat.F.find(k);
      if (it == cat.F.end()) throw IncompleteData("incomplete data: missing " + cat.describe(k));
      blk.m(i, j) = it->second.to_complex();
    }
  return blk;
}

Block f_inverse_block(const CategoryData& cat, int a1, int a2, int a3, int d) {
  Block f = f_block(cat, a1, a2, a3, d);
  if (f.rows.size() != f.cols.size())
    throw std::runtime_error("F block " + cat.describe({a1, a2, a3, d, -1, -1}) + " is not square");
  Block inv;
  inv.rows = f.cols;
  inv.cols = f.rows;
  if (!f.rows.empty()) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(f.m);
    if (!lu.isInvertible()) throw std::runtime_error("F block is singular");
    inv.m = lu.inverse();
  }
  return inv;
}

namespace {

// Same identity in exact arithmetic; sums that leave the closed form fall back to doubles.
double pentagon_exact(const CategoryData& cat) {
  const int n = cat.size();
  const Value zero;
  auto fv = [&](int a1, int a2, int a3, int d, int b, int c) -> const Value& {
    auto it = cat.F.find({a1, a2, a3, d, b, c});
    return it == cat.F.end() ? zero : it->second;
  };
  double res = 0.0;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        for (int a4 = 0; a4 < n; ++a4)
          for (int d = 0; d < n; ++d)
            for (int x = 0; x < n; ++x) {
              if (!cat.ring.admissible(a1, x, d)) continue;
              for (int y = 0; y < n; ++y) {
                if (!cat.ring.admissible(a3, a4, y)) continue;
                for (int u = 0; u < n; ++u)
                  for (int v = 0; v < n; ++v) {
                    Value lhs = fv(a1, a2, y, d, x, u) * fv(u, a3, a4, d, y, v);
                    Value rhs;
                    for (int w = 0; w < n; ++w) {
                      const Value& f1 = fv(a2, a3, a4, x, y, w);
                      if (f1.is_zero()) continue;
                      const Value& f2 = fv(a1, w, a4, d, x, v);
                      if (f2.is_zero()) continue;
                      rhs += f1 * f2 * fv(a1, a2, a3, v, w, u);
                    }
                    res = std::max(res, std::abs((lhs - rhs).to_complex()));
                  }
              }
            }
  return res;
}

}  // namespace

double pentagon_check(const CategoryData& cat) {
  require_complete(cat);
  if (std::all_of(cat.F.begin(), cat.F.end(), [](const auto& kv) { return kv.second.is_exact(); }))
    return pentagon_exact(cat);
  const int n = cat.size();
  double res = 0.0;
  // F^{a1 a2 y}_d[x][u] F^{u a3 a4}_d[y][v] = sum_w F^{a2 a3 a4}_x[y][w] F^{a1 w a4}_d[x][v] F^{a1 a2 a3}_v[w][u]
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        for (int a4 = 0; a4 < n; ++a4)
          for (int d = 0; d < n; ++d)
            for (int x = 0; x < n; ++x) {
              if (!cat.ring.admissible(a1, x, d)) continue;
              for (int y = 0; y < n; ++y) {
                if (!cat.ring.admissible(a3, a4, y)) continue;
                for (int u = 0; u < n; ++u)
                  for (int v = 0; v < n; ++v) {
                    Complex lhs = cat.f(a1, a2, y, d, x, u) * cat.f(u, a3, a4, d, y, v);
                    Complex rhs = 0.0;
                    for (int w = 0; w < n; ++w)
                      rhs += cat.f(a2, a3, a4, x, y, w) * cat.f(a1, w, a4, d, x, v) * cat.f(a1, a2, a3, v, w, u);
                    res = std::max(res, std::abs(lhs - rhs));
                  }
              }
            }
  return res;
}

double hexagon_check(const CategoryData& cat) {
  require_complete(cat);
  const int n = cat.size();
  // Written with the transposed symbol G^{abc}_d[e][f] = F^{abc}_d[f][e].
  auto G = [&](int a, int b, int c, int d, int e, int f) { return cat.f(a, b, c, d, f, e); };
  double res = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int g = 0; g < n; ++g) {
              Complex lhs = cat.r(c, a, e) * G(a, c, b, d, e, g) * cat.r(c, b, g);
              Complex rhs = 0.0;
              for (int f = 0; f < n; ++f) rhs += G(c, a, b, d, e, f) * cat.r(c, f, d) * G(a, b, c, d, f, g);
              res = std::max(res, std::abs(lhs - rhs));
            }
  return res;
}

double normalization_residual(const CategoryData& cat) {
  const int e = cat.unit();
  double res = 0.0;
  for (int a = 0; a < cat.size(); ++a) {
    auto it = cat.F.find({a, cat.dual(a), e, e, cat.dual(a), e});
    if (it == cat.F.end()) throw IncompleteData("incomplete data: missing " + cat.describe({a, cat.dual(a), e, e, cat.dual(a), e}));
    res = std::max(res, std::abs(it->second.to_complex() - 1.0));
  }
  return res;
}

bool normalization_exact(const CategoryData& cat) {
  const int e = cat.unit();
  for (int a = 0; a < cat.size(); ++a) {
    auto it = cat.F.find({a, cat.dual(a), e, e, cat.dual(a), e});
    if (it == cat.F.end() || !it->second.identical(Value(1))) return false;
  }
  return true;
}

double ribbon_residual(const CategoryData& cat) {
  const int n = cat.size();
  double res = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cat.ring.admissible(a, b, c)) {
          Value lhs = cat.R.at({a, b, c}) * cat.R.at({b, a, c});
          Value twist = Value::root_of_unity(cat.ring.h(c) - cat.ring.h(a) - cat.ring.h(b));
          res = std::max(res, std::abs((lhs - twist).to_complex()));
        }
  return res;
}

Block braiding_move(const CategoryData& cat, int r, int a1, int a2, int a3, int d) {
  if (r != 1 && r != -1) throw std::invalid_argument("braiding_move: r must be +1 or -1");
  Block f12 = f_block(cat, a1, a2, a3, d);
  Block f21inv = f_inverse_block(cat, a2, a1, a3, d);
  if (f12.rows.empty() || f21inv.cols.empty()) {
    auto nm = [&](int a) { return cat.ring.label(a).name; };
    throw std::invalid_argument("braiding_move: inadmissible block (" + nm(a1) + "," + nm(a2) + "," + nm(a3) + "," + nm(d) + ")");
  }
  Block out;
  out.rows = f12.rows;
  out.cols = f21inv.cols;
  if (auto it = cat.braiding_override.find({r, a1, a2, a3, d}); it != cat.braiding_override.end()) {
    if (it->second.rows() != static_cast<long>(out.rows.size()) || it->second.cols() != static_cast<long>(out.cols.size()))
      throw std::runtime_error("braiding override has the wrong shape");
    out.m = it->second;
    return out;
  }
  // Iterate channel c carries Y_{a1a2}^c, which the braid sends to Y_{a2a1}^c.
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(f12.cols.size(), f21inv.rows.size());
  for (std::size_t i = 0; i < f12.cols.size(); ++i) {
    int c = f12.cols[i];
    int j = f21inv.row_of(c);
    if (j < 0) continue;
    D(i, j) = r == -1 ? 1.0 / cat.r(a1, a2, c) : cat.r(a2, a1, c);
  }
  out.m = f12.m * D * f21inv.m;
  return out;
}

Block monodromy(const CategoryData& cat, int a1, int a2) {
  const int a2d = cat.dual(a2);
  Block first = braiding_move(cat, -1, a1, a2d, a2, a1);
  Block second = braiding_move(cat, -1, a2d, a1, a2, a1);
  Block out;
  out.rows = first.rows;
  out.cols = second.cols;
  out.m = first.m * second.m;
  return out;
}

}  // namespace torusmod
