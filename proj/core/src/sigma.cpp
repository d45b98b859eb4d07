#include "torusmod/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

namespace torusmod {

namespace {

// Position map on the label triple (a, b, c') of Y_{ab}^c: the image has x_i = x[pi[i]].
constexpr std::array<std::array<int, 3>, 6> kPositions{{
    {0, 1, 2},  // id
    {1, 0, 2},  // s12
    {0, 2, 1},  // s23
    {2, 1, 0},  // s13
    {2, 0, 1},  // s123
    {1, 2, 0},  // s132
}};

// Generator words, rightmost applied first.
const std::array<std::vector<Perm>, 6>& words() {
  static const std::array<std::vector<Perm>, 6> w{{
      {},
      {Perm::s12},
      {Perm::s23},
      {Perm::s12, Perm::s23, Perm::s12},
      {Perm::s12, Perm::s23},
      {Perm::s23, Perm::s12},
  }};
  return w;
}

Complex turn(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

struct Monomial {
  std::map<int, int> exps;
  Complex rhs{1.0, 0.0};
};

}  // namespace

const char* perm_name(Perm g) {
  switch (g) {
    case Perm::id: return "id";
    case Perm::s12: return "s12";
    case Perm::s23: return "s23";
    case Perm::s13: return "s13";
    case Perm::s123: return "s123";
    case Perm::s132: return "s132";
  }
  return "?";
}

Perm compose(Perm g, Perm h) {
  const auto& pg = kPositions[static_cast<int>(g)];
  const auto& ph = kPositions[static_cast<int>(h)];
  std::array<int, 3> r{ph[pg[0]], ph[pg[1]], ph[pg[2]]};
  for (Perm k : kAllPerms)
    if (kPositions[static_cast<int>(k)] == r) return k;
  return Perm::id;
}

SymbolData::SymbolData(CategoryData cat, double tol) : cat_(std::move(cat)), tol_(tol) {
  require_complete(cat_);
  const int e = unit();
  fa_.resize(size());
  for (int a = 0; a < size(); ++a) {
    fa_[a] = cat_.f(a, dual(a), a, a, e, e);
    if (std::abs(fa_[a]) < tol_)
      throw std::runtime_error("degenerate normalization: F_" + cat_.ring.label(a).name + " vanishes");
  }
  solve_sigma23();
}

std::vector<Triple> SymbolData::triples() const {
  std::vector<Triple> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      for (int c = 0; c < size(); ++c)
        if (cat_.ring.admissible(a, b, c)) out.push_back({a, b, c});
  return out;
}

Complex SymbolData::s12(int a, int b, int c) const {
  if (!cat_.ring.admissible(a, b, c)) return 0.0;
  return turn((cat_.h(c) - cat_.h(a) - cat_.h(b)) / 2.0) / cat_.r(a, b, c);
}

Complex SymbolData::t(int a, int b, int c) const {
  auto it = t_.find({a, b, c});
  return it == t_.end() ? Complex(0.0) : it->second;
}

Complex SymbolData::q(int a, int b, int c) const { return t(a, b, c) * s12(a, dual(c), dual(b)); }
Complex SymbolData::p(int a, int b, int c) const { return s12(a, b, c) * t(b, a, c); }

Term SymbolData::act(Perm g, const Triple& y) const { return act(g, Term{1.0, y}); }

Term SymbolData::act(Perm g, const Term& y) const {
  Term cur = y;
  const auto& w = words()[static_cast<int>(g)];
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto [a, b, c] = cur.el;
    if (*it == Perm::s12) {
      cur.coef *= s12(a, b, c);
      cur.el = {b, a, c};
    } else {
      cur.coef *= t(a, b, c);
      cur.el = {a, dual(c), dual(b)};
    }
  }
  return cur;
}

double SymbolData::group_law_residual() const {
  double res = 0.0;
  for (const auto& y : triples())
    for (Perm g : kAllPerms)
      for (Perm h : kAllPerms) {
        Term lhs = act(compose(g, h), y);
        Term rhs = act(g, act(h, y));
        if (lhs.el != rhs.el) return INFINITY;
        res = std::max(res, std::abs(lhs.coef - rhs.coef));
      }
  return res;
}

void SymbolData::solve_sigma23() {
  const int e = unit();
  auto sigma23_type = [&](const Triple& x) { return Triple{x.a, dual(x.c), dual(x.b)}; };
  auto canonical = [&](const Triple& x) {
    return (x.b == e && x.c == x.a) || (x.a == e && x.b == x.c) || (x.c == e && x.b == dual(x.a));
  };

  // Each admissible type maps to (representative index, exponent); index -1 means fixed to 1.
  std::map<Triple, std::pair<int, int>> var;
  std::vector<Monomial> eqs;
  int nvars = 0;
  for (const auto& x : triples()) {
    if (var.count(x)) continue;
    Triple y = sigma23_type(x);
    if (canonical(x) || canonical(y)) {
      var[x] = {-1, 0};
      var[y] = {-1, 0};
      continue;
    }
    int r = nvars++;
    var[x] = {r, 1};
    if (y != x) {
      var[y] = {r, -1};
    } else {
      Monomial m;  // sigma23^2 = 1 on a fixed type
      m.exps[r] = 2;
      eqs.push_back(m);
    }
  }
  auto add = [&](Monomial& m, const Triple& x, int k) {
    auto [r, s] = var.at(x);
    if (r >= 0 && (m.exps[r] += s * k) == 0) m.exps.erase(r);
  };

  // Cyclic identity F^{A1A2A3}_D[B][C] = p(A2,A3;B) q(A1,B;D) / (q(A1,A2;C) p(C,A3;D)) F^{A3 D' A1}_{A2'}[B'][C']
  const int n = size();
  for (int A1 = 0; A1 < n; ++A1)
    for (int A2 = 0; A2 < n; ++A2)
      for (int A3 = 0; A3 < n; ++A3)
        for (int D = 0; D < n; ++D)
          for (int B = 0; B < n; ++B)
            for (int C = 0; C < n; ++C) {
              if (!cat_.f_admissible({A1, A2, A3, D, B, C})) continue;
              Complex f = cat_.f(A1, A2, A3, D, B, C);
              Complex fc = cat_.f(A3, dual(D), A1, dual(A2), dual(B), dual(C));
              if (std::abs(f) < tol_ || std::abs(fc) < tol_) continue;
              Monomial m;
              add(m, {A3, A2, B}, 1);
              add(m, {A1, B, D}, 1);
              add(m, {A1, A2, C}, -1);
              add(m, {A3, C, D}, -1);
              Complex known = s12(A2, A3, B) * s12(A1, dual(D), dual(B)) / (s12(A1, dual(C), dual(A2)) * s12(C, A3, D));
              m.rhs = f / (known * fc);
              eqs.push_back(m);
            }
  // Braid relation s12 s23 s12 = s23 s12 s23 on every type.
  for (const auto& y : triples()) {
    Triple y12{y.b, y.a, y.c};
    Triple y23 = sigma23_type(y);
    Triple y12_23{y23.b, y23.a, y23.c};
    Triple y23_12 = sigma23_type(y12);
    Monomial m;
    add(m, y12, 1);
    add(m, y, -1);
    add(m, y12_23, -1);
    m.rhs = s12(y23.a, y23.b, y23.c) / (s12(y.a, y.b, y.c) * s12(y23_12.a, y23_12.b, y23_12.c));
    eqs.push_back(m);
  }

  std::vector<Complex> val(nvars, 1.0);
  auto residual_of = [&](const std::vector<Complex>& v) {
    double res = 0.0;
    for (const auto& m : eqs) {
      Complex prod = 1.0;
      for (auto [r, k] : m.exps) prod *= std::pow(v[r], k);
      res = std::max(res, std::abs(prod - m.rhs));
    }
    return res;
  };

  if (cat_.sigma23 == Sigma23Convention::table) {
    for (const auto& x : triples()) {
      auto it = cat_.sigma23_table.find(RIndex{x.a, x.b, x.c});
      Complex v;
      if (it != cat_.sigma23_table.end()) v = it->second.to_complex();
      else if (canonical(x)) v = 1.0;
      else
        throw IncompleteData("incomplete data: missing sigma23[" + cat_.ring.label(x.a).name + "," +
                             cat_.ring.label(x.b).name + "," + cat_.ring.label(x.c).name + "]");
      t_[x] = v;
    }
    // Residual of the same constraints with the table values.
    double res = 0.0;
    for (const auto& [x, rs] : var) {
      auto [r, s] = rs;
      if (r < 0) res = std::max(res, std::abs(t_[x] - 1.0));
    }
    for (const auto& x : triples()) res = std::max(res, std::abs(t_[x] * t_[sigma23_type(x)] - 1.0));
    std::vector<Complex> v(nvars, 1.0);
    for (const auto& [x, rs] : var)
      if (rs.first >= 0 && rs.second == 1) v[rs.first] = t_[x];
    t_residual_ = std::max(res, residual_of(v));
    t_solved_ = t_residual_ < 1e-8;
    return;
  }

  // Backtracking: repeatedly pick an equation with exactly one open unknown and branch on its roots.
  std::vector<bool> set(nvars, false);
  const double check_tol = 1e-8;
  std::function<bool(bool)> search = [&](bool strict) -> bool {
    const Monomial* pick = nullptr;
    int pick_var = -1;
    for (const auto& m : eqs) {
      int open = -1, nopen = 0;
      for (auto [r, k] : m.exps)
        if (!set[r]) {
          open = r;
          ++nopen;
        }
      if (nopen == 0 && !m.exps.empty() && strict) {
        Complex prod = 1.0;
        for (auto [r, k] : m.exps) prod *= std::pow(val[r], k);
        if (std::abs(prod - m.rhs) > check_tol) return false;
      }
      if (nopen == 1 && !pick) {
        pick = &m;
        pick_var = open;
      }
    }
    if (!pick) {
      auto it = std::find(set.begin(), set.end(), false);
      if (it == set.end()) return true;
      *it = true;  // unconstrained unknown: take the trivial phase
      if (search(strict)) return true;
      *it = false;
      return false;
    }
    Complex known = 1.0;
    int k = 0;
    for (auto [r, kk] : pick->exps) {
      if (r == pick_var) k = kk;
      else known *= std::pow(val[r], kk);
    }
    Complex w = pick->rhs / known;
    if (k < 0) {
      w = 1.0 / w;
      k = -k;
    }
    Complex base = std::pow(w, 1.0 / k);
    set[pick_var] = true;
    for (int j = 0; j < k; ++j) {
      val[pick_var] = base * turn(static_cast<double>(j) / k);
      if (search(strict)) return true;
      if (!strict) return true;
    }
    set[pick_var] = false;
    return false;
  };
  t_solved_ = search(true);
  if (!t_solved_) {
    std::fill(set.begin(), set.end(), false);
    std::fill(val.begin(), val.end(), Complex(1.0));
    search(false);
  }
  for (const auto& [x, rs] : var) {
    auto [r, s] = rs;
    t_[x] = r < 0 ? Complex(1.0) : (s == 1 ? val[r] : 1.0 / val[r]);
  }
  t_residual_ = residual_of(val);
  if (t_residual_ > check_tol) t_solved_ = false;
}

Complex SymbolData::fa(int a) const { return fa_.at(a); }
Complex SymbolData::sqrt_fa(int a) const { return principal_sqrt(fa_.at(a)); }

Complex SymbolData::normalized_pairing(const Triple& y1, const Triple& y2) const {
  return sqrt_fa(y1.c) / (sqrt_fa(y1.a) * sqrt_fa(y1.b)) * pairing(y1, y2);
}

Complex SymbolData::pairing(const Triple& y1, const Triple& y2) const {
  const auto& N = cat_.ring;
  if (!N.admissible(y1.a, y1.b, y1.c) || y2 != Triple{dual(y1.a), dual(y1.b), dual(y1.c)})
    throw std::invalid_argument("pairing: incompatible intertwiner types");
  // Transport y1 by some g in S3 to a type (b, b'; c'), where the pairing is an F entry;
  // the sqrt(F)-normalized form is invariant under the action.
  for (Perm g : kAllPerms) {
    Term u = act(g, y1);
    if (u.el.b != dual(u.el.a)) continue;
    Term v = act(g, y2);
    const int b = u.el.a, c = dual(u.el.c), e = unit();
    Complex base = s12(c, b, b) * cat_.f(b, dual(b), b, b, c, e) / p(c, b, b);
    Complex norm_g = sqrt_fa(u.el.c) / (sqrt_fa(b) * sqrt_fa(dual(b)));
    Complex norm_1 = sqrt_fa(y1.c) / (sqrt_fa(y1.a) * sqrt_fa(y1.b));
    return norm_g / norm_1 * u.coef * v.coef * base;
  }
  throw std::invalid_argument("pairing: type has no mutually dual pair of labels");
}

Complex SymbolData::dual_coefficient(int a1, int a2, int a3) const {
  Complex g = pairing({a1, a2, a3}, {dual(a1), dual(a2), dual(a3)});
  if (std::abs(g) < tol_) throw std::runtime_error("dual_basis: singular Gram matrix");
  return 1.0 / g;
}

double SymbolData::f_coef2_residual() const {
  const int e = unit();
  double res = 0.0;
  for (int a2 = 0; a2 < size(); ++a2)
    for (int a3 = 0; a3 < size(); ++a3) {
      if (!cat_.ring.admissible(a3, a2, a2)) continue;
      const int a2d = dual(a2), a3d = dual(a3);
      // s12(s13(Y')) with Y' = k Y_{a3'a2'}^{a2'} lands on Y_{a2'a2}^{a3}.
      Term right = act(compose(Perm::s12, Perm::s13), Term{dual_coefficient(a3, a2, a2), {a3d, a2d, a2d}});
      if (right.el != Triple{a2d, a2, a3}) return INFINITY;
      Complex lhs = s12(a3, a2, a2) * right.coef * cat_.f(a2, a2d, a2, a2, a3, e);
      res = std::max(res, std::abs(lhs - fa(a2) / fa(a3)));
    }
  return res;
}

}  // namespace torusmod
