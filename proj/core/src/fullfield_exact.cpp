#include "torusmod/cyclotomic.hpp"
#include "torusmod/fullfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace torusmod {

namespace {

using Cyc = Cyclotomic;

struct NotExact {};

Cyc exact(const Value& v) {
  auto c = Cyc::from_value(v);
  if (!c) throw NotExact{};
  return *c;
}

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Cyc> v;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c) {}
  Cyc& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
  const Cyc& operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }
};

Mat operator*(const Mat& a, const Mat& b) {
  Mat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Mat inverse(Mat a) {
  const int n = a.rows;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("exact inverse: singular matrix");
    for (int k = 0; k < n; ++k) {
      std::swap(a(piv, k), a(col, k));
      std::swap(inv(piv, k), inv(col, k));
    }
    Cyc s = a(col, col).inverse();
    for (int k = 0; k < n; ++k) {
      a(col, k) *= s;
      inv(col, k) *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      Cyc f = a(i, col);
      for (int k = 0; k < n; ++k) {
        a(i, k) = a(i, k) - f * a(col, k);
        inv(i, k) = inv(i, k) - f * inv(col, k);
      }
    }
  }
  return inv;
}

// Nearest root of unity of modest order; the numeric sigma23 scalars are phases of this kind.
Cyc lift_phase(Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9) throw NotExact{};
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  for (long q = 1; q <= 1000; ++q) {
    const double p = std::round(turns * q);
    if (std::abs(turns * q - p) < 1e-9 * q) return Cyc::root_of_unity(Rational(static_cast<long>(p), q));
  }
  throw NotExact{};
}

struct Term {
  Cyc coef;
  Triple el;
};

// Exact counterpart of the S-matrix construction of ModularEngine. The numeric engine supplies
// the sigma23 scalars (lifted to exact phases) and branch choices for square roots.
class ExactEngine {
 public:
  explicit ExactEngine(const ModularEngine& eng) : eng_(eng), sym_(eng.symbols()), cat_(eng.cat()) {
    if (!cat_.braiding_override.empty()) throw NotExact{};
    for (const auto& [k, v] : cat_.F) F_.emplace(k, exact(v));
    for (const auto& [k, v] : cat_.R) R_.emplace(k, exact(v));
    for (const auto& y : sym_.triples()) t_.emplace(y, lift_phase(sym_.t(y.a, y.b, y.c)));
    const int e = cat_.unit();
    for (int a = 0; a < cat_.size(); ++a) fa_.push_back(f(a, cat_.dual(a), a, a, e, e));

    auto ch = eng_.one_point_channels(e);
    Mat s0 = raw_s(e, ch);
    const int ie = static_cast<int>(std::find(ch.begin(), ch.end(), e) - ch.begin());
    Cyc x = (s0 * s0)(ie, ie);
    auto root = x.inverse().sqrt_near(eng_.s_ee());
    if (!root) throw NotExact{};
    s_ee_ = *root;
  }

  std::vector<int> channels(int a3) const { return eng_.one_point_channels(a3); }

  Mat s_matrix(int a3) const {
    Mat m = raw_s(a3, channels(a3));
    for (auto& x : m.v) x *= s_ee_;
    return m;
  }

  Cyc pairing(const Triple& y1, const Triple& y2) const {
    for (Perm g : kAllPerms) {
      Term u = act(g, y1);
      if (u.el.b != dual(u.el.a)) continue;
      Term v = act(g, y2);
      const int b = u.el.a, c = dual(u.el.c), e = cat_.unit();
      Cyc base = s12(c, b, b) * f(b, dual(b), b, b, c, e) / p(c, b, b);
      // Ratio of sqrt(F) normalizations, from its square with the numeric branch.
      Cyc sq = fa_[u.el.c] * fa_[y1.a] * fa_[y1.b] / (fa_[b] * fa_[dual(b)] * fa_[y1.c]);
      Complex hint = sym_.sqrt_fa(u.el.c) / (sym_.sqrt_fa(b) * sym_.sqrt_fa(dual(b))) /
                     (sym_.sqrt_fa(y1.c) / (sym_.sqrt_fa(y1.a) * sym_.sqrt_fa(y1.b)));
      auto ratio = sq.sqrt_near(hint);
      if (!ratio) throw NotExact{};
      return *ratio * u.coef * v.coef * base;
    }
    throw std::invalid_argument("pairing: type has no mutually dual pair of labels");
  }

  int dual(int a) const { return cat_.dual(a); }

 private:
  Cyc f(int a1, int a2, int a3, int d, int b, int c) const {
    auto it = F_.find({a1, a2, a3, d, b, c});
    return it == F_.end() ? Cyc() : it->second;
  }

  Cyc s12(int a, int b, int c) const {
    if (!cat_.ring.admissible(a, b, c)) return Cyc();
    const auto& h = cat_.ring;
    return Cyc::root_of_unity((h.h(c) - h.h(a) - h.h(b)) / 2) / R_.at({a, b, c});
  }

  Cyc t(int a, int b, int c) const {
    auto it = t_.find({a, b, c});
    return it == t_.end() ? Cyc() : it->second;
  }

  Cyc p(int a, int b, int c) const { return s12(a, b, c) * t(b, a, c); }

  Term act(Perm g, const Triple& y) const {
    static const std::array<std::vector<Perm>, 6> words{{
        {},
        {Perm::s12},
        {Perm::s23},
        {Perm::s12, Perm::s23, Perm::s12},
        {Perm::s12, Perm::s23},
        {Perm::s23, Perm::s12},
    }};
    Term cur{Cyc(1), y};
    const auto& w = words[static_cast<int>(g)];
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

  struct Braid {
    std::vector<int> rows, cols;
    Mat m{0, 0};
  };

  Braid f_block(int a1, int a2, int a3, int d) const {
    Block shape = torusmod::f_block(cat_, a1, a2, a3, d);
    Braid out{shape.rows, shape.cols, Mat(static_cast<int>(shape.rows.size()), static_cast<int>(shape.cols.size()))};
    for (std::size_t i = 0; i < shape.rows.size(); ++i)
      for (std::size_t j = 0; j < shape.cols.size(); ++j) out.m(i, j) = f(a1, a2, a3, d, shape.rows[i], shape.cols[j]);
    return out;
  }

  // B^{(-1)} on the block (a1, a2, a3, d).
  Braid braid_inverse(int a1, int a2, int a3, int d) const {
    Braid f12 = f_block(a1, a2, a3, d);
    Braid f21 = f_block(a2, a1, a3, d);
    Mat f21inv = inverse(f21.m);  // rows f21.cols, columns f21.rows
    Mat D(static_cast<int>(f12.cols.size()), static_cast<int>(f21.cols.size()));
    for (std::size_t i = 0; i < f12.cols.size(); ++i) {
      auto it = std::find(f21.cols.begin(), f21.cols.end(), f12.cols[i]);
      if (it != f21.cols.end()) D(i, it - f21.cols.begin()) = R_.at({a1, a2, f12.cols[i]}).inverse();
    }
    return {f12.rows, f21.rows, f12.m * D * f21inv};
  }

  Braid monodromy(int a1, int a2) const {
    const int a2d = dual(a2);
    Braid first = braid_inverse(a1, a2d, a2, a1);
    Braid second = braid_inverse(a2d, a1, a2, a1);
    return {first.rows, second.cols, first.m * second.m};
  }

  Mat raw_s(int a3, const std::vector<int>& ch) const {
    const int e = cat_.unit(), a3d = dual(a3);
    const int n = static_cast<int>(ch.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int a1 = ch[i], a2 = ch[j], a2d = dual(a2);
        Braid mono = monodromy(a1, a2);
        auto r = std::find(mono.rows.begin(), mono.rows.end(), a3) - mono.rows.begin();
        auto c = std::find(mono.cols.begin(), mono.cols.end(), e) - mono.cols.begin();
        if (r == static_cast<long>(mono.rows.size()) || c == static_cast<long>(mono.cols.size()))
          throw std::runtime_error("s_matrix: missing braiding block");
        Cyc dual_part = p(a3d, a2d, a2d) / pairing({a3, a2, a2}, {a3d, a2d, a2d});
        m(i, j) = fa_[a3] / (fa_[a1] * fa_[a2]) * s12(a3, a1, a1) * dual_part * mono.m(r, c);
      }
    return m;
  }

  const ModularEngine& eng_;
  const SymbolData& sym_;
  const CategoryData& cat_;
  std::map<FIndex, Cyc> F_;
  std::map<RIndex, Cyc> R_;
  std::map<Triple, Cyc> t_;
  std::vector<Cyc> fa_;
  Cyc s_ee_;
};

struct ExactS {
  std::vector<int> channels;
  Mat m{0, 0};
  int index_of(int x) const {
    auto it = std::find(channels.begin(), channels.end(), x);
    return it == channels.end() ? -1 : static_cast<int>(it - channels.begin());
  }
};

}  // namespace

std::optional<double> check_s_invariance_exact(const FullFieldAlgebraSpec& ffa) {
  try {
    ExactEngine left(*ffa.left);
    std::optional<ExactEngine> right_own;
    if (ffa.right != ffa.left) right_own.emplace(*ffa.right);
    const ExactEngine& right = right_own ? *right_own : left;

    std::map<int, ExactS> SL, SRinv;
    for (const auto& s : ffa.sectors) {
      if (!SL.count(s.left)) SL[s.left] = {left.channels(s.left), left.s_matrix(s.left)};
      if (SRinv.count(s.right)) continue;
      const int b = s.right;
      ExactS si{right.channels(b), inverse(right.s_matrix(b))};
      if (ffa.right_basis == "dual") {
        const int bd = right.dual(b);
        std::vector<Cyc> lam;
        for (int x : si.channels) lam.push_back(right.pairing({bd, right.dual(x), right.dual(x)}, {b, x, x}).inverse());
        for (int i = 0; i < si.m.rows; ++i)
          for (int j = 0; j < si.m.cols; ++j) si.m(i, j) = lam[i] * si.m(i, j) / lam[j];
      } else if (ffa.right_basis != "canonical") {
        throw std::invalid_argument("unknown basis tag '" + ffa.right_basis + "'");
      }
      SRinv[b] = std::move(si);
    }

    std::map<std::array<int, 3>, Cyc> d;
    for (const auto& [k, v] : ffa.d) d.emplace(k, exact(v));
    auto coef = [&](int l, int m, int n) {
      auto it = d.find({l, m, n});
      return it == d.end() ? Cyc() : it->second;
    };

    const int ns = static_cast<int>(ffa.sectors.size());
    double res = 0.0;
    for (int m = 0; m < ns; ++m) {
      const ExactS& L = SL.at(ffa.sectors[m].left);
      const ExactS& R = SRinv.at(ffa.sectors[m].right);
      for (std::size_t i = 0; i < L.channels.size(); ++i)
        for (std::size_t j = 0; j < R.channels.size(); ++j) {
          Cyc lhs, rhs;
          for (int n = 0; n < ns; ++n) {
            Cyc dn = coef(n, m, n);
            if (dn.is_zero()) continue;
            int rl = L.index_of(ffa.sectors[n].left), rr = R.index_of(ffa.sectors[n].right);
            if (rl < 0 || rr < 0) throw std::runtime_error("check_s_invariance: coefficient outside the one-point spaces");
            lhs += dn * L.m(rl, static_cast<int>(i)) * R.m(rr, static_cast<int>(j));
          }
          for (int p = 0; p < ns; ++p)
            if (ffa.sectors[p].left == L.channels[i] && ffa.sectors[p].right == R.channels[j]) rhs += coef(p, m, p);
          res = std::max(res, std::abs((lhs - rhs).to_complex()));
        }
    }
    return res;
  } catch (const NotExact&) {
    return std::nullopt;
  }
}

}  // namespace torusmod
