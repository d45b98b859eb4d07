#include "torusmod/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torusmod {

namespace {

Complex turn(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

int SMatrix::index_of(int channel) const {
  auto it = std::find(channels.begin(), channels.end(), channel);
  return it == channels.end() ? -1 : static_cast<int>(it - channels.begin());
}

ModularEngine::ModularEngine(CategoryData cat) : ModularEngine(std::make_shared<const SymbolData>(std::move(cat))) {}

ModularEngine::ModularEngine(std::shared_ptr<const SymbolData> sym) : sym_(std::move(sym)) {
  // Fix S_e^e from S(e)^2 = C at the unit entry; the sign makes S_ee positive.
  const int e = sym_->unit();
  auto ch = one_point_channels(e);
  Eigen::MatrixXcd s0 = raw_s(e, ch);
  int ie = static_cast<int>(std::find(ch.begin(), ch.end(), e) - ch.begin());
  Complex x = (s0 * s0)(ie, ie);
  if (std::abs(x) < 1e-12) throw std::runtime_error("undetermined S_e^e normalization; S(e)^2 has a vanishing unit entry");
  s_ee_ = 1.0 / principal_sqrt(x);
  if ((s_ee_ * s0(ie, ie)).real() < 0) s_ee_ = -s_ee_;
}

std::vector<int> ModularEngine::one_point_channels(int a3) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (cat().ring.admissible(a3, a, a)) out.push_back(a);
  return out;
}

std::vector<TwoPointIndex> ModularEngine::two_point_basis(int a2) const {
  const auto& N = cat().ring;
  std::vector<TwoPointIndex> out;
  for (int a = 0; a < size(); ++a)
    for (int a1 = 0; a1 < size(); ++a1)
      if (N.admissible(a, a1, a1) && N.admissible(a2, cat().dual(a2), a)) out.push_back({a, a1});
  return out;
}

Eigen::MatrixXcd ModularEngine::alpha_matrix(int a2) const {
  const auto& S = *sym_;
  const int a2d = S.dual(a2);
  auto bs = two_point_basis(a2);
  const Complex ph = turn(-cat().h(a2));
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(bs.size(), bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto [a, a1] = bs[i];
    Block mono = monodromy(cat(), a1, a2);
    for (std::size_t j = 0; j < bs.size(); ++j) {
      auto [a4, a3] = bs[j];
      if (a3 != a1) continue;
      int r = mono.row_of(a), c = mono.col_of(a4);
      if (r < 0 || c < 0) throw std::runtime_error("alpha_matrix: missing braiding block");
      A(i, j) = ph * S.s12(a, a1, a1) * S.s12(a2, a2d, a) / (S.s12(a4, a1, a1) * S.s12(a2, a2d, a4)) * mono.m(r, c);
    }
  }
  return A;
}

Eigen::MatrixXcd ModularEngine::beta_matrix(int a2) const {
  const auto& S = *sym_;
  const auto& N = cat().ring;
  const int a2d = S.dual(a2);
  auto bs = two_point_basis(a2);
  const Complex ph = turn(-cat().h(a2));
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(bs.size(), bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto [a, a1] = bs[i];
    const int a1d = S.dual(a1);
    for (std::size_t j = 0; j < bs.size(); ++j) {
      auto [a4, a3] = bs[j];
      const int a3d = S.dual(a3);
      if (!N.admissible(a2, a1d, a3d) || !N.admissible(a3d, a1, a2)) continue;
      Complex f1 = S.s12(a, a1, a1) * S.s12(a2, a2d, a) / (S.q(a2, a1d, a3d) * S.p(a3d, a1, a2)) *
                   cat().f(a1, a2d, a2, a1, a, a3);
      Complex f2 = S.q(a3d, a1, a2) * cat().f(a2, a2d, a3d, a3d, a1d, a4);
      // The column element enters as sigma23 of the canonical Y_{a4 a3'}^{a3'}.
      B(i, j) = ph * turn(cat().h(a4) / 2.0) * f1 * f2 * S.t(a4, a3d, a3d);
    }
  }
  return B;
}

Eigen::MatrixXcd ModularEngine::raw_s(int a3, const std::vector<int>& ch) const {
  const auto& S = *sym_;
  const int e = S.unit(), a3d = S.dual(a3);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ch.size(), ch.size());
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const int a1 = ch[i];
    for (std::size_t j = 0; j < ch.size(); ++j) {
      const int a2 = ch[j], a2d = S.dual(a2);
      Block mono = monodromy(cat(), a1, a2);
      int r = mono.row_of(a3), c = mono.col_of(e);
      if (r < 0 || c < 0) throw std::runtime_error("s_matrix: missing braiding block");
      // sigma132 of the dual element Y' = Y_{a3'a2'}^{a2'} / <Y_{a3a2}^{a2}, Y_{a3'a2'}^{a2'}>
      Complex dual_part = S.p(a3d, a2d, a2d) / S.pairing({a3, a2, a2}, {a3d, a2d, a2d});
      m(i, j) = S.fa(a3) / (S.fa(a1) * S.fa(a2)) * S.s12(a3, a1, a1) * dual_part * mono.m(r, c);
    }
  }
  return m;
}

SMatrix ModularEngine::s_matrix(int a3) const {
  SMatrix out;
  out.insertion = a3;
  out.channels = one_point_channels(a3);
  out.m = s_ee_ * raw_s(a3, out.channels);
  return out;
}

SMatrix ModularEngine::s_inverse(int a3, double max_condition) const {
  SMatrix s = s_matrix(a3);
  if (s.channels.empty()) return s;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.m);
  const auto& sv = svd.singularValues();
  double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(cond < max_condition)) throw std::runtime_error("s_inverse: S matrix is ill-conditioned");
  s.m = s.m.inverse().eval();
  return s;
}

Eigen::MatrixXcd ModularEngine::s_two_point(int a2) const {
  auto bs = two_point_basis(a2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(bs.size(), bs.size());
  std::vector<std::optional<SMatrix>> cache(size());
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (bs[i].middle != bs[j].middle) continue;
      auto& s = cache[bs[i].middle];
      if (!s) s = s_matrix(bs[i].middle);
      m(i, j) = s->m(s->index_of(bs[i].channel), s->index_of(bs[j].channel));
    }
  return m;
}

double ModularEngine::check_salpha_betas(int a2) const {
  Eigen::MatrixXcd S = s_two_point(a2);
  return max_abs(alpha_matrix(a2) * S - S * beta_matrix(a2));
}

double ModularEngine::check_symmetry(int a3) const {
  const auto& S = *sym_;
  const int a3d = S.dual(a3);
  SMatrix lhs = s_matrix(a3), rhs = s_matrix(a3d);
  double res = 0.0;
  for (std::size_t i = 0; i < lhs.channels.size(); ++i)
    for (std::size_t j = 0; j < lhs.channels.size(); ++j) {
      const int a1 = lhs.channels[i], a2 = lhs.channels[j];
      int r = rhs.index_of(S.dual(a2)), c = rhs.index_of(S.dual(a1));
      if (r < 0 || c < 0) return INFINITY;
      Complex g1 = S.pairing({a3, a1, a1}, {a3d, S.dual(a1), S.dual(a1)});
      Complex g2 = S.pairing({a3, a2, a2}, {a3d, S.dual(a2), S.dual(a2)});
      res = std::max(res, std::abs(g1 / g2 * rhs.m(r, c) - lhs.m(i, j)));
    }
  return res;
}

double ModularEngine::check_s_inverse(int a3) const {
  SMatrix s = s_matrix(a3), si = s_inverse(a3);
  if (s.channels.empty()) return 0.0;
  return max_abs(s.m * si.m - Eigen::MatrixXcd::Identity(s.m.rows(), s.m.cols()));
}

double ModularEngine::check_s_e_column() const {
  const int e = sym_->unit();
  SMatrix s = s_matrix(e);
  int ie = s.index_of(e);
  double res = 0.0;
  for (std::size_t i = 0; i < s.channels.size(); ++i)
    res = std::max(res, std::abs(s.m(i, ie) - s_ee_ / sym_->fa(s.channels[i])));
  return res;
}

}  // namespace torusmod
