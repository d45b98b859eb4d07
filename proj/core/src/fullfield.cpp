#include "torusmod/fullfield.hpp"

#include <cmath>
#include <stdexcept>

namespace torusmod {

Complex FullFieldAlgebraSpec::coefficient(int l, int m, int n) const {
  auto it = d.find({l, m, n});
  return it == d.end() ? Complex(0.0) : it->second.to_complex();
}

int FullFieldAlgebraSpec::vacuum_sector() const {
  for (std::size_t i = 0; i < sectors.size(); ++i)
    if (sectors[i].left == left->cat().unit() && sectors[i].right == right->cat().unit()) return static_cast<int>(i);
  return -1;
}

FullFieldAlgebraSpec build_diagonal_ffa(std::shared_ptr<const ModularEngine> cat) {
  FullFieldAlgebraSpec f;
  f.left = cat;
  f.right = cat;
  const auto& ring = cat->cat().ring;
  const int n = ring.size();
  for (int a = 0; a < n; ++a) f.sectors.push_back({a, ring.dual(a)});
  // Left canonical basis paired with the right dual basis: d is the identity on every admissible triple.
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k)
        if (ring.admissible(f.sectors[m].left, f.sectors[k].left, f.sectors[l].left) &&
            ring.admissible(f.sectors[m].right, f.sectors[k].right, f.sectors[l].right))
          f.d[{l, m, k}] = Value(1);
  return f;
}

TCheck check_t_invariance(const Rational& cL, const Rational& cR) {
  Rational defect = mod(cL - cR, Rational(24));
  return {defect == 0, defect};
}

TCheck check_t_invariance(const FullFieldAlgebraSpec& ffa) {
  return check_t_invariance(ffa.left->cat().ring.central_charge(), ffa.right->cat().ring.central_charge());
}

std::vector<int> single_valuedness_check(const FullFieldAlgebraSpec& ffa) {
  std::vector<int> bad;
  for (std::size_t i = 0; i < ffa.sectors.size(); ++i) {
    const auto& s = ffa.sectors[i];
    if (!is_integer(ffa.left->cat().ring.h(s.left) - ffa.right->cat().ring.h(s.right))) bad.push_back(static_cast<int>(i));
  }
  return bad;
}

SFamily left_s_family(const FullFieldAlgebraSpec& ffa) {
  SFamily out;
  for (const auto& s : ffa.sectors)
    if (!out.count(s.left)) out[s.left] = ffa.left->s_matrix(s.left);
  return out;
}

SFamily right_s_inverse_family(const FullFieldAlgebraSpec& ffa) {
  SFamily out;
  const auto& sym = ffa.right->symbols();
  for (const auto& s : ffa.sectors) {
    const int b = s.right;
    if (out.count(b)) continue;
    SMatrix si = ffa.right->s_inverse(b);
    if (ffa.right_basis == "dual") {
      // Dual element for channel x is lambda_x Y_{b x}^{x}, lambda_x = 1 / <Y_{b'x'}^{x'}, Y_{bx}^{x}>.
      const int bd = sym.dual(b);
      Eigen::VectorXcd lam(si.channels.size());
      for (std::size_t i = 0; i < si.channels.size(); ++i) {
        const int x = si.channels[i], xd = sym.dual(x);
        lam(i) = 1.0 / sym.pairing({bd, xd, xd}, {b, x, x});
      }
      si.m = lam.asDiagonal() * si.m * lam.cwiseInverse().asDiagonal();
    } else if (ffa.right_basis != "canonical") {
      throw std::invalid_argument("unknown basis tag '" + ffa.right_basis + "'");
    }
    out[b] = std::move(si);
  }
  return out;
}

double check_s_invariance(const FullFieldAlgebraSpec& ffa, const SFamily& SL, const SFamily& SRinv) {
  const int ns = static_cast<int>(ffa.sectors.size());
  double res = 0.0;
  for (int m = 0; m < ns; ++m) {
    const auto& sm = ffa.sectors[m];
    auto il = SL.find(sm.left);
    auto ir = SRinv.find(sm.right);
    if (il == SL.end() || ir == SRinv.end()) throw std::runtime_error("check_s_invariance: missing S block");
    const SMatrix& L = il->second;
    const SMatrix& R = ir->second;
    for (std::size_t i = 0; i < L.channels.size(); ++i)
      for (std::size_t j = 0; j < R.channels.size(); ++j) {
        const int aL = L.channels[i], aR = R.channels[j];
        Complex lhs = 0.0, rhs = 0.0;
        for (int n = 0; n < ns; ++n) {
          Complex dn = ffa.coefficient(n, m, n);
          if (dn == 0.0) continue;
          int rl = L.index_of(ffa.sectors[n].left), rr = R.index_of(ffa.sectors[n].right);
          if (rl < 0 || rr < 0) throw std::runtime_error("check_s_invariance: coefficient outside the one-point spaces");
          lhs += dn * L.m(rl, i) * R.m(rr, j);
        }
        for (int p = 0; p < ns; ++p)
          if (ffa.sectors[p].left == aL && ffa.sectors[p].right == aR) rhs += ffa.coefficient(p, m, p);
        res = std::max(res, std::abs(lhs - rhs));
      }
  }
  return res;
}

double check_s_invariance(const FullFieldAlgebraSpec& ffa) {
  return check_s_invariance(ffa, left_s_family(ffa), right_s_inverse_family(ffa));
}

}  // namespace torusmod
