#include "torusmod/fusion.hpp"

#include <cmath>
#include <sstream>

namespace torusmod {

FusionRing::FusionRing(std::vector<std::string> names, int unit, std::vector<int> dual)
    : unit_(unit), dual_(std::move(dual)) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw std::invalid_argument("empty label set");
  if (unit < 0 || unit >= n) throw std::invalid_argument("unit label out of range");
  if (static_cast<int>(dual_.size()) != n) throw std::invalid_argument("dual map has wrong size");
  for (int a = 0; a < n; ++a) labels_.push_back({a, std::move(names[a])});
  n_.assign(static_cast<std::size_t>(n) * n * n, 0);
  h_.assign(n, Rational(0));
}

int FusionRing::find(const std::string& name) const {
  for (const auto& l : labels_)
    if (l.name == name) return l.id;
  return -1;
}

bool FusionRing::multiplicity_free() const {
  for (int v : n_)
    if (v > 1) return false;
  return true;
}

ValidationReport validate_fusion_ring(const FusionRing& r) {
  ValidationReport rep;
  const int n = r.size(), e = r.unit();
  auto nm = [&](int a) { return r.label(a).name; };
  auto add = [&](std::string kind, std::string msg) { rep.push_back({std::move(kind), std::move(msg)}); };

  for (int a = 0; a < n; ++a) {
    int d = r.dual(a);
    if (d < 0 || d >= n || r.dual(d) != a) add("dual", "dual is not an involution at " + nm(a));
  }
  if (r.dual(e) != e) add("dual", "unit is not self-dual");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int want = a == b ? 1 : 0;
      if (r.N(e, a, b) != want) add("unit", "N_{" + nm(e) + nm(a) + "}^{" + nm(b) + "} != delta");
      if (r.N(a, e, b) != want) add("unit", "N_{" + nm(a) + nm(e) + "}^{" + nm(b) + "} != delta");
      int d = r.dual(a);
      int want_e = (d >= 0 && d < n && b == d) ? 1 : 0;
      if (r.N(a, b, e) != want_e) add("dual", "N_{" + nm(a) + nm(b) + "}^{" + nm(e) + "} != delta_{b,a'}");
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          long lhs = 0, rhs = 0;
          for (int x = 0; x < n; ++x) lhs += long(r.N(a, b, x)) * r.N(x, c, d);
          for (int y = 0; y < n; ++y) rhs += long(r.N(b, c, y)) * r.N(a, y, d);
          if (lhs != rhs)
            add("associativity", "associativity fails at (" + nm(a) + "," + nm(b) + "," + nm(c) + "," + nm(d) +
                                     "): " + std::to_string(lhs) + " != " + std::to_string(rhs));
        }

  for (int a = 0; a < n; ++a) {
    int d = r.dual(a);
    if (d >= 0 && d < n && r.h(a) != r.h(d)) add("weights", "h differs between " + nm(a) + " and its dual");
  }
  return rep;
}

std::vector<double> quantum_dimensions(const FusionRing& r, double tol, int max_iter) {
  const int n = r.size();
  // Power iteration on I + sum_a N_a, which is primitive for a connected fusion ring.
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) M(b, c) += r.N(a, b, c);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = M * v;
    w /= w(r.unit());
    if ((w - v).cwiseAbs().maxCoeff() < tol) {
      std::vector<double> d(w.data(), w.data() + n);
      return d;
    }
    v = w;
  }
  throw std::runtime_error("quantum dimensions: power iteration did not converge");
}

std::vector<int> duals_from_fusion(const FusionRing& r) {
  const int n = r.size();
  std::vector<int> d(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.N(a, b, r.unit()) != 0) d[a] = b;
  return d;
}

Eigen::MatrixXi charge_conjugation(const FusionRing& r) {
  const int n = r.size();
  auto d = duals_from_fusion(r);
  Eigen::MatrixXi C = Eigen::MatrixXi::Zero(n, n);
  for (int a = 0; a < n; ++a)
    if (d[a] >= 0) C(a, d[a]) = 1;
  return C;
}

VerlindeResult verlinde_fusion_from_S(const Eigen::MatrixXcd& S, double tol) {
  const int n = static_cast<int>(S.rows());
  if (S.cols() != n || n == 0) throw std::invalid_argument("S must be square and nonempty");
  for (int x = 0; x < n; ++x)
    if (std::abs(S(0, x)) < 1e-14) throw NotFusionCompatible("S has a vanishing unit-row entry", INFINITY);
  VerlindeResult out;
  out.n = n;
  out.N.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::complex<double> s = 0;
        for (int x = 0; x < n; ++x) s += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
        double k = std::round(s.real());
        out.residual = std::max(out.residual, std::abs(s - k));
        out.N[(static_cast<std::size_t>(a) * n + b) * n + c] = static_cast<int>(k);
        if (k < 0) out.residual = std::max(out.residual, -k);
      }
  if (out.residual > tol) {
    std::ostringstream os;
    os << "not a fusion-compatible S (rounding residual " << out.residual << ")";
    throw NotFusionCompatible(os.str(), out.residual);
  }
  return out;
}

}  // namespace torusmod
