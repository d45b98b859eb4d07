// Batch verification front end for the torusmod library.

#include "torusmod/category_io.hpp"
#include "torusmod/expr.hpp"
#include "torusmod/fullfield.hpp"
#include "torusmod/modular.hpp"
#include "torusmod/qseries.hpp"
#include "torusmod/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <regex>

using namespace torusmod;

namespace {

struct Options {
  std::optional<double> tol;
  bool json = false;
  bool float_mode = false;
};

double tol_or(const Options& o, double dflt) { return o.tol.value_or(dflt); }

Complex parse_tau(std::string s) {
  // accept "0.3+0.8i" and "2i" as shorthand for "0.3+0.8*i" and "2*i"
  s = std::regex_replace(s, std::regex("([0-9.])i"), "$1*i");
  Complex t = parse_expr(s, false).to_complex();
  if (!(t.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  return t;
}

std::string fmt_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%+.12f%+.12fi", z.real(), z.imag());
  return buf;
}

void print_matrix(const std::vector<int>& idx, const Eigen::MatrixXcd& m, const FusionRing& ring) {
  for (long i = 0; i < m.rows(); ++i) {
    std::cout << "  " << ring.label(idx[i]).name << ":";
    for (long j = 0; j < m.cols(); ++j) std::cout << "  " << fmt_complex(m(i, j));
    std::cout << "\n";
  }
}

class Session {
 public:
  explicit Session(const Options& o) : opt_(o) {}

  std::shared_ptr<const ModularEngine> engine(const std::string& name) {
    auto it = engines_.find(name);
    if (it != engines_.end()) return it->second;
    auto e = std::make_shared<const ModularEngine>(load_category(name, !opt_.float_mode));
    engines_[name] = e;
    return e;
  }

  int label(const ModularEngine& e, const std::string& name) {
    int id = e.cat().ring.find(name);
    if (id < 0) throw DataError("unknown label '" + name + "'");
    return id;
  }

 private:
  const Options& opt_;
  std::map<std::string, std::shared_ptr<const ModularEngine>> engines_;
};

int finish(const Report& rep, const Options& o) {
  if (o.json) std::cout << rep.to_json() << "\n";
  else std::cout << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-one modular checks for fusion category data"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "Override the tolerance of every check");
  app.add_flag("--json", opt.json, "Emit the report as JSON");
  app.add_flag("--float", opt.float_mode, "Read all constants as complex doubles");

  std::string cat_name, insertion, d_file, tau_text, partition_tau = "i", cl_text, cr_text;
  bool diagonal = false;
  int coeff_order = 30, char_order = 400, transform_order = 400, partition_order = 400;

  auto* validate = app.add_subcommand("validate", "Consistency checks of a category file");
  validate->add_option("category", cat_name)->required();

  auto* smatrix = app.add_subcommand("smatrix", "S matrix for one insertion label");
  smatrix->add_option("category", cat_name)->required();
  smatrix->add_option("--insertion", insertion, "Insertion label (default: unit)");

  auto* salpha = app.add_subcommand("check-salpha-betas", "S alpha = beta S for every a2");
  salpha->add_option("category", cat_name)->required();

  auto* symm = app.add_subcommand("check-symmetry", "Symmetry of S under dual bases for every insertion");
  symm->add_option("category", cat_name)->required();

  auto* modinv = app.add_subcommand("check-modular-invariance", "S, T and single-valuedness criteria for a full field algebra");
  modinv->add_option("category", cat_name)->required();
  auto* diag_flag = modinv->add_flag("--diagonal", diagonal, "Use the diagonal construction");
  modinv->add_option("--d", d_file, "Full field algebra file")->excludes(diag_flag);

  auto* checkt = app.add_subcommand("check-t", "T criterion cL = cR mod 24");
  checkt->add_option("--cl", cl_text)->required();
  checkt->add_option("--cr", cr_text)->required();

  auto* coeffs = app.add_subcommand("coeffs", "A_j and B_j coefficients");
  coeffs->add_option("--order", coeff_order, "Number of coefficients")->capture_default_str();

  auto* chars = app.add_subcommand("characters", "Character q-series of a category");
  chars->add_option("category", cat_name)->required();
  chars->add_option("--order", char_order, "Truncation order")->capture_default_str();

  auto* transform = app.add_subcommand("transform-check", "S and T transforms of the characters");
  transform->add_option("category", cat_name)->required();
  transform->add_option("--tau", tau_text, "Point in the upper half plane, e.g. 0.3+0.8i");
  transform->add_option("--order", transform_order, "Truncation order")->capture_default_str();

  auto* partition = app.add_subcommand("partition", "Diagonal partition function and its modular residuals");
  partition->add_option("category", cat_name)->required();
  partition->add_option("--tau", partition_tau, "Point in the upper half plane")->capture_default_str();
  partition->add_option("--order", partition_order, "Truncation order")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Session session(opt);
  try {
    Report rep;
    if (*validate) {
      rep = validate_category(load_category(cat_name, !opt.float_mode), tol_or(opt, 1e-12));
      return finish(rep, opt);
    }
    if (*smatrix) {
      auto eng = session.engine(cat_name);
      const auto& ring = eng->cat().ring;
      int a3 = insertion.empty() ? ring.unit() : session.label(*eng, insertion);
      SMatrix s = eng->s_matrix(a3);
      if (!opt.json) {
        std::cout << "S(" << ring.label(a3).name << "), rows and columns by channel:\n";
        print_matrix(s.channels, s.m, ring);
      }
      rep.add("s-inverse", "S S^{-1} = 1", eng->check_s_inverse(a3), tol_or(opt, 1e-10));
      if (a3 == ring.unit()) {
        Eigen::MatrixXcd C = charge_conjugation(ring).cast<std::complex<double>>();
        rep.add("s-squared", "S^2 = C", (s.m * s.m - C).cwiseAbs().maxCoeff(), tol_or(opt, 1e-9));
        rep.add("s-unit-column", "S_e^{a} = S_e^e / F_a", eng->check_s_e_column(), tol_or(opt, 1e-10));
        double vres;
        bool same = false;
        try {
          auto v = verlinde_fusion_from_S(s.m);
          vres = v.residual;
          same = true;
          for (int a = 0; a < ring.size(); ++a)
            for (int b = 0; b < ring.size(); ++b)
              for (int c = 0; c < ring.size(); ++c) same = same && v.at(a, b, c) == ring.N(a, b, c);
        } catch (const NotFusionCompatible& e) {
          vres = e.residual();
        }
        rep.add("verlinde", "Verlinde formula reproduces N", same ? vres : INFINITY, tol_or(opt, 1e-9));
      }
      return finish(rep, opt);
    }
    if (*salpha) {
      auto eng = session.engine(cat_name);
      for (int a2 = 0; a2 < eng->size(); ++a2)
        rep.add("salpha-betas[" + eng->cat().ring.label(a2).name + "]", "S alpha = beta S", eng->check_salpha_betas(a2),
                tol_or(opt, 1e-10));
      return finish(rep, opt);
    }
    if (*symm) {
      auto eng = session.engine(cat_name);
      for (int a3 = 0; a3 < eng->size(); ++a3) {
        const std::string nm = eng->cat().ring.label(a3).name;
        rep.add("symmetry[" + nm + "]", "S(Y'; Y') = S(Y; Y) in dual bases", eng->check_symmetry(a3), tol_or(opt, 1e-10));
        rep.add("s-inverse[" + nm + "]", "S S^{-1} = 1", eng->check_s_inverse(a3), tol_or(opt, 1e-10));
      }
      return finish(rep, opt);
    }
    if (*modinv) {
      FullFieldAlgebraSpec ffa;
      if (!d_file.empty()) {
        ffa = parse_ffa(read_file(find_data_file(d_file)), [&](const std::string& n) { return session.engine(n); }, d_file);
      } else {
        ffa = build_diagonal_ffa(session.engine(cat_name));
      }
      // Exact cyclotomic evaluation when every constant allows it, doubles otherwise.
      std::optional<double> exact_res;
      if (!opt.float_mode) exact_res = check_s_invariance_exact(ffa);
      if (exact_res)
        rep.add("s-invariance", "S-invariance criterion on d, S, S^{-1}", *exact_res, tol_or(opt, 1e-10),
                *exact_res == 0.0 ? "exact" : "exact arithmetic, nonzero");
      else
        rep.add("s-invariance", "S-invariance criterion on d, S, S^{-1}", check_s_invariance(ffa), tol_or(opt, 1e-10),
                "numeric");
      TCheck t = check_t_invariance(ffa);
      rep.add_bool("t-invariance", "cL = cR mod 24", t.pass, "defect " + to_string(t.defect));
      auto bad = single_valuedness_check(ffa);
      std::string detail;
      for (int s : bad)
        detail += "(" + ffa.left->cat().ring.label(ffa.sectors[s].left).name + "," +
                  ffa.right->cat().ring.label(ffa.sectors[s].right).name + ") ";
      rep.add_bool("single-valuedness", "hL - hR integral on every sector", bad.empty(), detail);
      return finish(rep, opt);
    }
    if (*checkt) {
      TCheck t = check_t_invariance(parse_rational(cl_text), parse_rational(cr_text));
      rep.add("t-invariance", "cL = cR mod 24", to_double(t.defect), 0.0, "defect " + to_string(t.defect));
      return finish(rep, opt);
    }
    if (*coeffs) {
      const int order = coeff_order;
      if (order < 1) throw DataError("--order must be at least 1");
      auto B = compute_B_coeffs(order);
      auto A = compute_A_coeffs(order);
      bool match = true;
      for (int j = 1; j <= order; ++j) {
        const WPoly& a = A[j];
        bool ok = a.size() == 1 && a.begin()->first == j && a.begin()->second == B[j];
        match = match && ok;
        if (!opt.json)
          std::cout << "j=" << j << "  B_j = " << to_string(B[j]) << "  A_j = " << a_coeff_value(a).to_string() << "\n";
      }
      rep.add_bool("b1", "B_1 = -1/2", B[1] == Rational(-1, 2));
      if (order >= 2) rep.add_bool("b2", "B_2 = 1/12", B[2] == Rational(1, 12));
      rep.add_bool("a-vs-b", "A_j = (2 pi i)^j B_j", match);
      int deg = std::min(order + 1, 20);
      auto lhs = apply_exp_derivation(B, deg);
      auto rhs = log1p_coeffs(deg);
      bool exact = true;
      for (int m = 0; m <= deg; ++m) exact = exact && lhs[m] == rhs[m];
      rep.add_bool("round-trip", "exp(sum B_j y^{j+1} d/dy) y = log(1+y)", exact,
                   "through degree " + std::to_string(deg));
      return finish(rep, opt);
    }
    if (*chars) {
      auto eng = session.engine(cat_name);
      const auto& ring = eng->cat().ring;
      auto cs = load_characters(eng->cat(), char_order);
      if (!opt.json)
        for (int a = 0; a < ring.size(); ++a) {
          std::cout << ring.label(a).name << ": q^(" << to_string(cs[a].offset) << ") * (";
          for (int n = 0; n < std::min(8, cs[a].truncation()); ++n) std::cout << (n ? " + " : "") << to_string(cs[a].coeffs[n]) << " q^" << n;
          std::cout << " + ...), " << cs[a].truncation() << " terms\n";
        }
      auto defects = t_transform_termwise(cs, ring);
      for (int a = 0; a < ring.size(); ++a)
        rep.add_bool("offset[" + ring.label(a).name + "]", "offset = h - c/24", defects[a] == 0, "defect " + to_string(defects[a]));
      return finish(rep, opt);
    }
    if (*transform) {
      auto eng = session.engine(cat_name);
      const auto& ring = eng->cat().ring;
      auto cs = load_characters(eng->cat(), transform_order);
      SMatrix s = eng->s_matrix(ring.unit());
      std::vector<std::string> taus = tau_text.empty() ? std::vector<std::string>{"i", "2i", "0.3+0.8i"} : std::vector<std::string>{tau_text};
      for (const auto& tt : taus) {
        Complex tau = parse_tau(tt);
        rep.add("s-transform[" + tt + "]", "chi(-1/tau) = S chi(tau)", s_transform_residual(cs, s.m, tau), tol_or(opt, 1e-8));
        rep.add("t-transform[" + tt + "]", "chi(tau+1) = e^{2 pi i (h - c/24)} chi(tau)", t_transform_residual(cs, ring, tau),
                tol_or(opt, 1e-12));
      }
      auto defects = t_transform_termwise(cs, ring);
      bool exact = std::all_of(defects.begin(), defects.end(), [](const Rational& r) { return r == 0; });
      rep.add_bool("t-termwise", "termwise T phase", exact);
      return finish(rep, opt);
    }
    if (*partition) {
      auto eng = session.engine(cat_name);
      auto cs = load_characters(eng->cat(), partition_order);
      auto ffa = build_diagonal_ffa(eng);
      Complex tau = parse_tau(partition_tau);
      auto z = partition_function(ffa, cs, cs, tau);
      if (!opt.json) std::cout << "Z(" << partition_tau << ") = " << fmt_complex(z.z) << "\n";
      rep.add("z-s", "Z(-1/tau) = Z(tau)", z.s_residual, tol_or(opt, 1e-8));
      rep.add("z-t", "Z(tau+1) = Z(tau)", z.t_residual, tol_or(opt, 1e-12));
      rep.add_bool("z-t-termwise", "termwise T phase", z.t_termwise_defect == 0, "defect " + to_string(z.t_termwise_defect));
      return finish(rep, opt);
    }
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
