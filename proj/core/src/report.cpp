#include "torusmod/report.hpp"

#include "torusmod/sigma.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace torusmod {

void Report::add(std::string check_id, std::string tag, double residual, double tolerance, std::string detail) {
  bool pass = std::isfinite(residual) && residual <= tolerance;
  entries_.push_back({std::move(check_id), std::move(tag), residual, tolerance, pass, std::move(detail)});
}

void Report::add_bool(std::string check_id, std::string tag, bool pass, std::string detail) {
  entries_.push_back({std::move(check_id), std::move(tag), pass ? 0.0 : 1.0, 0.0, pass, std::move(detail)});
}

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool Report::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.pass; });
}

namespace {

std::vector<ReportEntry> sorted(std::vector<ReportEntry> v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  return v;
}

}  // namespace

std::string format_residual(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  std::string s(buf);
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  int exp = std::stoi(s.substr(e + 1));
  return mant + "e" + std::to_string(exp);
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& e : sorted(entries_)) {
    os << e.check_id << ": " << format_residual(e.residual) << " (tol " << format_residual(e.tolerance) << ") "
       << (e.pass ? "PASS" : "FAIL") << "  [" << e.paper_tag << "]";
    if (!e.detail.empty()) os << "  " << e.detail;
    os << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : sorted(entries_)) {
    nlohmann::json j{{"check_id", e.check_id}, {"paper_tag", e.paper_tag}, {"tolerance", e.tolerance}, {"pass", e.pass}};
    if (std::isfinite(e.residual)) j["residual"] = e.residual;
    else j["residual"] = nullptr;
    if (!e.detail.empty()) j["detail"] = e.detail;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"pass", all_pass()}, {"checks", arr}}.dump(2);
}

Report validate_category(const CategoryData& cat, double tol) {
  Report rep;
  auto issues = validate_fusion_ring(cat.ring);
  std::string detail;
  for (const auto& i : issues) detail += (detail.empty() ? "" : "; ") + i.message;
  rep.add_bool("fusion-ring", "fusion ring axioms", issues.empty(), detail);
  if (cat.ring.approximate()) rep.add_bool("exact-weights", "rational weights", false, "approximate mode: decimal weights");

  if (!cat.ring.multiplicity_free()) {
    rep.add_bool("multiplicity-free", "multiplicity-free data", false, "unsupported: S3 action data required");
    return rep;
  }
  rep.add("pentagon", "pentagon", pentagon_check(cat), tol);
  rep.add("hexagon", "hexagon", hexagon_check(cat), tol);
  rep.add("ribbon", "R^{ab}_c R^{ba}_c = e^{2 pi i (h_c - h_a - h_b)}", ribbon_residual(cat), tol);
  bool exact = normalization_exact(cat);
  rep.add("normalization", "F(Y_{aa'}^e (x) Y_{a'e}^{a'}; Y_{ee}^e (x) Y_{aa'}^e) = 1", normalization_residual(cat), tol,
          exact ? "exact" : "");

  SymbolData sym(cat);
  rep.add("sigma23-constraints", "sigma23 scalars: cyclic F identity, braid relation, sigma23^2 = 1",
          sym.sigma23_residual(), 1e-10);
  rep.add("s3-group-law", "S3 group law on intertwiner bases", sym.group_law_residual(), 1e-10);
  rep.add("f-coef-2", "F(s12(Y) (x) s12(s13(Y')); Y_{ea2} (x) Y_{a2a2'}^e) = F_{a2}/F_{a3}", sym.f_coef2_residual(), 1e-10);
  double min_gram = INFINITY;
  for (const auto& y : sym.triples())
    min_gram = std::min(min_gram, std::abs(sym.pairing(y, {cat.dual(y.a), cat.dual(y.b), cat.dual(y.c)})));
  char buf[64];
  std::snprintf(buf, sizeof buf, "min |det| = %.3g", min_gram);
  rep.add_bool("pairing-nondegenerate", "nondegenerate pairing", min_gram > 1e-10, buf);
  return rep;
}

}  // namespace torusmod
