#pragma once

#include "torusmod/symbols.hpp"

#include <string>
#include <vector>

namespace torusmod {

struct ReportEntry {
  std::string check_id;
  std::string paper_tag;  // name of the identity being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;  // optional free text, e.g. an exact defect
};

class Report {
 public:
  // pass is residual <= tolerance
  void add(std::string check_id, std::string tag, double residual, double tolerance, std::string detail = {});
  void add_bool(std::string check_id, std::string tag, bool pass, std::string detail = {});
  void append(const Report& other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool all_pass() const;

  // Entries are ordered by check_id in both renderings.
  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<ReportEntry> entries_;
};

// "0.0e0", "1.2e-13": one decimal, no exponent padding.
std::string format_residual(double x);

// Fusion ring axioms, pentagon, hexagon, ribbon, normalization, sigma action and pairing checks.
Report validate_category(const CategoryData& cat, double tol = 1e-12);

}  // namespace torusmod
