#pragma once

#include "torusmod/fullfield.hpp"
#include "torusmod/qseries.hpp"
#include "torusmod/symbols.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torusmod {

// Malformed or inconsistent input files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON layout:
//   name, unit, central_charge, labels [{name, dual, h}], fusion [[a,b,c(,mult)]],
//   F [[a1,a2,a3,d,b,c,"expr"]], optional F_default "expr", R [[a,b,c,"expr"]],
//   optional conventions {sigma23: "derived"|"table", basis}, sigma23 [[a,b,c,"expr"]],
//   braiding [[r,a1,a2,a3,d,[["expr",...],...]]].
CategoryData parse_category(std::string_view text, const std::string& source = "<input>", bool exact = true);
std::string serialize_category(const CategoryData& cat);

// Directories searched for bundled data: $TORUSMOD_DATA_PATH (colon separated), then the
// source tree and install locations.
std::vector<std::string> data_search_path();
// A name such as "ising" resolves to "<dir>/ising.json"; paths are used as given.
std::string find_data_file(const std::string& name_or_path, const std::string& suffix = ".json");
std::string read_file(const std::string& path);

CategoryData load_category(const std::string& name_or_path, bool exact = true);

// Records {label, offset "p/q", coeffs [...]}; offsets must equal h - c/24.
CharacterSet parse_characters(std::string_view text, const FusionRing& ring, const std::string& source = "<input>");
// Built-in Ising characters when the weights match, otherwise "<name>.characters.json".
CharacterSet load_characters(const CategoryData& cat, int order);
// Truncates every series to coeffs[0..order].
CharacterSet truncate(CharacterSet chars, int order);

// {left, right, right_basis, sectors [[l,r],...], d [[l,m,n,"expr"],...]}; sector
// entries name labels, d indexes sectors.
using EngineLoader = std::function<std::shared_ptr<const ModularEngine>(const std::string&)>;
FullFieldAlgebraSpec parse_ffa(std::string_view text, const EngineLoader& load, const std::string& source = "<input>");

}  // namespace torusmod
