#include "torusmod/category_io.hpp"

#include "torusmod/expr.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace torusmod {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    std::size_t line = 1, col = 1;
    std::size_t stop = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = err.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw DataError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

class Reader {
 public:
  Reader(const FusionRing* ring, std::string source, bool exact) : ring_(ring), source_(std::move(source)), exact_(exact) {}

  [[noreturn]] void fail(const std::string& where, const std::string& msg) const {
    throw DataError(source_ + ": " + where + ": " + msg);
  }

  int label(const json& j, const std::string& where) const {
    if (!j.is_string()) fail(where, "expected a label name");
    int id = ring_->find(j.get<std::string>());
    if (id < 0) fail(where, "unknown label '" + j.get<std::string>() + "'");
    return id;
  }

  Value value(const json& j, const std::string& where) const {
    if (j.is_number_integer()) return exact_ ? Value(Rational(j.get<long>())) : Value(Complex(j.get<double>(), 0.0));
    if (j.is_number()) return Value(Complex(j.get<double>(), 0.0));
    if (!j.is_string()) fail(where, "expected a constant expression string");
    try {
      return parse_expr(j.get<std::string>(), exact_);
    } catch (const ExprError& e) {
      fail(where, e.what());
    }
  }

  Rational rational(const json& j, const std::string& where, bool* decimal) const {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      if (auto r = try_parse_rational(j.get<std::string>(), decimal)) return *r;
    }
    fail(where, "expected a rational number such as \"1/16\"");
  }

  const json& array(const json& parent, const char* key, bool required = true) const {
    static const json empty = json::array();
    if (!parent.contains(key)) {
      if (required) fail(key, "missing field");
      return empty;
    }
    const json& a = parent.at(key);
    if (!a.is_array()) fail(key, "expected an array");
    return a;
  }

  void set_ring(const FusionRing* r) { ring_ = r; }

 private:
  const FusionRing* ring_;
  std::string source_;
  bool exact_;
};

std::string entry(const char* key, std::size_t i) { return std::string(key) + "[" + std::to_string(i) + "]"; }

void write_string(std::ostringstream& os, const std::string& s) { os << json(s).dump(); }

}  // namespace

CategoryData parse_category(std::string_view text, const std::string& source, bool exact) {
  json j = parse_json(text, source);
  if (!j.is_object()) throw DataError(source + ": top level must be an object");
  Reader rd(nullptr, source, exact);
  CategoryData cat;
  cat.name = j.value("name", std::string());

  const json& labels = rd.array(j, "labels");
  if (labels.empty()) rd.fail("labels", "at least one label required");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const json& l = labels[i];
    if (!l.is_object() || !l.contains("name") || !l["name"].is_string()) rd.fail(entry("labels", i), "expected {name, dual, h}");
    names.push_back(l["name"].get<std::string>());
  }
  FusionRing probe(names, 0, std::vector<int>(names.size(), 0));
  rd.set_ring(&probe);
  std::vector<int> dual(names.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    dual[i] = labels[i].contains("dual") ? rd.label(labels[i]["dual"], entry("labels", i) + ".dual") : static_cast<int>(i);
  if (!j.contains("unit")) rd.fail("unit", "missing field");
  int unit = rd.label(j["unit"], "unit");
  cat.ring = FusionRing(names, unit, dual);
  rd.set_ring(&cat.ring);

  bool approx = false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool dec = false;
    if (labels[i].contains("h")) cat.ring.set_h(static_cast<int>(i), rd.rational(labels[i]["h"], entry("labels", i) + ".h", &dec));
    approx = approx || dec;
  }
  if (j.contains("central_charge")) {
    bool dec = false;
    cat.ring.set_central_charge(rd.rational(j["central_charge"], "central_charge", &dec));
    approx = approx || dec;
  }
  cat.ring.set_approximate(approx);

  const json& fusion = rd.array(j, "fusion");
  for (std::size_t i = 0; i < fusion.size(); ++i) {
    const json& f = fusion[i];
    auto where = entry("fusion", i);
    if (!f.is_array() || f.size() < 3 || f.size() > 4) rd.fail(where, "expected [a, b, c] or [a, b, c, multiplicity]");
    int mult = 1;
    if (f.size() == 4) {
      if (!f[3].is_number_integer() || f[3].get<int>() < 0) rd.fail(where, "multiplicity must be a non-negative integer");
      mult = f[3].get<int>();
    }
    cat.ring.set_N(rd.label(f[0], where), rd.label(f[1], where), rd.label(f[2], where), mult);
  }

  if (j.contains("conventions")) {
    const json& c = j["conventions"];
    std::string s23 = c.value("sigma23", std::string("derived"));
    if (s23 == "derived") cat.sigma23 = Sigma23Convention::derived;
    else if (s23 == "table") cat.sigma23 = Sigma23Convention::table;
    else rd.fail("conventions.sigma23", "expected \"derived\" or \"table\"");
    cat.basis = c.value("basis", std::string("canonical"));
  }

  const json& F = rd.array(j, "F", false);
  for (std::size_t i = 0; i < F.size(); ++i) {
    const json& f = F[i];
    auto where = entry("F", i);
    if (!f.is_array() || f.size() != 7) rd.fail(where, "expected [a1, a2, a3, d, b, c, value]");
    FIndex k{rd.label(f[0], where), rd.label(f[1], where), rd.label(f[2], where),
             rd.label(f[3], where), rd.label(f[4], where), rd.label(f[5], where)};
    if (!cat.f_admissible(k)) rd.fail(where, "inadmissible index " + cat.describe(k));
    if (!cat.F.emplace(k, rd.value(f[6], where)).second) rd.fail(where, "duplicate entry " + cat.describe(k));
  }
  if (j.contains("F_default")) {
    Value def = rd.value(j["F_default"], "F_default");
    const int n = cat.size();
    for (int a1 = 0; a1 < n; ++a1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int a3 = 0; a3 < n; ++a3)
          for (int d = 0; d < n; ++d)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c)
                if (FIndex k{a1, a2, a3, d, b, c}; cat.f_admissible(k)) cat.F.emplace(k, def);
  }

  auto read_triples = [&](const char* key, std::map<RIndex, Value>& out, bool required) {
    const json& arr = rd.array(j, key, required);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& r = arr[i];
      auto where = entry(key, i);
      if (!r.is_array() || r.size() != 4) rd.fail(where, "expected [a, b, c, value]");
      RIndex k{rd.label(r[0], where), rd.label(r[1], where), rd.label(r[2], where)};
      if (!cat.ring.admissible(k.a, k.b, k.c)) rd.fail(where, "inadmissible fusion channel");
      if (!out.emplace(k, rd.value(r[3], where)).second) rd.fail(where, "duplicate entry");
    }
  };
  read_triples("R", cat.R, false);
  if (j.contains("R_default")) {
    Value def = rd.value(j["R_default"], "R_default");
    for (int a = 0; a < cat.size(); ++a)
      for (int b = 0; b < cat.size(); ++b)
        for (int c = 0; c < cat.size(); ++c)
          if (cat.ring.admissible(a, b, c)) cat.R.emplace(RIndex{a, b, c}, def);
  }
  read_triples("sigma23", cat.sigma23_table, false);

  const json& br = rd.array(j, "braiding", false);
  for (std::size_t i = 0; i < br.size(); ++i) {
    const json& b = br[i];
    auto where = entry("braiding", i);
    if (!b.is_array() || b.size() != 6 || !b[0].is_number_integer() || !b[5].is_array())
      rd.fail(where, "expected [r, a1, a2, a3, d, matrix]");
    BraidIndex k{b[0].get<int>(), rd.label(b[1], where), rd.label(b[2], where), rd.label(b[3], where), rd.label(b[4], where)};
    if (k.r != 1 && k.r != -1) rd.fail(where, "r must be 1 or -1");
    const json& rows = b[5];
    Eigen::MatrixXcd m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(m.cols())) rd.fail(where, "ragged matrix");
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rd.value(rows[r][c], where).to_complex();
    }
    cat.braiding_override[k] = m;
  }

  if (cat.ring.multiplicity_free()) {
    try {
      require_complete(cat);
    } catch (const IncompleteData& e) {
      throw DataError(source + ": " + e.what());
    }
  }
  return cat;
}

std::string serialize_category(const CategoryData& cat) {
  std::ostringstream os;
  const auto& ring = cat.ring;
  auto nm = [&](int a) { return json(ring.label(a).name).dump(); };
  os << "{\n  \"name\": ";
  write_string(os, cat.name);
  os << ",\n  \"unit\": " << nm(ring.unit()) << ",\n  \"central_charge\": ";
  write_string(os, to_string(ring.central_charge()));
  os << ",\n  \"conventions\": {\"sigma23\": \"" << (cat.sigma23 == Sigma23Convention::table ? "table" : "derived")
     << "\", \"basis\": ";
  write_string(os, cat.basis);
  os << "},\n  \"labels\": [\n";
  for (int a = 0; a < ring.size(); ++a) {
    os << "    {\"name\": " << nm(a) << ", \"dual\": " << nm(ring.dual(a)) << ", \"h\": ";
    write_string(os, to_string(ring.h(a)));
    os << "}" << (a + 1 < ring.size() ? "," : "") << "\n";
  }
  os << "  ],\n  \"fusion\": [\n";
  std::vector<std::string> rows;
  for (int a = 0; a < ring.size(); ++a)
    for (int b = 0; b < ring.size(); ++b)
      for (int c = 0; c < ring.size(); ++c)
        if (int m = ring.N(a, b, c))
          rows.push_back("[" + nm(a) + ", " + nm(b) + ", " + nm(c) + (m > 1 ? ", " + std::to_string(m) : "") + "]");
  for (std::size_t i = 0; i < rows.size(); ++i) os << "    " << rows[i] << (i + 1 < rows.size() ? "," : "") << "\n";
  os << "  ],\n  \"F\": [\n";
  std::size_t i = 0;
  for (const auto& [k, v] : cat.F) {
    os << "    [" << nm(k.a1) << ", " << nm(k.a2) << ", " << nm(k.a3) << ", " << nm(k.d) << ", " << nm(k.b) << ", "
       << nm(k.c) << ", " << json(v.to_string()).dump() << "]" << (++i < cat.F.size() ? "," : "") << "\n";
  }
  auto triples = [&](const char* key, const std::map<RIndex, Value>& m) {
    os << "  ],\n  \"" << key << "\": [\n";
    std::size_t n = 0;
    for (const auto& [k, v] : m)
      os << "    [" << nm(k.a) << ", " << nm(k.b) << ", " << nm(k.c) << ", " << json(v.to_string()).dump() << "]"
         << (++n < m.size() ? "," : "") << "\n";
  };
  triples("R", cat.R);
  if (!cat.sigma23_table.empty()) triples("sigma23", cat.sigma23_table);
  if (!cat.braiding_override.empty()) {
    os << "  ],\n  \"braiding\": [\n";
    std::size_t n = 0;
    for (const auto& [k, m] : cat.braiding_override) {
      json rowsj = json::array();
      for (long r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(Value(m(r, c)).to_string());
        rowsj.push_back(row);
      }
      os << "    [" << k.r << ", " << nm(k.a1) << ", " << nm(k.a2) << ", " << nm(k.a3) << ", " << nm(k.d) << ", "
         << rowsj.dump() << "]" << (++n < cat.braiding_override.size() ? "," : "") << "\n";
    }
  }
  os << "  ]\n}\n";
  return os.str();
}

std::vector<std::string> data_search_path() {
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("TORUSMOD_DATA_PATH")) {
    std::string s(env);
    std::size_t start = 0;
    while (start <= s.size()) {
      auto end = s.find(':', start);
      if (end == std::string::npos) end = s.size();
      if (end > start) dirs.push_back(s.substr(start, end - start));
      start = end + 1;
    }
  }
  dirs.push_back(TORUSMOD_SOURCE_DATA_DIR);
  dirs.push_back(TORUSMOD_INSTALL_DATA_DIR);
  return dirs;
}

std::string find_data_file(const std::string& name_or_path, const std::string& suffix) {
  namespace fs = std::filesystem;
  if (name_or_path.find('/') != std::string::npos || fs::exists(name_or_path)) {
    if (!fs::exists(name_or_path)) throw DataError("no such file: " + name_or_path);
    return name_or_path;
  }
  for (const auto& dir : data_search_path()) {
    fs::path p = fs::path(dir) / (name_or_path + suffix);
    if (fs::exists(p)) return p.string();
  }
  throw DataError("dataset '" + name_or_path + "' not found in the data search path");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CategoryData load_category(const std::string& name_or_path, bool exact) {
  std::string path = find_data_file(name_or_path);
  CategoryData cat = parse_category(read_file(path), path, exact);
  if (cat.name.empty()) cat.name = std::filesystem::path(path).stem().string();
  return cat;
}

CharacterSet parse_characters(std::string_view text, const FusionRing& ring, const std::string& source) {
  json j = parse_json(text, source);
  Reader rd(&ring, source, true);
  const json& recs = rd.array(j, "characters");
  CharacterSet out(ring.size());
  std::vector<bool> seen(ring.size(), false);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const json& r = recs[i];
    auto where = entry("characters", i);
    if (!r.is_object() || !r.contains("label") || !r.contains("offset") || !r.contains("coeffs"))
      rd.fail(where, "expected {label, offset, coeffs}");
    int a = rd.label(r["label"], where + ".label");
    QSeries s;
    s.offset = rd.rational(r["offset"], where + ".offset", nullptr);
    Rational expect = ring.h(a) - ring.central_charge() / 24;
    if (s.offset != expect)
      rd.fail(where, "offset " + to_string(s.offset) + " does not match h - c/24 = " + to_string(expect));
    const json& cs = r["coeffs"];
    if (!cs.is_array()) rd.fail(where + ".coeffs", "expected an array");
    for (std::size_t n = 0; n < cs.size(); ++n) s.coeffs.push_back(rd.rational(cs[n], where + ".coeffs", nullptr));
    out[a] = std::move(s);
    seen[a] = true;
  }
  for (int a = 0; a < ring.size(); ++a)
    if (!seen[a]) rd.fail("characters", "no series for label '" + ring.label(a).name + "'");
  return out;
}

CharacterSet truncate(CharacterSet chars, int order) {
  for (auto& s : chars)
    if (s.truncation() > order + 1) s.coeffs.resize(order + 1);
  return chars;
}

CharacterSet load_characters(const CategoryData& cat, int order) {
  const auto& ring = cat.ring;
  if (ring.size() == 1 && ring.central_charge() == 0) {
    QSeries one{Rational(0), std::vector<Rational>(order + 1, Rational(0))};
    one.coeffs[0] = 1;
    return {one};
  }
  // Built-in free fermion series when the weights are those of the Ising data.
  if (ring.size() == 3 && ring.central_charge() == Rational(1, 2)) {
    std::vector<Rational> hs{Rational(0), Rational(1, 2), Rational(1, 16)};
    std::vector<int> slot(3, -1);
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < 3; ++k)
        if (ring.h(a) == hs[k]) slot[a] = k;
    if (slot[0] >= 0 && slot[1] >= 0 && slot[2] >= 0 && slot[0] != slot[1] && slot[1] != slot[2] && slot[0] != slot[2]) {
      auto ff = free_fermion_characters(order);
      return {ff[slot[0]], ff[slot[1]], ff[slot[2]]};
    }
  }
  std::string path = find_data_file(cat.name, ".characters.json");
  CharacterSet chars = parse_characters(read_file(path), ring, path);
  for (const auto& s : chars)
    if (s.truncation() < order + 1)
      throw DataError(path + ": series truncated at " + std::to_string(s.truncation() - 1) + ", order " +
                      std::to_string(order) + " requested");
  return truncate(std::move(chars), order);
}

FullFieldAlgebraSpec parse_ffa(std::string_view text, const EngineLoader& load, const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_object() || !j.contains("left")) throw DataError(source + ": expected an object with a \"left\" category");
  FullFieldAlgebraSpec f;
  f.left = load(j["left"].get<std::string>());
  f.right = j.contains("right") ? load(j["right"].get<std::string>()) : f.left;
  f.left_basis = j.value("left_basis", std::string("canonical"));
  f.right_basis = j.value("right_basis", std::string("dual"));
  Reader left(&f.left->cat().ring, source, true), right(&f.right->cat().ring, source, true);
  const json& sec = left.array(j, "sectors");
  for (std::size_t i = 0; i < sec.size(); ++i) {
    auto where = entry("sectors", i);
    if (!sec[i].is_array() || sec[i].size() != 2) left.fail(where, "expected [left label, right label]");
    f.sectors.push_back({left.label(sec[i][0], where), right.label(sec[i][1], where)});
  }
  const json& d = left.array(j, "d");
  const int ns = static_cast<int>(f.sectors.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto where = entry("d", i);
    const json& e = d[i];
    if (!e.is_array() || e.size() != 4) left.fail(where, "expected [l, m, n, value]");
    std::array<int, 3> k{};
    for (int t = 0; t < 3; ++t) {
      if (!e[t].is_number_integer() || e[t].get<int>() < 0 || e[t].get<int>() >= ns) left.fail(where, "sector index out of range");
      k[t] = e[t].get<int>();
    }
    f.d[k] = left.value(e[3], where);
  }
  return f;
}

}  // namespace torusmod
