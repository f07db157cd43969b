#include "kcsc/toric/fan.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kcsc::toric {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

long long as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw FanParseError(where, "expected an integer");
  return v.get<long long>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw FanParseError(where, "expected an array");
  return v;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

}  // namespace

std::string Fan::cone_label(std::size_t i) const { return "C" + std::to_string(i + 1); }

Cone Fan::cone(std::size_t i) const {
  std::vector<IntVector> gens;
  for (Index r : max_cones.at(i)) gens.push_back(rays.at(static_cast<std::size_t>(r)));
  return Cone::from_rays(cone_label(i), gens);
}

std::vector<Cone> Fan::cones() const {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < max_cones.size(); ++i) out.push_back(cone(i));
  return out;
}

Fan parse_fan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FanParseError(line_column(text, e.byte), "malformed syntax");
  }
  if (!doc.is_object()) throw FanParseError("document", "expected a JSON object");

  static const std::set<std::string> known = {"name", "dim", "rays", "max_cones", "polytope_multiple",
                                              "scalar_curvature"};
  for (const auto& item : doc.items())
    if (!known.count(item.key())) throw FanParseError(item.key(), "unknown key");
  for (const char* required : {"name", "dim", "rays", "max_cones"})
    if (!doc.contains(required)) throw FanParseError(required, "missing required key");

  Fan fan;
  if (!doc["name"].is_string()) throw FanParseError("name", "expected a string");
  fan.name = doc["name"].get<std::string>();

  const long long dim = as_integer(doc["dim"], "dim");
  if (dim < 1 || dim > 64) throw FanParseError("dim", "dimension must be a positive integer");
  fan.dim = static_cast<int>(dim);

  const json& rays = as_array(doc["rays"], "rays");
  std::set<std::vector<std::string>> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string where = "rays[" + std::to_string(i) + "]";
    const json& r = as_array(rays[i], where);
    if (r.size() != static_cast<std::size_t>(dim))
      throw FanParseError(where, "dimension mismatch: expected " + std::to_string(dim) + " entries, got " +
                                     std::to_string(r.size()));
    IntVector v(dim);
    for (std::size_t k = 0; k < r.size(); ++k)
      v(static_cast<Index>(k)) = as_integer(r[k], where + "[" + std::to_string(k) + "]");
    if (is_zero(v)) throw FanParseError(where, "zero ray");
    v = primitive(v);
    std::vector<std::string> key;
    for (Index k = 0; k < v.size(); ++k) key.push_back(to_string(v(k)));
    if (!seen.insert(key).second) throw FanParseError(where, "duplicate ray");
    fan.rays.push_back(v);
  }

  const json& cones = as_array(doc["max_cones"], "max_cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string where = "max_cones[" + std::to_string(i) + "]";
    const json& c = as_array(cones[i], where);
    std::vector<Index> idx;
    std::set<Index> distinct;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const long long r = as_integer(c[k], where + "[" + std::to_string(k) + "]");
      if (r < 0 || r >= static_cast<long long>(fan.rays.size()))
        throw FanParseError(where + "[" + std::to_string(k) + "]", "ray index out of range");
      idx.push_back(static_cast<Index>(r));
      distinct.insert(static_cast<Index>(r));
    }
    if (idx.size() != static_cast<std::size_t>(dim) || distinct.size() != idx.size())
      throw FanParseError(where, "non-simplicial or non-maximal cone");
    fan.max_cones.push_back(idx);
    try {
      (void)fan.cone(i);
    } catch (const InputError&) {
      throw FanParseError(where, "non-simplicial or non-maximal cone (dependent generators)");
    }
  }
  if (fan.max_cones.empty()) throw FanParseError("max_cones", "fan has no maximal cones");

  if (doc.contains("polytope_multiple")) {
    const long long k = as_integer(doc["polytope_multiple"], "polytope_multiple");
    if (k < 1 || k > 1000000) throw FanParseError("polytope_multiple", "must be a positive integer");
    fan.polytope_multiple = static_cast<int>(k);
  }
  if (doc.contains("scalar_curvature")) {
    if (!doc["scalar_curvature"].is_string())
      throw FanParseError("scalar_curvature", "expected a rational string \"p/q\"");
    try {
      fan.scalar_curvature = parse_rational(doc["scalar_curvature"].get<std::string>());
    } catch (const InputError& e) {
      throw FanParseError("scalar_curvature", e.what());
    }
    if (*fan.scalar_curvature <= 0) throw FanParseError("scalar_curvature", "must be positive");
  }
  return fan;
}

Fan load_fan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fan file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fan(buf.str());
  } catch (const FanParseError& e) {
    throw FanParseError(path.filename().string() + ", " + e.location(),
                        std::string(e.what()).substr(e.location().size() + 2));
  }
}

std::string dump_fan(const Fan& fan) {
  json doc;
  doc["name"] = fan.name;
  doc["dim"] = fan.dim;
  json rays = json::array();
  for (const auto& r : fan.rays) {
    json row = json::array();
    for (Index k = 0; k < r.size(); ++k) row.push_back(r(k).convert_to<long long>());
    rays.push_back(row);
  }
  doc["rays"] = rays;
  json cones = json::array();
  for (const auto& c : fan.max_cones) {
    json row = json::array();
    for (Index r : c) row.push_back(static_cast<long long>(r));
    cones.push_back(row);
  }
  doc["max_cones"] = cones;
  if (fan.polytope_multiple) doc["polytope_multiple"] = *fan.polytope_multiple;
  if (fan.scalar_curvature) doc["scalar_curvature"] = to_string(*fan.scalar_curvature);
  return doc.dump(2);
}

}  // namespace kcsc::toric
