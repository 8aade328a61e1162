#include "setmax/harness/io.hpp"

#include <fstream>
#include <sstream>

#include "setmax/errors.hpp"

namespace setmax::harness {

using nlohmann::json;

namespace {

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

geo::Point2 as_point(const json& j, const std::string& where) {
  const auto& a = as_array(j, where);
  if (a.size() != 2) throw InputError(where + ": a point has exactly two coordinates");
  return {as_int(a[0], where), as_int(a[1], where)};
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  if (!doc.contains("n")) throw InputError("instance is missing \"n\"");
  auto n = as_int(doc["n"], "n");
  if (n < 0) throw InputError("n must be non-negative");

  InstanceFile out;
  if (doc.contains("geometry")) {
    const auto& g = doc["geometry"];
    if (!g.is_object()) throw InputError("geometry: expected an object");
    geo::GeometricInstance inst;
    const json points = g.value("points", json::array());
    const json polygons = g.value("polygons", json::array());
    for (const auto& p : as_array(points, "geometry.points")) {
      inst.points.push_back(as_point(p, "geometry.points"));
    }
    std::size_t poly_index = 0;
    for (const auto& poly : as_array(polygons, "geometry.polygons")) {
      std::vector<geo::Point2> verts;
      std::string where = "geometry.polygons[" + std::to_string(poly_index++) + "]";
      for (const auto& p : as_array(poly, where)) verts.push_back(as_point(p, where));
      inst.polygons.push_back(geo::ConvexPolygon::from_vertices(std::move(verts)));
    }
    inst.k = g.contains("k") ? static_cast<std::size_t>(as_int(g["k"], "geometry.k"))
                             : geo::max_sides(inst);
    if (inst.points.size() != static_cast<std::size_t>(n)) {
      throw InputError("geometry has " + std::to_string(inst.points.size()) + " points but n = " +
                       std::to_string(n));
    }
    geo::validate_instance(inst);
    out.geometry = std::move(inst);
  }

  if (doc.contains("sets")) {
    std::vector<std::vector<ElementIndex>> sets;
    std::size_t set_index = 0;
    for (const auto& s : as_array(doc["sets"], "sets")) {
      std::string where = "sets[" + std::to_string(set_index++) + "]";
      std::vector<ElementIndex> members;
      for (const auto& e : as_array(s, where)) {
        auto v = as_int(e, where);
        if (v < 0 || v >= n) throw InputError(where + ": element " + std::to_string(v) + " out of range");
        members.push_back(static_cast<ElementIndex>(v));
      }
      sets.push_back(std::move(members));
    }
    out.system = SetSystem(static_cast<std::size_t>(n), std::move(sets));
  } else if (out.geometry) {
    out.system = geo::induced_system(*out.geometry);
  } else {
    throw InputError("instance needs \"sets\" or \"geometry\"");
  }
  require_valid(out.system);

  if (doc.contains("keys")) {
    std::vector<std::int64_t> keys;
    for (const auto& k : as_array(doc["keys"], "keys")) keys.push_back(as_int(k, "keys"));
    if (keys.size() != static_cast<std::size_t>(n)) throw InputError("keys must have n entries");
    (void)KeySpace(keys);  // rejects repeated keys
    out.keys = std::move(keys);
  }
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json to_json(const InstanceFile& inst) {
  json doc;
  doc["n"] = inst.system.n();
  doc["sets"] = inst.system.sets();
  if (inst.keys) doc["keys"] = *inst.keys;
  if (inst.geometry) {
    json g;
    json pts = json::array();
    for (auto p : inst.geometry->points) pts.push_back({p.x, p.y});
    json polys = json::array();
    for (const auto& poly : inst.geometry->polygons) {
      json verts = json::array();
      for (auto p : poly.vertices()) verts.push_back({p.x, p.y});
      polys.push_back(std::move(verts));
    }
    g["points"] = std::move(pts);
    g["polygons"] = std::move(polys);
    g["k"] = inst.geometry->k;
    doc["geometry"] = std::move(g);
  }
  return doc;
}

void save_instance(const InstanceFile& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << to_json(inst).dump() << '\n';
}

json result_to_json(const MaximaResult& result, const SetSystem& system,
                    std::optional<std::size_t> k, bool ok) {
  json j;
  j["algorithm"] = to_string(result.algorithm);
  j["n"] = system.n();
  j["m"] = system.m();
  j["p"] = system.p();
  if (k) j["k"] = *k;
  j["comparisons"] = result.comparisons;
  j["bound"] = result.bound;
  j["ok"] = ok;
  j["maxima"] = result.maxima;
  return j;
}

}  // namespace setmax::harness
