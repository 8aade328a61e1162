#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "setmax/geometry/instance.hpp"
#include "setmax/set_system.hpp"
#include "setmax/solvers.hpp"

namespace setmax::harness {

/// Contents of a JSON instance file:
///   { "n": int, "sets": [[int,...],...], "keys": [int,...]?,
///     "geometry": { "points": [[x,y],...], "polygons": [[[x,y],...],...], "k": int }? }
struct InstanceFile {
  SetSystem system;
  std::optional<std::vector<std::int64_t>> keys;
  std::optional<geo::GeometricInstance> geometry;
};

// Throws InputError (with the byte position for syntax errors). When
// "sets" is absent but geometry is present the sets are derived by containment.
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);

nlohmann::json to_json(const InstanceFile& inst);
void save_instance(const InstanceFile& inst, const std::string& path);

// { algorithm, n, m, p, k?, comparisons, bound, ok, maxima }
nlohmann::json result_to_json(const MaximaResult& result, const SetSystem& system,
                              std::optional<std::size_t> k, bool ok);

}  // namespace setmax::harness
