#include "meshsum/disk_json.hpp"

#include <limits>
#include <string>

#include "meshsum/error.hpp"

namespace meshsum {

namespace {

std::vector<VertexId> id_list(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw MalformedDiskError(std::string(what) + " must be an array");
  std::vector<VertexId> ids;
  ids.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_number_unsigned()) throw MalformedDiskError(std::string(what) + " must hold vertex ids");
    const auto id = x.get<std::uint64_t>();
    if (id >= std::numeric_limits<VertexId>::max()) throw MalformedDiskError("vertex id too large");
    ids.push_back(static_cast<VertexId>(id));
  }
  return ids;
}

}  // namespace

nlohmann::json disk_to_json(const CombinatorialDisk& disk) {
  nlohmann::json rotation = nlohmann::json::array();
  for (const auto& rot : disk.graph().rotations()) rotation.push_back(rot);
  return {
      {"r", disk.degree()},
      {"layer", disk.layer()},
      {"seed", to_string(disk.seed())},
      {"boundary", disk.boundary()},
      {"rotation", std::move(rotation)},
  };
}

CombinatorialDisk disk_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw MalformedDiskError("disk document must be a JSON object");
  for (const char* key : {"r", "boundary", "rotation"}) {
    if (!doc.contains(key)) throw MalformedDiskError(std::string("missing key '") + key + "'");
  }
  if (!doc["r"].is_number_integer()) throw MalformedDiskError("'r' must be an integer");
  const int r = doc["r"].get<int>();

  int layer = 0;
  SeedKind seed = SeedKind::Custom;
  if (doc.contains("layer")) {
    if (!doc["layer"].is_number_integer() || doc["layer"].get<std::int64_t>() < 0) throw MalformedDiskError("'layer' must be a nonnegative integer");
    layer = doc["layer"].get<int>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_string()) throw MalformedDiskError("'seed' must be a string");
    const auto s = doc["seed"].get<std::string>();
    if (s == "vertex") {
      seed = SeedKind::Vertex;
    } else if (s == "face") {
      seed = SeedKind::Face;
    } else if (s != "custom") {
      throw MalformedDiskError("unknown seed kind '" + s + "'");
    }
  }
  // Provenance needs both keys.
  if (!doc.contains("layer")) seed = SeedKind::Custom;

  const auto& rot = doc["rotation"];
  if (!rot.is_array()) throw MalformedDiskError("'rotation' must be an array");
  std::vector<std::vector<VertexId>> rotations;
  rotations.reserve(rot.size());
  for (const auto& row : rot) rotations.push_back(id_list(row, "rotation row"));

  return CombinatorialDisk(RotationGraph(std::move(rotations)), r, id_list(doc["boundary"], "'boundary'"), layer, seed);
}

}  // namespace meshsum
