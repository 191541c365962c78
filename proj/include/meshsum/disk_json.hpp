#pragma once

#include <json.hpp>

#include "meshsum/disk.hpp"

namespace meshsum {

/// {"r": int, "layer": int, "seed": "vertex"|"face"|"custom",
///  "boundary": [ids], "rotation": [[ids]...]}
nlohmann::json disk_to_json(const CombinatorialDisk& disk);

/// Structural parse only; throws MalformedDiskError on missing or mistyped
/// fields. Run validate_disk() for the combinatorial invariants. A missing
/// "seed" key yields SeedKind::Custom.
CombinatorialDisk disk_from_json(const nlohmann::json& doc);

}  // namespace meshsum
