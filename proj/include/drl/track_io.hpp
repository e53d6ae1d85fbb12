#pragma once

#include <string>

#include "drl/geometry.hpp"

namespace drl {

// Track file schema (JSON):
// {
//   "name": "circle_r20",
//   "world_bounds": {"min": [x,y,z], "max": [x,y,z]},
//   "gates": [
//     {"id": "g0", "index": 0, "position": [x,y,z],
//      "yaw_deg": 0.0, "pitch_deg": 0.0, "roll_deg": 0.0,
//      "inner": [w,h], "outer": [w,h]}
//   ]
// }
// Angles are applied intrinsic Z-Y-X (yaw, then pitch, then roll). Duplicate
// gate indices are rejected; gates are sorted by index on load.
Track parse_track_json(const std::string& text);

Track load_track(const std::string& path);

std::string track_to_json(const Track& track);

void save_track(const Track& track, const std::string& path);

}  // namespace drl
