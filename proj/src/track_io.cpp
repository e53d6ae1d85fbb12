#include "drl/track_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace drl {

using nlohmann::json;

namespace {

Vec3 vec3_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw Error(std::string("track: ") + what + " must be a 3-element array");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

void validate_track(const Track& track) {
    if (track.gates.size() < 2) throw Error("track: needs at least 2 gates");
    std::set<int> seen;
    for (std::size_t i = 0; i < track.gates.size(); ++i) {
        const Gate& g = track.gates[i];
        if (g.index != static_cast<int>(i)) {
            throw Error("track: gate indices must be 0..N-1 in order");
        }
        if (!seen.insert(g.index).second) throw Error("track: duplicate gate index");
        if (g.inner_width <= 0 || g.inner_height <= 0) {
            throw Error("track: gate inner dimensions must be positive");
        }
        if (g.outer_width < g.inner_width || g.outer_height < g.inner_height) {
            throw Error("track: gate outer dimensions must cover inner dimensions");
        }
        if (!track.world_bounds.contains(g.pose.position)) {
            throw Error("track: gate '" + g.id + "' center outside world_bounds");
        }
    }
}

Track parse_track_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("track: parse error: ") + e.what());
    }
    Track track;
    try {
        track.name = j.at("name").get<std::string>();
        track.world_bounds.min = vec3_from(j.at("world_bounds").at("min"), "world_bounds.min");
        track.world_bounds.max = vec3_from(j.at("world_bounds").at("max"), "world_bounds.max");
        std::set<int> indices;
        for (const json& gj : j.at("gates")) {
            Gate g;
            g.id = gj.at("id").get<std::string>();
            g.index = gj.at("index").get<int>();
            if (!indices.insert(g.index).second) {
                throw Error("track: duplicate gate index " + std::to_string(g.index));
            }
            g.pose.position = vec3_from(gj.at("position"), "gate position");
            const double yaw = deg_to_rad(gj.value("yaw_deg", 0.0));
            const double pitch = deg_to_rad(gj.value("pitch_deg", 0.0));
            const double roll = deg_to_rad(gj.value("roll_deg", 0.0));
            g.pose.orientation = UnitQuaternion::from_yaw_pitch_roll(yaw, pitch, roll);
            const json& inner = gj.at("inner");
            const json& outer = gj.at("outer");
            g.inner_width = inner.at(0).get<double>();
            g.inner_height = inner.at(1).get<double>();
            g.outer_width = outer.at(0).get<double>();
            g.outer_height = outer.at(1).get<double>();
            track.gates.push_back(std::move(g));
        }
    } catch (const json::exception& e) {
        throw Error(std::string("track: missing or malformed field: ") + e.what());
    }
    std::sort(track.gates.begin(), track.gates.end(),
              [](const Gate& a, const Gate& b) { return a.index < b.index; });
    validate_track(track);
    return track;
}

Track load_track(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("track: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_track_json(ss.str());
}

std::string track_to_json(const Track& track) {
    json j;
    j["name"] = track.name;
    j["world_bounds"]["min"] = {track.world_bounds.min.x, track.world_bounds.min.y,
                                track.world_bounds.min.z};
    j["world_bounds"]["max"] = {track.world_bounds.max.x, track.world_bounds.max.y,
                                track.world_bounds.max.z};
    j["gates"] = json::array();
    for (const Gate& g : track.gates) {
        json gj;
        gj["id"] = g.id;
        gj["index"] = g.index;
        gj["position"] = {g.pose.position.x, g.pose.position.y, g.pose.position.z};
        // Recover Z-Y-X angles from the rotated axes; exact for poses built
        // from yaw/pitch/roll away from pitch = +-90 deg.
        const Vec3 fwd = g.pose.orientation.rotate({1, 0, 0});
        const double yaw = std::atan2(fwd.y, fwd.x);
        const double pitch = std::atan2(-fwd.z, std::hypot(fwd.x, fwd.y));
        const UnitQuaternion unrolled =
            UnitQuaternion::from_yaw_pitch_roll(yaw, pitch, 0.0).conjugate() * g.pose.orientation;
        const double roll = 2.0 * std::atan2(unrolled.x, unrolled.w);
        gj["yaw_deg"] = rad_to_deg(yaw);
        gj["pitch_deg"] = rad_to_deg(pitch);
        gj["roll_deg"] = rad_to_deg(roll);
        gj["inner"] = {g.inner_width, g.inner_height};
        gj["outer"] = {g.outer_width, g.outer_height};
        j["gates"].push_back(std::move(gj));
    }
    return j.dump(2) + "\n";
}

void save_track(const Track& track, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("track: cannot write '" + path + "'");
    out << track_to_json(track);
}

}  // namespace drl
