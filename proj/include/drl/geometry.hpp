#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// World frame: right-handed, Z up. Gravity is (0,0,-9.81) m/s^2.
// Gates: local +X is the pass-through normal, the frame lies in the local YZ plane.

namespace drl {

inline constexpr double kGravityZ = -9.81;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double squared_norm() const { return dot(*this); }
    double norm() const { return std::sqrt(squared_norm()); }
    Vec3 normalized() const {
        const double n = norm();
        return n > 0.0 ? *this / n : Vec3{};
    }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

struct UnitQuaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr UnitQuaternion() = default;
    constexpr UnitQuaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static UnitQuaternion from_axis_angle(const Vec3& axis, double angle) {
        const Vec3 a = axis.normalized();
        const double h = 0.5 * angle;
        const double s = std::sin(h);
        return {std::cos(h), a.x * s, a.y * s, a.z * s};
    }
    // Intrinsic Z-Y-X: yaw about world Z, then pitch about Y, then roll about X.
    static UnitQuaternion from_yaw_pitch_roll(double yaw, double pitch, double roll) {
        return from_axis_angle({0, 0, 1}, yaw) * from_axis_angle({0, 1, 0}, pitch) *
               from_axis_angle({1, 0, 0}, roll);
    }

    UnitQuaternion operator*(const UnitQuaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    constexpr UnitQuaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    UnitQuaternion normalized() const {
        const double n = norm();
        if (n <= 0.0) return {};
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        const Vec3 qv{x, y, z};
        const Vec3 t = 2.0 * qv.cross(v);
        return v + w * t + qv.cross(t);
    }
    Vec3 inverse_rotate(const Vec3& v) const { return conjugate().rotate(v); }

    double yaw() const {
        // Heading of the rotated +X axis, projected on the world XY plane.
        const Vec3 fwd = rotate({1, 0, 0});
        return std::atan2(fwd.y, fwd.x);
    }

    std::array<double, 9> rotation_matrix() const {
        const double xx = x * x, yy = y * y, zz = z * z;
        const double xy = x * y, xz = x * z, yz = y * z;
        const double wx = w * x, wy = w * y, wz = w * z;
        return {1 - 2 * (yy + zz), 2 * (xy - wz),     2 * (xz + wy),
                2 * (xy + wz),     1 - 2 * (xx + zz), 2 * (yz - wx),
                2 * (xz - wy),     2 * (yz + wx),     1 - 2 * (xx + yy)};
    }

    // Rotation vector (axis * angle) mapping this onto `target`, in the local frame.
    Vec3 log_to(const UnitQuaternion& target) const {
        UnitQuaternion d = conjugate() * target;
        if (d.w < 0.0) d = {-d.w, -d.x, -d.y, -d.z};
        const Vec3 v{d.x, d.y, d.z};
        const double s = v.norm();
        if (s < 1e-12) return 2.0 * v;
        const double angle = 2.0 * std::atan2(s, d.w);
        return v * (angle / s);
    }
};

struct Pose {
    Vec3 position;
    UnitQuaternion orientation;
};

inline Vec3 transform_point(const Pose& pose, const Vec3& p_local) {
    return pose.orientation.rotate(p_local) + pose.position;
}

inline Vec3 inverse_transform_point(const Pose& pose, const Vec3& p_world) {
    return pose.orientation.inverse_rotate(p_world - pose.position);
}

struct RigidState {
    Pose pose;
    Vec3 velocity;          // m/s, world frame
    Vec3 angular_velocity;  // rad/s, body frame
    double timestamp = 0.0;
};

struct Gate {
    std::string id;
    int index = 0;
    Pose pose;  // gate center; local +X is the pass-through normal
    double inner_width = 0.0, inner_height = 0.0;
    double outer_width = 0.0, outer_height = 0.0;
};

// Four corners in world frame, counterclockwise as seen looking along the gate
// normal (from the -X side), starting top-left: TL, BL, BR, TR.
inline std::array<Vec3, 4> gate_corners_world(const Gate& gate, bool use_inner) {
    const double hw = 0.5 * (use_inner ? gate.inner_width : gate.outer_width);
    const double hh = 0.5 * (use_inner ? gate.inner_height : gate.outer_height);
    const std::array<Vec3, 4> local = {Vec3{0, hw, hh}, Vec3{0, hw, -hh},
                                       Vec3{0, -hw, -hh}, Vec3{0, -hw, hh}};
    std::array<Vec3, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = transform_point(gate.pose, local[i]);
    return out;
}

struct Aabb {
    Vec3 min, max;
    bool contains(const Vec3& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
               p.z <= max.z;
    }
};

struct Track {
    std::string name;
    std::vector<Gate> gates;  // ordered by index 0..N-1
    Aabb world_bounds;
};

// Throws drl::Error on violated track invariants (gate count, index ordering, bounds).
void validate_track(const Track& track);

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a + M_PI, 2.0 * M_PI);
    if (a <= 0.0) a += 2.0 * M_PI;
    return a - M_PI;
}

}  // namespace drl
