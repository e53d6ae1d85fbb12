#include "drl/kernels.hpp"

#include <cmath>

// Reference lane. The AVX2 lane mirrors these loops operation for operation;
// any change here must be replicated there to keep the lanes bit-exact.

namespace drl::kernels {
namespace {

void span_zfill_scalar(float* depth, std::uint16_t* seg, int n, float z0, float dz,
                       std::uint16_t id) {
    for (int i = 0; i < n; ++i) {
        const float z = z0 + static_cast<float>(i) * dz;
        if (z < depth[i]) {
            depth[i] = z;
            seg[i] = id;
        }
    }
}

void event_accumulate_scalar(const double* l_curr, double* ref, const double* c_px,
                             std::int32_t* signed_counts, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double delta = l_curr[i] - ref[i];
        const double k = std::floor(std::fabs(delta) / c_px[i]);
        const double sk = delta < 0.0 ? -k : k;
        signed_counts[i] = static_cast<std::int32_t>(sk);
        ref[i] = ref[i] + sk * c_px[i];
    }
}

void luma_rgb8_scalar(const std::uint8_t* rgb, std::size_t n, double* out) {
    constexpr double cr = 0.299, cg = 0.587, cb = 0.114, inv = 1.0 / 255.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = static_cast<double>(rgb[3 * i + 0]);
        const double g = static_cast<double>(rgb[3 * i + 1]);
        const double b = static_cast<double>(rgb[3 * i + 2]);
        out[i] = ((r * cr + g * cg) + b * cb) * inv;
    }
}

void segment_max_rates_scalar(const double* vc, const double* ac, double h, int m, double* max_v2,
                              double* max_a2) {
    double mv = 0.0, ma = 0.0;
    for (int j = 0; j < m; ++j) {
        const double tau = static_cast<double>(j) * h;
        double v2 = 0.0, a2 = 0.0;
        for (int axis = 0; axis < 3; ++axis) {
            const double* v = vc + axis * 5;
            const double* a = ac + axis * 4;
            const double vv = (((v[4] * tau + v[3]) * tau + v[2]) * tau + v[1]) * tau + v[0];
            const double aa = ((a[3] * tau + a[2]) * tau + a[1]) * tau + a[0];
            v2 = v2 + vv * vv;
            a2 = a2 + aa * aa;
        }
        if (v2 > mv) mv = v2;
        if (a2 > ma) ma = a2;
    }
    *max_v2 = mv;
    *max_a2 = ma;
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    span_zfill_scalar,
    event_accumulate_scalar,
    luma_rgb8_scalar,
    segment_max_rates_scalar,
};
}  // namespace detail

}  // namespace drl::kernels
