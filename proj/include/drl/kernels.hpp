#pragma once

#include <cstddef>
#include <cstdint>

namespace drl::kernels {

// Data-parallel inner loops used by the rasterizer, the event camera, and the
// spline limit probe. Every kernel has a scalar reference implementation and
// an AVX2 variant; the active lane is resolved once at startup from cpuid and
// can be forced with DRL_SIMD={auto|scalar|avx2}.
//
// Contract: lanes are bit-exact equivalent. Both perform the same IEEE-754
// operations in the same order per element, so outputs compare equal byte for
// byte (the equivalence tests assert exactly that).

enum class Lane { Scalar, Avx2 };

struct KernelTable {
    // Depth-tested span fill. For i in [0, n): z = z0 + float(i) * dz;
    // where z < depth[i], writes depth[i] = z and seg[i] = id.
    void (*span_zfill)(float* depth, std::uint16_t* seg, int n, float z0, float dz,
                       std::uint16_t id);

    // Event-camera accumulation. Per pixel: delta = l_curr - ref,
    // k = floor(|delta| / c_px); writes signed_counts = sign(delta) * k and
    // advances ref by sign(delta) * k * c_px (residual stays in ref).
    void (*event_accumulate)(const double* l_curr, double* ref, const double* c_px,
                             std::int32_t* signed_counts, std::size_t n);

    // Interleaved 8-bit RGB to Rec.601 luma in [0, 1]:
    // ((r*0.299 + g*0.587) + b*0.114) * (1/255).
    void (*luma_rgb8)(const std::uint8_t* rgb, std::size_t n, double* out);

    // Max squared speed / acceleration of one polynomial segment, sampled at
    // tau_j = j * h for j in [0, m). vel_coeffs: 3 axes x 5 coefficients
    // (axis-major, ascending power); acc_coeffs: 3 axes x 4.
    void (*segment_max_rates)(const double* vel_coeffs, const double* acc_coeffs, double h, int m,
                              double* max_v2, double* max_a2);
};

// Table for a specific lane; Avx2 falls back to scalar when unsupported.
const KernelTable& table(Lane lane);

// Active table and lane after dispatch.
const KernelTable& active();
Lane active_lane();
const char* lane_name(Lane lane);

// True when the AVX2 lane is compiled in and the CPU supports it.
bool avx2_available();

namespace detail {
extern const KernelTable scalar_table;
const KernelTable* avx2_table();  // nullptr when unavailable
}  // namespace detail

}  // namespace drl::kernels
