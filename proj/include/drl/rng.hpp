#pragma once

#include <cstdint>
#include <cmath>

namespace drl {

// Deterministic splitmix64 generator. All randomness in the project flows from
// one 64-bit master seed; module streams are derived with split_seed so they
// stay independent of each other and of draw order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t uniform_index(std::uint64_t n) { return n ? next_u64() % n : 0; }

    // Standard normal via Box-Muller, deterministic across platforms.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double sigma) { return sigma * normal(); }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream ids for the counter-based seed split. Keep stable: logs and datasets
// are reproducible only while these values stay fixed.
enum class RngStream : std::uint64_t {
    GateNoise = 1,
    OpponentWaypoints = 2,
    GamePlanner = 3,
    Dataset = 4,
    PerceptionEval = 5,
    EventJitter = 6,
};

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    Rng mix(master ^ (0xa0761d6478bd642fULL * (stream + 1)));
    return mix.next_u64();
}

inline Rng make_stream_rng(std::uint64_t master, RngStream stream) {
    return Rng(split_seed(master, static_cast<std::uint64_t>(stream)));
}

}  // namespace drl
