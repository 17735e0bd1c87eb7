#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace barron {

// Deterministic, platform-independent random stream. std::uniform_real_distribution
// is implementation-defined, so we map the raw 64-bit state ourselves; this keeps
// CSV outputs byte-identical for a fixed (seed, row, trial) tuple.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {
        // burn a few rounds so nearby seeds decorrelate
        for (int i = 0; i < 4; ++i) next_u64();
    }

    // derive an independent stream for a (row, trial) slot
    RandomStream substream(std::uint64_t a, std::uint64_t b = 0) const {
        return RandomStream(mix(mix(state_ ^ 0x9e3779b97f4a7c15ull, a), b));
    }

    std::uint64_t next_u64() {
        state_ = mix(state_, 0xbf58476d1ce4e5b9ull);
        return state_;
    }

    // uniform on [0,1)
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform point in the cube [-1/2, 1/2]^d
    Eigen::VectorXd point_in_cube(int d) {
        Eigen::VectorXd x(d);
        for (int i = 0; i < d; ++i) x[i] = uniform01() - 0.5;
        return x;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }

    double normal() {
        // Box-Muller, two uniforms per call; fine for test-function synthesis
        double u1 = uniform01(), u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z, std::uint64_t salt) {
        z += 0x9e3779b97f4a7c15ull + salt;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace barron
