#ifndef THZSIM_RNG_HPP
#define THZSIM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace thzsim::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** stream with platform-independent output. Distribution
/// transforms are implemented here explicitly so that sequences are
/// bit-reproducible across standard libraries.
class Stream {
public:
    explicit Stream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Substream for one Monte Carlo chunk: mixes the chunk index into the
    // seed before expansion, so chunk streams are independent of how many
    // workers execute them.
    static Stream substream(std::uint64_t seed, std::uint64_t chunk_index) {
        std::uint64_t sm = seed;
        const std::uint64_t base = splitmix64(sm);
        return Stream(base ^ (chunk_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on (0, 1]: 53-bit mantissa, never exactly zero, so log() is safe.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Rayleigh draw via inverse transform, scale sigma per axis.
    double rayleigh(double sigma) {
        if (sigma == 0.0) return 0.0;
        return sigma * std::sqrt(-2.0 * std::log(uniform_pos()));
    }

    // Standard normal pair (Box-Muller).
    void normal_pair(double& z0, double& z1) {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double theta = 6.283185307179586476925286766559 * uniform();
        z0 = r * std::cos(theta);
        z1 = r * std::sin(theta);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace thzsim::rng

#endif
