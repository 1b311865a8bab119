#ifndef TURANLAB_RNG_HPP
#define TURANLAB_RNG_HPP

#include <array>
#include <cstdint>

namespace turanlab {

// splitmix64, used both as a stand-alone mixer and to seed xoshiro streams.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Deterministic sub-stream seed for task (a, b, c) of a base seed. Used to
// hand every sweep cell / search start its own independent stream so that
// parallel schedules cannot change the sampled values.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    SplitMix64 mix(base);
    std::uint64_t s = mix.next();
    s ^= 0x9e3779b97f4a7c15ULL * (a + 1);
    s = SplitMix64(s).next();
    s ^= 0xbf58476d1ce4e5b9ULL * (b + 1);
    s = SplitMix64(s).next();
    s ^= 0x94d049bb133111ebULL * (c + 1);
    return SplitMix64(s).next();
}

// xoshiro256** by Blackman & Vigna. Self-contained so that streams are
// bit-identical across platforms (std::uniform_real_distribution is not).
class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 mix(seed);
        for (auto& w : s_) w = mix.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

} // namespace turanlab

#endif
