#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace turboweave {

// Bit sequences are stored one bit per byte; values are 0 or 1.
using Bits = std::vector<std::uint8_t>;

// SplitMix64, used both directly and to derive independent streams from a
// master seed.  Fixed algorithm so results are stable across platforms and
// standard-library versions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    SplitMix64 s(a);
    std::uint64_t x = s.next() ^ (b * 0x9e3779b97f4a7c15ull);
    SplitMix64 t(x);
    return t.next() ^ (c * 0xda942042e4dd58b5ull);
}

// Deterministic RNG for permutation construction and Monte-Carlo noise.
// Avoids std::uniform_*_distribution on purpose: their output sequences are
// implementation-defined and would break byte-identical reproducibility.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // uniform in [0, 1)
    double uniform01() { return double(gen_.next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound), bound >= 1; rejection keeps it unbiased
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = gen_.next();
            if (r >= threshold) return r % bound;
        }
    }

    int bit() { return int(gen_.next() >> 63); }

    // standard normal via Box-Muller; spare value cached
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    SplitMix64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace turboweave
