#pragma once

// Seedable, platform-independent generator: xoshiro256++ seeded through
// splitmix64. Per-case streams are derived by hashing (seed, case id), so
// cases can run in parallel with reproducible results.

#include <array>
#include <cstdint>
#include <string_view>

#include "ipbounds/core.hpp"

namespace ipb {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }
    // Independent stream for (seed, tag).
    static Rng stream(std::uint64_t seed, std::string_view tag) {
        return Rng(seed ^ fnv1a(tag));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    bool coin() { return (next() & 1u) != 0; }

    // Approximately standard normal; exact distribution is irrelevant here,
    // determinism and platform independence are.
    double gauss() {
        double s = 0.0;
        for (int i = 0; i < 12; ++i) s += uniform01();
        return s - 6.0;
    }

    Scalar scalar(Mode mode, double scale = 1.0) {
        if (mode == Mode::real) return Scalar{scale * gauss(), 0.0};
        return Scalar{scale * gauss(), scale * gauss()};
    }

    Vec vec(std::size_t d, Mode mode, double scale = 1.0) {
        Vec v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = scalar(mode, scale);
        return v;
    }

    Vec unit_vec(const IpSpace& space, std::size_t d) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            Vec v = vec(d, space.mode());
            double nv = space.norm(v);
            if (nv > 1e-6) return (1.0 / nv) * v;
        }
        Vec e(d);
        e[0] = Scalar{1.0, 0.0};
        if (space.weighted()) e[0] = Scalar{1.0 / std::sqrt(space.weights()[0]), 0.0};
        return e;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace ipb
