#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace uniprod {

// Counter-based generator (Philox4x32-10).  Every random quantity in the
// matrix lab is addressed by an explicit counter, so sampling is stateless:
// the same (seed, counter) always yields the same value no matter how many
// threads are running or in which order draws are evaluated.
class Philox {
  public:
    explicit Philox(std::uint64_t seed)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)) {}

    std::array<std::uint32_t, 4> block(std::uint32_t c0, std::uint32_t c1,
                                       std::uint32_t c2, std::uint32_t c3) const {
        std::array<std::uint32_t, 4> x{c0, c1, c2, c3};
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * x[0];
            std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * x[2];
            std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return x;
    }

    // Two independent uniforms in [0, 1) from one block.
    std::array<double, 2> uniform_pair(std::uint32_t c0, std::uint32_t c1,
                                       std::uint32_t c2, std::uint32_t c3) const {
        auto w = block(c0, c1, c2, c3);
        return {to_unit(join(w[0], w[1])), to_unit(join(w[2], w[3]))};
    }

    // Two independent standard normals via Box-Muller on one block.
    std::array<double, 2> gaussian_pair(std::uint32_t c0, std::uint32_t c1,
                                        std::uint32_t c2, std::uint32_t c3) const {
        auto u = uniform_pair(c0, c1, c2, c3);
        double r2 = -2.0 * std::log(1.0 - u[0]);
        if (r2 < 0.0) r2 = 0.0;
        double r = std::sqrt(r2);
        double theta = 2.0 * 3.14159265358979323846 * u[1];
        return {r * std::cos(theta), r * std::sin(theta)};
    }

  private:
    static std::uint64_t join(std::uint32_t lo, std::uint32_t hi) {
        return static_cast<std::uint64_t>(lo) | (static_cast<std::uint64_t>(hi) << 32);
    }

    static double to_unit(std::uint64_t x) {
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    }

    std::uint32_t key0_;
    std::uint32_t key1_;
};

}  // namespace uniprod
