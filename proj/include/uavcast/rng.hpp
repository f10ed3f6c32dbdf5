#pragma once

#include <array>
#include <cstdint>

namespace uavcast::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).  Every draw
// is a pure function of (key, counter), so independent streams are addressed
// by counter layout instead of shared mutable state.  That keeps simulations
// reproducible under any trial-to-thread assignment.

namespace detail {

inline void mulhilo32(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> philox_round(std::array<std::uint32_t, 4> ctr,
                                                 const std::array<std::uint32_t, 2>& key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo32(kMul0, ctr[0], hi0, lo0);
    mulhilo32(kMul1, ctr[2], hi1, lo1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace detail

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        ctr = detail::philox_round(ctr, key);
    }
    return ctr;
}

/// Counter-word tags separating unrelated consumers of the same seed.
enum : std::uint32_t {
    kStreamGtSampler = 0x67740001u,
    kStreamSimulation = 0x51400002u,
    kStreamFadingOracle = 0x0f0a0003u,
};

inline std::array<std::uint32_t, 2> key_from_seed(std::uint64_t seed) {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// Two uniform doubles in [0,1) from one Philox block, addressed by
/// (seed; stream, a, b, c).
inline std::pair<double, double> u01_pair(std::uint64_t seed, std::uint32_t stream,
                                          std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const auto words = philox4x32({stream, a, b, c}, key_from_seed(seed));
    const auto to01 = [](std::uint32_t hi, std::uint32_t lo) {
        const std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
        return static_cast<double>(v >> 11) * 0x1.0p-53;
    };
    return {to01(words[0], words[1]), to01(words[2], words[3])};
}

inline double u01(std::uint64_t seed, std::uint32_t stream,
                  std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return u01_pair(seed, stream, a, b, c).first;
}

}  // namespace uavcast::rng
