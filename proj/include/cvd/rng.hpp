#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "cvd/vec3.hpp"

namespace cvd {

// Philox4x32-10 block function. Counter-based: the n-th output block is a
// pure function of (key, counter), so any (seed, stream) pair names a
// reproducible sequence regardless of how work is split across threads.
namespace philox {

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

struct Block {
    std::uint32_t v[4];
};

inline Block encrypt(std::uint64_t ctr_lo, std::uint64_t ctr_hi,
                     std::uint64_t key) {
    std::uint32_t c0 = static_cast<std::uint32_t>(ctr_lo);
    std::uint32_t c1 = static_cast<std::uint32_t>(ctr_lo >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(ctr_hi);
    std::uint32_t c3 = static_cast<std::uint32_t>(ctr_hi >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return Block{{c0, c1, c2, c3}};
}

}  // namespace philox

/// One independent random stream, identified by (seed, stream index).
/// Streams with distinct identities are statistically independent; the
/// sequence emitted by a stream depends only on its identity and on how
/// many values have been consumed.
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64() {
        if (pos_ >= 4) refill();
        const std::uint64_t lo = buf_.v[pos_];
        const std::uint64_t hi = buf_.v[pos_ + 1];
        pos_ += 2;
        return lo | (hi << 32);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be >= 1.
    std::uint64_t uniform_below(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal draw (ziggurat).
    double normal();

    /// Standard normal via Box-Muller; used to cross-check the ziggurat.
    double normal_boxmuller() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    Vec3 normal3(double sigma) {
        return Vec3{sigma * normal(), sigma * normal(), sigma * normal()};
    }

private:
    void refill() {
        buf_ = philox::encrypt(ctr_++, stream_, seed_);
        pos_ = 0;
    }

    double normal_tail(bool negative);

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t ctr_ = 0;
    philox::Block buf_{};
    int pos_ = 4;
};

/// Deterministic seed derivation: folds words into a parent seed so that
/// sub-tasks (repetitions, noise draws, pilots) get unrelated streams.
/// SplitMix64 finalizer chain.
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t x) {
    std::uint64_t z = h + 0x9E3779B97F4A7C15ull + x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

template <typename... Rest>
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t x, Rest... rest) {
    return mix_seed(mix_seed(h, x), rest...);
}

// Stream-index namespace: particle walks use their particle id; auxiliary
// draws (symbol source, noise, ...) live in the top half of the index space.
inline constexpr std::uint64_t kAuxStreamBase = 1ull << 63;
inline constexpr std::uint64_t kSymbolStream = kAuxStreamBase + 0;
inline constexpr std::uint64_t kNoiseStream = kAuxStreamBase + 1;

}  // namespace cvd
