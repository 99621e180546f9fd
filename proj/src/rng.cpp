#include "cvd/rng.hpp"

namespace cvd {
namespace {

// 256-layer ziggurat for the standard normal (Marsaglia-Tsang layout).
// Layer tables are built once at startup from the canonical (R, V) pair
// for N = 256.
constexpr int kZigLayers = 256;
constexpr double kZigR = 3.6541528853610088;
constexpr double kZigV = 4.92867323399e-3;

struct ZigTables {
    double x[kZigLayers + 1];     // right edge of each layer, x[0] is virtual
    double f[kZigLayers + 1];     // exp(-x^2/2) at the edges
    std::uint64_t k[kZigLayers];  // 52-bit fast-accept thresholds

    ZigTables() {
        const double f_r = std::exp(-0.5 * kZigR * kZigR);
        x[0] = kZigV / f_r;  // base layer width including the tail
        x[1] = kZigR;
        x[kZigLayers] = 0.0;
        for (int i = 2; i < kZigLayers; ++i) {
            const double prev = x[i - 1];
            x[i] = std::sqrt(
                -2.0 * std::log(kZigV / prev + std::exp(-0.5 * prev * prev)));
        }
        for (int i = 0; i <= kZigLayers; ++i) f[i] = std::exp(-0.5 * x[i] * x[i]);
        for (int i = 0; i < kZigLayers; ++i) {
            k[i] = static_cast<std::uint64_t>((x[i + 1] / x[i]) * 0x1.0p52);
        }
    }
};

const ZigTables& zig() {
    static const ZigTables tables;
    return tables;
}

}  // namespace

double RngStream::normal() {
    const ZigTables& t = zig();
    for (;;) {
        const std::uint64_t u = next_u64();
        const int layer = static_cast<int>(u & 0xFF);
        const bool negative = (u >> 8) & 1;
        const std::uint64_t mag = u >> 12;  // 52 bits
        if (mag < t.k[layer]) {
            const double x = static_cast<double>(mag) * 0x1.0p-52 * t.x[layer];
            return negative ? -x : x;
        }
        if (layer == 0) return normal_tail(negative);
        const double x = static_cast<double>(mag) * 0x1.0p-52 * t.x[layer];
        const double f_lo = t.f[layer + 1];
        const double f_hi = t.f[layer];
        if (f_lo + uniform() * (f_hi - f_lo) < std::exp(-0.5 * x * x)) {
            return negative ? -x : x;
        }
    }
}

double RngStream::normal_tail(bool negative) {
    // Marsaglia tail sampler for |x| > R.
    for (;;) {
        const double x = -std::log(uniform_pos()) / kZigR;
        const double y = -std::log(uniform_pos());
        if (y + y >= x * x) {
            const double v = kZigR + x;
            return negative ? -v : v;
        }
    }
}

}  // namespace cvd
