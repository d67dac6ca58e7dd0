#pragma once

#include <cstdint>

namespace uavplan {

/// SplitMix64 (Steele, Lea & Flood; public domain reference constants).
/// Fixed-width integer arithmetic only, so sequences are identical on
/// every platform. Used wherever reproducible randomness is required.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [lo, hi] inclusive. Modulo bias is irrelevant
    /// here; determinism is what matters.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Derive an independent child stream, e.g. one per scene element.
    SplitMix64 split(std::uint64_t salt) const {
        SplitMix64 mixer(state_ ^ (salt * 0xD6E8FEB86659FD93ULL));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace uavplan
