#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qcut {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Per-job RNG stream seed derived from the master seed and the job id.
/// Results depend only on (master_seed, job_id), never on scheduling order.
inline std::uint64_t derive_job_seed(std::uint64_t master_seed, std::string_view job_id) {
    return splitmix64(master_seed ^ splitmix64(fnv1a64(job_id)));
}

/// mt19937_64 with platform-independent double draws. The standard pins the
/// engine's output sequence but not uniform_real_distribution, so doubles are
/// produced from raw 64-bit output directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, hi).
    double next_double(double hi) { return next_double() * hi; }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection-free modulo is fine here; streams are not adversarial.
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qcut
