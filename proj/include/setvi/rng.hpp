#pragma once

#include <cstdint>
#include <random>

namespace setvi {

/// Derives an independent sub-seed from a master seed and a stream index
/// (splitmix64 finalizer). Every routine that needs per-step or per-run
/// randomness derives its seeds through this, so whole experiments are
/// reproducible from a single master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seeded uniform generator. Wraps std::mt19937_64 with an explicit
/// bits-to-double conversion; std::uniform_real_distribution is
/// implementation-defined and would break byte-identical outputs across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi); returns exactly lo when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi], both inclusive.
    int uniform_int(int lo, int hi) {
        int span = hi - lo + 1;
        int offset = static_cast<int>(uniform01() * span);
        return lo + (offset < span ? offset : span - 1);
    }

    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace setvi
