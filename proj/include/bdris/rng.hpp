#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace bdris {

/// SplitMix64 finalizer. Used as the mixing step for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based combination of a base seed with an index. Derived seeds are
/// independent of the order in which streams are consumed, so parallel
/// schedules cannot change results.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index));
}

/// Seeded random source. Owns a single engine; independent child streams are
/// derived from the original seed (not from engine state), so spawning a
/// child never perturbs the parent sequence.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    /// Derives an independent stream for the given index.
    Rng child(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return engine_; }

    /// Standard normal draw.
    double normal() { return normal_(engine_); }

    /// Circularly-symmetric complex Gaussian with total variance `variance`
    /// (real and imaginary parts each carry variance/2).
    std::complex<double> cnormal(double variance) {
        const double s = std::sqrt(variance / 2.0);
        return {s * normal_(engine_), s * normal_(engine_)};
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

}  // namespace bdris
