#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace sclab {

// Deterministic random source. One stream per worker; streams are never
// shared between threads. Gaussian sampling is hand-rolled Box-Muller so
// output is reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // uniform in [0, 1)
    double next_unit();
    double next_gaussian(double mean, double sigma);
    // uniform in [0, n)
    uint64_t below_u64(uint64_t n);

    // uniform in [0, bound)
    mpz_class below(const mpz_class& bound);
    // uniform in [lo, hi)
    mpz_class range(const mpz_class& lo, const mpz_class& hi);
    // uniform with exactly nbits bits (top bit set)
    mpz_class bits_topset(unsigned nbits);

    // Independent child stream; same (seed, salt) always gives the same child.
    Rng fork(uint64_t salt) const;

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    std::mt19937_64 mt_;
    gmp_randclass gmp_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// SplitMix64 step; used for seed derivation and config hashing.
uint64_t splitmix64(uint64_t x);

}  // namespace sclab
