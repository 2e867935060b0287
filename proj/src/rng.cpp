#include "sclab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace sclab {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : seed_(seed), mt_(splitmix64(seed)), gmp_(gmp_randinit_mt) {
    gmp_.seed(static_cast<unsigned long>(splitmix64(seed ^ 0xa5a5a5a5a5a5a5a5ULL)));
}

uint64_t Rng::next_u64() { return mt_(); }

double Rng::next_unit() {
    return static_cast<double>(mt_() >> 11) * 0x1.0p-53;
}

double Rng::next_gaussian(double mean, double sigma) {
    if (have_spare_) {
        have_spare_ = false;
        return mean + sigma * spare_;
    }
    double u1 = 0.0;
    do {
        u1 = next_unit();
    } while (u1 <= 0.0);
    double u2 = next_unit();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return mean + sigma * mag * std::cos(2.0 * M_PI * u2);
}

uint64_t Rng::below_u64(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below_u64: empty range");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = mt_();
    } while (v >= limit);
    return v % n;
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: empty range");
    return gmp_.get_z_range(bound);
}

mpz_class Rng::range(const mpz_class& lo, const mpz_class& hi) {
    if (hi <= lo) throw std::invalid_argument("Rng::range: empty range");
    return lo + below(hi - lo);
}

mpz_class Rng::bits_topset(unsigned nbits) {
    if (nbits == 0) throw std::invalid_argument("Rng::bits_topset: nbits == 0");
    mpz_class top = mpz_class(1) << (nbits - 1);
    return top + below(top);
}

Rng Rng::fork(uint64_t salt) const {
    return Rng(splitmix64(seed_ ^ splitmix64(salt + 0x517cc1b727220a95ULL)));
}

}  // namespace sclab
