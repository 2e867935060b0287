#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sclab::arith {

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bits of |x|; bitlen(0) = 0
size_t bitlen(const mpz_class& x);
// smallest t with 2^t >= x, for x >= 1
size_t ceil_lg(const mpz_class& x);
// representative of a mod m in (-m/2, m/2]
mpz_class centered_mod(const mpz_class& a, const mpz_class& m);
mpz_class pow2(size_t n);

enum class Op : uint8_t { kSub, kShift };

// Control-flow transcript of the binary GCD: every subtraction and every
// single-bit shift in execution order. The leading both-even loop records
// one shift per halving of the pair. Which variable was shifted is not
// recorded; the observing channel cannot tell them apart.
struct OpTrace {
    std::vector<Op> ops;
    size_t leading_truncated = 0;

    size_t sub_count() const;
    size_t shift_count() const;
};

struct WindowedExpResult {
    mpz_class value;
    unsigned windows_processed = 0;
    unsigned padded_bitlen = 0;
};

// Regular fixed-window modular exponentiation. The exponent is padded to
// the next multiple of w bits before windowing, so the number of processed
// windows is ceil(bitlen(exp) / w); per-window work is one table multiply
// plus w squarings regardless of digit value.
WindowedExpResult mod_exp_fixed_window(const mpz_class& base, const mpz_class& exp,
                                       const mpz_class& modulus, unsigned w);

// Binary extended Euclidean algorithm over 0 < a < b with full SUB/SHIFT
// transcript.
std::pair<mpz_class, OpTrace> beea_gcd_traced(const mpz_class& a, const mpz_class& b);

// True iff `trace` is exactly the control-flow transcript the binary GCD
// produces on (a, b). Walks the algorithm consuming one symbol per step,
// so a trace with any reordered, missing or extra op is rejected.
bool replay_verify(const mpz_class& a, const mpz_class& b, const OpTrace& trace);

mpz_class mod_inv(const mpz_class& a, const mpz_class& m);

}  // namespace sclab::arith
