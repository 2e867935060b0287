#include "sclab/arith.hpp"

#include <algorithm>

namespace sclab::arith {

size_t bitlen(const mpz_class& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

size_t ceil_lg(const mpz_class& x) {
    if (x <= 0) throw arith_error("ceil_lg: x must be positive");
    if (x == 1) return 0;
    mpz_class xm1 = x - 1;
    return bitlen(xm1);
}

mpz_class centered_mod(const mpz_class& a, const mpz_class& m) {
    if (m <= 0) throw arith_error("centered_mod: modulus must be positive");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

mpz_class pow2(size_t n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

size_t OpTrace::sub_count() const {
    return std::count(ops.begin(), ops.end(), Op::kSub);
}

size_t OpTrace::shift_count() const {
    return std::count(ops.begin(), ops.end(), Op::kShift);
}

WindowedExpResult mod_exp_fixed_window(const mpz_class& base, const mpz_class& exp,
                                       const mpz_class& modulus, unsigned w) {
    if (w < 2 || w > 8) throw arith_error("mod_exp_fixed_window: window width out of range");
    if (modulus <= 2 || mpz_even_p(modulus.get_mpz_t()))
        throw arith_error("mod_exp_fixed_window: modulus must be odd and > 2");
    if (exp <= 0 || exp >= modulus)
        throw arith_error("mod_exp_fixed_window: exponent out of range");
    if (base < 0 || base >= modulus)
        throw arith_error("mod_exp_fixed_window: base out of range");

    unsigned nbits = static_cast<unsigned>(bitlen(exp));
    unsigned padded = ((nbits + w - 1) / w) * w;
    unsigned windows = padded / w;

    size_t table_size = size_t(1) << w;
    std::vector<mpz_class> table(table_size);
    table[0] = 1;
    for (size_t i = 1; i < table_size; ++i)
        table[i] = table[i - 1] * base % modulus;

    mpz_class acc = 1;
    for (unsigned win = windows; win-- > 0;) {
        for (unsigned i = 0; i < w; ++i) acc = acc * acc % modulus;
        mpz_class digit = (exp >> (win * w)) & mpz_class(table_size - 1);
        // multiply even when the digit is 0: per-window work is constant
        acc = acc * table[digit.get_ui()] % modulus;
    }
    return {acc, windows, padded};
}

std::pair<mpz_class, OpTrace> beea_gcd_traced(const mpz_class& a, const mpz_class& b) {
    if (!(0 < a && a < b)) throw arith_error("beea_gcd_traced: need 0 < a < b");
    mpz_class u = a, v = b;
    unsigned long i = 0;
    OpTrace trace;
    while (mpz_even_p(u.get_mpz_t()) && mpz_even_p(v.get_mpz_t())) {
        u >>= 1;
        v >>= 1;
        ++i;
        trace.ops.push_back(Op::kShift);
    }
    while (u != 0) {
        while (mpz_even_p(u.get_mpz_t())) {
            u >>= 1;
            trace.ops.push_back(Op::kShift);
        }
        while (mpz_even_p(v.get_mpz_t())) {
            v >>= 1;
            trace.ops.push_back(Op::kShift);
        }
        if (u >= v)
            u -= v;
        else
            v -= u;
        trace.ops.push_back(Op::kSub);
    }
    return {v << i, trace};
}

bool replay_verify(const mpz_class& a, const mpz_class& b, const OpTrace& trace) {
    if (!(0 < a && a < b)) return false;
    if (trace.leading_truncated != 0) return false;
    size_t idx = 0;
    auto need = [&](Op op) {
        if (idx >= trace.ops.size() || trace.ops[idx] != op) return false;
        ++idx;
        return true;
    };
    mpz_class u = a, v = b;
    while (mpz_even_p(u.get_mpz_t()) && mpz_even_p(v.get_mpz_t())) {
        if (!need(Op::kShift)) return false;
        u >>= 1;
        v >>= 1;
    }
    while (u != 0) {
        while (mpz_even_p(u.get_mpz_t())) {
            if (!need(Op::kShift)) return false;
            u >>= 1;
        }
        while (mpz_even_p(v.get_mpz_t())) {
            if (!need(Op::kShift)) return false;
            v >>= 1;
        }
        if (!need(Op::kSub)) return false;
        if (u >= v)
            u -= v;
        else
            v -= u;
    }
    return idx == trace.ops.size();
}

mpz_class mod_inv(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw arith_error("mod_inv: element not invertible");
    return r;
}

}  // namespace sclab::arith
