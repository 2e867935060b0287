#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sclab/config.hpp"

namespace sclab::groups {

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-field DSA domain: q | p-1 and g has multiplicative order q mod p.
struct DsaParams {
    mpz_class p, q, g;
    void validate() const;

    static DsaParams from_config(const Config& cfg);
    std::string to_config_text() const;
};

struct Point {
    mpz_class x, y;
    bool infinity = true;

    static Point make(mpz_class px, mpz_class py) { return {std::move(px), std::move(py), false}; }
};

bool operator==(const Point& a, const Point& b);

// Prime-field short Weierstrass curve with a prime-order generator.
struct CurveParams {
    mpz_class field_prime, a, b;
    Point G;
    mpz_class q;        // order of G
    unsigned cofactor = 1;
    void validate() const;

    static CurveParams from_config(const Config& cfg);
    std::string to_config_text() const;
};

bool on_curve(const Point& P, const CurveParams& c);
Point point_negate(const Point& P);
Point point_add(const Point& P, const Point& Q, const CurveParams& c);
Point point_double(const Point& P, const CurveParams& c);

// Signed-digit recoding, LSB first. Nonzero digits are odd, bounded by
// 2^(w-1)-1 in magnitude, and no two nonzero digits fall within w positions.
struct WnafDigits {
    std::vector<int> digits;
    unsigned w = 0;
};

WnafDigits wnaf_recode(const mpz_class& k, unsigned w);
mpz_class wnaf_reconstruct(const WnafDigits& d);

enum class EcOp : uint8_t { kDouble, kAdd };

// Double/add transcript of one scalar multiplication, most significant
// processed index first.
struct DaSequence {
    std::vector<EcOp> ops;

    size_t double_count() const;
    size_t add_count() const;
};

// wNAF scalar multiplication. The loop runs from floor(lg k)+1 down to 0,
// one double per iteration and an add wherever the recoded digit is
// nonzero, so the transcript length tracks the bit length of k.
std::pair<Point, DaSequence> scalar_mult_wnaf(const mpz_class& k, unsigned w,
                                              const CurveParams& c);

}  // namespace sclab::groups
