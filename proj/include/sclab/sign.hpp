#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "sclab/groups.hpp"
#include "sclab/leaksim.hpp"
#include "sclab/rng.hpp"

namespace sclab::sign {

struct sign_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NonceMode {
    kRaw,                // nonce used as drawn
    kPadded,             // fixed bit length via k + q / k + 2q
    kPaddedThenReduced,  // padded, then reduced mod q before use (the defect)
    kRandomWordPad,      // k + b*q for a random word b with top bit set
};

NonceMode nonce_mode_from_string(const std::string& s);
std::string to_string(NonceMode m);

struct NonceConfig {
    NonceMode mode = NonceMode::kRaw;
    unsigned word_bits = 64;  // kRandomWordPad only
};

// k + 2q when that keeps ceil(lg(k+q)) == ceil(lg q), else k + q.
// Result always has bitlen(q) + 1 bits and is congruent to k mod q.
mpz_class nonce_pad(const mpz_class& k, const mpz_class& q);

// The defeating reduction: restores the original k (and its length leak).
mpz_class nonce_unpad_bug(const mpz_class& k_hat, const mpz_class& q);

// Exponent/scalar actually processed for a drawn nonce under `mode`.
mpz_class effective_scalar(const mpz_class& k, const mpz_class& q, const NonceConfig& mode,
                           Rng& rng);

struct DsaKeyPair {
    mpz_class alpha;  // private
    mpz_class y;      // g^alpha mod p
};

struct EcKeyPair {
    mpz_class alpha;   // private
    groups::Point d;   // [alpha]G
};

DsaKeyPair dsa_keygen(const groups::DsaParams& g, Rng& rng);
EcKeyPair ecdsa_keygen(const groups::CurveParams& c, Rng& rng);

struct SignatureSample {
    mpz_class r, s, h;
    std::optional<leaksim::LeakRecord> leak;
    std::optional<mpz_class> truth_nonce;  // test harness only
};

enum class LeakCapture {
    kNone,
    kTiming,        // DSA: simulated latency of the exponentiation
    kDaSequence,    // ECDSA: double/add transcript of the scalar mult
    kSignedDigits,  // ECDSA: positions and signs of nonzero wNAF digits
};

struct SignOptions {
    NonceConfig nonce;
    unsigned w = 4;  // FWE window (DSA) or wNAF width (ECDSA)
    LeakCapture capture = LeakCapture::kNone;
    leaksim::NoiseModel noise;   // used by kTiming
    bool capture_truth = false;  // test harness flag; attack code never sets it
};

SignatureSample dsa_sign(const mpz_class& h, const DsaKeyPair& key, const groups::DsaParams& g,
                         const SignOptions& opt, Rng& rng);
SignatureSample ecdsa_sign(const mpz_class& h, const EcKeyPair& key,
                           const groups::CurveParams& c, const SignOptions& opt, Rng& rng);

bool dsa_verify(const SignatureSample& sig, const mpz_class& h, const mpz_class& y,
                const groups::DsaParams& g);
bool ecdsa_verify(const SignatureSample& sig, const mpz_class& h, const groups::Point& pub,
                  const groups::CurveParams& c);

// Key file round trip (structured text, named big-integer fields).
std::string dsa_key_to_text(const DsaKeyPair& k);
DsaKeyPair dsa_key_from_config(const Config& cfg);
std::string ec_key_to_text(const EcKeyPair& k);
EcKeyPair ec_key_from_config(const Config& cfg);

}  // namespace sclab::sign
