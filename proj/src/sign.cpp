#include "sclab/sign.hpp"

#include <sstream>

#include "sclab/arith.hpp"

namespace sclab::sign {

using arith::bitlen;
using arith::ceil_lg;
using arith::mod_inv;

NonceMode nonce_mode_from_string(const std::string& s) {
    if (s == "raw") return NonceMode::kRaw;
    if (s == "padded") return NonceMode::kPadded;
    if (s == "padded_then_reduced") return NonceMode::kPaddedThenReduced;
    if (s == "random_word_pad") return NonceMode::kRandomWordPad;
    throw sign_error("unknown nonce mode: " + s);
}

std::string to_string(NonceMode m) {
    switch (m) {
        case NonceMode::kRaw: return "raw";
        case NonceMode::kPadded: return "padded";
        case NonceMode::kPaddedThenReduced: return "padded_then_reduced";
        case NonceMode::kRandomWordPad: return "random_word_pad";
    }
    return "?";
}

mpz_class nonce_pad(const mpz_class& k, const mpz_class& q) {
    if (!(0 < k && k < q)) throw sign_error("nonce_pad: need 0 < k < q");
    if (ceil_lg(k + q) == ceil_lg(q)) return k + 2 * q;
    return k + q;
}

mpz_class nonce_unpad_bug(const mpz_class& k_hat, const mpz_class& q) {
    if (k_hat < q) throw sign_error("nonce_unpad_bug: input is not padded");
    return k_hat % q;
}

mpz_class effective_scalar(const mpz_class& k, const mpz_class& q, const NonceConfig& mode,
                           Rng& rng) {
    switch (mode.mode) {
        case NonceMode::kRaw:
            return k;
        case NonceMode::kPadded:
            return nonce_pad(k, q);
        case NonceMode::kPaddedThenReduced:
            return nonce_unpad_bug(nonce_pad(k, q), q);
        case NonceMode::kRandomWordPad: {
            mpz_class b = rng.bits_topset(mode.word_bits);
            return k + b * q;
        }
    }
    throw sign_error("effective_scalar: bad mode");
}

DsaKeyPair dsa_keygen(const groups::DsaParams& g, Rng& rng) {
    DsaKeyPair kp;
    kp.alpha = rng.range(1, g.q);
    mpz_powm(kp.y.get_mpz_t(), g.g.get_mpz_t(), kp.alpha.get_mpz_t(), g.p.get_mpz_t());
    return kp;
}

EcKeyPair ecdsa_keygen(const groups::CurveParams& c, Rng& rng) {
    EcKeyPair kp;
    kp.alpha = rng.range(1, c.q);
    kp.d = groups::scalar_mult_wnaf(kp.alpha, 4, c).first;
    return kp;
}

SignatureSample dsa_sign(const mpz_class& h, const DsaKeyPair& key, const groups::DsaParams& g,
                         const SignOptions& opt, Rng& rng) {
    if (!(0 < h && h < g.q)) throw sign_error("dsa_sign: need 0 < h < q");
    while (true) {
        mpz_class k = rng.range(1, g.q);
        mpz_class k_eff = effective_scalar(k, g.q, opt.nonce, rng);
        auto exp_result = arith::mod_exp_fixed_window(g.g % g.p, k_eff, g.p, opt.w);
        mpz_class r = exp_result.value % g.q;
        if (r == 0) continue;
        mpz_class s = mod_inv(k, g.q) * (h + key.alpha * r) % g.q;
        if (s == 0) continue;
        SignatureSample sig;
        sig.r = r;
        sig.s = s;
        sig.h = h;
        if (opt.capture == LeakCapture::kTiming) {
            Rng noise_rng = rng.fork(0x7131);
            sig.leak = leaksim::simulate_dsa_latency(k_eff, g.q, opt.w, opt.noise, noise_rng);
        }
        if (opt.capture_truth) sig.truth_nonce = k;
        return sig;
    }
}

SignatureSample ecdsa_sign(const mpz_class& h, const EcKeyPair& key,
                           const groups::CurveParams& c, const SignOptions& opt, Rng& rng) {
    if (!(0 < h && h < c.q)) throw sign_error("ecdsa_sign: need 0 < h < q");
    while (true) {
        mpz_class k = rng.range(1, c.q);
        mpz_class k_eff = effective_scalar(k, c.q, opt.nonce, rng);
        auto [point, da] = groups::scalar_mult_wnaf(k_eff, opt.w, c);
        if (point.infinity) continue;
        mpz_class r = point.x % c.q;
        if (r == 0) continue;
        mpz_class s = mod_inv(k, c.q) * (h + key.alpha * r) % c.q;
        if (s == 0) continue;
        SignatureSample sig;
        sig.r = r;
        sig.s = s;
        sig.h = h;
        switch (opt.capture) {
            case LeakCapture::kDaSequence:
                sig.leak = leaksim::DaSeq{da.ops, false};
                break;
            case LeakCapture::kSignedDigits:
                sig.leak = leaksim::signed_wnaf_oracle(k_eff, opt.w);
                break;
            case LeakCapture::kTiming: {
                Rng noise_rng = rng.fork(0x7131);
                sig.leak = leaksim::simulate_dsa_latency(k_eff, c.q, opt.w, opt.noise, noise_rng);
                break;
            }
            case LeakCapture::kNone:
                break;
        }
        if (opt.capture_truth) sig.truth_nonce = k;
        return sig;
    }
}

bool dsa_verify(const SignatureSample& sig, const mpz_class& h, const mpz_class& y,
                const groups::DsaParams& g) {
    if (!(0 < sig.r && sig.r < g.q) || !(0 < sig.s && sig.s < g.q)) return false;
    if (!(0 < h && h < g.q)) return false;
    mpz_class wi = mod_inv(sig.s, g.q);
    mpz_class u1 = h * wi % g.q;
    mpz_class u2 = sig.r * wi % g.q;
    mpz_class t1, t2;
    mpz_powm(t1.get_mpz_t(), g.g.get_mpz_t(), u1.get_mpz_t(), g.p.get_mpz_t());
    mpz_powm(t2.get_mpz_t(), y.get_mpz_t(), u2.get_mpz_t(), g.p.get_mpz_t());
    mpz_class v = t1 * t2 % g.p % g.q;
    return v == sig.r;
}

bool ecdsa_verify(const SignatureSample& sig, const mpz_class& h, const groups::Point& pub,
                  const groups::CurveParams& c) {
    if (!(0 < sig.r && sig.r < c.q) || !(0 < sig.s && sig.s < c.q)) return false;
    if (!(0 < h && h < c.q)) return false;
    if (pub.infinity || !groups::on_curve(pub, c)) return false;
    mpz_class wi = mod_inv(sig.s, c.q);
    mpz_class u1 = h * wi % c.q;
    mpz_class u2 = sig.r * wi % c.q;
    groups::Point A = u1 == 0 ? groups::Point{} : groups::scalar_mult_wnaf(u1, 4, c).first;
    groups::CurveParams shifted = c;  // same curve, generator swapped for the public point
    shifted.G = pub;
    groups::Point B = u2 == 0 ? groups::Point{} : groups::scalar_mult_wnaf(u2, 4, shifted).first;
    groups::Point R = groups::point_add(A, B, c);
    if (R.infinity) return false;
    return R.x % c.q == sig.r;
}

std::string dsa_key_to_text(const DsaKeyPair& k) {
    std::ostringstream out;
    out << "kind = dsa_key\n";
    out << "alpha = " << k.alpha << "\n";
    out << "y = " << k.y << "\n";
    return out.str();
}

DsaKeyPair dsa_key_from_config(const Config& cfg) {
    if (cfg.get_str("kind", "dsa_key") != "dsa_key") throw sign_error("not a dsa key file");
    cfg.require_known({"kind", "alpha", "y"});
    return {cfg.get_mpz("alpha"), cfg.get_mpz("y")};
}

std::string ec_key_to_text(const EcKeyPair& k) {
    std::ostringstream out;
    out << "kind = ec_key\n";
    out << "alpha = " << k.alpha << "\n";
    out << "dx = " << k.d.x << "\n";
    out << "dy = " << k.d.y << "\n";
    return out.str();
}

EcKeyPair ec_key_from_config(const Config& cfg) {
    if (cfg.get_str("kind", "ec_key") != "ec_key") throw sign_error("not an ec key file");
    cfg.require_known({"kind", "alpha", "dx", "dy"});
    EcKeyPair k;
    k.alpha = cfg.get_mpz("alpha");
    k.d = groups::Point::make(cfg.get_mpz("dx"), cfg.get_mpz("dy"));
    return k;
}

}  // namespace sclab::sign
