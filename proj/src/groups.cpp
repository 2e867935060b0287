#include "sclab/groups.hpp"

#include <algorithm>
#include <sstream>

#include "sclab/arith.hpp"

namespace sclab::groups {

using arith::bitlen;
using arith::mod_inv;

void DsaParams::validate() const {
    if (p <= 3 || q <= 1) throw group_error("dsa params: p, q out of range");
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw group_error("dsa params: p is not prime");
    if (mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
        throw group_error("dsa params: q is not prime");
    if ((p - 1) % q != 0) throw group_error("dsa params: q does not divide p-1");
    if (g <= 1 || g >= p) throw group_error("dsa params: g out of range");
    mpz_class gq;
    mpz_powm(gq.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (gq != 1) throw group_error("dsa params: g does not have order q");
}

DsaParams DsaParams::from_config(const Config& cfg) {
    if (cfg.get_str("kind", "dsa_group") != "dsa_group")
        throw group_error("dsa params: wrong config kind");
    cfg.require_known({"kind", "name", "p", "q", "g"});
    DsaParams d{cfg.get_mpz("p"), cfg.get_mpz("q"), cfg.get_mpz("g")};
    d.validate();
    return d;
}

std::string DsaParams::to_config_text() const {
    std::ostringstream out;
    out << "kind = dsa_group\n";
    out << "p = " << p << "\n";
    out << "q = " << q << "\n";
    out << "g = " << g << "\n";
    return out.str();
}

bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
}

void CurveParams::validate() const {
    if (field_prime <= 3) throw group_error("curve: field prime out of range");
    if (mpz_probab_prime_p(field_prime.get_mpz_t(), 30) == 0)
        throw group_error("curve: field modulus is not prime");
    mpz_class disc = (4 * a * a * a + 27 * b * b) % field_prime;
    if (disc == 0) throw group_error("curve: singular (4a^3 + 27b^2 = 0)");
    if (q <= 1 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
        throw group_error("curve: generator order is not prime");
    if (G.infinity || !on_curve(G, *this)) throw group_error("curve: generator not on curve");
    // [q]G must be the point at infinity
    Point R = scalar_mult_wnaf(q, 4, *this).first;
    if (!R.infinity) throw group_error("curve: generator order mismatch");
}

CurveParams CurveParams::from_config(const Config& cfg) {
    if (cfg.get_str("kind", "curve") != "curve")
        throw group_error("curve: wrong config kind");
    cfg.require_known({"kind", "name", "field_prime", "a", "b", "gx", "gy", "q", "cofactor"});
    CurveParams c;
    c.field_prime = cfg.get_mpz("field_prime");
    c.a = ((cfg.get_mpz("a") % c.field_prime) + c.field_prime) % c.field_prime;
    c.b = ((cfg.get_mpz("b") % c.field_prime) + c.field_prime) % c.field_prime;
    c.G = Point::make(cfg.get_mpz("gx"), cfg.get_mpz("gy"));
    c.q = cfg.get_mpz("q");
    c.cofactor = static_cast<unsigned>(cfg.get_u64("cofactor", 1));
    c.validate();
    return c;
}

std::string CurveParams::to_config_text() const {
    std::ostringstream out;
    out << "kind = curve\n";
    out << "field_prime = " << field_prime << "\n";
    out << "a = " << a << "\n";
    out << "b = " << b << "\n";
    out << "gx = " << G.x << "\n";
    out << "gy = " << G.y << "\n";
    out << "q = " << q << "\n";
    out << "cofactor = " << cofactor << "\n";
    return out.str();
}

bool on_curve(const Point& P, const CurveParams& c) {
    if (P.infinity) return true;
    if (P.x < 0 || P.x >= c.field_prime || P.y < 0 || P.y >= c.field_prime) return false;
    mpz_class lhs = P.y * P.y % c.field_prime;
    mpz_class rhs = (P.x * P.x % c.field_prime * P.x + c.a * P.x + c.b) % c.field_prime;
    return lhs == rhs;
}

Point point_negate(const Point& P) {
    if (P.infinity) return P;
    Point R = P;
    if (R.y != 0) R.y = -R.y;
    return R;
}

static Point finish(const mpz_class& lambda, const Point& P, const Point& Q,
                    const mpz_class& p) {
    mpz_class x3 = (lambda * lambda - P.x - Q.x) % p;
    if (x3 < 0) x3 += p;
    mpz_class y3 = (lambda * (P.x - x3) - P.y) % p;
    if (y3 < 0) y3 += p;
    return Point::make(x3, y3);
}

Point point_add(const Point& P, const Point& Q, const CurveParams& c) {
    if (!on_curve(P, c) || !on_curve(Q, c)) throw group_error("point_add: input not on curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const mpz_class& p = c.field_prime;
    if (P.x == Q.x) {
        if ((P.y + Q.y) % p == 0) return Point{};  // P + (-P) = O
        return point_double(P, c);
    }
    mpz_class lambda = (Q.y - P.y) % p * mod_inv((Q.x - P.x) % p + p, p) % p;
    if (lambda < 0) lambda += p;
    return finish(lambda, P, Q, p);
}

Point point_double(const Point& P, const CurveParams& c) {
    if (!on_curve(P, c)) throw group_error("point_double: input not on curve");
    if (P.infinity) return P;
    const mpz_class& p = c.field_prime;
    if (P.y == 0) return Point{};  // order-2 point
    mpz_class lambda = (3 * P.x * P.x + c.a) % p * mod_inv(2 * P.y % p, p) % p;
    return finish(lambda, P, P, p);
}

WnafDigits wnaf_recode(const mpz_class& k, unsigned w) {
    if (w < 2 || w > 8) throw group_error("wnaf_recode: width out of range");
    if (k < 0) throw group_error("wnaf_recode: scalar must be nonnegative");
    WnafDigits out;
    out.w = w;
    mpz_class rem = k;
    mpz_class wnd = arith::pow2(w);
    mpz_class half = arith::pow2(w - 1);
    while (rem != 0) {
        int d = 0;
        if (mpz_odd_p(rem.get_mpz_t())) {
            mpz_class dm = rem % wnd;
            if (dm > half) dm -= wnd;
            d = static_cast<int>(dm.get_si());
            rem -= dm;
        }
        out.digits.push_back(d);
        rem >>= 1;
    }
    return out;
}

mpz_class wnaf_reconstruct(const WnafDigits& d) {
    mpz_class acc = 0;
    for (size_t i = d.digits.size(); i-- > 0;) {
        acc <<= 1;
        acc += d.digits[i];
    }
    return acc;
}

size_t DaSequence::double_count() const {
    return std::count(ops.begin(), ops.end(), EcOp::kDouble);
}

size_t DaSequence::add_count() const {
    return std::count(ops.begin(), ops.end(), EcOp::kAdd);
}

std::pair<Point, DaSequence> scalar_mult_wnaf(const mpz_class& k, unsigned w,
                                              const CurveParams& c) {
    if (k <= 0) throw group_error("scalar_mult_wnaf: scalar must be positive");
    WnafDigits naf = wnaf_recode(k, w);

    // precomputed odd multiples G, 3G, ..., (2^(w-1)-1)G
    size_t npre = size_t(1) << (w - 2);
    std::vector<Point> pre(npre);
    pre[0] = c.G;
    Point twoG = point_double(c.G, c);
    for (size_t i = 1; i < npre; ++i) pre[i] = point_add(pre[i - 1], twoG, c);

    Point R;  // infinity
    DaSequence seq;
    size_t top = bitlen(k);  // floor(lg k) + 1
    for (size_t i = top + 1; i-- > 0;) {
        R = point_double(R, c);
        seq.ops.push_back(EcOp::kDouble);
        int d = i < naf.digits.size() ? naf.digits[i] : 0;
        if (d != 0) {
            Point addend = d > 0 ? pre[(d - 1) / 2] : point_negate(pre[(-d - 1) / 2]);
            R = point_add(R, addend, c);
            seq.ops.push_back(EcOp::kAdd);
        }
    }
    return {R, seq};
}

}  // namespace sclab::groups
