#include "cmiwa/padic.hpp"

#include <algorithm>
#include <utility>

namespace cmiwa {

BigInt pow_bigint(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: element not invertible");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

static void check_prime_prec(long p, int prec) {
    if (p < 5) throw std::invalid_argument("Padic: prime must be >= 5");
    if (prec < 1) throw std::invalid_argument("Padic: precision must be positive");
}

Padic Padic::zero(long p, int prec) {
    check_prime_prec(p, prec);
    return Padic(p, prec, prec, 0);
}

Padic Padic::from_integer(const BigInt& x, long p, int prec) {
    check_prime_prec(p, prec);
    BigInt m = pow_bigint(p, static_cast<unsigned>(prec));
    BigInt v = x % m;
    if (v < 0) v += m;
    if (v == 0) return zero(p, prec);
    int val = 0;
    while (val < prec && v % p == 0) {
        v /= p;
        ++val;
    }
    if (val >= prec) return zero(p, prec);
    v %= pow_bigint(p, static_cast<unsigned>(prec - val));
    return Padic(p, prec, val, v);
}

Padic Padic::from_rational(const BigInt& x, const BigInt& y, long p, int prec) {
    check_prime_prec(p, prec);
    if (y % p == 0) throw std::domain_error("Padic::from_rational: denominator has positive valuation");
    BigInt m = pow_bigint(p, static_cast<unsigned>(prec));
    return from_integer(x * mod_inverse(y, m), p, prec);
}

BigInt Padic::lift() const {
    if (is_zero()) return 0;
    return unit_ * pow_bigint(p_, static_cast<unsigned>(val_));
}

void Padic::require_compatible(const Padic& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Padic: mixed primes");
}

Padic Padic::operator+(const Padic& o) const {
    require_compatible(o);
    int prec = std::min(prec_, o.prec_);
    return from_integer(lift() + o.lift(), p_, prec);
}

Padic Padic::operator-(const Padic& o) const {
    require_compatible(o);
    int prec = std::min(prec_, o.prec_);
    return from_integer(lift() - o.lift(), p_, prec);
}

Padic Padic::operator-() const {
    return from_integer(-lift(), p_, prec_);
}

Padic Padic::operator*(const Padic& o) const {
    require_compatible(o);
    if (is_zero() || o.is_zero()) {
        // p^N * p^v b is 0 mod p^(N+v).
        long v = static_cast<long>(val_) + o.val_;
        int prec = static_cast<int>(std::min<long>(v, 1 << 24));
        return Padic(p_, prec, prec, 0);
    }
    int rel = std::min(prec_ - val_, o.prec_ - o.val_);
    if (rel <= 0) throw std::domain_error("Padic: multiplication lost all significant digits");
    int val = val_ + o.val_;
    BigInt u = (unit_ * o.unit_) % pow_bigint(p_, static_cast<unsigned>(rel));
    return Padic(p_, val + rel, val, u);
}

Padic Padic::inverse() const {
    if (!is_unit()) throw std::domain_error("Padic: cannot invert, valuation positive");
    BigInt m = pow_bigint(p_, static_cast<unsigned>(prec_));
    return Padic(p_, prec_, 0, mod_inverse(unit_, m));
}

Padic Padic::operator/(const Padic& o) const {
    require_compatible(o);
    if (o.is_zero()) throw std::domain_error("Padic: division by zero at working precision");
    if (o.val_ == 0) return *this * o.inverse();
    if (is_zero()) {
        if (prec_ - o.val_ <= 0) throw std::domain_error("Padic: division lost all significant digits");
        return Padic(p_, prec_ - o.val_, prec_ - o.val_, 0);
    }
    if (val_ < o.val_) throw std::domain_error("Padic: quotient not in Z_p");
    int rel = std::min(prec_ - val_, o.prec_ - o.val_);
    if (rel <= 0) throw std::domain_error("Padic: division lost all significant digits");
    int val = val_ - o.val_;
    BigInt mod = pow_bigint(p_, static_cast<unsigned>(rel));
    BigInt u = (unit_ * mod_inverse(o.unit_, mod)) % mod;
    return Padic(p_, val + rel, val, u);
}

Padic Padic::pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(-e);
    Padic r = one(p_, prec_), b = *this;
    BigInt n = e;
    while (n > 0) {
        if (n % 2 == 1) r = r * b;
        b = b * b;
        n /= 2;
    }
    // Powers of units keep full precision; cap at the base precision.
    return r.truncated(std::min(r.precision(), prec_));
}

bool Padic::operator==(const Padic& o) const {
    require_compatible(o);
    int prec = std::min(prec_, o.prec_);
    BigInt m = pow_bigint(p_, static_cast<unsigned>(prec));
    return ((lift() - o.lift()) % m) == 0;
}

Padic Padic::truncated(int n) const {
    if (n > prec_) throw std::invalid_argument("Padic::truncated: cannot gain precision");
    return from_integer(lift(), p_, n);
}

std::string Padic::to_string() const {
    if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    return lift().str() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

Padic teichmuller(const Padic& a) {
    if (!a.is_unit()) throw std::domain_error("teichmuller: valuation positive");
    long p = a.prime();
    int prec = a.precision();
    BigInt m = pow_bigint(p, static_cast<unsigned>(prec));
    // x -> x^p gains one digit of agreement with the Teichmuller lift per step.
    BigInt x = a.lift() % m;
    for (int i = 0; i < prec; ++i) {
        BigInt y = x;
        BigInt r = 1;
        for (long e = p; e > 0; e >>= 1) {
            if (e & 1) r = (r * y) % m;
            y = (y * y) % m;
        }
        if (r == x) break;
        x = r;
    }
    return Padic::from_integer(x, p, prec);
}

Padic hensel_nth_root(const Padic& a, unsigned h, const BigInt& residue_anchor) {
    if (h == 0) throw std::invalid_argument("hensel_nth_root: h must be positive");
    long p = a.prime();
    int prec = a.precision();
    if (!a.is_unit()) throw std::domain_error("hensel_nth_root: valuation positive");
    if (static_cast<long>(h % static_cast<unsigned long>(p)) == 0)
        throw std::domain_error("hensel_nth_root: root not in base field");
    BigInt anchor = residue_anchor % p;
    if (anchor < 0) anchor += p;
    // Residue check: anchor^h = a mod p.
    BigInt rh = 1;
    for (unsigned i = 0; i < h; ++i) rh = (rh * anchor) % p;
    if ((rh - a.lift()) % p != 0) throw std::domain_error("hensel_nth_root: no root");

    BigInt m = pow_bigint(p, static_cast<unsigned>(prec));
    BigInt target = a.lift() % m;
    BigInt x = anchor;
    // Newton iteration for x^h - a; the derivative h x^(h-1) is a unit.
    for (int i = 0; i < prec + 1; ++i) {
        BigInt xh1 = 1;  // x^(h-1)
        for (unsigned j = 0; j + 1 < h; ++j) xh1 = (xh1 * x) % m;
        BigInt f = (xh1 * x - target) % m;
        if (f < 0) f += m;
        if (f == 0) break;
        BigInt d = (BigInt(h) * xh1) % m;
        x = (x - f * mod_inverse(d, m)) % m;
        if (x < 0) x += m;
    }
    return Padic::from_integer(x, p, prec);
}

Padic one_unit_projection(const Padic& u) {
    if (!u.is_unit()) throw std::domain_error("one_unit_projection: valuation positive");
    return u / teichmuller(u);
}

}  // namespace cmiwa
