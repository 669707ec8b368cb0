#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmiwa {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow_bigint(const BigInt& base, unsigned exp);
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Truncated element of Z_p for an odd prime p >= 5.
///
/// A value is stored as p^v * u where u is a unit residue known modulo
/// p^(N - v); the element as a whole is a datum known modulo p^N.  Zero at
/// working precision is represented with v = N and u = 0.  Arithmetic never
/// claims more precision than the inputs justify: addition keeps the minimum
/// absolute precision, multiplication keeps the minimum relative precision
/// and shifts it by the combined valuation.
class Padic {
public:
    Padic() : p_(0), prec_(0), val_(0), unit_(0) {}

    static Padic zero(long p, int prec);
    static Padic one(long p, int prec) { return from_integer(1, p, prec); }
    static Padic from_integer(const BigInt& x, long p, int prec);
    /// x/y for integers with y a unit mod p.
    static Padic from_rational(const BigInt& x, const BigInt& y, long p, int prec);

    long prime() const { return p_; }
    int precision() const { return prec_; }
    bool is_zero() const { return val_ >= prec_; }
    bool is_unit() const { return !is_zero() && val_ == 0; }
    /// Valuation; equals precision() for an element indistinguishable from 0.
    int valuation() const { return val_; }
    /// Unit cofactor, a residue modulo p^(precision - valuation).
    const BigInt& unit_part() const { return unit_; }
    /// Canonical representative in [0, p^precision).
    BigInt lift() const;

    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const;
    Padic operator-() const;
    Padic operator*(const Padic& o) const;
    /// Division; the divisor's valuation must not exceed ours (we stay in Z_p).
    Padic operator/(const Padic& o) const;
    Padic inverse() const;
    Padic pow(const BigInt& e) const;

    /// Same value at the smaller of the two working precisions.
    bool operator==(const Padic& o) const;
    bool operator!=(const Padic& o) const { return !(*this == o); }

    /// Reduce to a coarser precision (n <= precision()).
    Padic truncated(int n) const;

    std::string to_string() const;

private:
    Padic(long p, int prec, int val, BigInt unit)
        : p_(p), prec_(prec), val_(val), unit_(std::move(unit)) {}
    void normalize();
    void require_compatible(const Padic& o) const;

    long p_;
    int prec_;
    int val_;
    BigInt unit_;
};

/// The (p-1)-th root of unity congruent to a mod p.  Requires a unit.
Padic teichmuller(const Padic& a);

/// Unique x with x^h = a and x = residue_anchor mod p, for p not dividing h
/// and a a unit with a = residue_anchor^h mod p.
Padic hensel_nth_root(const Padic& a, unsigned h, const BigInt& residue_anchor);

/// Projection <u> = u / teichmuller(u) from Z_p^x onto 1 + pZ_p.
Padic one_unit_projection(const Padic& u);

}  // namespace cmiwa
