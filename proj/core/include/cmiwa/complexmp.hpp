#pragma once

#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cmiwa {

/// 50 significant decimal digits; all analytic evaluation goes through this.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

struct Complex {
    Real re = 0;
    Real im = 0;

    Complex() = default;
    Complex(const Real& r) : re(r) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(long n) : re(n) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Real abs() const { return sqrt(re * re + im * im); }
    Complex conj() const { return {re, -im}; }

    std::string str(unsigned digits = 18) const;
};

/// exp(i t)
Complex unit_phase(const Real& t);
/// z^w = exp(w log z) for z in the right half plane or nonzero
Complex complex_pow(const Complex& z, const Complex& w);
/// n^(-s) for a positive integer n
Complex power_inverse(long long n, const Complex& s);
/// principal r-th root
Complex principal_root(const Complex& z, int r);

}  // namespace cmiwa
