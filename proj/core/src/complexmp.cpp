#include "cmiwa/complexmp.hpp"

#include <sstream>

namespace cmiwa {

std::string Complex::str(unsigned digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << re;
    if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
    return os.str();
}

Complex unit_phase(const Real& t) { return {cos(t), sin(t)}; }

Complex complex_pow(const Complex& z, const Complex& w) {
    Real r = z.abs();
    if (r == 0) return {Real(0), Real(0)};
    Real theta = atan2(z.im, z.re);
    Real lr = log(r);
    // exp((w)(log r + i theta))
    Real a = w.re * lr - w.im * theta;
    Real b = w.im * lr + w.re * theta;
    Real ea = exp(a);
    return {ea * cos(b), ea * sin(b)};
}

Complex power_inverse(long long n, const Complex& s) {
    return complex_pow(Complex(Real(n)), Complex(-s.re, -s.im));
}

Complex principal_root(const Complex& z, int r) {
    return complex_pow(z, Complex(Real(1) / r));
}

}  // namespace cmiwa
