#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmiwa/complexmp.hpp"
#include "cmiwa/padic.hpp"
#include "cmiwa/quadratic.hpp"

namespace cmiwa {

using Rational = boost::multiprecision::cpp_rational;

/// Element x + y*w of K with rational coordinates.
struct KRat {
    Rational x, y;
    bool operator==(const KRat& o) const = default;
};

class FieldElt;

/// Exact coefficient field for character values: K(y) = Q(sqrt(disc))[y]/(m)
/// with m monic over K.  Degree 1 means plain K.  The three shapes used are
/// the trivial extension, a cyclotomic extension, and a pure cube-root
/// extension (for class number 3, where values of a weight-one character on
/// non-principal primes generate y^3 = a).
class ValueField : public std::enable_shared_from_this<ValueField> {
public:
    static std::shared_ptr<const ValueField> quadratic(const QuadField& K);
    static std::shared_ptr<const ValueField> cyclotomic_ext(const QuadField& K, int n);
    /// y^3 = a, with the conjugation sending y to (q/a) y^2 (q = |Na|^(1/3)).
    static std::shared_ptr<const ValueField> cube_root_ext(const QuadField& K, const QuadElt& a);

    const QuadField& base() const { return K_; }
    int ext_degree() const { return static_cast<int>(modulus_.size()) - 1; }
    int cyclotomic_order() const { return cyclo_order_; }  // 1 when not cyclotomic

    FieldElt zero() const;
    FieldElt one() const;
    FieldElt from_rational(const Rational& r) const;
    FieldElt from_base(const KRat& k) const;
    FieldElt from_quad(const QuadElt& e) const;
    FieldElt gen() const;  // y (or 1 in the trivial extension... degree-1 has no y)
    /// zeta^k for the cyclotomic generator.
    FieldElt root_of_unity(long long k) const;

    /// Numeric image of y under the fixed complex embedding.
    Complex y_embedding() const { return y_embed_; }
    Complex omega_embedding() const;

private:
    friend class FieldElt;
    ValueField(const QuadField& K, std::vector<KRat> modulus, std::optional<std::vector<KRat>> conj_y,
               Complex y_embed, int cyclo_order);

    QuadField K_;
    std::vector<KRat> modulus_;               // monic, degree = ext degree
    std::optional<std::vector<KRat>> conj_y_;  // coordinates of conj(y), if available
    Complex y_embed_;
    int cyclo_order_ = 1;
};

/// Element of a ValueField: polynomial in y of degree < ext_degree with
/// coordinates in K.  Immutable value semantics.
class FieldElt {
public:
    FieldElt() = default;
    FieldElt(std::shared_ptr<const ValueField> F, std::vector<KRat> coords);

    const std::shared_ptr<const ValueField>& field() const { return F_; }
    const std::vector<KRat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    /// The rational value when is_rational(), else throws.
    Rational rational_value() const;

    FieldElt operator+(const FieldElt& o) const;
    FieldElt operator-(const FieldElt& o) const;
    FieldElt operator-() const;
    FieldElt operator*(const FieldElt& o) const;
    FieldElt inverse() const;
    FieldElt operator/(const FieldElt& o) const { return *this * o.inverse(); }
    FieldElt pow(long long e) const;
    bool operator==(const FieldElt& o) const;
    bool operator!=(const FieldElt& o) const { return !(*this == o); }

    /// Complex conjugation (conjugates K and sends y to its stored image).
    FieldElt conj() const;

    /// Image under the fixed complex embedding.
    Complex embed() const;

    /// p-adic avatar: requires split behavior making all generators land in
    /// Z_p; omega_anchor picks the embedding (the root of the minimal
    /// polynomial of w congruent to it mod p).  Throws "extension scalars
    /// required" when y has no Z_p image.
    Padic padic_avatar(long p, int prec, long omega_anchor) const;

    std::string to_string() const;

private:
    std::shared_ptr<const ValueField> F_;
    std::vector<KRat> c_;
};

}  // namespace cmiwa
