#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmiwa/abelian.hpp"
#include "cmiwa/padic.hpp"

namespace cmiwa {

/// Imaginary quadratic field K = Q(sqrt(disc)) with fundamental discriminant
/// disc < 0.  The integral basis is 1, w with w = (delta + sqrt(disc))/2 and
/// delta = disc mod 2, so w^2 = delta*w - (delta - disc)/4.
class QuadField {
public:
    explicit QuadField(long long disc);

    long long disc() const { return disc_; }
    long long delta() const { return delta_; }          // 0 or 1
    long long omega_norm() const { return omega_norm_; }  // constant term of the minimal polynomial
    int unit_count() const;                              // 4, 6, or 2

    bool operator==(const QuadField& o) const { return disc_ == o.disc_; }

private:
    long long disc_;
    long long delta_;
    long long omega_norm_;
};

/// x + y*w with integer coordinates.
struct QuadElt {
    BigInt x, y;
};

QuadElt operator+(const QuadElt& a, const QuadElt& b);
QuadElt operator-(const QuadElt& a, const QuadElt& b);
QuadElt operator-(const QuadElt& a);
QuadElt mul(const QuadField& K, const QuadElt& a, const QuadElt& b);
QuadElt conj(const QuadField& K, const QuadElt& a);  // x + delta*y - y*w
BigInt norm(const QuadField& K, const QuadElt& a);
bool operator==(const QuadElt& a, const QuadElt& b);
std::string to_string(const QuadElt& a);

/// The torsion units of O_K (2, 4 or 6 of them).
std::vector<QuadElt> units(const QuadField& K);

/// Integral ideal in Hermite normal form: the Z-module with basis
/// a, b + c*w where c | a, c | b, 0 <= b < a.  Norm a*c.  The zero ideal is
/// not representable.
class QuadIdeal {
public:
    QuadIdeal(const QuadField& K, const BigInt& a, const BigInt& b, const BigInt& c);

    static QuadIdeal one(const QuadField& K) { return QuadIdeal(K, 1, 0, 1); }
    static QuadIdeal from_generators(const QuadField& K, const std::vector<QuadElt>& gens);
    static QuadIdeal principal(const QuadField& K, const QuadElt& g);

    const QuadField& field() const { return K_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    BigInt norm() const { return a_ * c_; }

    bool contains(const QuadElt& e) const;
    QuadIdeal conjugate() const;
    QuadIdeal operator*(const QuadIdeal& o) const;
    QuadIdeal pow(unsigned e) const;
    QuadIdeal sum(const QuadIdeal& o) const;  // gcd ideal
    bool is_coprime(const QuadIdeal& o) const;
    bool operator==(const QuadIdeal& o) const;
    bool operator!=(const QuadIdeal& o) const { return !(*this == o); }
    bool operator<(const QuadIdeal& o) const;

    /// Canonical residue of e modulo this ideal: x in [0,a), y in [0,c).
    QuadElt reduce(const QuadElt& e) const;

    /// "(a, b+w*c)" literal.
    std::string to_string() const;
    static QuadIdeal parse(const QuadField& K, const std::string& text);

private:
    QuadField K_;
    BigInt a_, b_, c_;
};

enum class SplitType { split, inert, ramified };

SplitType split_type(const QuadField& K, long long ell);

/// Kronecker symbol (disc(K) | n) for n >= 1; the quadratic character of K.
int kronecker_disc(const QuadField& K, long long n);

/// Prime ideals above ell: two conjugates (split), one of norm ell^2 (inert),
/// or one ramified of norm ell.
std::vector<QuadIdeal> primes_above(const QuadField& K, long long ell);

/// Complete duplicate-free list of integral ideals of norm n.
std::vector<QuadIdeal> ideals_of_norm(const QuadField& K, long long n);

/// All generators (unit multiples), empty when the ideal is not principal.
std::vector<QuadElt> principal_generators(const QuadIdeal& I);

/// Binary quadratic form (a, b, c) of discriminant disc.
struct QuadForm {
    long long a, b, c;
    bool operator==(const QuadForm& o) const = default;
};

QuadForm reduce_form(const QuadField& K, QuadForm f);

/// Class group realized on reduced primitive forms with composition by ideal
/// multiplication; h = number of reduced forms.
class ClassGroup {
public:
    explicit ClassGroup(const QuadField& K);

    const QuadField& field() const { return K_; }
    long long h() const { return static_cast<long long>(forms_.size()); }
    const std::vector<QuadForm>& reduced_forms() const { return forms_; }
    const FinAb& structure() const { return ab_.group; }

    /// Coordinates of an ideal class in the abstract group.
    ExpVec class_of(const QuadIdeal& I) const;
    bool is_principal(const QuadIdeal& I) const { return ab_.group.is_identity(class_of(I)); }
    long long class_order(const QuadIdeal& I) const { return ab_.group.element_order(class_of(I)); }

    /// Small prime ideals realizing the chosen generators (empty if h = 1).
    const std::vector<QuadIdeal>& generator_primes() const { return gen_primes_; }

private:
    QuadField K_;
    std::vector<QuadForm> forms_;
    ConcreteGroup ab_;
    std::vector<QuadIdeal> gen_primes_;
};

QuadForm form_of_ideal(const QuadIdeal& I);
QuadIdeal ideal_of_form(const QuadField& K, const QuadForm& f);

}  // namespace cmiwa
