#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmiwa/padic.hpp"

namespace cmiwa {

/// Working box for O[[T_1..T_d]]: coefficients mod p^prec, each variable
/// truncated at degree trunc.  All ring operations are exact modulo the
/// ideal (p^prec, T_1^(trunc+1), ..., T_d^(trunc+1)).
struct SeriesRing {
    long p = 5;
    int prec = 20;
    int nvars = 1;
    int trunc = 24;

    bool operator==(const SeriesRing& o) const = default;
    BigInt coeff_modulus() const { return pow_bigint(p, static_cast<unsigned>(prec)); }
};

using Exponents = std::vector<int>;

/// Element of the truncated ring O[[T_1..T_d]].  Zero coefficients are not
/// stored; the zero series has an empty coefficient map.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(const SeriesRing& ring) : ring_(ring) {}

    static PowerSeries zero(const SeriesRing& ring) { return PowerSeries(ring); }
    static PowerSeries constant(const SeriesRing& ring, const BigInt& c);
    /// The monomial c * T_k^e (k is 0-based).
    static PowerSeries monomial(const SeriesRing& ring, const BigInt& c, int k, int e);
    /// T_k itself.
    static PowerSeries variable(const SeriesRing& ring, int k) { return monomial(ring, 1, k, 1); }

    const SeriesRing& ring() const { return ring_; }
    bool is_zero() const { return coef_.empty(); }
    int num_terms() const { return static_cast<int>(coef_.size()); }
    const std::map<Exponents, BigInt>& terms() const { return coef_; }

    Padic coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const BigInt& c);

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator-() const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scaled(const BigInt& c) const;
    bool operator==(const PowerSeries& o) const;
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

    /// Degree in variable k, or -1 for the zero series.
    int degree(int k) const;
    /// Largest a with T_k^a dividing every stored term (0 for the zero series).
    int min_exponent(int k) const;
    /// Divide by T_k^a; every term must have T_k-exponent >= a.
    PowerSeries shifted_down(int k, int a) const;

    /// Substitute T_k = value; value must be 0 or have positive valuation so
    /// the substitution respects the truncation.  The result has T_k-degree 0.
    PowerSeries eval_var(int k, const Padic& value) const;
    /// Remove variable k; the series must have T_k-degree 0.
    PowerSeries drop_var(int k) const;
    /// Re-insert a variable at position k with degree 0.
    PowerSeries insert_var(int k) const;

    /// Multiplicative inverse of a series with unit constant term.
    PowerSeries unit_inverse() const;

    /// Scale by a unit so the constant term becomes a power of p (when the
    /// constant term is nonzero); used to report ideal generators canonically.
    PowerSeries normalized_generator() const;

    /// Canonical text form: header line then one line per term with the
    /// exponent tuple and the coefficient in base-p digits, most significant
    /// digit first, terms in lexicographic order.
    std::string serialize() const;
    static PowerSeries deserialize(const std::string& text);

private:
    void add_term(const Exponents& e, const BigInt& c);

    SeriesRing ring_;
    std::map<Exponents, BigInt> coef_;  // canonical lifts in [0, p^prec)
};

/// f(t) -> f(alpha(1+t) - 1) in variable k; alpha must be a 1-unit.
PowerSeries tw_alpha(const PowerSeries& f, int k, const Padic& alpha);

/// pi: set T_k = 0 (the variable is retained with degree 0).
PowerSeries project(const PowerSeries& f, int k);

/// f = p^mu * distinguished * unit in one variable.
struct WeierstrassFactors {
    int mu = 0;
    PowerSeries distinguished;  // monic, lower coefficients of positive valuation
    PowerSeries unit;           // unit constant term
};

/// Weierstrass preparation of a nonzero one-variable series, computed by
/// successive division; throws "insufficient precision" when f = 0 mod p^prec.
WeierstrassFactors weierstrass_prep(const PowerSeries& f);

/// Whether f divides g in O[[t]] modulo the working truncation (one variable).
bool divides_1var(const PowerSeries& f, const PowerSeries& g);

/// Multivariate divisibility certificate: specialize T_1 = jp for j = 0..J and
/// recurse.  Sound for "false"; "true" is a bounded certificate, adequate when
/// J exceeds the truncation degree (a nonzero polynomial of degree <= trunc in
/// T_1 has at most trunc roots among the points jp).
bool divides_by_specialization(const PowerSeries& f, const PowerSeries& g, int J);

}  // namespace cmiwa
