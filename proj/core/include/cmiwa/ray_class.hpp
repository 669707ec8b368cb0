#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmiwa/quadratic.hpp"

namespace cmiwa {

/// Ray class group Cl_m(K) = I(m)/P_m, realized through the exact sequence
///   (O/m)^x / im(units)  ->  Cl_m  ->  Cl(K)  ->  1
/// as a finite abelian group with a computable Artin map on ideals coprime
/// to the modulus (arithmetic normalization: a prime maps to its own class).
class RayClassGroup {
public:
    RayClassGroup(const QuadField& K, const QuadIdeal& modulus);

    const QuadField& field() const { return K_; }
    const QuadIdeal& modulus() const { return modulus_; }
    const FinAb& group() const { return G_; }
    long long order() const { return G_.order(); }

    /// Order data for the exact-sequence invariant
    /// |Cl_m| = h * #(O/m)^x / #(image of units).
    long long residue_unit_group_order() const { return residue_count_; }
    long long unit_image_order() const { return unit_image_order_; }
    long long class_number() const { return cl_.h(); }

    /// Artin image of an ideal coprime to the modulus.
    ExpVec artin(const QuadIdeal& a) const;
    /// Artin image of the principal ideal (x) for a rational integer x.
    ExpVec artin_rational(const BigInt& x) const;

    /// Finite layer of the p-tower: the p-primary quotient of this group.
    FinAb p_layer(long p) const { return G_.p_part(p); }
    ExpVec project_p_layer(long p, const ExpVec& x) const { return G_.project_p_part(p, x); }

private:
    ExpVec residue_class(const QuadElt& e) const;  // coset of a coprime residue

    QuadField K_;
    QuadIdeal modulus_;
    ClassGroup cl_;
    ConcreteGroup cosets_;                 // (O/m)^x modulo the unit image
    std::vector<QuadIdeal> gen_primes_;    // lifts of the class-group part
    std::vector<long long> gen_orders_;    // class orders of the lifts
    FinAb G_;
    // coordinates in G of the coset-group invariant basis and of the primes
    std::vector<ExpVec> coset_basis_in_G_;
    std::vector<ExpVec> prime_in_G_;
    // exponent table: class-group coords -> exponents over gen_primes
    std::map<std::string, std::vector<long long>> class_to_exps_;
    long long residue_count_ = 0;
    long long unit_image_order_ = 0;
};

/// Ray class group of modulus * p_prime^r (finite layer r of the p-tower).
RayClassGroup ray_class_group(const QuadField& K, const QuadIdeal& modulus);
RayClassGroup ray_class_group(const QuadField& K, const QuadIdeal& modulus, const QuadIdeal& p_prime,
                              int r);

}  // namespace cmiwa
