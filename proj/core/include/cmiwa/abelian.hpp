#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cmiwa/padic.hpp"

namespace cmiwa {

using ExpVec = std::vector<long long>;

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
/// with elements as coordinate vectors mod d_i.
class FinAb {
public:
    FinAb() = default;
    explicit FinAb(std::vector<long long> invariants);

    /// Quotient Z^n / (column span of the relation matrix).  Rows of the
    /// returned transform map generator-exponent vectors to coordinates.
    static FinAb from_presentation(int num_gens, const std::vector<ExpVec>& relations);

    const std::vector<long long>& invariants() const { return inv_; }
    long long order() const;
    bool trivial() const { return inv_.empty(); }

    ExpVec identity() const { return ExpVec(inv_.size(), 0); }
    ExpVec reduce(const ExpVec& x) const;
    ExpVec add(const ExpVec& a, const ExpVec& b) const;
    ExpVec neg(const ExpVec& a) const;
    ExpVec mul(const ExpVec& a, long long n) const;
    bool is_identity(const ExpVec& a) const;
    long long element_order(const ExpVec& a) const;

    /// Coordinates of a generator-exponent vector (after from_presentation).
    ExpVec coords_of_gens(const ExpVec& gen_exponents) const;

    std::vector<ExpVec> all_elements() const;

    /// p-primary quotient: invariant factors become their p-parts; the
    /// projection of coordinates is reduction mod the p-part (the CRT
    /// component).
    FinAb p_part(long p) const;
    ExpVec project_p_part(long p, const ExpVec& x) const;

    /// Characters: a character is a vector t with t_i mod d_i; its value on x
    /// is zeta_m^(sum t_i x_i m/d_i) for m = lcm(d_i).  Returns the exponent
    /// of zeta_m.
    long long character_value_exponent(const ExpVec& chi, const ExpVec& x) const;
    long long character_modulus() const;  // m = lcm(d_i), 1 for the trivial group
    std::vector<ExpVec> all_characters() const { return all_elements(); }
    long long character_order(const ExpVec& chi) const { return element_order(chi); }

    std::string to_string() const;

private:
    std::vector<long long> inv_;
    // Left SNF transform: coords = (U * gen_exponents) restricted to the
    // nontrivial invariants.
    std::vector<ExpVec> gen_to_coords_;
    int num_gens_ = 0;
};

/// A concretely presented finite abelian group: elements are opaque keys with
/// a supplied multiplication.  Builds the abstract group plus a discrete-log
/// table from a generating set by box enumeration.
struct ConcreteGroup {
    FinAb group;
    std::map<std::string, ExpVec> dlog;            // key -> coordinates
    std::vector<std::string> generator_keys;

    const ExpVec& coords(const std::string& key) const;
};

ConcreteGroup build_concrete_group(
    const std::vector<std::string>& generator_keys,
    const std::function<std::string(const std::string&, const std::string&)>& mul,
    const std::string& identity_key);

/// Smith normal form helper: returns diag entries of U*A*V for an integer
/// matrix A (rows x cols), and the unimodular left transform U.
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> a,
                                      std::vector<std::vector<BigInt>>* left_transform);

}  // namespace cmiwa
