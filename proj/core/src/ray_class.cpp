#include "cmiwa/ray_class.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace cmiwa {

namespace {

std::string elt_key(const QuadElt& e) { return e.x.str() + "," + e.y.str(); }

QuadElt parse_key(const std::string& k) {
    auto comma = k.find(',');
    return {BigInt(k.substr(0, comma)), BigInt(k.substr(comma + 1))};
}

std::string exps_key(const std::vector<long long>& v) {
    std::ostringstream os;
    for (long long x : v) os << x << ",";
    return os.str();
}

std::vector<long long> to_ll(const ExpVec& v) { return std::vector<long long>(v.begin(), v.end()); }

}  // namespace

RayClassGroup::RayClassGroup(const QuadField& K, const QuadIdeal& modulus)
    : K_(K), modulus_(modulus), cl_(K) {
    // Enumerate coprime residues and their canonical coset representatives
    // under multiplication by the torsion units.
    std::vector<QuadElt> us = units(K_);
    auto canonical = [&](const QuadElt& e) {
        std::string best;
        for (const auto& u : us) {
            std::string k = elt_key(modulus_.reduce(mul(K_, u, e)));
            if (best.empty() || k < best) best = k;
        }
        return best;
    };

    std::set<std::string> seen_cosets;
    std::vector<std::string> coset_keys;
    long long coprime_count = 0;
    for (BigInt x = 0; x < modulus_.a(); ++x) {
        for (BigInt y = 0; y < modulus_.c(); ++y) {
            QuadElt e{x, y};
            if (e == QuadElt{0, 0}) continue;
            if (!(QuadIdeal::principal(K_, e).sum(modulus_) == QuadIdeal::one(K_))) continue;
            ++coprime_count;
            std::string ck = canonical(e);
            if (seen_cosets.insert(ck).second) coset_keys.push_back(ck);
        }
    }
    if (coset_keys.empty()) {  // trivial modulus (1): every residue is 0
        coset_keys.push_back(canonical({1, 0}));
        coprime_count = 1;
    }
    residue_count_ = coprime_count;
    unit_image_order_ = coprime_count / static_cast<long long>(coset_keys.size());

    auto coset_mul = [this, canonical](const std::string& a, const std::string& b) {
        return canonical(modulus_.reduce(mul(K_, parse_key(a), parse_key(b))));
    };
    std::string id_key = canonical({1, 0});

    // Greedy generating set for the coset group.
    std::vector<std::string> gens;
    std::set<std::string> closure = {id_key};
    for (const auto& k : coset_keys) {
        if (closure.count(k)) continue;
        gens.push_back(k);
        std::vector<std::string> base(closure.begin(), closure.end());
        for (const auto& x : base) {
            std::string cur = x;
            for (;;) {
                cur = coset_mul(cur, k);
                if (!closure.insert(cur).second) break;
            }
        }
    }
    if (gens.empty()) {
        cosets_.group = FinAb(std::vector<long long>{});
        cosets_.dlog[id_key] = ExpVec{};
    } else {
        cosets_ = build_concrete_group(gens, coset_mul, id_key);
    }
    if (cosets_.group.order() != static_cast<long long>(coset_keys.size()))
        throw std::runtime_error("RayClassGroup: coset group order mismatch");

    // Class-group lifts: small prime ideals, coprime to the modulus together
    // with their conjugates and norms, whose classes generate Cl(K).
    size_t ncb = cosets_.group.invariants().size();
    if (cl_.h() > 1) {
        FinAb clg = cl_.structure();
        std::set<std::string> cl_closure;
        cl_closure.insert(exps_key(to_ll(clg.identity())));
        for (long long ell = 2; ell < 5000 && cl_closure.size() < static_cast<size_t>(clg.order());
             ++ell) {
            bool isprime = true;
            for (long long q = 2; q * q <= ell; ++q)
                if (ell % q == 0) isprime = false;
            if (!isprime) continue;
            if (split_type(K_, ell) == SplitType::inert) continue;
            if (gcd(BigInt(ell), modulus_.norm()) != 1) continue;
            for (const auto& P : primes_above(K_, ell)) {
                if (!P.is_coprime(modulus_) || !P.conjugate().is_coprime(modulus_)) continue;
                ExpVec c = cl_.class_of(P);
                if (cl_closure.count(exps_key(to_ll(c)))) continue;
                gen_primes_.push_back(P);
                gen_orders_.push_back(clg.element_order(c));
                std::vector<std::string> base(cl_closure.begin(), cl_closure.end());
                for (const auto& xkey : base) {
                    ExpVec cur = clg.identity();
                    {
                        std::istringstream is(xkey);
                        std::string tok;
                        size_t i = 0;
                        while (std::getline(is, tok, ',') && i < cur.size()) cur[i++] = std::stoll(tok);
                    }
                    for (;;) {
                        cur = clg.add(cur, c);
                        if (!cl_closure.insert(exps_key(to_ll(cur))).second) break;
                    }
                }
                break;
            }
        }
        if (cl_closure.size() != static_cast<size_t>(clg.order()))
            throw std::runtime_error("RayClassGroup: could not lift class group generators");

        // Exponent table over the chosen primes.
        std::vector<long long> exps(gen_primes_.size(), 0);
        std::function<void(size_t, const ExpVec&)> rec = [&](size_t idx, const ExpVec& acc) {
            if (idx == gen_primes_.size()) {
                std::string k = exps_key(to_ll(acc));
                if (!class_to_exps_.count(k)) class_to_exps_[k] = exps;
                return;
            }
            ExpVec cur = acc;
            ExpVec step = cl_.class_of(gen_primes_[idx]);
            for (long long v = 0; v < gen_orders_[idx]; ++v) {
                exps[idx] = v;
                rec(idx + 1, cur);
                cur = cl_.structure().add(cur, step);
            }
            exps[idx] = 0;
        };
        rec(0, cl_.structure().identity());
    }

    // Presentation of Cl_m on [coset invariant basis | gen_primes].
    size_t ngen = ncb + gen_primes_.size();
    std::vector<ExpVec> rels;
    const auto& inv = cosets_.group.invariants();
    for (size_t i = 0; i < ncb; ++i) {
        ExpVec r(ngen, 0);
        r[i] = inv[i];
        rels.push_back(r);
    }
    for (size_t j = 0; j < gen_primes_.size(); ++j) {
        // q_j^(o_j) = (gamma): relation o_j * q_j - [gamma] = 0.
        QuadIdeal power = gen_primes_[j].pow(static_cast<unsigned>(gen_orders_[j]));
        auto gens_of = principal_generators(power);
        if (gens_of.empty()) throw std::runtime_error("RayClassGroup: lift power not principal");
        ExpVec rc = residue_class(gens_of.front());
        ExpVec r(ngen, 0);
        for (size_t i = 0; i < ncb; ++i) r[i] = -rc[i];
        r[ncb + j] = gen_orders_[j];
        rels.push_back(r);
    }
    if (ngen == 0) {
        G_ = FinAb(std::vector<long long>{});
    } else {
        G_ = FinAb::from_presentation(static_cast<int>(ngen), rels);
    }

    coset_basis_in_G_.clear();
    for (size_t i = 0; i < ncb; ++i) {
        ExpVec g(ngen, 0);
        g[i] = 1;
        coset_basis_in_G_.push_back(G_.coords_of_gens(g));
    }
    prime_in_G_.clear();
    for (size_t j = 0; j < gen_primes_.size(); ++j) {
        ExpVec g(ngen, 0);
        g[ncb + j] = 1;
        prime_in_G_.push_back(G_.coords_of_gens(g));
    }

    // Exact-sequence order check.
    if (G_.order() != cl_.h() * cosets_.group.order())
        throw std::runtime_error("RayClassGroup: order invariant violated");
}

ExpVec RayClassGroup::residue_class(const QuadElt& e) const {
    std::vector<QuadElt> us = units(K_);
    std::string best;
    for (const auto& u : us) {
        std::string k = elt_key(modulus_.reduce(mul(K_, u, e)));
        if (best.empty() || k < best) best = k;
    }
    return cosets_.coords(best);
}

ExpVec RayClassGroup::artin(const QuadIdeal& a) const {
    if (!a.is_coprime(modulus_))
        throw std::invalid_argument("RayClassGroup::artin: ideal not coprime to the modulus");
    ExpVec result = G_.identity();
    if (!gen_primes_.empty()) {
        std::vector<long long> exps = class_to_exps_.at(exps_key(to_ll(cl_.class_of(a))));
        // I = a * prod conj(q_j)^(e_j) is principal with generator beta, and
        // a = (beta) * prod q_j^(e_j) * (prod Nq_j^(e_j))^(-1).
        BigInt nq = 1;
        QuadIdeal I = a;
        for (size_t j = 0; j < gen_primes_.size(); ++j) {
            for (long long t = 0; t < exps[j]; ++t) {
                I = I * gen_primes_[j].conjugate();
                nq *= gen_primes_[j].norm();
            }
        }
        auto betas = principal_generators(I);
        if (betas.empty()) throw std::runtime_error("RayClassGroup::artin: class bookkeeping failed");
        ExpVec rb = residue_class(betas.front());
        for (size_t i = 0; i < coset_basis_in_G_.size(); ++i)
            result = G_.add(result, G_.mul(coset_basis_in_G_[i], rb[i]));
        for (size_t j = 0; j < gen_primes_.size(); ++j)
            result = G_.add(result, G_.mul(prime_in_G_[j], exps[j]));
        ExpVec rn = residue_class({nq, 0});
        for (size_t i = 0; i < coset_basis_in_G_.size(); ++i)
            result = G_.add(result, G_.neg(G_.mul(coset_basis_in_G_[i], rn[i])));
        return result;
    }
    // h = 1: the class is the residue coset of any generator.
    auto gens_of = principal_generators(a);
    if (gens_of.empty()) throw std::runtime_error("RayClassGroup::artin: no generator found (h=1)");
    ExpVec rb = residue_class(gens_of.front());
    for (size_t i = 0; i < coset_basis_in_G_.size(); ++i)
        result = G_.add(result, G_.mul(coset_basis_in_G_[i], rb[i]));
    return result;
}

ExpVec RayClassGroup::artin_rational(const BigInt& x) const {
    return artin(QuadIdeal::principal(K_, {x, 0}));
}

RayClassGroup ray_class_group(const QuadField& K, const QuadIdeal& modulus) {
    return RayClassGroup(K, modulus);
}

RayClassGroup ray_class_group(const QuadField& K, const QuadIdeal& modulus, const QuadIdeal& p_prime,
                              int r) {
    QuadIdeal m = modulus;
    for (int i = 0; i < r; ++i) m = m * p_prime;
    return RayClassGroup(K, m);
}

}  // namespace cmiwa
