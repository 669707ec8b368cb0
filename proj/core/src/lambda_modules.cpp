#include "cmiwa/lambda_modules.hpp"

#include <sstream>

namespace cmiwa {

PowerSeries char_ideal(const ElementaryModule& e) {
    if (e.free_rank > 0) return PowerSeries::zero(e.ring);
    PowerSeries prod = PowerSeries::constant(e.ring, 1);
    for (const auto& f : e.factors) {
        if (f.is_zero()) throw std::invalid_argument("char_ideal: zero cyclic factor");
        prod = prod * f;
    }
    return prod;
}

TwistReport twist_module(const ElementaryModule& e, const Padic& alpha, int k) {
    TwistReport rep;
    rep.twisted = e;
    for (auto& f : rep.twisted.factors) f = tw_alpha(f, k, alpha);
    rep.char_of_twist = char_ideal(rep.twisted);
    rep.twist_of_char = e.free_rank > 0 ? PowerSeries::zero(e.ring) : tw_alpha(char_ideal(e), k, alpha);
    rep.identity_holds = rep.char_of_twist == rep.twist_of_char;
    rep.torsion_preserved = rep.twisted.is_torsion() == e.is_torsion();
    return rep;
}

SpecReport check_spec_identity(const ElementaryModule& e, int k) {
    if (!e.is_torsion()) throw std::invalid_argument("check_spec_identity: module must be torsion");
    SpecReport rep;
    std::ostringstream detail;

    // t-adic shape of each factor: f = t^a f' with t not dividing f'.  A factor
    // with a >= 1 contributes ker(t | B/(f)) = t^(a-1) f' B/(f) = B/(t) = A to
    // X_t, and A/(0) = A to X/tX; a factor with a = 0 contributes nothing to
    // X_t (t acts injectively on B/(f)) and the torsion module A/(pi(f)) to
    // X/tX.
    int t_div = 0;
    for (const auto& f : e.factors) {
        if (f.is_zero()) throw std::invalid_argument("check_spec_identity: zero cyclic factor");
        int a = f.min_exponent(k);
        if (a == 0 && project(f, k).is_zero())
            throw std::domain_error("check_spec_identity: precision insufficient to classify");
        if (a >= 1) ++t_div;
    }
    rep.rank_xt = t_div;

    PowerSeries product = char_ideal(e);
    if (t_div > 0) {
        // X_t and X/tX both acquire free A-summands: all three ideals vanish.
        rep.lhs = PowerSeries::zero(e.ring);
        rep.rhs = PowerSeries::zero(e.ring);
        rep.xt_zero = true;
        rep.projected_zero = project(product, k).is_zero();
        rep.quotient_zero = true;
        rep.identity_holds = true;
        detail << "t divides " << t_div << " factor(s); X_t has A-rank " << t_div
               << " and all three characteristic ideals vanish";
    } else {
        // X_t = 0, ch_A(X_t) = (1), and the identity reads
        // pi(prod f_i) = prod pi(f_i).
        rep.lhs = project(product, k);
        if (rep.lhs.is_zero())
            throw std::domain_error("check_spec_identity: precision insufficient to classify");
        PowerSeries rhs = PowerSeries::constant(e.ring, 1);
        for (const auto& f : e.factors) rhs = rhs * project(f, k);
        rep.rhs = rhs;
        rep.xt_zero = false;
        rep.projected_zero = false;
        rep.quotient_zero = rhs.is_zero();
        rep.identity_holds = rep.lhs == rep.rhs;
        detail << "X_t = 0; identity reduces to multiplicativity of pi over " << e.factors.size()
               << " factor(s)";
    }
    rep.equivalence_holds =
        rep.xt_zero == rep.projected_zero && rep.projected_zero == rep.quotient_zero;
    rep.detail = detail.str();
    return rep;
}

RankReport check_rank_formula(const ElementaryModule& e, int k) {
    RankReport rep;
    rep.rank_b = e.free_rank;
    int t_div = 0;
    for (const auto& f : e.factors) {
        if (f.is_zero()) throw std::invalid_argument("check_rank_formula: zero cyclic factor");
        if (f.min_exponent(k) >= 1) ++t_div;
    }
    // X/tX = A^free_rank + sum_i A/(pi(f_i)); Y/tY drops the free part.
    rep.rank_y_mod_t = t_div;
    rep.rank_x_mod_t = e.free_rank + t_div;
    rep.identity_holds = rep.rank_x_mod_t == rep.rank_b + rep.rank_y_mod_t;
    return rep;
}

}  // namespace cmiwa
