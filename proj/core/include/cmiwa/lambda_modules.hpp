#pragma once

#include <string>
#include <vector>

#include "cmiwa/power_series.hpp"

namespace cmiwa {

/// Elementary module B^free_rank + sum_i B/(f_i) over B = O[[T_1..T_d]].
/// The structure theorem's normal form carries exactly the data the
/// characteristic-ideal statements see.
struct ElementaryModule {
    SeriesRing ring;
    int free_rank = 0;
    std::vector<PowerSeries> factors;  // nonzero cyclic generators

    bool is_torsion() const { return free_rank == 0; }
};

/// Generator of the characteristic ideal: the product of the cyclic factors,
/// the zero series when the module has a free part, 1 for the zero module.
PowerSeries char_ideal(const ElementaryModule& e);

struct TwistReport {
    ElementaryModule twisted;
    PowerSeries char_of_twist;    // Char_B(Tw_{alpha^-1} X)
    PowerSeries twist_of_char;    // Tw_alpha(Char_B X)
    bool identity_holds = false;
    bool torsion_preserved = false;
};

/// Factors become tw_alpha(f_i); checks Char_B(Tw_{a^-1}X) = Tw_a(Char_B X).
TwistReport twist_module(const ElementaryModule& e, const Padic& alpha, int k);

struct SpecReport {
    // Generators over A (variable k retained with degree 0; zero series means
    // the zero ideal from a non-torsion quotient).
    PowerSeries lhs;             // ch_A(X_t) * pi(ch_B(X))
    PowerSeries rhs;             // ch_A(X/tX)
    bool identity_holds = false;
    // Three-way equivalence ch_A(X_t)=0 <=> pi(ch_B(X))=0 <=> ch_A(X/tX)=0.
    bool xt_zero = false;
    bool projected_zero = false;
    bool quotient_zero = false;
    bool equivalence_holds = false;
    int rank_xt = 0;             // number of factors divisible by t
    std::string detail;
};

/// Executable form of the specialization identity for a torsion module: each
/// factor B/(f) contributes A/(pi(f)) to X/tX, and B/(t) = A to X_t exactly
/// when t | f (computed from the t-adic shape of f, not assumed).
SpecReport check_spec_identity(const ElementaryModule& e, int k);

struct RankReport {
    int rank_x_mod_t = 0;   // rank_A(X/tX)
    int rank_b = 0;         // rank_B(X)
    int rank_y_mod_t = 0;   // rank_A(Y/tY), Y the torsion submodule
    bool identity_holds = false;
};

/// rank_A(X/tX) = rank_B(X) + rank_A(Y/tY).
RankReport check_rank_formula(const ElementaryModule& e, int k);

}  // namespace cmiwa
