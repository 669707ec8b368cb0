#include "doctest.h"

#include <random>

#include "cmiwa/power_series.hpp"

using namespace cmiwa;

namespace {

PowerSeries random_series(const SeriesRing& ring, std::mt19937_64& rng, int max_deg, int terms,
                          bool force_unit_term = false) {
    PowerSeries f(ring);
    for (int t = 0; t < terms; ++t) {
        Exponents e(ring.nvars);
        for (int i = 0; i < ring.nvars; ++i) e[i] = static_cast<int>(rng() % (max_deg + 1));
        f.set_coeff(e, BigInt(rng() % 100000) - 50000);
    }
    if (force_unit_term || f.is_zero()) {
        Exponents e(ring.nvars, 0);
        e[0] = static_cast<int>(rng() % (max_deg + 1));
        f.set_coeff(e, 1 + static_cast<long>(rng() % (ring.p - 1)));
    }
    return f;
}

Padic one_unit(const SeriesRing& ring, std::mt19937_64& rng) {
    return Padic::from_integer(1 + ring.p * BigInt(rng() % 1000000), ring.p, ring.prec);
}

}  // namespace

TEST_CASE("series ring arithmetic is exact modulo the box") {
    SeriesRing ring{5, 6, 2, 8};
    PowerSeries t0 = PowerSeries::variable(ring, 0);
    PowerSeries t1 = PowerSeries::variable(ring, 1);
    PowerSeries f = t0 * t0 + t1.scaled(3) + PowerSeries::constant(ring, 2);
    PowerSeries g = t0 - t1;
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    CHECK((f * g) * f == f * (g * f));
    CHECK(PowerSeries::zero(ring).is_zero());
    // truncation: t0^8 * t0 falls outside the box
    PowerSeries high = PowerSeries::monomial(ring, 1, 0, 8);
    CHECK((high * t0).is_zero());
}

TEST_CASE("tw_alpha basics") {
    SeriesRing ring{5, 8, 1, 10};
    std::mt19937_64 rng(5);
    PowerSeries f = random_series(ring, rng, 10, 12);

    // identity twist
    CHECK(tw_alpha(f, 0, Padic::one(5, 8)) == f);

    // tw_alpha(1+t) = alpha(1+t)
    Padic alpha = one_unit(ring, rng);
    PowerSeries onept = PowerSeries::constant(ring, 1) + PowerSeries::variable(ring, 0);
    CHECK(tw_alpha(onept, 0, alpha) == onept.scaled(alpha.lift()));

    // non 1-unit rejected
    CHECK_THROWS_AS(tw_alpha(f, 0, Padic::from_integer(2, 5, 8)), std::invalid_argument);
}

TEST_CASE("tw_alpha is a ring homomorphism with the twist group law") {
    // products of the random operands must fit inside the box, since the
    // substitution does not preserve the ideal generated by T^(trunc+1)
    SeriesRing ring{5, 8, 2, 9};
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        PowerSeries f = random_series(ring, rng, 4, 8);
        PowerSeries g = random_series(ring, rng, 4, 8);
        Padic a = one_unit(ring, rng), b = one_unit(ring, rng);
        int k = static_cast<int>(rng() % 2);
        CHECK(tw_alpha(f + g, k, a) == tw_alpha(f, k, a) + tw_alpha(g, k, a));
        CHECK(tw_alpha(f * g, k, a) == tw_alpha(f, k, a) * tw_alpha(g, k, a));
        CHECK(tw_alpha(tw_alpha(f, k, b), k, a) == tw_alpha(f, k, a * b));
        CHECK(tw_alpha(tw_alpha(f, k, a), k, a.inverse()) == f);
    }
}

TEST_CASE("project examples and the twist-projection identity") {
    SeriesRing ring{5, 8, 1, 10};
    PowerSeries t = PowerSeries::variable(ring, 0);
    PowerSeries f = t * t + t.scaled(5) + PowerSeries::constant(ring, 3);
    CHECK(project(f, 0) == PowerSeries::constant(ring, 3));
    CHECK(project(PowerSeries::zero(ring), 0).is_zero());

    // pi(Tw_alpha(f)) = f(alpha - 1)
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        PowerSeries g = random_series(ring, rng, 10, 10);
        Padic alpha = one_unit(ring, rng);
        Padic am1 = alpha - Padic::one(5, 8);
        CHECK(project(tw_alpha(g, 0, alpha), 0) == g.eval_var(0, am1));
        CHECK(project(tw_alpha(g, 0, alpha.inverse()), 0) ==
              g.eval_var(0, alpha.inverse() - Padic::one(5, 8)));
    }
}

TEST_CASE("weierstrass preparation examples") {
    SeriesRing ring{5, 8, 1, 10};
    PowerSeries t = PowerSeries::variable(ring, 0);
    PowerSeries p1 = PowerSeries::constant(ring, 5);

    // t + p is already distinguished
    WeierstrassFactors w1 = weierstrass_prep(t + p1);
    CHECK(w1.mu == 0);
    CHECK(w1.distinguished == t + p1);
    CHECK(w1.unit == PowerSeries::constant(ring, 1));

    // t^2 + (1+p)t + p = (t+p)(t+1)
    PowerSeries f = t * t + t.scaled(6) + p1;
    WeierstrassFactors w2 = weierstrass_prep(f);
    CHECK(w2.mu == 0);
    CHECK(w2.distinguished == t + p1);
    CHECK(w2.unit == t + PowerSeries::constant(ring, 1));
    CHECK(w2.distinguished * w2.unit == f);

    // scalar p extraction
    WeierstrassFactors w3 = weierstrass_prep((t + p1).scaled(5));
    CHECK(w3.mu == 1);
    SeriesRing r7 = ring;
    r7.prec = 7;
    CHECK(w3.distinguished == PowerSeries::variable(r7, 0) + PowerSeries::constant(r7, 5));

    CHECK_THROWS_AS(weierstrass_prep(PowerSeries::zero(ring)), std::domain_error);
}

TEST_CASE("weierstrass reconstruction on random series") {
    SeriesRing ring{5, 10, 1, 12};
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        PowerSeries f = random_series(ring, rng, 12, 8, true);
        WeierstrassFactors w = weierstrass_prep(f);
        BigInt pmu = pow_bigint(ring.p, static_cast<unsigned>(w.mu));
        SeriesRing work = w.distinguished.ring();
        PowerSeries back = (w.distinguished * w.unit).scaled(pmu);
        // compare f mod p^(prec - mu)
        PowerSeries fred(work);
        for (const auto& [e, c] : f.terms()) fred.set_coeff(e, c);
        PowerSeries backred(work);
        for (const auto& [e, c] : back.terms()) backred.set_coeff(e, c);
        CHECK(fred == backred);
        // distinguished is monic with p-small lower coefficients
        int deg = w.distinguished.degree(0);
        CHECK(w.distinguished.coeff({deg}) == Padic::one(ring.p, work.prec));
        for (int j = 0; j < deg; ++j) {
            Padic c = w.distinguished.coeff({j});
            CHECK((c.is_zero() || c.valuation() >= 1));
        }
        CHECK(w.unit.coeff({0}).is_unit());
    }
}

TEST_CASE("divides_1var examples") {
    SeriesRing ring{5, 10, 1, 12};
    PowerSeries t = PowerSeries::variable(ring, 0);
    PowerSeries p1 = PowerSeries::constant(ring, 5);
    PowerSeries f = t + p1;
    PowerSeries g = f * (t + PowerSeries::constant(ring, 1));
    CHECK(divides_1var(f, g));
    CHECK(divides_1var(g, g));
    CHECK_FALSE(divides_1var(f, t + PowerSeries::constant(ring, 25)));
    CHECK_THROWS_AS(divides_1var(PowerSeries::zero(ring), g), std::domain_error);
}

TEST_CASE("divides_1var accepts products and rejects perturbations") {
    SeriesRing ring{5, 10, 1, 12};
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        PowerSeries f = random_series(ring, rng, 4, 4, true);
        WeierstrassFactors wf = weierstrass_prep(f);
        if (wf.distinguished.degree(0) == 0) continue;  // need a nontrivial distinguished part
        PowerSeries h = random_series(ring, rng, 5, 5, true);
        PowerSeries g = f * h;
        CHECK(divides_1var(f, g));
        // p^a with small a is never a multiple of f in the box
        int a = static_cast<int>(rng() % 3);
        PowerSeries bad = g + PowerSeries::constant(ring, pow_bigint(5, a));
        CHECK_FALSE(divides_1var(f, bad));
    }
}

TEST_CASE("divides_by_specialization examples") {
    SeriesRing ring{5, 8, 2, 10};
    std::mt19937_64 rng(37);
    PowerSeries t1 = PowerSeries::variable(ring, 0);
    PowerSeries t2 = PowerSeries::variable(ring, 1);

    CHECK_FALSE(divides_by_specialization(t1, t2, 11));
    PowerSeries f = t1 * t2 + t2.scaled(5) + PowerSeries::constant(ring, 3);
    CHECK(divides_by_specialization(f, f, 11));
    for (int i = 0; i < 10; ++i) {
        PowerSeries h = random_series(ring, rng, 3, 4, true);
        CHECK(divides_by_specialization(f, f * h, 11));
    }
}

TEST_CASE("series serialization round trip is canonical") {
    SeriesRing ring{5, 6, 2, 7};
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        PowerSeries f = random_series(ring, rng, 6, 9);
        PowerSeries g = PowerSeries::deserialize(f.serialize());
        CHECK(f == g);
        CHECK(f.serialize() == g.serialize());
    }
}
