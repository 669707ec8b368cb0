#include "doctest.h"

#include <random>

#include "cmiwa/padic.hpp"

using namespace cmiwa;

namespace {

// Independent oracle: the Teichmuller digit by exhaustive search mod p^n.
BigInt teich_by_search(long p, int n, long a) {
    BigInt m = pow_bigint(p, static_cast<unsigned>(n));
    for (BigInt x = 1; x < m; ++x) {
        if ((x - a) % p != 0) continue;
        BigInt r = 1;
        for (long i = 0; i + 1 < p; ++i) r = r * x % m;
        if (r == 1) return x;
    }
    return -1;
}

}  // namespace

TEST_CASE("padic representation and arithmetic") {
    Padic a = Padic::from_integer(50, 5, 6);
    CHECK(a.valuation() == 2);
    CHECK(a.unit_part() == 2);
    CHECK(a.lift() == 50);

    Padic b = Padic::from_integer(3, 5, 6);
    CHECK((a + b).lift() == 53);
    CHECK((a * b).valuation() == 2);
    CHECK((a * b) == Padic::from_integer(150, 5, 6));
    CHECK((b - b).is_zero());

    // add keeps min precision, mul keeps relative precision
    Padic c = Padic::from_integer(7, 5, 3);
    CHECK((a + c).precision() == 3);
    Padic prod = a * c;  // valuation 2, relative precision min(4,3)=3
    CHECK(prod.valuation() == 2);
    CHECK(prod.precision() == 5);

    CHECK(Padic::from_integer(2, 5, 4).inverse() * Padic::from_integer(2, 5, 4) ==
          Padic::one(5, 4));
    CHECK_THROWS_AS(Padic::from_integer(5, 5, 4).inverse(), std::domain_error);

    // division: p-valuations subtract, quotients outside Z_p are refused
    CHECK(a / Padic::from_integer(25, 5, 6) == Padic::from_integer(2, 5, 6).truncated(4));
    CHECK_THROWS_AS(b / a, std::domain_error);
}

TEST_CASE("teichmuller examples") {
    // p=5: identity case
    CHECK(teichmuller(Padic::one(5, 10)) == Padic::one(5, 10));

    // p=5: defining property at N=10
    Padic t2 = teichmuller(Padic::from_integer(2, 5, 10));
    CHECK((t2.lift() - 2) % 5 == 0);
    CHECK(t2.pow(4) == Padic::one(5, 10));

    // p=7, N=2: frozen from the x -> x^p fixed-point oracle
    CHECK(teich_by_search(7, 2, 3) == 31);
    CHECK(teichmuller(Padic::from_integer(3, 7, 2)).lift() == 31);

    CHECK_THROWS_AS(teichmuller(Padic::from_integer(10, 5, 4)), std::domain_error);
}

TEST_CASE("teichmuller is multiplicative") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        long a = 1 + static_cast<long>(rng() % 1000000);
        long b = 1 + static_cast<long>(rng() % 1000000);
        if (a % 5 == 0 || b % 5 == 0) continue;
        Padic pa = Padic::from_integer(a, 5, 12), pb = Padic::from_integer(b, 5, 12);
        CHECK(teichmuller(pa * pb) == teichmuller(pa) * teichmuller(pb));
    }
}

TEST_CASE("hensel_nth_root examples") {
    // p=5: square root of 6 anchored at 1, frozen from exhaustive squares mod 25
    {
        long found = -1;
        for (long x = 0; x < 25; ++x)
            if ((x * x) % 25 == 6 && x % 5 == 1) found = x;
        CHECK(found == 16);
    }
    Padic r = hensel_nth_root(Padic::from_integer(6, 5, 2), 2, 1);
    CHECK(r.lift() == 16);

    // identity and h=1 cases
    CHECK(hensel_nth_root(Padic::one(5, 8), 3, 1) == Padic::one(5, 8));
    CHECK(hensel_nth_root(Padic::from_integer(6, 5, 8), 1, 1).lift() == 6);

    // error paths
    CHECK_THROWS_AS(hensel_nth_root(Padic::from_integer(6, 5, 8), 5, 1), std::domain_error);
    CHECK_THROWS_AS(hensel_nth_root(Padic::from_integer(2, 5, 8), 2, 1), std::domain_error);

    // random 1-units: root of x^h recovers x
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        BigInt u = 1 + 5 * BigInt(rng() % 100000);
        Padic x = Padic::from_integer(u, 5, 12);
        unsigned h = 1 + static_cast<unsigned>(rng() % 6);
        if (h % 5 == 0) h = 6;
        CHECK(hensel_nth_root(x.pow(h), h, x.lift() % 5) == x);
    }
}

TEST_CASE("one_unit_projection examples") {
    CHECK(one_unit_projection(Padic::one(5, 6)) == Padic::one(5, 6));

    // frozen: teich(2) = 7 mod 25, so <2> = 2/7 = 11 mod 25
    CHECK(teich_by_search(5, 2, 2) == 7);
    CHECK(one_unit_projection(Padic::from_integer(2, 5, 2)).lift() == 11);

    for (long a : {2L, 3L, 4L, 6L}) {
        Padic t = teichmuller(Padic::from_integer(a, 5, 9));
        CHECK(one_unit_projection(t) == Padic::one(5, 9));
    }
    CHECK_THROWS_AS(one_unit_projection(Padic::from_integer(15, 5, 6)), std::domain_error);
}

TEST_CASE("one_unit_projection is a homomorphism with torsion kernel") {
    std::mt19937_64 rng(13);
    long p = 7;
    for (int i = 0; i < 40; ++i) {
        long a = 1 + static_cast<long>(rng() % 100000);
        long b = 1 + static_cast<long>(rng() % 100000);
        if (a % p == 0 || b % p == 0) continue;
        Padic pa = Padic::from_integer(a, p, 10), pb = Padic::from_integer(b, p, 10);
        CHECK(one_unit_projection(pa * pb) == one_unit_projection(pa) * one_unit_projection(pb));
        CHECK((one_unit_projection(pa).lift() - 1) % p == 0);
    }
    // kernel contains exactly the (p-1)-th roots of unity among tested units
    for (long a = 1; a < 20; ++a) {
        if (a % p == 0) continue;
        Padic pa = Padic::from_integer(a, p, 10);
        bool in_kernel = one_unit_projection(pa) == Padic::one(p, 10);
        bool is_root = pa.pow(p - 1) == Padic::one(p, 10);
        CHECK(in_kernel == is_root);
    }
}
