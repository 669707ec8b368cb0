#include "doctest.h"

#include "cmiwa/abelian.hpp"

using namespace cmiwa;

TEST_CASE("smith normal form") {
    // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
    std::vector<ExpVec> rels = {{2, 0}, {0, 4}};
    FinAb g = FinAb::from_presentation(2, rels);
    CHECK(g.invariants() == std::vector<long long>{2, 4});
    CHECK(g.order() == 8);

    // Z^2 / <(2,1),(0,3)>: determinant 6, cyclic (gcd of entries 1)
    FinAb h = FinAb::from_presentation(2, {{2, 1}, {0, 3}});
    CHECK(h.invariants() == std::vector<long long>{6});

    // infinite quotient detected
    CHECK_THROWS_AS(FinAb::from_presentation(2, {{2, 0}}), std::invalid_argument);
}

TEST_CASE("coords_of_gens is a homomorphism onto the abstract group") {
    FinAb g = FinAb::from_presentation(3, {{4, 0, 0}, {0, 6, 0}, {0, 0, 10}, {2, 3, 5}});
    long long n = g.order();
    CHECK(n == 4 * 6 * 10 / 2);  // the extra relation halves the box
    ExpVec a = g.coords_of_gens({1, 0, 0});
    ExpVec b = g.coords_of_gens({0, 1, 0});
    ExpVec ab = g.coords_of_gens({1, 1, 0});
    CHECK(g.add(a, b) == ab);
    CHECK(g.is_identity(g.coords_of_gens({2, 3, 5})));
    CHECK(g.is_identity(g.coords_of_gens({4, 0, 0})));
}

TEST_CASE("element order, p-part, characters") {
    FinAb g({2, 20});
    CHECK(g.element_order({1, 0}) == 2);
    CHECK(g.element_order({0, 1}) == 20);
    CHECK(g.element_order({1, 2}) == 10);

    FinAb g5 = g.p_part(5);
    CHECK(g5.invariants() == std::vector<long long>{5});
    CHECK(g5.order() == 5);
    ExpVec pr = g.project_p_part(5, {1, 7});
    CHECK(pr == ExpVec{7 % 5});

    // character pairing: chi(x) = zeta_m^e with m = lcm of invariants
    CHECK(g.character_modulus() == 20);
    long long e = g.character_value_exponent({1, 1}, {1, 3});
    CHECK(e == (10 * 1 + 1 * 3) % 20);
    CHECK(g.all_characters().size() == static_cast<size_t>(g.order()));
}

TEST_CASE("concrete group construction: (Z/7)^x and (Z/8)^x") {
    auto mul7 = [](const std::string& a, const std::string& b) {
        return std::to_string(std::stoll(a) * std::stoll(b) % 7);
    };
    ConcreteGroup g = build_concrete_group({"3"}, mul7, "1");
    CHECK(g.group.invariants() == std::vector<long long>{6});
    CHECK(g.group.element_order(g.coords("6")) == 2);
    CHECK(g.group.is_identity(g.group.add(g.coords("3"), g.coords("5"))));  // 3*5 = 1 mod 7
    CHECK(g.coords("2") == g.group.mul(g.coords("3"), 2));                  // 2 = 3^2 mod 7

    auto mul8 = [](const std::string& a, const std::string& b) {
        return std::to_string(std::stoll(a) * std::stoll(b) % 8);
    };
    ConcreteGroup h = build_concrete_group({"3", "5"}, mul8, "1");
    CHECK(h.group.order() == 4);
    CHECK(h.group.invariants() == std::vector<long long>{2, 2});
}
