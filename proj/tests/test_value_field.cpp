#include "doctest.h"

#include "cmiwa/value_field.hpp"

using namespace cmiwa;

TEST_CASE("quadratic value field arithmetic") {
    QuadField gauss(-4);
    auto F = ValueField::quadratic(gauss);
    FieldElt i = F->from_quad({0, 1});
    FieldElt m1 = F->from_rational(-1);
    CHECK(i * i == m1);
    CHECK(i.pow(4) == F->one());
    CHECK(i.inverse() == -i);
    CHECK(i.conj() == -i);
    CHECK((F->from_quad({2, 1}) * F->from_quad({2, -1})).rational_value() == 5);
    CHECK(F->from_quad({3, 0}).is_rational());
    CHECK_FALSE(i.is_rational());

    Complex e = i.embed();
    CHECK(abs(e.re) < 1e-40);
    CHECK(abs(e.im - 1) < 1e-40);
}

TEST_CASE("cyclotomic extension") {
    QuadField gauss(-4);
    auto F = ValueField::cyclotomic_ext(gauss, 5);
    CHECK(F->ext_degree() == 4);
    FieldElt z = F->gen();
    CHECK(z.pow(5) == F->one());
    CHECK(z.pow(4) + z.pow(3) + z.pow(2) + z + F->one() == F->zero());
    CHECK(F->root_of_unity(7) == z.pow(2));
    CHECK(z.inverse() == z.pow(4));
    CHECK(z.conj() == z.pow(4));
    CHECK(z.conj().conj() == z);

    // mixed element with the base field
    FieldElt i = F->from_quad({0, 1});
    FieldElt m = i * z;
    CHECK(m.conj() == (-i) * z.pow(4));
    CHECK((m * m.inverse()) == F->one());

    Complex ez = z.embed();
    CHECK(abs(ez.abs() - 1) < 1e-40);
    Complex check = ez;
    for (int k = 0; k < 4; ++k) check *= ez;
    CHECK(abs(check.re - 1) < 1e-40);
    CHECK(abs(check.im) < 1e-40);
}

TEST_CASE("cube root extension with conjugation") {
    QuadField k23(-23);
    QuadElt a{1, 1};  // norm 8 = 2^3
    auto F = ValueField::cube_root_ext(k23, a);
    CHECK(F->ext_degree() == 3);
    FieldElt y = F->gen();
    CHECK(y.pow(3) == F->from_quad(a));

    // conjugation is a ring involution sending y^3 to conj(a)
    FieldElt cy = y.conj();
    CHECK(cy.pow(3) == F->from_quad(conj(k23, a)));
    CHECK(cy.conj() == y);
    FieldElt u = F->from_quad({2, -1}) + y * F->from_rational(3) + y * y;
    FieldElt v = F->from_quad({0, 1}) - y;
    CHECK((u * v).conj() == u.conj() * v.conj());
    CHECK((u + v).conj() == u.conj() + v.conj());
    CHECK((u * u.inverse()) == F->one());

    // numeric embedding satisfies the defining relation
    Complex ey = y.embed();
    Complex cube = ey * ey * ey;
    Complex ea = F->from_quad(a).embed();
    CHECK((cube - ea).abs() < 1e-38);
}

TEST_CASE("p-adic avatars") {
    QuadField gauss(-4);
    auto F = ValueField::quadratic(gauss);
    // embedding i -> 2 mod 5: teichmuller lift 7 mod 25
    FieldElt i = F->from_quad({0, 1});
    Padic ai = i.padic_avatar(5, 2, 2);
    CHECK(ai.lift() == 7);
    CHECK((ai * ai) == Padic::from_integer(-1, 5, 2));
    Padic a2i = F->from_quad({2, 1}).padic_avatar(5, 2, 2);
    CHECK(a2i.lift() == 9);

    // rational part with denominator
    FieldElt half = F->from_rational(Rational(1, 2));
    CHECK(half.padic_avatar(5, 3, 2) * Padic::from_integer(2, 5, 3) == Padic::one(5, 3));

    // zeta_5 has no Z_5 image
    auto F5 = ValueField::cyclotomic_ext(gauss, 5);
    CHECK_THROWS_WITH_AS(F5->gen().padic_avatar(5, 4, 2), doctest::Contains("extension scalars"),
                         std::domain_error);
    // but elements without a zeta part embed fine
    CHECK(F5->from_quad({0, 1}).padic_avatar(5, 2, 2).lift() == 7);

    // cube root generator does embed at 59 (cubing is a bijection mod 59)
    QuadField k23(-23);
    auto Fc = ValueField::cube_root_ext(k23, {1, 1});
    // omega = (1+sqrt(-23))/2 with sqrt(-23) = 6 mod 59 gives the anchor 33
    Padic ya = Fc->gen().padic_avatar(59, 4, 33);
    CHECK(ya.pow(3) == Fc->from_quad({1, 1}).padic_avatar(59, 4, 33));
}

TEST_CASE("value printing") {
    QuadField gauss(-4);
    auto F = ValueField::quadratic(gauss);
    CHECK(F->from_rational(-2).to_string() == "-2");
    CHECK(F->from_quad({-1, 2}).to_string() == "-1+2*w");
    CHECK(F->from_rational(Rational(3, 2)).to_string() == "3/2");
    auto F5 = ValueField::cyclotomic_ext(gauss, 5);
    CHECK(F5->gen().to_string() == "1*y");
    CHECK(F5->zero().to_string() == "0");
}
