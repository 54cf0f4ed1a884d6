#include <doctest.h>

#include "germforge/cyclotomic.hpp"
#include "germforge/errors.hpp"

using germforge::CyclotomicNumber;

namespace {
CyclotomicNumber zeta(long m, long k = 1) { return CyclotomicNumber::root_of_unity(m, k); }
}

TEST_CASE("cyclotomic polynomials") {
    auto& p6 = CyclotomicNumber::cyclotomic_polynomial(6);
    REQUIRE(p6.size() == 3);
    CHECK(p6[0] == 1);
    CHECK(p6[1] == -1);
    CHECK(p6[2] == 1);
    auto& p12 = CyclotomicNumber::cyclotomic_polynomial(12);
    REQUIRE(p12.size() == 5);
    CHECK(p12[0] == 1);
    CHECK(p12[2] == -1);
    CHECK(p12[4] == 1);
    CHECK(CyclotomicNumber::phi(1) == 1);
    CHECK(CyclotomicNumber::phi(12) == 4);
    CHECK(CyclotomicNumber::phi(100) == 40);
}

TEST_CASE("roots of unity reduce to minimal conductor") {
    CHECK(zeta(1) == CyclotomicNumber(1));
    CHECK(zeta(2).is_rational());
    CHECK(zeta(2).rational_value() == -1);
    CHECK(zeta(4, 2).rational_value() == -1);
    CHECK(zeta(6, 2) == zeta(3));
    CHECK(zeta(6).conductor() == 3);
    CHECK(zeta(6) == -zeta(3, 2));
    CHECK(zeta(12, 3) == zeta(4));
}

TEST_CASE("arithmetic") {
    CyclotomicNumber z = zeta(3);
    CHECK(z * z == zeta(3, 2));
    CHECK(z * z * z == CyclotomicNumber(1));
    CHECK((z + z * z).rational_value() == -1);
    CHECK(z - z == CyclotomicNumber(0));
    CHECK((z + z * z + CyclotomicNumber(1)).is_zero());

    CyclotomicNumber i = zeta(4);
    CHECK((i * i).rational_value() == -1);
    CHECK((z * i).conductor() == 12);
    CHECK(z * i == zeta(12, 7));
}

TEST_CASE("inverse and division") {
    CyclotomicNumber z = zeta(3);
    CHECK(z.inverse() == zeta(3, 2));
    CHECK(z * z.inverse() == CyclotomicNumber(1));
    CyclotomicNumber a = CyclotomicNumber(2) + z;
    CHECK(a * a.inverse() == CyclotomicNumber(1));
    CHECK((a / a) == CyclotomicNumber(1));
    CHECK_THROWS_AS(CyclotomicNumber(0).inverse(), germforge::math_error);
    CHECK(CyclotomicNumber(mpq_class(3, 4)).inverse().rational_value() == mpq_class(4, 3));
}

TEST_CASE("conjugation") {
    CyclotomicNumber z = zeta(5);
    CHECK(z.conjugate() == zeta(5, 4));
    CHECK((z * z.conjugate()).rational_value() == 1);
    CyclotomicNumber a = CyclotomicNumber(2) + zeta(3);
    CHECK(a.conjugate().conjugate() == a);
    CHECK(CyclotomicNumber(mpq_class(-7, 2)).conjugate().rational_value() == mpq_class(-7, 2));
}

TEST_CASE("text form") {
    CHECK(CyclotomicNumber(0).to_string() == "0");
    CHECK(CyclotomicNumber(mpq_class(-3, 2)).to_string() == "-3/2");
    CHECK(zeta(3).to_string() == "z3");
    CHECK(zeta(5, 3).to_string() == "z5^3");
    CHECK((-zeta(3)).to_string() == "-z3");
    CHECK((CyclotomicNumber(2) * zeta(3)).to_string() == "2*z3");
    CHECK((CyclotomicNumber(1) + zeta(4)).to_string(true) == "(1 + z4)");
    CHECK((CyclotomicNumber(1) - zeta(4)).to_string(true) == "(1 - z4)");
    CHECK(zeta(4).to_string(true) == "z4");
    CHECK(zeta(6).to_string() == "1 + z3");
    CHECK((CyclotomicNumber(1) + zeta(4)).display_negative() == false);
    CHECK((CyclotomicNumber(-1) - zeta(4)).display_negative() == true);
    CHECK((CyclotomicNumber(1) + zeta(4)).term_count() == 2);
}
