#include <doctest.h>

#include "germforge/errors.hpp"
#include "germforge/presentation.hpp"

using germforge::CyclotomicNumber;
using germforge::ImageEquation;
using germforge::Polynomial;
using germforge::PolyMatrix;
using germforge::ReflectedGraphGerm;
using germforge::ReflectionGroup;

namespace {
Polynomial var(const std::vector<std::string>& vars, const std::string& name) {
    return Polynomial::variable(vars, name);
}

// builds a matrix over vars from a row-major table of expressions
PolyMatrix matrix_of(int n, const std::vector<std::string>& vars,
                     const std::vector<std::vector<Polynomial>>& rows) {
    PolyMatrix m(n, n, vars);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    return m;
}

ReflectedGraphGerm symbolic_product_germ() {
    std::vector<std::string> vars{"x", "y", "p1", "p2", "p3"};
    Polynomial x = var(vars, "x"), y = var(vars, "y");
    Polynomial h = x * var(vars, "p1") + y * var(vars, "p2") + x * y * var(vars, "p3");
    return ReflectedGraphGerm::create(ReflectionGroup::product(2, 2), h, {},
                                      {"p1", "p2", "p3"});
}

ReflectedGraphGerm symbolic_cyclic_germ() {
    std::vector<std::string> vars{"x", "y", "p1", "p2", "p3"};
    Polynomial y = var(vars, "y");
    Polynomial h = y * var(vars, "p1") + y * y * var(vars, "p2") + y.pow(3) * var(vars, "p3");
    return ReflectedGraphGerm::create(ReflectionGroup::cyclic(4), h, {},
                                      {"p1", "p2", "p3"});
}

ReflectedGraphGerm symbolic_dihedral_germ() {
    std::vector<std::string> vars{"x", "y", "p1", "p2", "p3", "p4", "p5"};
    Polynomial x = var(vars, "x"), y = var(vars, "y");
    Polynomial h = x * var(vars, "p1") + x * x * var(vars, "p2") + y * var(vars, "p3") +
                   y * y * var(vars, "p4") + y.pow(3) * var(vars, "p5");
    return ReflectedGraphGerm::create(ReflectionGroup::dihedral(6), h, {},
                                      {"p1", "p2", "p3", "p4", "p5"});
}
}

TEST_CASE("eigen matrix pair") {
    ReflectedGraphGerm germ = symbolic_product_germ();
    auto [E, A_Z] = germforge::eigen_matrix(germ);
    std::vector<std::string> av{"x", "y", "Z", "p1", "p2", "p3"};
    Polynomial x = var(av, "x"), y = var(av, "y"), Z = var(av, "Z");
    CHECK(E.at(1, 1) == -x);
    CHECK(E.at(3, 3) == x * y);
    CHECK(A_Z.at(0, 0) == germ.h.with_variables(av) - Z);
    CHECK(A_Z.at(1, 1) ==
          -x * var(av, "p1") + y * var(av, "p2") - x * y * var(av, "p3") - Z);
    CHECK(A_Z.at(0, 1).is_zero());

    // h = 0 degenerates the diagonal to -Z
    ReflectedGraphGerm flat = ReflectedGraphGerm::create(
        ReflectionGroup::product(2, 2), Polynomial::zero({"x", "y"}));
    auto [E0, A0] = germforge::eigen_matrix(flat);
    for (int k = 0; k < 4; ++k)
        CHECK(A0.at(k, k) == -var({"x", "y", "Z"}, "Z"));
}

TEST_CASE("determinant formula for E") {
    auto check = symbolic_product_germ();
    auto r = germforge::eigen_determinant_check(check);
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    CHECK(r.ok);
    CHECK(r.determinant == CyclotomicNumber(16) * x * x * y * y);
    CHECK(r.constant == CyclotomicNumber(16));

    auto rd = germforge::eigen_determinant_check(symbolic_dihedral_germ());
    CHECK(rd.ok);
    CHECK(rd.determinant == CyclotomicNumber(27) * (x.pow(3) - y.pow(3)).pow(3));
    CHECK(rd.constant == CyclotomicNumber(27));

    auto rc = germforge::eigen_determinant_check(symbolic_cyclic_germ());
    CHECK(rc.ok);
}

TEST_CASE("presentation matrix of the symbolic product germ") {
    ReflectedGraphGerm germ = symbolic_product_germ();
    auto pres = germforge::presentation_matrix(germ);

    std::vector<std::string> tv{"X", "Y", "Z", "p1", "p2", "p3"};
    Polynomial X = var(tv, "X"), Y = var(tv, "Y"), Z = var(tv, "Z");
    Polynomial p1 = var(tv, "p1"), p2 = var(tv, "p2"), p3 = var(tv, "p3");
    PolyMatrix expected = matrix_of(
        4, tv,
        {{-Z, p1, p2, p3},
         {X * p1, -Z, X * p3, p2},
         {Y * p2, Y * p3, -Z, p1},
         {X * Y * p3, Y * p2, X * p1, -Z}});
    CHECK(pres.lambda == expected);
    CHECK(pres.det_formula_constant == CyclotomicNumber(16));
    CHECK(germforge::presentation_via_alpha(germ) == expected);
}

TEST_CASE("presentation matrix of the symbolic cyclic germ") {
    ReflectedGraphGerm germ = symbolic_cyclic_germ();
    auto pres = germforge::presentation_matrix(germ);

    std::vector<std::string> tv{"X", "Y", "Z", "p1", "p2", "p3"};
    Polynomial Y = var(tv, "Y"), Z = var(tv, "Z");
    Polynomial p1 = var(tv, "p1"), p2 = var(tv, "p2"), p3 = var(tv, "p3");
    PolyMatrix expected = matrix_of(
        4, tv,
        {{-Z, p1, p2, p3},
         {Y * p3, -Z, p1, p2},
         {Y * p2, Y * p3, -Z, p1},
         {Y * p1, Y * p2, Y * p3, -Z}});
    CHECK(pres.lambda == expected);
    CHECK(germforge::presentation_via_alpha(germ) == expected);
}

TEST_CASE("presentation matrix of the symbolic dihedral germ") {
    ReflectedGraphGerm germ = symbolic_dihedral_germ();
    auto pres = germforge::presentation_matrix(germ);

    std::vector<std::string> tv{"X", "Y", "Z", "p1", "p2", "p3", "p4", "p5"};
    Polynomial X = var(tv, "X"), Y = var(tv, "Y"), Z = var(tv, "Z");
    Polynomial p1 = var(tv, "p1"), p2 = var(tv, "p2"), p3 = var(tv, "p3");
    Polynomial p4 = var(tv, "p4"), p5 = var(tv, "p5");
    Polynomial zero = Polynomial::zero(tv);
    PolyMatrix expected = matrix_of(
        6, tv,
        {{-Z, p1, p2, p3, p4, p5},
         {p2 * X + p3 * Y, -Z, p1, p4 * Y, p5 * Y, -p2},
         {p1 * X + p4 * Y * Y, p2 * X + p3 * Y, -Z, p5 * Y * Y, -p2 * Y, -p1},
         {p1 * Y, p2 * Y, -p5 * Y, p5 * X - Z, p3, p4},
         {p2 * Y * Y, -p5 * Y * Y, -p4 * Y, p4 * X + p1 * Y, p5 * X - Z, p3},
         {-p5 * Y.pow(3), -p4 * Y * Y, -p3 * Y, p3 * X + p2 * Y * Y, p4 * X + p1 * Y,
          p5 * X - Z}});
    CHECK(pres.lambda == expected);
    CHECK(germforge::presentation_via_alpha(germ) == expected);
}

TEST_CASE("determinant of lambda matches the image equation") {
    for (auto make : {&symbolic_product_germ, &symbolic_cyclic_germ}) {
        ReflectedGraphGerm germ = make();
        auto pres = germforge::presentation_matrix(germ);
        ImageEquation eq = germforge::image_equation(germ);
        CHECK(germforge::verify_det_equals_image(pres, eq));
    }

    // constant-coefficient germ: det M reproduces the quartic image equation
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    ReflectedGraphGerm intro = ReflectedGraphGerm::create(
        ReflectionGroup::product(2, 2), x.pow(3) + y.pow(3) + x * y);
    auto pres = germforge::presentation_matrix(intro);
    ImageEquation eq = germforge::image_equation(intro);
    CHECK(germforge::verify_det_equals_image(pres, eq));
    CHECK(pres.lambda.determinant() == eq.F);

    std::vector<std::string> tv{"X", "Y", "Z"};
    Polynomial X = var(tv, "X"), Y = var(tv, "Y"), Z = var(tv, "Z");
    Polynomial one = Polynomial::constant(tv, CyclotomicNumber(1));
    PolyMatrix M = matrix_of(4, tv,
                             {{-Z, X, Y, one},
                              {X * X, -Z, X, Y},
                              {Y * Y, Y, -Z, X},
                              {X * Y, Y * Y, X * X, -Z}});
    CHECK(pres.lambda == M);

    // h = 0: lambda = -Z Id, det = (+1) Z^d for even d
    ReflectedGraphGerm flat = ReflectedGraphGerm::create(
        ReflectionGroup::product(2, 2), Polynomial::zero(xy));
    auto fp = germforge::presentation_matrix(flat);
    CHECK(fp.lambda.determinant() == var(tv, "Z").pow(4));
    CHECK(germforge::presentation_via_alpha(flat) == fp.lambda);
}
