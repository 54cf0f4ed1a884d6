#include <doctest.h>

#include "germforge/errors.hpp"
#include "germforge/group_action.hpp"

using germforge::CyclotomicNumber;
using germforge::Polynomial;
using germforge::PolyMatrix;
using germforge::ReflectedGraphGerm;
using germforge::ReflectionGroup;

namespace {
Polynomial var(const std::vector<std::string>& vars, const std::string& name) {
    return Polynomial::variable(vars, name);
}
}

TEST_CASE("action on polynomials with parameters") {
    ReflectionGroup G = ReflectionGroup::cyclic(2);
    std::vector<std::string> vars{"x", "y", "p1", "p2", "p3"};
    Polynomial y = var(vars, "y");
    Polynomial h = y * var(vars, "p1") + y * y * var(vars, "p2") + y.pow(3) * var(vars, "p3");
    CHECK(germforge::act(G, 2, h) ==
          -y * var(vars, "p1") + y * y * var(vars, "p2") - y.pow(3) * var(vars, "p3"));
    CHECK(germforge::act(G, 1, h) == h);

    ReflectionGroup D = ReflectionGroup::dihedral(6);
    std::vector<std::string> dv{"x", "y", "p1", "p2", "p3", "p4", "p5"};
    Polynomial dx = var(dv, "x"), dy = var(dv, "y");
    Polynomial dh = dx * var(dv, "p1") + dx * dx * var(dv, "p2") + dy * var(dv, "p3") +
                    dy * dy * var(dv, "p4") + dy.pow(3) * var(dv, "p5");
    CHECK(germforge::act(D, 2, dh) ==
          dy * var(dv, "p1") + dy * dy * var(dv, "p2") + dx * var(dv, "p3") +
              dx * dx * var(dv, "p4") + dx.pow(3) * var(dv, "p5"));

    auto orbit = germforge::orbit_functions(D, dh);
    REQUIRE(orbit.size() == 6);
    CHECK(orbit[0] == dh);
    CHECK(orbit[1] == germforge::act(D, 2, dh));
}

TEST_CASE("reynolds averaging") {
    ReflectionGroup D = ReflectionGroup::dihedral(6);
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    Polynomial av = germforge::reynolds(D, x.pow(3));
    CHECK(av == (x.pow(3) + y.pow(3)) * CyclotomicNumber(mpq_class(1, 2)));
    CHECK(germforge::reynolds(D, av) == av);
    CHECK(germforge::reynolds(D, x).is_zero());
    CHECK(germforge::is_invariant(D, av));
    CHECK(germforge::is_invariant(D, x * y));
    CHECK(!germforge::is_invariant(D, x.pow(3)));
}

TEST_CASE("divided differences") {
    ReflectionGroup D = ReflectionGroup::dihedral(6);
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    CHECK(germforge::demazure(D, 2, x.pow(3)) == x * x + x * y + y * y);
    CHECK(germforge::demazure(D, 2, x.pow(3) + y.pow(3)).is_zero());
    CHECK(germforge::demazure(D, 2, x) == Polynomial::constant(xy, CyclotomicNumber(1)));
    CHECK_THROWS_AS(germforge::demazure(D, 3, x), germforge::math_error);
}

TEST_CASE("jacobian determinant factors over the hyperplanes") {
    auto check = [](const ReflectionGroup& G, long c) {
        auto f = germforge::jacobian_factorization_check(G);
        CHECK(f.ok);
        CHECK(f.constant == CyclotomicNumber(c));
    };
    check(ReflectionGroup::product(2, 2), 4);
    check(ReflectionGroup::dihedral(6), 3);
    check(ReflectionGroup::cyclic(4), 4);

    PolyMatrix j = germforge::orbit_jacobian(ReflectionGroup::dihedral(6));
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    CHECK(j.determinant() == (x.pow(3) - y.pow(3)) * CyclotomicNumber(3));
}

TEST_CASE("eigen-matrix of the coinvariant basis") {
    ReflectionGroup G = ReflectionGroup::product(2, 2);
    PolyMatrix E = germforge::eigen_matrix_of_basis(G, G.default_basis());
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    CHECK(E.at(0, 0) == x.pow(0));
    CHECK(E.at(0, 3) == x.pow(0));
    CHECK(E.at(1, 0) == x);
    CHECK(E.at(1, 1) == -x);
    CHECK(E.at(1, 2) == x);
    CHECK(E.at(1, 3) == -x);
    CHECK(E.at(2, 1) == y);
    CHECK(E.at(2, 2) == -y);
    CHECK(E.at(3, 1) == -x * y);
    CHECK(E.at(3, 3) == x * y);
    CHECK(E.determinant() == CyclotomicNumber(16) * x * x * y * y);

    ReflectionGroup D = ReflectionGroup::dihedral(6);
    PolyMatrix ED = germforge::eigen_matrix_of_basis(D, D.default_basis());
    CHECK(ED.determinant() == CyclotomicNumber(27) * (x.pow(3) - y.pow(3)).pow(3));
}

TEST_CASE("germ validation") {
    ReflectionGroup G = ReflectionGroup::product(2, 2);
    std::vector<std::string> vars{"x", "y", "p1"};
    Polynomial x = var(vars, "x"), y = var(vars, "y"), p1 = var(vars, "p1");

    ReflectedGraphGerm germ = ReflectedGraphGerm::create(G, y * p1, {}, {"p1"});
    CHECK(germ.basis.size() == 4);
    CHECK(germ.parameters == std::vector<std::string>{"p1"});

    CHECK_THROWS_AS(ReflectedGraphGerm::create(G, y * p1, {}, {"x"}), germforge::math_error);
    CHECK_THROWS_AS(ReflectedGraphGerm::create(G, y * p1), germforge::math_error);
    CHECK_THROWS_AS(
        ReflectedGraphGerm::create(G, y * p1 + p1, {}, {"p1"}), germforge::math_error);
    CHECK_THROWS_AS(
        ReflectedGraphGerm::create(G, x + Polynomial::constant(vars, CyclotomicNumber(1))),
        germforge::math_error);

    std::vector<std::string> xy{"x", "y"};
    Polynomial sx = var(xy, "x"), sy = var(xy, "y");
    Polynomial one = sx.pow(0);
    CHECK_THROWS_AS(ReflectedGraphGerm::create(G, sy, {sx, one, sy, sx * sy}),
                    germforge::math_error);
    CHECK_THROWS_AS(ReflectedGraphGerm::create(G, sy, {one, sx, sy}), germforge::math_error);
    // x^2 is a constant multiple of 1 on every orbit: singular eigen-matrix
    CHECK_THROWS_AS(ReflectedGraphGerm::create(G, sy, {one, sx * sx, sy, sx * sy}),
                    germforge::math_error);
}
