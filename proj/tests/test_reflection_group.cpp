#include <doctest.h>

#include <cstdlib>

#include "germforge/errors.hpp"
#include "germforge/reflection_group.hpp"

using germforge::CycloMatrix;
using germforge::CyclotomicNumber;
using germforge::Polynomial;
using germforge::ReflectionGroup;

namespace {
Polynomial var(const std::vector<std::string>& vars, const std::string& name) {
    return Polynomial::variable(vars, name);
}

CyclotomicNumber zeta(long m, long k = 1) { return CyclotomicNumber::root_of_unity(m, k); }

CycloMatrix diag(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return {{a, CyclotomicNumber(0)}, {CyclotomicNumber(0), b}};
}
}

TEST_CASE("product group enumeration") {
    ReflectionGroup G = ReflectionGroup::product(2, 2);
    CHECK(G.name() == "product:2x2");
    CHECK(G.dimension() == 2);
    CHECK(G.order() == 4);
    CHECK(G.source_variables() == std::vector<std::string>{"x", "y"});

    // element k is diag(zeta_2^(k mod 2), zeta_2^(k div 2))
    CHECK(G.element(1).matrix == diag(CyclotomicNumber(1), CyclotomicNumber(1)));
    CHECK(G.element(2).matrix == diag(CyclotomicNumber(-1), CyclotomicNumber(1)));
    CHECK(G.element(3).matrix == diag(CyclotomicNumber(1), CyclotomicNumber(-1)));
    CHECK(G.element(4).matrix == diag(CyclotomicNumber(-1), CyclotomicNumber(-1)));

    Polynomial x = var({"x", "y"}, "x"), y = var({"x", "y"}, "y");
    CHECK(G.orbit_map()[0] == x * x);
    CHECK(G.orbit_map()[1] == y * y);
    CHECK(G.degrees() == std::vector<long>{2, 2});
    CHECK(G.degrees_sorted(false) == std::vector<long>{2, 2});
    CHECK(G.degrees_sorted(true) == std::vector<long>{1, 2, 2});
    CHECK(G.default_basis() == std::vector<Polynomial>{x.pow(0), x, y, x * y});

    CHECK(G.reflection_ids() == std::vector<int>{2, 3});
    REQUIRE(G.hyperplanes().size() == 2);
    CHECK(G.hyperplanes()[0].form == x);
    CHECK(G.hyperplanes()[0].stabilizer_order == 2);
    CHECK(G.hyperplanes()[0].generator_index == 2);
    CHECK(G.hyperplanes()[1].form == y);
    CHECK(G.hyperplanes()[1].stabilizer_order == 2);
    CHECK(G.hyperplanes()[1].generator_index == 3);
}

TEST_CASE("cyclic group is the rank-one product") {
    ReflectionGroup G = ReflectionGroup::cyclic(4);
    CHECK(G.name() == "cyclic:4");
    CHECK(G.order() == 4);
    CHECK(G.element(2).matrix == diag(CyclotomicNumber(1), zeta(4)));
    CHECK(G.element(2).inverse == diag(CyclotomicNumber(1), zeta(4, 3)));

    Polynomial x = var({"x", "y"}, "x"), y = var({"x", "y"}, "y");
    CHECK(G.orbit_map()[0] == x);
    CHECK(G.orbit_map()[1] == y.pow(4));
    CHECK(G.degrees() == std::vector<long>{1, 4});
    CHECK(G.default_basis() == std::vector<Polynomial>{x.pow(0), y, y * y, y.pow(3)});

    // every nonidentity element fixes V(y) pointwise
    CHECK(G.reflection_ids() == std::vector<int>{2, 3, 4});
    REQUIRE(G.hyperplanes().size() == 1);
    CHECK(G.hyperplanes()[0].form == y);
    CHECK(G.hyperplanes()[0].stabilizer_order == 4);
    CHECK(G.hyperplanes()[0].generator_index == 2);

    CHECK_THROWS_AS(ReflectionGroup::cyclic(1), germforge::math_error);
}

TEST_CASE("dihedral group enumeration") {
    ReflectionGroup G = ReflectionGroup::dihedral(6);
    CHECK(G.name() == "dihedral:6");
    CHECK(G.order() == 6);

    CyclotomicNumber z = zeta(3), z2 = zeta(3, 2), zero(0), one(1);
    CHECK(G.element(2).matrix == CycloMatrix{{zero, one}, {one, zero}});
    CHECK(G.element(3).matrix == diag(z2, z));
    CHECK(G.element(4).matrix == diag(z, z2));
    CHECK(G.element(5).matrix == CycloMatrix{{zero, z}, {z2, zero}});
    CHECK(G.element(6).matrix == CycloMatrix{{zero, z2}, {z, zero}});

    Polynomial x = var({"x", "y"}, "x"), y = var({"x", "y"}, "y");
    CHECK(G.orbit_map()[0] == x.pow(3) + y.pow(3));
    CHECK(G.orbit_map()[1] == x * y);
    CHECK(G.degrees() == std::vector<long>{3, 2});
    CHECK(G.degrees_sorted(true) == std::vector<long>{1, 2, 3});
    CHECK(G.default_basis() ==
          std::vector<Polynomial>{x.pow(0), x, x * x, y, y * y, y.pow(3)});

    CHECK(G.reflection_ids() == std::vector<int>{2, 5, 6});
    REQUIRE(G.hyperplanes().size() == 3);
    CHECK(G.hyperplanes()[0].form == x - y);
    CHECK(G.hyperplanes()[1].form == x - z * y);
    CHECK(G.hyperplanes()[2].form == x - z2 * y);
    for (const auto& h : G.hyperplanes()) CHECK(h.stabilizer_order == 2);
    CHECK(G.hyperplane_of(5).form == x - z * y);
    CHECK_THROWS_AS(G.hyperplane_of(3), germforge::math_error);

    CHECK_THROWS_AS(ReflectionGroup::dihedral(5), germforge::math_error);
    CHECK_THROWS_AS(ReflectionGroup::dihedral(2), germforge::math_error);
}

TEST_CASE("stored inverses invert the matrices") {
    ReflectionGroup G = ReflectionGroup::dihedral(6);
    Polynomial p = var({"x", "y"}, "x") + var({"x", "y"}, "y") * CyclotomicNumber(2);
    for (const auto& g : G.elements()) {
        Polynomial back = germforge::apply_linear_substitution(
            g.matrix, germforge::apply_linear_substitution(g.inverse, p, G.source_variables()),
            G.source_variables());
        CHECK(back == p);
    }
}

TEST_CASE("closure of explicit generators") {
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");

    ReflectionGroup C = ReflectionGroup::generate_closure(
        {diag(CyclotomicNumber(1), zeta(4))}, {x, y.pow(4)}, {1, 4}, xy,
        {x.pow(0), y, y * y, y.pow(3)}, "file:c4");
    CHECK(C.order() == 4);
    CHECK(C.reflection_ids().size() == 3);
    CHECK(C.hyperplanes()[0].form == y);

    // scalar rotation: a perfectly good group, but not one reflections generate
    CHECK_THROWS_WITH_AS(ReflectionGroup::generate_closure(
                             {diag(zeta(3), zeta(3))}, {x.pow(3), y.pow(3)}, {3, 3},
                             xy, {}, "file:bad"),
                         "the group is not generated by reflections", germforge::math_error);

    CycloMatrix shear{{CyclotomicNumber(1), CyclotomicNumber(1)},
                      {CyclotomicNumber(0), CyclotomicNumber(1)}};
    CHECK_THROWS_AS(ReflectionGroup::generate_closure({shear}, {x, y}, {1, 1}, xy, {}, "file:s"),
                    germforge::math_error);

    setenv("GERMFORGE_ORDER_CAP", "5", 1);
    CHECK_THROWS_AS(ReflectionGroup::generate_closure(
                        {diag(CyclotomicNumber(1), zeta(12))}, {x, y.pow(12)}, {1, 12},
                        xy, {}, "file:big"),
                    germforge::resource_error);
    unsetenv("GERMFORGE_ORDER_CAP");
}

TEST_CASE("orbit map validation on user groups") {
    std::vector<std::string> xy{"x", "y"};
    Polynomial x = var(xy, "x"), y = var(xy, "y");
    CycloMatrix sx = diag(CyclotomicNumber(-1), CyclotomicNumber(1));

    // degrees must multiply to the order
    CHECK_THROWS_AS(ReflectionGroup::generate_closure({sx}, {x * x, y.pow(3)}, {2, 3}, xy,
                                                      {}, "file:deg"),
                    germforge::math_error);
    // components must be invariant
    CHECK_THROWS_AS(ReflectionGroup::generate_closure({sx}, {x * y, y}, {2, 1}, xy, {},
                                                      "file:inv"),
                    germforge::math_error);
    // a correct description passes
    ReflectionGroup G = ReflectionGroup::generate_closure({sx}, {x * x, y}, {2, 1}, xy,
                                                          {x.pow(0), x}, "file:z2");
    CHECK(G.order() == 2);
    CHECK(G.hyperplanes()[0].form == x);
}
