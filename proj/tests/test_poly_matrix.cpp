#include <doctest.h>

#include "germforge/errors.hpp"
#include "germforge/poly_matrix.hpp"

#include <random>

using germforge::CyclotomicNumber;
using germforge::Polynomial;
using germforge::PolyMatrix;

namespace {
const std::vector<std::string> AB{"a", "b", "c", "d"};
const std::vector<std::string> XY{"x", "y"};

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2), nterms(1, 3);
    Polynomial p = Polynomial::zero(XY);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int c = coeff(rng);
        if (c == 0) continue;
        p += Polynomial::from_exponents(XY, {expo(rng), expo(rng)}, CyclotomicNumber(c));
    }
    return p;
}
}

TEST_CASE("2x2 adjugate swaps the diagonal") {
    PolyMatrix m(2, 2, AB);
    m.set(0, 0, Polynomial::variable(AB, "a"));
    m.set(0, 1, Polynomial::variable(AB, "b"));
    m.set(1, 0, Polynomial::variable(AB, "c"));
    m.set(1, 1, Polynomial::variable(AB, "d"));
    PolyMatrix adj = m.adjugate();
    CHECK(adj.at(0, 0) == Polynomial::variable(AB, "d"));
    CHECK(adj.at(0, 1) == -Polynomial::variable(AB, "b"));
    CHECK(adj.at(1, 0) == -Polynomial::variable(AB, "c"));
    CHECK(adj.at(1, 1) == Polynomial::variable(AB, "a"));
    Polynomial det = m.determinant();
    CHECK(det == Polynomial::variable(AB, "a") * Polynomial::variable(AB, "d") -
                     Polynomial::variable(AB, "b") * Polynomial::variable(AB, "c"));
}

TEST_CASE("identity determinants and adjugates") {
    CHECK(PolyMatrix::identity(3, XY).determinant() ==
          Polynomial::constant(XY, CyclotomicNumber(1)));
    CHECK(PolyMatrix::identity(4, XY).adjugate() == PolyMatrix::identity(4, XY));
    CHECK(PolyMatrix::identity(5, XY).determinant(PolyMatrix::DetAlgorithm::bareiss) ==
          Polynomial::constant(XY, CyclotomicNumber(1)));
}

TEST_CASE("adjugate identity on random 3x3 matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        PolyMatrix m(3, 3, XY);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.set(i, j, random_poly(rng));
        PolyMatrix prod = m * m.adjugate();
        PolyMatrix expected = PolyMatrix::identity(3, XY).scaled(m.determinant());
        CHECK(prod == expected);
    }
}

TEST_CASE("bareiss and cofactor determinants agree on random 4x4") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        PolyMatrix m(4, 4, XY);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.set(i, j, random_poly(rng));
        CHECK(m.determinant(PolyMatrix::DetAlgorithm::cofactor) ==
              m.determinant(PolyMatrix::DetAlgorithm::bareiss));
    }
}

TEST_CASE("bareiss handles zero pivots") {
    PolyMatrix m(5, 5, XY);
    Polynomial x = Polynomial::variable(XY, "x"), y = Polynomial::variable(XY, "y");
    for (int i = 0; i < 5; ++i) m.set(i, 4 - i, i % 2 ? x : y);
    Polynomial det = m.determinant(PolyMatrix::DetAlgorithm::bareiss);
    CHECK(det == y * y * y * x * x);
    PolyMatrix singular(5, 5, XY);
    for (int j = 0; j < 5; ++j) {
        singular.set(0, j, x);
        singular.set(1, j, x);
    }
    CHECK(singular.determinant(PolyMatrix::DetAlgorithm::bareiss).is_zero());
}

TEST_CASE("matrix product and substitution") {
    PolyMatrix m(2, 2, XY);
    Polynomial x = Polynomial::variable(XY, "x"), y = Polynomial::variable(XY, "y");
    m.set(0, 0, x);
    m.set(1, 1, y);
    PolyMatrix sq = m * m;
    CHECK(sq.at(0, 0) == x * x);
    CHECK(sq.at(1, 1) == y * y);
    CHECK(sq.at(0, 1).is_zero());
    PolyMatrix sub = m.substitute({{"x", y * y}}, XY);
    CHECK(sub.at(0, 0) == y * y);
}

TEST_CASE("antidiagonal 5x5 sign") {
    PolyMatrix m(5, 5, XY);
    Polynomial one = Polynomial::constant(XY, CyclotomicNumber(1));
    for (int i = 0; i < 5; ++i) m.set(i, 4 - i, one);
    CHECK(m.determinant() == one);
    PolyMatrix swapped = PolyMatrix::identity(5, XY);
    swapped.set(0, 0, Polynomial::zero(XY));
    swapped.set(1, 1, Polynomial::zero(XY));
    swapped.set(0, 1, one);
    swapped.set(1, 0, one);
    CHECK(swapped.determinant(PolyMatrix::DetAlgorithm::bareiss) == -one);
    CHECK(swapped.determinant(PolyMatrix::DetAlgorithm::cofactor) == -one);
}