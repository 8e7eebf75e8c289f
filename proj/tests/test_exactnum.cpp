#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mckay/cyclo.hpp"
#include "mckay/errors.hpp"
#include "mckay/intpoly.hpp"
#include "mckay/linalg.hpp"
#include "mckay/series.hpp"

using namespace mckay;

namespace {
IntPoly P(std::vector<long> v) {
    std::vector<BigInt> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}
} // namespace

TEST_CASE("polynomial normal form and arithmetic") {
    CHECK(P({1, 0, 0}).degree() == 0);
    CHECK(IntPoly().is_zero());
    CHECK(P({0}).is_zero());
    CHECK(IntPoly::one_minus_power(3) == P({1, 0, 0, -1}));
    CHECK(IntPoly::one_minus_power(1) == P({1, -1}));
    CHECK(P({1, 1}) * P({1, -1}) == P({1, 0, -1}));
    CHECK(P({1, 2}) + P({0, -2}) == P({1}));
    CHECK(P({1, 2}) - P({1, 2}) == IntPoly());
    CHECK(BigInt(3) * P({1, 1}) == P({3, 3}));
    CHECK((-P({1, -2})) == P({-1, 2}));
    CHECK(P({0, 0, 5}).coeff(2) == 5);
    CHECK(P({0, 0, 5}).coeff(7) == 0);
}

TEST_CASE("exact division and divisibility probes") {
    // (1 - t^4) / (1 - t^2) = 1 + t^2
    CHECK(poly_divexact(IntPoly::one_minus_power(4), IntPoly::one_minus_power(2)) ==
          P({1, 0, 1}));
    // 1 - t^3 is not divisible by 1 - t^2
    CHECK_THROWS_AS(poly_divexact(IntPoly::one_minus_power(3), IntPoly::one_minus_power(2)),
                    identity_error);
    CHECK(poly_divides(IntPoly::one_minus_power(2), IntPoly::one_minus_power(4)));
    CHECK(!poly_divides(IntPoly::one_minus_power(2), IntPoly::one_minus_power(3)));
    // division is inverse to multiplication
    IntPoly a = P({2, -1, 3});
    IntPoly b = P({1, 0, 0, 4});
    CHECK(poly_divexact(a * b, b) == a);
}

TEST_CASE("polynomial gcd and content") {
    CHECK(poly_gcd(IntPoly::one_minus_power(4), IntPoly::one_minus_power(6)) ==
          P({-1, 0, 1})); // primitive, positive leading coefficient
    CHECK(poly_gcd(IntPoly(), P({0, 2})) == P({0, 1}));
    CHECK(poly_content(P({6, -9, 12})) == 3);
    CHECK(poly_content(IntPoly()) == 0);
}

TEST_CASE("polynomial printing") {
    CHECK(poly_to_string(P({1, 0, -2, 0, 1})) == "1 - 2*t^2 + t^4");
    CHECK(poly_to_string(P({0, 1})) == "t");
    CHECK(poly_to_string(IntPoly()) == "0");
    CHECK(poly_to_string(P({-1, -1})) == "-1 - t");
}

TEST_CASE("series expansion") {
    // 1/(1-t): all-ones
    RationalSeries geo(IntPoly::constant(1), IntPoly::one_minus_power(1));
    auto g = geo.expand_int(3);
    CHECK(g == std::vector<BigInt>{1, 1, 1, 1});

    // (1+t^2)/(1-t^2)^2 = sum (k+1) t^{2k}
    RationalSeries s(P({1, 0, 1}),
                     IntPoly::one_minus_power(2) * IntPoly::one_minus_power(2));
    CHECK(s.expand_int(4) == std::vector<BigInt>{1, 0, 3, 0, 5});

    // (1-t)/(1-t) = 1 even without cancellation
    RationalSeries one(IntPoly::one_minus_power(1), IntPoly::one_minus_power(1));
    CHECK(one.expand_int(2) == std::vector<BigInt>{1, 0, 0});

    // den(0) = 0 is rejected
    CHECK_THROWS_AS(RationalSeries(IntPoly::constant(1), P({0, 1})), input_error);
}

TEST_CASE("series equality and reduction") {
    RationalSeries a(P({1, 0, 1}),
                     IntPoly::one_minus_power(2) * IntPoly::one_minus_power(2));
    // same function written with an extra common factor (1 - t^3)
    RationalSeries b(P({1, 0, 1}) * IntPoly::one_minus_power(3),
                     IntPoly::one_minus_power(2) * IntPoly::one_minus_power(2) *
                         IntPoly::one_minus_power(3));
    CHECK(a.same_function(b));
    CHECK(b.reduced().num == a.reduced().num);
    CHECK(b.reduced().den == a.reduced().den);
    RationalSeries c(P({1}), IntPoly::one_minus_power(1));
    CHECK(!a.same_function(c));

    // sum: 1/(1-t) + 1/(1+t) = 2/(1-t^2)
    RationalSeries half1(IntPoly::constant(1), P({1, -1}));
    RationalSeries half2(IntPoly::constant(1), P({1, 1}));
    CHECK((half1 + half2).same_function(
        RationalSeries(IntPoly::constant(2), IntPoly::one_minus_power(2))));
}

TEST_CASE("cyclotomic basics") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(20) == 8);
    // Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<BigInt>{1, 1, 1, 1, 1});

    CycloNum i = CycloNum::zeta(4);
    CHECK(i * i == CycloNum(Rational(-1)));
    CHECK((i * i).is_rational()); // collapses to conductor 1
    CHECK((i * i).conductor() == 1);

    // sum of the primitive 5th roots of unity = -1 (Phi_5 relation)
    CycloNum s;
    for (long k = 1; k <= 4; ++k) s = s + CycloNum::zeta(5, k);
    CHECK(s == CycloNum(Rational(-1)));

    // (1 + z8)/(1 + z8) = 1
    CycloNum u = CycloNum(Rational(1)) + CycloNum::zeta(8);
    CHECK(u / u == CycloNum(Rational(1)));

    // zeta_4 as an element of Q(zeta_12): z12^3
    CHECK(CycloNum::zeta(4) == CycloNum::zeta(12, 3));
    CHECK(CycloNum::zeta(4).key_at(12) == CycloNum::zeta(12, 3).key_at(12));
    // zeta_2 = -1 collapses to the rationals
    CHECK(CycloNum::zeta(2) == CycloNum(Rational(-1)));
    CHECK(CycloNum::zeta(2).conductor() == 1);
}

TEST_CASE("cyclotomic field axioms across the conductors in use") {
    for (int m : {4, 5, 8, 12, 20}) {
        CycloNum z = CycloNum::zeta(m);
        CycloNum a = z + CycloNum(Rational(2));
        CycloNum b = z * z - CycloNum(Rational(1, 3));
        CycloNum c = CycloNum::zeta(m, m - 1) + CycloNum(Rational(1));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == CycloNum());
        if (!b.is_zero()) {
            CHECK(b * b.inverse() == CycloNum(Rational(1)));
            CHECK((a / b) * b == a);
        }
        // z^m = 1
        CycloNum p(Rational(1));
        for (int k = 0; k < m; ++k) p = p * z;
        CHECK(p == CycloNum(Rational(1)));
        // conjugation is a ring map and fixes norms into the reals
        CHECK(a.conj() * b.conj() == (a * b).conj());
        CycloNum norm = a * a.conj();
        CHECK(norm == norm.conj());
    }
}

TEST_CASE("cyclotomic conjugation and traces") {
    CHECK(CycloNum::zeta(5).conj() == CycloNum::zeta(5, 4));
    // trace of zeta_8 over Q: sum over the Galois orbit is rational
    CycloNum tr;
    for (long j : {1, 3, 5, 7}) tr = tr + CycloNum::zeta(8).galois(j);
    CHECK(tr == CycloNum());
    CHECK(CycloNum::zeta(8).galois(3) == CycloNum::zeta(8, 3));
    CHECK_THROWS_AS(CycloNum::zeta(8).galois(2), internal_error);
    CHECK_THROWS_AS(CycloNum().inverse(), input_error);
}

TEST_CASE("golden ratio inside Q(zeta_5)") {
    // (1 + sqrt 5)/2 = -z5^2 - z5^3
    CycloNum phi = -(CycloNum::zeta(5, 2) + CycloNum::zeta(5, 3));
    CHECK(phi * phi == phi + CycloNum(Rational(1)));
    CHECK(!phi.is_rational());
    CHECK(phi.conj() == phi); // real number
}

TEST_CASE("exact linear algebra") {
    QMat a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    QVec x = solve_unique(a, {Rational(5), Rational(10)});
    CHECK(x == QVec{Rational(1), Rational(3)});
    QMat inv = q_inverse(a);
    CHECK(q_mul(a, inv) == q_identity(2));
    CHECK_THROWS_AS(solve_unique(QMat{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                                 QVec{Rational(0), Rational(0)}),
                    internal_error);

    // kernel of the 2x2 matrix [[2,-2],[-2,2]] is spanned by (1,1)
    QMat k = {{Rational(2), Rational(-2)}, {Rational(-2), Rational(2)}};
    auto basis = nullspace(k);
    CHECK(basis.size() == 1);
    CHECK(primitive_integer(basis[0]) == ZVec{1, 1});

    CHECK(primitive_integer(QVec{Rational(-1, 2), Rational(-3, 2)}) == ZVec{1, 3});
    CHECK_THROWS_AS(primitive_integer(QVec{Rational(0), Rational(0)}), internal_error);

    ZMat rot = {{0, -1}, {1, 0}};
    CHECK(matrix_order(rot) == 4);
    CHECK(matrix_order(z_identity(3)) == 1);
    ZMat shear = {{1, 1}, {0, 1}};
    CHECK_THROWS_AS(matrix_order(shear, 50), internal_error);

    CHECK(z_matvec(rot, ZVec{2, 5}) == ZVec{-5, 2});
    CHECK(z_transpose(rot) == ZMat{{0, 1}, {-1, 0}});
}
