#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mckay/errors.hpp"
#include "mckay/kostant.hpp"

using namespace mckay;

namespace {

McKayQuiver make(const std::string& name, QuiverMode mode) {
    PreparedInput in(parse_input(name));
    return build_quiver(in, mode);
}

McKayQuiver make(const std::string& name) {
    InputSpec spec = parse_input(name);
    PreparedInput in(spec);
    return build_quiver(in, default_mode(spec));
}

// dimension bookkeeping at every k: sum_i x_k[i] * label_i = k + 1
void check_bookkeeping(const McKayQuiver& q, const std::vector<ZVec>& x) {
    for (size_t k = 0; k < x.size(); ++k) {
        BigInt total = 0;
        for (int i = 0; i < q.size(); ++i) total += x[k][i] * q.labels[i];
        CHECK(total == BigInt(k + 1));
    }
}

} // namespace

TEST_CASE("smallest quiver: frozen multiplicity vectors") {
    McKayQuiver q = make("C2");
    std::vector<ZVec> x = xk_recursive(q, 4);
    CHECK(x[0] == ZVec{1, 0});
    CHECK(x[1] == ZVec{0, 2});
    CHECK(x[2] == ZVec{3, 0});
    CHECK(x[3] == ZVec{0, 4});
    CHECK(x[4] == ZVec{5, 0});
    check_bookkeeping(q, x);

    CoxeterData cd = build_coxeter(q);
    CHECK(xk_binomial(q, 4) == x);
    CHECK(xk_character(q, 4) == x);
    CHECK(xk_orbit(q, cd, 4) == x);
    CHECK(xk_theorem(q, cd, 4) == x);
}

TEST_CASE("restricted double-bond quiver: frozen vectors, orbit methods refuse") {
    McKayQuiver q = make("C2<D2", QuiverMode::restricted);
    std::vector<ZVec> x = xk_recursive(q, 4);
    CHECK(x[0] == ZVec{1, 0});
    CHECK(x[1] == ZVec{0, 1});
    CHECK(x[2] == ZVec{3, 0});
    CHECK(x[3] == ZVec{0, 2});
    CHECK(x[4] == ZVec{5, 0});
    check_bookkeeping(q, x);
    CHECK(xk_binomial(q, 4) == x);
    CHECK(xk_character(q, 4) == x);

    CoxeterData cd = build_coxeter(q);
    CHECK_THROWS_AS(xk_orbit(q, cd, 4), input_error);
    CHECK_THROWS_AS(xk_theorem(q, cd, 4), input_error);
    CHECK_THROWS_AS(genfunc_series(q, cd), input_error);
}

TEST_CASE("induced orbit quiver: frozen vectors") {
    McKayQuiver q = make("C4<D2", QuiverMode::induced);
    CHECK(q.type.name == "C2^(1)");
    std::vector<ZVec> x = xk_recursive(q, 4);
    CHECK(x[0] == ZVec{1, 0, 0});
    CHECK(x[1] == ZVec{0, 0, 2});
    CHECK(x[2] == ZVec{1, 2, 0});
    CHECK(x[3] == ZVec{0, 0, 4});
    CHECK(x[4] == ZVec{3, 2, 0});
    check_bookkeeping(q, x);
    CHECK(xk_character(q, 4) == x);
}

TEST_CASE("all five routes agree through twice the Coxeter number") {
    for (auto [name, mode] : {std::pair<const char*, QuiverMode>{"C4", QuiverMode::irreducible},
                              {"D2", QuiverMode::irreducible},
                              {"T", QuiverMode::irreducible},
                              {"T<O", QuiverMode::induced},
                              {"D2<T", QuiverMode::induced},
                              {"C4<D2", QuiverMode::restricted}}) {
        CAPTURE(name);
        McKayQuiver q = make(name, mode);
        CoxeterData cd = build_coxeter(q);
        REQUIRE(cd.orbit_ok);
        int K = (int)(2 * cd.h);
        std::vector<ZVec> x = xk_recursive(q, K);
        CHECK(xk_binomial(q, K) == x);
        CHECK(xk_character(q, K) == x);
        CHECK(xk_orbit(q, cd, K) == x);
        CHECK(xk_theorem(q, cd, K) == x);
        check_bookkeeping(q, x);
    }
}

TEST_CASE("odd cycle still has the non-orbit routes") {
    McKayQuiver q = make("C5");
    std::vector<ZVec> x = xk_recursive(q, 20);
    CHECK(xk_binomial(q, 20) == x);
    CHECK(xk_character(q, 20) == x);
    check_bookkeeping(q, x);

    CoxeterData cd = build_coxeter(q);
    CHECK_THROWS_WITH_AS(xk_orbit(q, cd, 4),
                         "orbit formulas unsupported for this type (odd cycle)", input_error);
}

TEST_CASE("parity vanishing of the multiplicity vectors") {
    // nodes alternate with k: a coordinate vanishes when its part and k have
    // opposite parity
    for (auto [name, mode] : {std::pair<const char*, QuiverMode>{"C4", QuiverMode::irreducible},
                              {"T", QuiverMode::irreducible},
                              {"T<O", QuiverMode::restricted}}) {
        CAPTURE(name);
        McKayQuiver q = make(name, mode);
        CoxeterData cd = build_coxeter(q);
        REQUIRE(cd.bipartite);
        std::vector<ZVec> x = xk_recursive(q, 40);
        for (int k = 0; k <= 40; ++k)
            for (int i = 0; i < q.size(); ++i)
                if ((cd.part[i] + k) % 2 == 1) CHECK(x[k][i] == 0);
    }
}

TEST_CASE("Molien series: frozen affine-node forms and totals") {
    McKayQuiver q = make("C2");
    std::vector<RationalSeries> mol = molien_series(q);
    RationalSeries expect{IntPoly({1, 0, 1}), IntPoly({1, 0, -2, 0, 1})}; // (1+t^2)/(1-t^2)^2
    CHECK(mol[0].same_function(expect));
    CHECK(mol[0].expand_int(4) == std::vector<BigInt>{1, 0, 3, 0, 5});

    // sign node of the same quiver: t-odd multiplicities 2, 4, 6, ...
    CHECK(mol[1].expand_int(5) == std::vector<BigInt>{0, 2, 0, 4, 0, 6});

    McKayQuiver qi = make("I");
    CoxeterData cdi = build_coxeter(qi);
    std::vector<RationalSeries> moli = molien_series(qi);
    CHECK(moli[0].same_function(node0_series(cdi)));
    CHECK(node0_series(cdi).num == IntPoly::monomial(1, 30) + IntPoly::constant(1));
    CHECK(node0_series(cdi).den ==
          IntPoly::one_minus_power(12) * IntPoly::one_minus_power(20));
}

TEST_CASE("Molien totals sum to the full dimension series") {
    RationalSeries full{IntPoly({1}), IntPoly({1, -2, 1})}; // 1/(1-t)^2
    for (auto [name, mode] : {std::pair<const char*, QuiverMode>{"C2", QuiverMode::irreducible},
                              {"C5", QuiverMode::irreducible},
                              {"T", QuiverMode::irreducible},
                              {"C4<D2", QuiverMode::induced},
                              {"C2<D2", QuiverMode::restricted},
                              {"D2<T", QuiverMode::restricted}}) {
        CAPTURE(name);
        McKayQuiver q = make(name, mode);
        std::vector<RationalSeries> mol = molien_series(q);
        RationalSeries total;
        for (int i = 0; i < q.size(); ++i) total = total + q.labels[i] * mol[i];
        CHECK(total.same_function(full));
    }
}

TEST_CASE("Molien agrees with the character route in every mode") {
    for (auto [name, mode] : {std::pair<const char*, QuiverMode>{"C4", QuiverMode::irreducible},
                              {"C5", QuiverMode::irreducible},
                              {"C4<D4", QuiverMode::restricted},
                              {"C4<D2", QuiverMode::induced}}) {
        CAPTURE(name);
        McKayQuiver q = make(name, mode);
        std::vector<RationalSeries> mol = molien_series(q);
        int K = 25;
        std::vector<ZVec> x = xk_character(q, K);
        for (int i = 0; i < q.size(); ++i) {
            std::vector<BigInt> coeffs = mol[i].expand_int(K);
            for (int k = 0; k <= K; ++k) CHECK(coeffs[k] == x[k][i]);
        }
    }
}

TEST_CASE("z-increment generating functions expand to the vectors") {
    for (auto [name, mode] : {std::pair<const char*, QuiverMode>{"C2", QuiverMode::irreducible},
                              {"C4", QuiverMode::irreducible},
                              {"T", QuiverMode::irreducible},
                              {"T<O", QuiverMode::induced}}) {
        CAPTURE(name);
        McKayQuiver q = make(name, mode);
        CoxeterData cd = build_coxeter(q);
        REQUIRE(cd.orbit_ok);
        check_genfunc(q, cd, (int)(3 * cd.h));
        // the z-form and the Molien form are the same rational function
        std::vector<RationalSeries> gf = genfunc_series(q, cd);
        std::vector<RationalSeries> mol = molien_series(q);
        for (int i = 0; i < q.size(); ++i) CHECK(gf[i].same_function(mol[i]));
    }
}
