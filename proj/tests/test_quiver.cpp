#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mckay/dynkin.hpp"
#include "mckay/errors.hpp"
#include "mckay/quiver.hpp"

using namespace mckay;

TEST_CASE("affine catalog entries are consistent") {
    for (const AffineType& t : affine_catalog()) {
        size_t n = t.cartan.size();
        CHECK(t.marks.size() == n);
        CHECK(t.labels.size() == n);
        // kernels: C m = 0 and C^T l = 0
        CHECK(z_matvec(t.cartan, t.marks) == ZVec(n, BigInt(0)));
        CHECK(z_matvec(z_transpose(t.cartan), t.labels) == ZVec(n, BigInt(0)));
        for (size_t i = 0; i < n; ++i) {
            CHECK(t.cartan[i][i] == 2);
            for (size_t j = 0; j < n; ++j)
                if (i != j) {
                    CHECK(t.cartan[i][j] <= 0);
                    // off-diagonal zeros come in pairs
                    CHECK((t.cartan[i][j] == 0) == (t.cartan[j][i] == 0));
                }
        }
    }
    CHECK(affine_type_by_name("E8^(1)").coxeter_number == 30);
    CHECK(affine_type_by_name("A2^(2)").cartan == ZMat{{2, -4}, {-1, 2}});
    CHECK(affine_type_by_name("A2^(2)").labels == ZVec{1, 2});
    CHECK(affine_type_by_name("G2^(1)").labels == ZVec{1, 2, 1});
    CHECK(affine_type_by_name("D4^(3)").labels == ZVec{1, 2, 3});
    CHECK(affine_type_by_name("F4^(1)").marks == ZVec{1, 2, 3, 4, 2});
    CHECK_THROWS_AS(affine_type_by_name("Z9^(1)"), input_error);
}

TEST_CASE("type detection on permuted catalog matrices") {
    // shuffle nodes of E6^(1) deterministically and expect recovery
    const AffineType& e6 = affine_type_by_name("E6^(1)");
    size_t n = e6.cartan.size();
    std::vector<int> sigma = {3, 0, 5, 1, 6, 2, 4}; // node i -> sigma[i]
    ZMat c(n, ZVec(n));
    ZVec lab(n);
    for (size_t i = 0; i < n; ++i) {
        lab[sigma[i]] = e6.labels[i];
        for (size_t j = 0; j < n; ++j) c[sigma[i]][sigma[j]] = e6.cartan[i][j];
    }
    TypeMatch m = detect_type(c, lab);
    CHECK(m.name == "E6^(1)");
    // the permutation must transport the shuffled matrix onto the canonical one
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            CHECK(c[i][j] == e6.cartan[m.to_canonical[i]][m.to_canonical[j]]);

    // a non-affine matrix is rejected
    CHECK_THROWS_AS(detect_type(ZMat{{2, -1}, {-1, 2}}, ZVec{1, 1}), input_error);
}

TEST_CASE("input parsing") {
    CHECK(parse_input("C2").text == "C2");
    CHECK_FALSE(parse_input("I").is_pair);
    CHECK(parse_input("C2<D2").is_pair);
    CHECK(parse_input("C4<D2").text == "C4<D2");
    CHECK(parse_input("D2<D4").is_pair);
    CHECK(parse_input("T<O").is_pair);
    CHECK(parse_input("D2<T").is_pair);
    CHECK_THROWS_AS(parse_input("C3<T"), input_error);   // not in the catalog
    CHECK_THROWS_AS(parse_input("C3<D3"), input_error);  // odd cyclic in dihedral
    CHECK_THROWS_AS(parse_input("O<I"), input_error);
    CHECK_THROWS_AS(parse_input("C2<C2"), input_error);
    CHECK_THROWS_AS(parse_input("bogus"), input_error);
    CHECK(default_mode(parse_input("C2")) == QuiverMode::irreducible);
    CHECK(default_mode(parse_input("C2<D2")) == QuiverMode::restricted);
}

TEST_CASE("N = G quiver of C2") {
    PreparedInput in(parse_input("C2"));
    McKayQuiver q = build_quiver(in, QuiverMode::irreducible);
    CHECK(q.size() == 2);
    CHECK(q.adjacency == ZMat{{0, 2}, {2, 0}});
    CHECK(q.cartan == ZMat{{2, -2}, {-2, 2}});
    CHECK(q.labels == ZVec{1, 1});
    CHECK(q.marks == ZVec{1, 1});
    CHECK(q.type.name == "A1^(1)");
    CHECK_THROWS_AS(build_quiver(in, QuiverMode::restricted), input_error);
    CHECK_THROWS_AS(build_quiver(in, QuiverMode::induced), input_error);
}

TEST_CASE("restricted quiver of C2 in D2") {
    PreparedInput in(parse_input("C2<D2"));
    McKayQuiver q = build_quiver(in, QuiverMode::restricted);
    CHECK(q.size() == 2);
    CHECK(q.adjacency == ZMat{{0, 1}, {4, 0}});
    CHECK(q.cartan == ZMat{{2, -4}, {-1, 2}});
    CHECK(q.labels == ZVec{1, 2});
    CHECK(q.marks == ZVec{2, 1});
    CHECK(q.type.name == "A2^(2)");
    CHECK_THROWS_AS(build_quiver(in, QuiverMode::irreducible), input_error);
}

TEST_CASE("induced quiver of C2 in D2") {
    PreparedInput in(parse_input("C2<D2"));
    McKayQuiver q = build_quiver(in, QuiverMode::induced);
    CHECK(q.size() == 2);
    CHECK(q.adjacency == ZMat{{0, 2}, {2, 0}});
    CHECK(q.type.name == "A1^(1)");
    CHECK(q.labels == ZVec{1, 1});
}

TEST_CASE("induced quiver of C4 in D2") {
    PreparedInput in(parse_input("C4<D2"));
    McKayQuiver q = build_quiver(in, QuiverMode::induced);
    REQUIRE(q.size() == 3);
    CHECK(q.type.name == "C2^(1)");
    CHECK(q.labels == ZVec{1, 1, 1});
    // trivial node maps onto the canonical affine node
    CHECK(q.type.to_canonical[0] == 0);
    // canonical marks of C2^(1) are (1,2,1)
    CHECK(q.to_canonical(q.marks) == ZVec{1, 2, 1});

    McKayQuiver r = build_quiver(in, QuiverMode::restricted);
    CHECK(r.type.name == "D3^(2)");
    CHECK(r.to_canonical(r.labels) == ZVec{1, 2, 1});
    CHECK(r.marks == ZVec{1, 1, 1});
}

TEST_CASE("the five single-group families") {
    CHECK(build_quiver(PreparedInput(parse_input("C4")), QuiverMode::irreducible).type.name ==
          "A3^(1)");
    CHECK(build_quiver(PreparedInput(parse_input("D2")), QuiverMode::irreducible).type.name ==
          "D4^(1)");
    CHECK(build_quiver(PreparedInput(parse_input("T")), QuiverMode::irreducible).type.name ==
          "E6^(1)");
    CHECK(build_quiver(PreparedInput(parse_input("O")), QuiverMode::irreducible).type.name ==
          "E7^(1)");
    McKayQuiver e8 = build_quiver(PreparedInput(parse_input("I")), QuiverMode::irreducible);
    CHECK(e8.type.name == "E8^(1)");
    // Kac labels of E8 are the irreducible dimensions
    CHECK(e8.labels == ZVec{1, 2, 2, 3, 3, 4, 4, 5, 6});
    CHECK(e8.marks == e8.labels); // simply laced: marks equal labels
}

TEST_CASE("odd cyclic quivers still build (gating happens later)") {
    McKayQuiver q = build_quiver(PreparedInput(parse_input("C5")), QuiverMode::irreducible);
    CHECK(q.type.name == "A4^(1)");
    CHECK(q.labels == ZVec(5, BigInt(1)));
}

TEST_CASE("C1 is rejected: its diagram has a self-loop") {
    CHECK_THROWS_AS(build_quiver(PreparedInput(parse_input("C1")), QuiverMode::irreducible),
                    input_error);
}

TEST_CASE("restricted and induced types across the pair catalog") {
    auto rtype = [](const std::string& s) {
        return build_quiver(PreparedInput(parse_input(s)), QuiverMode::restricted).type.name;
    };
    auto itype = [](const std::string& s) {
        return build_quiver(PreparedInput(parse_input(s)), QuiverMode::induced).type.name;
    };
    CHECK(rtype("D2<D4") == "A5^(2)");
    CHECK(itype("D2<D4") == "B3^(1)");
    CHECK(rtype("C6<D3") == "D4^(2)");
    CHECK(itype("C6<D3") == "C3^(1)");
    CHECK(rtype("C4<D4") == "A4^(2)");
    CHECK(itype("C4<D4") == "C2^(1)");
    CHECK(rtype("T<O") == "E6^(2)");
    CHECK(itype("T<O") == "F4^(1)");
    CHECK(rtype("D2<T") == "D4^(3)");
    CHECK(itype("D2<T") == "G2^(1)");
}
