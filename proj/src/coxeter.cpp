#include "mckay/coxeter.hpp"

#include <queue>

#include "mckay/errors.hpp"

namespace mckay {

ZMat simple_reflection(const ZMat& cartan, int i) {
    int n = (int)cartan.size();
    ZMat s = z_identity(n);
    for (int j = 0; j < n; ++j) s[i][j] -= cartan[i][j];
    return s;
}

namespace {

// Two-color the diagram underlying the Cartan matrix, forcing node 0 into
// part 2 so that the affine reflection s0 always sits outside C = C2 C1.
bool two_color(const ZMat& cartan, std::vector<int>& part) {
    int n = (int)cartan.size();
    part.assign(n, 0);
    part[0] = 2;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w = 0; w < n; ++w) {
            if (w == v || cartan[v][w] == 0) continue;
            if (part[w] == 0) {
                part[w] = 3 - part[v];
                bfs.push(w);
            } else if (part[w] == part[v]) {
                return false; // adjacent nodes in the same part: odd cycle
            }
        }
    }
    // affine diagrams are connected, so the BFS reaches every node
    for (int v = 0; v < n; ++v)
        if (part[v] == 0) throw internal_error("coxeter: diagram is disconnected");
    return true;
}

ZVec e0_vec(int n) {
    ZVec e(n, 0);
    e[0] = 1;
    return e;
}

} // namespace

CoxeterData build_coxeter(const McKayQuiver& q) {
    CoxeterData cd;
    int n = q.size();

    if (!two_color(q.cartan, cd.part)) {
        cd.bipartite = false;
        cd.skip_reason = "odd cycle";
        return cd;
    }
    cd.bipartite = true;

    // reflections within one part commute (no edges inside a part), so the
    // product order is immaterial
    cd.c1 = z_identity(n);
    cd.c2 = z_identity(n);
    for (int i = 0; i < n; ++i) {
        if (cd.part[i] == 1) cd.c1 = z_mul(simple_reflection(q.cartan, i), cd.c1);
        if (cd.part[i] == 2 && i != 0) cd.c2 = z_mul(simple_reflection(q.cartan, i), cd.c2);
    }
    cd.cox = z_mul(cd.c2, cd.c1);
    ZMat s0 = simple_reflection(q.cartan, 0);
    cd.cox_affine = z_mul(s0, cd.cox);
    cd.cox_affine_inv = z_mul(cd.c1, z_mul(cd.c2, s0));
    cd.h = matrix_order(cd.cox);

    // alternating partial products C^(k), never touching s0
    cd.ck.resize(2 * cd.h + 2);
    cd.ck[0] = z_identity(n);
    for (long k = 1; k < (long)cd.ck.size(); ++k)
        cd.ck[k] = z_mul(k % 2 == 1 ? cd.c1 : cd.c2, cd.ck[k - 1]);

    // one period of the a-sequence, pairing row 0 of the Cartan matrix with
    // the Coxeter orbit of alpha_0
    cd.a.assign(cd.h, 0);
    cd.a[0] = 1;
    ZVec orbit = e0_vec(n);
    for (long s = 1; s < cd.h; ++s) {
        orbit = z_matvec(cd.cox, orbit);
        BigInt val = 0;
        for (int l = 0; l < n; ++l) val += q.cartan[0][l] * orbit[l];
        cd.a[s] = to_i64(val, "a-sequence entry");
    }

    // exponents: the invariant ring of N is generated in degrees exp_a and
    // exp_b, with exp_a twice the largest irreducible dimension of N
    BigInt maxdim = 0;
    for (const auto& d : q.ntable.dims())
        if (d > maxdim) maxdim = d;
    cd.exp_a = 2 * to_i64(maxdim, "largest irreducible dimension");
    cd.exp_b = cd.h + 2 - cd.exp_a;

    if (cd.h % 2 == 0) {
        cd.half = cd.h / 2;
        cd.c.assign(cd.half + 1, 0);
        cd.c[0] = 1;
        for (long i = 1; i < cd.half; ++i) cd.c[i] = cd.a[i];
        cd.c[cd.half] = -1;
    }

    // orbit-formula gate
    if (q.marks[0] != 1) {
        cd.orbit_skip_reason = "affine mark 2 at the trivial node";
        return cd;
    }
    cd.psi.assign(n, 0);
    for (int i = 1; i < n; ++i) cd.psi[i] = q.marks[i];
    if (cd.h % 2 != 0) {
        cd.orbit_skip_reason = "odd Coxeter number";
        return cd;
    }
    ZVec closure = z_matvec(cd.ck[cd.h], e0_vec(n));
    for (int i = 0; i < n; ++i) closure[i] -= 2 * cd.psi[i];
    if (closure != e0_vec(n)) {
        cd.orbit_skip_reason = "orbit of the affine root does not close";
        return cd;
    }
    cd.orbit_ok = true;

    // z-polynomials: increments of the alternating orbit of alpha_0, with
    // both endpoints pinned to alpha_0 itself
    cd.z.assign(cd.h + 1, ZVec(n, 0));
    cd.z[0] = e0_vec(n);
    cd.z[cd.h] = e0_vec(n);
    ZVec prev = e0_vec(n);
    for (long k = 1; k < cd.h; ++k) {
        ZVec cur = z_matvec(cd.ck[k], e0_vec(n));
        for (int i = 0; i < n; ++i) cd.z[k][i] = cur[i] - prev[i];
        prev = cur;
    }

    // the middle increment singles out one node with coefficient 2
    const ZVec& mid = cd.z[cd.half];
    for (int i = 0; i < n; ++i) {
        if (mid[i] == 0) continue;
        if (mid[i] == 2 && cd.istar < 0) {
            cd.istar = i;
        } else {
            cd.istar = -1;
            break;
        }
    }
    return cd;
}

long a_ext(const CoxeterData& cd, long s) {
    if (s == 0) return 1;
    if (s % cd.h == 0) return 2;
    return cd.a[s % cd.h];
}

std::vector<BigInt> b_seq(const CoxeterData& cd, int K) {
    std::vector<BigInt> b(K + 1);
    b[0] = 1;
    for (int s = 1; s <= K; ++s) {
        BigInt acc = 0;
        for (int j = 0; j < s; ++j) acc += b[j] * a_ext(cd, s - j);
        b[s] = -acc;
    }
    return b;
}

RationalSeries a_series(const CoxeterData& cd) {
    std::vector<BigInt> num(cd.h + 1, 0);
    for (long i = 0; i < cd.h; ++i) num[i] = cd.a[i];
    num[cd.h] = 1;
    return RationalSeries{IntPoly(std::move(num)), IntPoly::one_minus_power((int)cd.h)};
}

RationalSeries b_series(const CoxeterData& cd) {
    RationalSeries a = a_series(cd);
    return RationalSeries{a.den, a.num}; // a(0) = 1, so the flip is legal
}

IntPoly c_increment_poly(const CoxeterData& cd) {
    if (cd.h % 2 != 0) throw internal_error("c-sequence needs an even Coxeter number");
    auto cval = [&](long i) -> BigInt {
        if (i < 0 || i > cd.half) return 0;
        return cd.c[i];
    };
    std::vector<BigInt> coeffs(2 * (cd.half + 1) + 1, 0);
    for (long i = 0; i <= cd.half + 1; ++i) coeffs[2 * i] = cval(i) - cval(i - 1);
    return IntPoly(std::move(coeffs));
}

IntPoly exponents_denominator(const CoxeterData& cd) {
    return IntPoly::one_minus_power((int)cd.exp_a) * IntPoly::one_minus_power((int)cd.exp_b);
}

} // namespace mckay
