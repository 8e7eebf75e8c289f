#include "mckay/kostant.hpp"

#include <string>

#include "mckay/character.hpp"
#include "mckay/errors.hpp"

namespace mckay {

namespace {

ZVec e0_vec(int n) {
    ZVec e(n, 0);
    e[0] = 1;
    return e;
}

BigInt binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is binom(n-k+i, i)
    }
    return r;
}

// Translate a multiplicity vector over Irr(N) into node coordinates.
// Irreducible nodes are the irreducibles themselves; induced nodes collect
// their orbit (R has 0/1 rows); restricted nodes need the least-squares
// solve x = (R R^T)^{-1} R m, which is exact because m lies in the row span.
struct ModeMapper {
    const McKayQuiver& q;
    QMat RT;      // R^T
    QMat gram_inv; // (R R^T)^{-1}, restricted mode only

    explicit ModeMapper(const McKayQuiver& qq) : q(qq), RT(q_transpose(qq.R)) {
        if (q.mode == QuiverMode::restricted) gram_inv = q_inverse(q_mul(qq.R, RT));
    }

    ZVec apply(const QVec& m) const {
        int n = q.size();
        QVec x;
        if (q.mode == QuiverMode::irreducible) {
            x = m;
        } else if (q.mode == QuiverMode::induced) {
            x = q_matvec(q.R, m);
        } else {
            x = q_matvec(gram_inv, q_matvec(q.R, m));
            // the solution must reproduce m exactly and be a nonnegative
            // integer vector; anything else means the bookkeeping is broken
            QVec back = q_matvec(RT, x);
            if (back != m)
                throw internal_error("symmetric power does not lie in the restricted node span");
        }
        ZVec out(n);
        for (int j = 0; j < n; ++j) {
            out[j] = to_integer(x[j], "node multiplicity");
            if (out[j] < 0) throw internal_error("negative node multiplicity");
        }
        return out;
    }
};

} // namespace

std::vector<ZVec> xk_recursive(const McKayQuiver& q, int K) {
    int n = q.size();
    ZMat M = z_transpose(q.adjacency);
    std::vector<ZVec> x;
    x.reserve(K + 1);
    x.push_back(e0_vec(n));
    if (K >= 1) x.push_back(z_matvec(M, x[0]));
    for (int k = 2; k <= K; ++k) {
        ZVec next = z_matvec(M, x[k - 1]);
        for (int i = 0; i < n; ++i) next[i] -= x[k - 2][i];
        x.push_back(std::move(next));
    }
    return x;
}

std::vector<ZVec> xk_binomial(const McKayQuiver& q, int K) {
    int n = q.size();
    ZMat M = z_transpose(q.adjacency);
    std::vector<ZVec> mpow(K + 1);
    mpow[0] = e0_vec(n);
    for (int s = 1; s <= K; ++s) mpow[s] = z_matvec(M, mpow[s - 1]);
    std::vector<ZVec> x(K + 1, ZVec(n, 0));
    for (int k = 0; k <= K; ++k)
        for (int i = 0; i <= k / 2; ++i) {
            BigInt c = binom(k - i, i);
            if (i % 2 == 1) c = -c;
            for (int l = 0; l < n; ++l) x[k][l] += c * mpow[k - 2 * i][l];
        }
    return x;
}

std::vector<ZVec> xk_character(const McKayQuiver& q, int K) {
    const FiniteSubgroup& N = q.pair.sub;
    ModeMapper mapper(q);
    Character chiV = fundamental_character(N);
    Character prev2; // S^{k-2}
    Character prev = trivial_character(N);
    int nirr = (int)q.ntable.irreducibles.size();
    std::vector<ZVec> x;
    x.reserve(K + 1);
    for (int k = 0; k <= K; ++k) {
        if (k == 1) {
            prev2 = prev;
            prev = chiV;
        } else if (k >= 2) {
            Character next;
            next.values.resize(prev.values.size());
            for (size_t c = 0; c < prev.values.size(); ++c)
                next.values[c] = chiV.values[c] * prev.values[c] - prev2.values[c];
            prev2 = prev;
            prev = next;
        }
        QVec m(nirr);
        for (int j = 0; j < nirr; ++j)
            m[j] = inner_product(N, prev, q.ntable.irreducibles[j]);
        x.push_back(mapper.apply(m));
    }
    return x;
}

namespace {

void require_orbit(const CoxeterData& cd) {
    if (cd.orbit_ok) return;
    std::string why = cd.bipartite ? cd.orbit_skip_reason : cd.skip_reason;
    throw input_error("orbit formulas unsupported for this type (" + why + ")");
}

} // namespace

std::vector<ZVec> xk_orbit(const McKayQuiver& q, const CoxeterData& cd, int K) {
    require_orbit(cd);
    int n = q.size();
    int half = K / 2 + 1;
    ZVec x1 = z_matvec(z_transpose(q.adjacency), e0_vec(n));

    // Ca^i applied to both seeds, for -half <= i <= half
    auto orbit_table = [&](const ZVec& seed) {
        std::vector<ZVec> pos(half + 1), neg(half + 1);
        pos[0] = neg[0] = seed;
        for (int i = 1; i <= half; ++i) {
            pos[i] = z_matvec(cd.cox_affine, pos[i - 1]);
            neg[i] = z_matvec(cd.cox_affine_inv, neg[i - 1]);
        }
        return std::pair(pos, neg);
    };
    auto [apos, aneg] = orbit_table(e0_vec(n));
    auto [bpos, bneg] = orbit_table(x1);
    auto at = [](const std::vector<ZVec>& pos, const std::vector<ZVec>& neg, int i) {
        return i >= 0 ? pos[i] : neg[-i];
    };

    std::vector<ZVec> x(K + 1, ZVec(n, 0));
    for (int k = 0; k <= K; ++k) {
        int m = k / 2;
        if (k % 2 == 0) {
            for (int i = -m; i <= m; ++i) {
                ZVec term = at(apos, aneg, i);
                for (int l = 0; l < n; ++l) x[k][l] += term[l];
            }
        } else {
            for (int j = 0; j <= m; ++j) {
                ZVec term = at(bpos, bneg, 2 * j - m);
                for (int l = 0; l < n; ++l) x[k][l] += term[l];
            }
        }
    }
    return x;
}

std::vector<ZVec> xk_theorem(const McKayQuiver& q, const CoxeterData& cd, int K) {
    require_orbit(cd);
    if (K + 1 >= (int)cd.ck.size())
        throw internal_error("alternating-product table too short for this depth");
    int n = q.size();
    std::vector<BigInt> b = b_seq(cd, K / 2 + 1);
    std::vector<BigInt> bpre(b.size());
    BigInt acc = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        acc += b[i];
        bpre[i] = acc;
    }
    // orbit of alpha_0 under the alternating products, with index -1 -> 0
    std::vector<ZVec> ckv(K + 1);
    for (int s = 0; s <= K; ++s) ckv[s] = z_matvec(cd.ck[s], e0_vec(n));
    auto diff = [&](int s) { // C^(s) alpha_0 - C^(s-1) alpha_0
        ZVec d = ckv[s];
        if (s >= 1)
            for (int l = 0; l < n; ++l) d[l] -= ckv[s - 1][l];
        return d;
    };
    std::vector<ZVec> x(K + 1, ZVec(n, 0));
    for (int k = 0; k <= K; ++k)
        for (int i = 0; i <= k / 2; ++i) {
            ZVec d = diff(k - 2 * i);
            for (int l = 0; l < n; ++l) x[k][l] += bpre[i] * d[l];
        }
    return x;
}

namespace {

// Small polynomial layer over cyclotomic numbers, just enough for the
// Molien computation: products and exact division by 1 - chi t + t^2.
using CPoly = std::vector<CycloNum>;

CPoly cp_mul(const CPoly& a, const CPoly& b) {
    CPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

CPoly cp_divexact_monic_quad(CPoly a, const CPoly& q) {
    // q = q0 + q1 t + t^2; synthetic long division from the top
    CPoly res(a.size() - 2);
    for (int i = (int)a.size() - 1; i >= 2; --i) {
        CycloNum c = a[i];
        res[i - 2] = c;
        a[i - 1] = a[i - 1] - c * q[1];
        a[i - 2] = a[i - 2] - c * q[0];
    }
    if (!a[0].is_zero() || !a[1].is_zero())
        throw internal_error("class factor does not divide the Molien denominator");
    return res;
}

IntPoly cp_to_intpoly(const CPoly& a, const char* what) {
    std::vector<BigInt> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_rational()) throw internal_error(std::string(what) + " has an irrational coefficient");
        c[i] = to_integer(a[i].rational_value(), what);
    }
    return IntPoly(std::move(c));
}

} // namespace

std::vector<RationalSeries> molien_series(const McKayQuiver& q) {
    const FiniteSubgroup& N = q.pair.sub;
    Character chiV = fundamental_character(N);
    int nc = N.num_classes();

    std::vector<CPoly> qc(nc);
    for (int c = 0; c < nc; ++c) qc[c] = {CycloNum(1), -chiV.values[c], CycloNum(1)};
    CPoly bpoly = {CycloNum(1)};
    for (int c = 0; c < nc; ++c) bpoly = cp_mul(bpoly, qc[c]);

    // numerator of |N| * (series of irreducible j) over the denominator B
    std::vector<CPoly> anum(q.ntable.irreducibles.size(), CPoly{CycloNum(0)});
    for (int c = 0; c < nc; ++c) {
        CPoly cofactor = cp_divexact_monic_quad(bpoly, qc[c]);
        CycloNum size(BigInt(N.class_size(c)));
        for (size_t j = 0; j < anum.size(); ++j) {
            CycloNum w = size * q.ntable.irreducibles[j].values[c].conj();
            if (anum[j].size() < cofactor.size()) anum[j].resize(cofactor.size());
            for (size_t i = 0; i < cofactor.size(); ++i)
                anum[j][i] = anum[j][i] + w * cofactor[i];
        }
    }

    IntPoly bint = cp_to_intpoly(bpoly, "Molien denominator");
    IntPoly den = BigInt(N.order()) * bint;
    std::vector<IntPoly> aint(anum.size());
    for (size_t j = 0; j < anum.size(); ++j) aint[j] = cp_to_intpoly(anum[j], "Molien numerator");

    int n = q.size();
    std::vector<RationalSeries> out;
    out.reserve(n);
    if (q.mode == QuiverMode::irreducible) {
        for (int j = 0; j < n; ++j) out.emplace_back(aint[j], den);
        return out;
    }
    if (q.mode == QuiverMode::induced) {
        for (int j = 0; j < n; ++j) {
            IntPoly num;
            for (size_t l = 0; l < aint.size(); ++l)
                if (q.R[j][l] != 0) num = num + aint[l];
            out.emplace_back(num, den);
        }
        return out;
    }
    // restricted: apply L = (R R^T)^{-1} R to the vector of numerators and
    // clear the rational row entries into the denominator
    QMat L = q_mul(q_inverse(q_mul(q.R, q_transpose(q.R))), q.R);
    for (int j = 0; j < n; ++j) {
        BigInt scale = 1;
        for (size_t l = 0; l < aint.size(); ++l) scale = lcm(scale, denom(L[j][l]));
        IntPoly num;
        for (size_t l = 0; l < aint.size(); ++l) {
            BigInt w = to_integer(Rational(scale) * L[j][l], "cleared row entry");
            if (w != 0) num = num + w * aint[l];
        }
        out.emplace_back(num, scale * den);
    }
    return out;
}

std::vector<RationalSeries> genfunc_series(const McKayQuiver& q, const CoxeterData& cd) {
    require_orbit(cd);
    int n = q.size();
    IntPoly den = exponents_denominator(cd);
    std::vector<RationalSeries> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<BigInt> c(cd.h + 1);
        for (long k = 0; k <= cd.h; ++k) c[k] = cd.z[k][j];
        out.emplace_back(IntPoly(std::move(c)), den);
    }
    return out;
}

void check_genfunc(const McKayQuiver& q, const CoxeterData& cd, int K) {
    std::vector<RationalSeries> gf = genfunc_series(q, cd);
    std::vector<ZVec> x = xk_recursive(q, K);
    for (int j = 0; j < q.size(); ++j) {
        std::vector<BigInt> coeffs = gf[j].expand_int(K);
        for (int k = 0; k <= K; ++k)
            if (coeffs[k] != x[k][j])
                throw identity_error("generating function mismatch at k=" + std::to_string(k) +
                                     ", node=" + std::to_string(j));
    }
}

RationalSeries node0_series(const CoxeterData& cd) {
    std::vector<BigInt> num(cd.h + 1, 0);
    num[0] = 1;
    num[cd.h] = 1;
    return RationalSeries{IntPoly(std::move(num)), exponents_denominator(cd)};
}

} // namespace mckay
