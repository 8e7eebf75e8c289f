#pragma once

#include <string>
#include <vector>

#include "mckay/linalg.hpp"
#include "mckay/quiver.hpp"
#include "mckay/series.hpp"

namespace mckay {

// Reflection machinery on the root lattice of an affine quiver, built from a
// two-coloring of its diagram. Everything downstream of the coloring is
// gated: a diagram with an odd cycle has no two-coloring at all, and the
// orbit-summation formulas additionally need the affine node to carry mark 1
// and the Coxeter orbit of alpha_0 to close up.
struct CoxeterData {
    // two-coloring; part[i] is 1 or 2 and node 0 always lands in part 2
    bool bipartite = false;
    std::string skip_reason; // "odd cycle" when not bipartite
    std::vector<int> part;

    // products of the commuting simple reflections within each finite part,
    // the Coxeter element C = C2 C1, and its affine companion Ca = s0 C
    ZMat c1, c2, cox, cox_affine, cox_affine_inv;
    long h = 0; // order of C

    // alternating partial products C^(k) = ... C2 C1 (k factors, no s0),
    // stored for k = 0 .. 2h+1
    std::vector<ZMat> ck;

    // a_0 = 1, a_s = <row 0 of the Cartan matrix, C^s alpha_0>; one period
    std::vector<long> a;

    // orbit-formula gate (needs mark 1 at node 0, even h, and the closure
    // identity C^(h) alpha_0 = alpha_0 + 2 psi)
    bool orbit_ok = false;
    std::string orbit_skip_reason;
    long half = 0; // h/2
    ZVec psi;      // marks - e_0, the defect direction (valid when marks[0] = 1)

    // c_0 = 1, c_i = a_i for 0 < i < h/2, c_{h/2} = -1 (even h only)
    std::vector<long> c;

    // exponents with (1 - t^a)(1 - t^b) in every closed form:
    // exp_a = twice the largest irreducible dimension of N, exp_b = h+2-exp_a
    long exp_a = 0, exp_b = 0;

    // z_0 = alpha_0, z_k = (C^(k) - C^(k-1)) alpha_0, z_h = alpha_0; the
    // middle one is 2 alpha_{istar} (orbit-supported inputs only)
    std::vector<ZVec> z;
    int istar = -1;
};

// Matrix of the simple reflection at node i: alpha_j -> alpha_j - C[i][j] alpha_i.
ZMat simple_reflection(const ZMat& cartan, int i);

CoxeterData build_coxeter(const McKayQuiver& q);

// a-sequence extended to all s >= 0: value 1 at s = 0, 2 at positive
// multiples of h, else periodic.
long a_ext(const CoxeterData& cd, long s);

// b_0..b_K with sum_{j} b_j a_{s-j} = 0 for s >= 1 (the reciprocal of a).
std::vector<BigInt> b_seq(const CoxeterData& cd, int K);

// a(t) = (a_0 + a_1 t + ... + a_{h-1} t^{h-1} + t^h) / (1 - t^h), and its
// reciprocal b(t) = 1/a(t).
RationalSeries a_series(const CoxeterData& cd);
RationalSeries b_series(const CoxeterData& cd);

// sum_i (c_i - c_{i-1}) t^{2i} over 0 <= i <= h/2 + 1, with c out of range
// read as 0; equals (1 - t^exp_a)(1 - t^exp_b) when the exponents are right.
IntPoly c_increment_poly(const CoxeterData& cd);
IntPoly exponents_denominator(const CoxeterData& cd);

} // namespace mckay
