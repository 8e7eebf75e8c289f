#pragma once

#include <vector>

#include "mckay/coxeter.hpp"
#include "mckay/quiver.hpp"
#include "mckay/series.hpp"

namespace mckay {

// x_k = coordinates of the k-th symmetric power of the defining module over
// the quiver's node basis. Five independent routes to the same integers; the
// character route is the oracle, the others are root-system machinery.

// Three-term recursion x_{k+1} = A^T x_k - x_{k-1} starting from x_0 = e_0.
std::vector<ZVec> xk_recursive(const McKayQuiver& q, int K);

// Closed form x_k = sum_i (-1)^i binom(k-i, i) (A^T)^{k-2i} e_0.
std::vector<ZVec> xk_binomial(const McKayQuiver& q, int K);

// Decompose each symmetric power over Irr(N) exactly and push the
// multiplicities through the node bookkeeping of the mode. Needs no
// root-system structure, so it covers every cataloged input.
std::vector<ZVec> xk_character(const McKayQuiver& q, int K);

// Orbit sums of the affine Coxeter element:
//   x_{2m} = sum_{|i| <= m} Ca^i alpha_0,
//   x_{2m+1} = sum of Ca^{2j-m} x_1 over 0 <= j <= m.
// Orbit-supported inputs only.
std::vector<ZVec> xk_orbit(const McKayQuiver& q, const CoxeterData& cd, int K);

// Alternating-product form with reciprocal-sequence prefix sums:
//   x_k = sum_i (b_0 + ... + b_i) (C^(k-2i) - C^(k-2i-1)) alpha_0,
// with C^(-1) alpha_0 read as 0. Orbit-supported inputs, k <= 2h.
std::vector<ZVec> xk_theorem(const McKayQuiver& q, const CoxeterData& cd, int K);

// Exact Molien series of every node: common denominator |N| prod_c q_c(t)
// with q_c(t) = 1 - chi_V(c) t + t^2, numerators cleared to integers.
// Works for every input and mode.
std::vector<RationalSeries> molien_series(const McKayQuiver& q);

// Generating functions z_j(t) / ((1-t^a)(1-t^b)) from the z-increments.
// Orbit-supported inputs only.
std::vector<RationalSeries> genfunc_series(const McKayQuiver& q, const CoxeterData& cd);

// Expand the z-based generating functions to degree K and compare against
// the recursion; a mismatch throws identity_error naming the first
// differing (k, node).
void check_genfunc(const McKayQuiver& q, const CoxeterData& cd, int K);

// Closed form at the affine node, (1 + t^h) / ((1-t^a)(1-t^b)).
RationalSeries node0_series(const CoxeterData& cd);

} // namespace mckay
