#pragma once

#include <vector>

#include "mckay/numbers.hpp"

namespace mckay {

using QVec = std::vector<Rational>;
using QMat = std::vector<std::vector<Rational>>;
using ZVec = std::vector<BigInt>;
using ZMat = std::vector<std::vector<BigInt>>;

QMat q_identity(size_t n);
QMat q_mul(const QMat& a, const QMat& b);
QVec q_matvec(const QMat& a, const QVec& v);
QMat q_transpose(const QMat& a);

// Unique solution of the square system a x = b; singular input is a logic
// error here, not a user error.
QVec solve_unique(QMat a, QVec b);
QMat q_inverse(const QMat& a);

// Basis of { x : a x = 0 } via reduced row echelon form. Deterministic:
// one vector per free column, in column order.
std::vector<QVec> nullspace(QMat a);

// Scale a rational vector to a coprime integer vector whose first nonzero
// entry is positive. Zero vectors are rejected.
ZVec primitive_integer(const QVec& v);

ZMat z_identity(size_t n);
ZMat z_mul(const ZMat& a, const ZMat& b);
ZVec z_matvec(const ZMat& a, const ZVec& v);
ZMat z_transpose(const ZMat& a);

// Least k >= 1 with m^k = I; gives up past `bound` (internal error).
long matrix_order(const ZMat& m, long bound = 100000);

} // namespace mckay
