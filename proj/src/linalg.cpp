#include "mckay/linalg.hpp"

#include "mckay/errors.hpp"

namespace mckay {

QMat q_identity(size_t n) {
    QMat m(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat q_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(p, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

QVec q_matvec(const QMat& a, const QVec& v) {
    QVec r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

QMat q_transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat r(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

namespace {

// Row-reduce `a` in place (optionally carrying `rhs` along); returns the
// pivot column of each pivot row.
std::vector<size_t> row_reduce(QMat& a, QMat* rhs) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        if (rhs)
            for (auto& x : (*rhs)[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (rhs)
                for (size_t j = 0; j < (*rhs)[i].size(); ++j) (*rhs)[i][j] -= f * (*rhs)[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

QVec solve_unique(QMat a, QVec b) {
    size_t n = a.size();
    QMat rhs(n, QVec(1));
    for (size_t i = 0; i < n; ++i) rhs[i][0] = b[i];
    auto pivots = row_reduce(a, &rhs);
    if (pivots.size() != n) throw internal_error("linear system is singular");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[pivots[i]] = rhs[i][0];
    return x;
}

QMat q_inverse(const QMat& a) {
    size_t n = a.size();
    QMat work = a;
    QMat rhs = q_identity(n);
    auto pivots = row_reduce(work, &rhs);
    if (pivots.size() != n) throw internal_error("matrix is not invertible");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i) inv[pivots[i]] = rhs[i];
    return inv;
}

std::vector<QVec> nullspace(QMat a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    auto pivots = row_reduce(a, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

ZVec primitive_integer(const QVec& v) {
    BigInt den(1);
    for (const Rational& q : v) den = lcm(den, denom(q));
    ZVec w;
    BigInt g(0);
    for (const Rational& q : v) {
        Rational scaled = q * Rational(den);
        w.push_back(to_integer(scaled, "primitive scaling"));
        g = gcd(g, w.back());
    }
    if (g == 0) throw internal_error("primitive_integer on the zero vector");
    bool flip = false;
    for (const BigInt& x : w)
        if (x != 0) {
            flip = x < 0;
            break;
        }
    for (BigInt& x : w) {
        x /= g;
        if (flip) x = -x;
    }
    return w;
}

ZMat z_identity(size_t n) {
    ZMat m(n, ZVec(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat z_mul(const ZMat& a, const ZMat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    ZMat r(n, ZVec(p, BigInt(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

ZVec z_matvec(const ZMat& a, const ZVec& v) {
    ZVec r(a.size(), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

ZMat z_transpose(const ZMat& a) {
    if (a.empty()) return {};
    ZMat r(a[0].size(), ZVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

long matrix_order(const ZMat& m, long bound) {
    ZMat id = z_identity(m.size());
    ZMat p = m;
    for (long k = 1; k <= bound; ++k) {
        if (p == id) return k;
        p = z_mul(p, m);
    }
    throw internal_error("matrix order exceeds bound " + std::to_string(bound));
}

} // namespace mckay
