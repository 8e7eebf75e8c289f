#include "mckay/series.hpp"

namespace mckay {

RationalSeries::RationalSeries(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.coeff(0) == 0)
        throw input_error("rational series denominator has zero constant term");
}

std::vector<Rational> RationalSeries::expand(int K) const {
    // c_k = (num_k - sum_{j>=1} den_j c_{k-j}) / den_0
    std::vector<Rational> out(static_cast<size_t>(K) + 1);
    Rational d0(den.coeff(0));
    for (int k = 0; k <= K; ++k) {
        Rational acc(num.coeff(k));
        int jmax = std::min(k, den.degree());
        for (int j = 1; j <= jmax; ++j)
            acc -= Rational(den.coeff(j)) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / d0;
    }
    return out;
}

std::vector<BigInt> RationalSeries::expand_int(int K) const {
    std::vector<Rational> q = expand(K);
    std::vector<BigInt> out(q.size());
    for (size_t i = 0; i < q.size(); ++i)
        out[i] = to_integer(q[i], "series coefficient");
    return out;
}

bool RationalSeries::same_function(const RationalSeries& o) const {
    return num * o.den == o.num * den;
}

RationalSeries RationalSeries::reduced() const {
    if (num.is_zero()) return RationalSeries(IntPoly(), IntPoly::constant(1));
    IntPoly g = poly_gcd(num, den);
    IntPoly n = poly_divexact(num, g);
    IntPoly d = poly_divexact(den, g);
    BigInt cn = poly_content(n), cd = poly_content(d);
    BigInt ct = gcd(cn, cd);
    if (ct > 1) {
        for (auto& v : n.c) v /= ct;
        for (auto& v : d.c) v /= ct;
    }
    if (d.coeff(0) < 0) {
        n = -n;
        d = -d;
    }
    return RationalSeries(std::move(n), std::move(d));
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    if (a.den == b.den) return RationalSeries(a.num + b.num, a.den);
    return RationalSeries(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalSeries operator*(const BigInt& s, const RationalSeries& a) {
    return RationalSeries(s * a.num, a.den);
}

} // namespace mckay
