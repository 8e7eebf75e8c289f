#pragma once

#include <string>
#include <vector>

#include "mckay/intpoly.hpp"

namespace mckay {

// Rational function num/den with den(0) != 0, expandable as a power series.
struct RationalSeries {
    IntPoly num;
    IntPoly den;

    RationalSeries() : num(), den(IntPoly::constant(1)) {}
    RationalSeries(IntPoly n, IntPoly d);

    // Coefficients c_0..c_K of the power-series expansion.
    std::vector<Rational> expand(int K) const;
    // Same, asserting every coefficient is an integer (multiplicity series).
    std::vector<BigInt> expand_int(int K) const;

    // Equality as rational functions (cross-multiplication, exact).
    bool same_function(const RationalSeries& o) const;

    // Cancel the polynomial/content gcd; normalize den(0) > 0. Presentation
    // only, the value is unchanged.
    RationalSeries reduced() const;
};

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const BigInt& s, const RationalSeries& a);

} // namespace mckay
