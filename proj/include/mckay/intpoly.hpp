#pragma once

#include <string>
#include <vector>

#include "mckay/numbers.hpp"

namespace mckay {

// Dense univariate polynomial over the integers, coefficient index = degree.
// Normal form: no trailing zero coefficients; the zero polynomial is the
// empty vector.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(const BigInt& v);
    // 1 - t^e, the building block of every denominator used here.
    static IntPoly one_minus_power(int e);
    static IntPoly monomial(const BigInt& v, int deg);

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 = zero
    bool is_zero() const { return c.empty(); }
    BigInt coeff(int i) const;
    void normalize();

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& s, const IntPoly& a);
IntPoly operator-(const IntPoly& a);

// Exact quotient a / b over the integers. A nonzero remainder (or a
// non-integral quotient) signals a failed divisibility identity and throws
// identity_error.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// Remainder-tolerant probe used where divisibility is reported, not asserted.
bool poly_divides(const IntPoly& b, const IntPoly& a);

// Greatest common divisor, normalized primitive with positive leading
// coefficient (gcd of zero polynomials is zero).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Content = gcd of coefficients (nonnegative).
BigInt poly_content(const IntPoly& a);

// Human-readable form like "1 - 2t^2 + t^4".
std::string poly_to_string(const IntPoly& a, const std::string& var = "t");

} // namespace mckay
