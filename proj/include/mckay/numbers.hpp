#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <vector>

#include "mckay/errors.hpp"

namespace mckay {

// Arbitrary-precision integers and rationals. Rationals are kept in lowest
// terms with positive denominator by the backing library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

// Exact conversion; non-integral input means some caller's integrality
// guarantee broke.
inline BigInt to_integer(const Rational& q, const char* what) {
    if (!is_integer(q))
        throw internal_error(std::string(what) + ": expected an integer, got " +
                             q.str());
    return numer(q);
}

// Checked narrowing for JSON/python payloads; every quantity this library
// emits is far below 2^63, so failing here is a bug.
inline long long to_i64(const BigInt& n, const char* what = "value") {
    if (n > std::numeric_limits<long long>::max() ||
        n < std::numeric_limits<long long>::min())
        throw internal_error(std::string(what) + ": magnitude exceeds 64 bits");
    return static_cast<long long>(n);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace mckay
