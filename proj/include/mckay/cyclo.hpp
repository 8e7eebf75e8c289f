#pragma once

#include <string>
#include <vector>

#include "mckay/numbers.hpp"

namespace mckay {

// Element of the cyclotomic field Q(zeta_m), stored on the power basis
// {zeta_m^0, ..., zeta_m^{phi(m)-1}} reduced modulo the m-th cyclotomic
// polynomial. Arithmetic between different conductors lifts both operands to
// the lcm; the only automatic downward move is the rational fast path (a
// value whose non-constant coordinates vanish collapses to conductor 1), so
// representations stay canonical and equality is decidable coordinatewise.
class CycloNum {
  public:
    CycloNum() : m_(1), coords_(1, Rational(0)) {}
    explicit CycloNum(const Rational& q) : m_(1), coords_(1, q) {}
    explicit CycloNum(const BigInt& n) : m_(1), coords_(1, Rational(n)) {}
    explicit CycloNum(long n) : m_(1), coords_(1, Rational(n)) {}

    // zeta_m^k
    static CycloNum zeta(int m, long k = 1);
    static CycloNum from_coords(int m, std::vector<Rational> coords);

    int conductor() const { return m_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // Exact rational value; throws internal_error when the value is genuinely
    // irrational (callers use this only where rationality is guaranteed).
    Rational rational_value(const char* what = "cyclotomic value") const;

    // Galois action zeta -> zeta^j, gcd(j, conductor) = 1.
    CycloNum galois(long j) const;
    // Complex conjugation zeta -> zeta^{-1}.
    CycloNum conj() const { return galois(m_ - 1); }
    CycloNum inverse() const;

    // Representation at conductor M (own conductor must divide M).
    CycloNum lifted(int M) const;

    // Canonical hash/ordering key; key_at fixes the conductor so values from
    // different fields compare consistently.
    std::string key() const;
    std::string key_at(int M) const;
    std::string to_string() const;

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
    CycloNum operator-() const;
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

  private:
    int m_;
    std::vector<Rational> coords_; // length phi(m_)
    void canonicalize();
};

// Coefficients of the m-th cyclotomic polynomial (ascending, monic).
const std::vector<BigInt>& cyclotomic_polynomial(int m);

int euler_phi(int m);

} // namespace mckay
