#include "mckay/intpoly.hpp"

#include <sstream>

namespace mckay {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& v) {
    IntPoly p;
    if (v != 0) p.c.push_back(v);
    return p;
}

IntPoly IntPoly::one_minus_power(int e) {
    IntPoly p;
    p.c.assign(static_cast<size_t>(e) + 1, BigInt(0));
    p.c[0] = 1;
    p.c[static_cast<size_t>(e)] = -1;
    return p;
}

IntPoly IntPoly::monomial(const BigInt& v, int deg) {
    IntPoly p;
    if (v != 0) {
        p.c.assign(static_cast<size_t>(deg) + 1, BigInt(0));
        p.c[static_cast<size_t>(deg)] = v;
    }
    return p;
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[static_cast<size_t>(i)];
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
    IntPoly r;
    if (s == 0) return r;
    r.c = a.c;
    for (auto& x : r.c) x *= s;
    return r;
}

// Long division from the top; every step must divide exactly over Z.
static bool try_divexact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    if (a.is_zero()) { q = IntPoly(); return true; }
    if (a.degree() < b.degree()) return false;
    std::vector<BigInt> rem = a.c;
    std::vector<BigInt> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lead = b.c.back();
    for (int d = a.degree(); d >= b.degree();) {
        BigInt top = rem[static_cast<size_t>(d)];
        if (top != 0) {
            if (top % lead != 0) return false;
            BigInt f = top / lead;
            quot[static_cast<size_t>(d - b.degree())] = f;
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<size_t>(d - b.degree() + i)] -= f * b.c[static_cast<size_t>(i)];
        }
        --d;
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    q = IntPoly(std::move(quot));
    return true;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!try_divexact(a, b, q))
        throw identity_error("polynomial division left a nonzero remainder: (" +
                             poly_to_string(a) + ") / (" + poly_to_string(b) + ")");
    return q;
}

bool poly_divides(const IntPoly& b, const IntPoly& a) {
    IntPoly q;
    return try_divexact(a, b, q);
}

BigInt poly_content(const IntPoly& a) {
    BigInt g = 0;
    for (const auto& x : a.c) g = gcd(g, x);
    return g;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    // Euclid with primitive parts; coefficients stay bounded at our sizes.
    IntPoly x = a, y = b;
    auto primitive = [](IntPoly& p) {
        BigInt ct = poly_content(p);
        if (ct > 1)
            for (auto& v : p.c) v /= ct;
        if (!p.c.empty() && p.c.back() < 0)
            for (auto& v : p.c) v = -v;
    };
    primitive(x);
    primitive(y);
    while (!y.is_zero()) {
        // pseudo-remainder of x by y
        IntPoly r = x;
        const BigInt lead = y.c.back();
        while (!r.is_zero() && r.degree() >= y.degree()) {
            BigInt f = r.c.back();
            int shift = r.degree() - y.degree();
            IntPoly scaled = lead * r;
            scaled = scaled - (f * IntPoly::monomial(1, shift)) * y;
            r = scaled;
        }
        x = y;
        y = r;
        primitive(y);
    }
    primitive(x);
    return x;
}

std::string poly_to_string(const IntPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= a.degree(); ++i) {
        BigInt v = a.coeff(i);
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (i == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << var;
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace mckay
