#include "mckay/cyclo.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

int euler_phi(int m) {
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense rational polynomials (ascending coefficients) used only inside this
// translation unit for reduction modulo cyclotomic polynomials.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Reduce p modulo the monic polynomial phi in place.
void mod_monic(QPoly& p, const std::vector<BigInt>& phi) {
    const size_t d = phi.size() - 1; // degree of phi (monic)
    while (p.size() > d) {
        Rational lead = p.back();
        size_t shift = p.size() - 1 - d;
        if (lead != 0) {
            for (size_t i = 0; i < d; ++i) p[shift + i] -= lead * Rational(phi[i]);
        }
        p.pop_back();
        trim(p);
        if (p.size() <= d) break;
    }
}

// Integer-coefficient exact division used to build cyclotomic polynomials:
// (x^m - 1) / product of lower-level factors.
std::vector<BigInt> divexact_z(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> q(num.size() - den.size() + 1, BigInt(0));
    for (size_t qi = q.size(); qi-- > 0;) {
        BigInt lead = num[qi + den.size() - 1];
        if (lead % den.back() != 0)
            throw internal_error("cyclotomic polynomial division not exact");
        BigInt f = lead / den.back();
        q[qi] = f;
        if (f != 0)
            for (size_t i = 0; i < den.size(); ++i) num[qi + i] -= f * den[i];
    }
    for (const BigInt& r : num)
        if (r != 0) throw internal_error("cyclotomic polynomial division left a remainder");
    return q;
}

std::vector<BigInt> mul_z(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<BigInt>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw internal_error("cyclotomic polynomial needs a positive index");
    std::vector<BigInt> result;
    if (m == 1) {
        result = {BigInt(-1), BigInt(1)}; // x - 1
    } else {
        // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
        std::vector<BigInt> den = {BigInt(1)};
        for (int d = 1; d < m; ++d)
            if (m % d == 0) den = mul_z(den, cyclotomic_polynomial(d));
        std::vector<BigInt> num(m + 1, BigInt(0));
        num[0] = -1;
        num[m] = 1;
        result = divexact_z(std::move(num), den);
    }
    return cache.emplace(m, std::move(result)).first->second;
}

void CycloNum::canonicalize() {
    coords_.resize(static_cast<size_t>(euler_phi(m_)), Rational(0));
    if (m_ == 1) return;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return;
    // Only the constant coordinate survives: the value is rational.
    Rational c = coords_[0];
    m_ = 1;
    coords_.assign(1, c);
}

CycloNum CycloNum::zeta(int m, long k) {
    if (m < 1) throw internal_error("root of unity needs a positive order");
    k %= m;
    if (k < 0) k += m;
    CycloNum r;
    r.m_ = m;
    QPoly p(static_cast<size_t>(k) + 1, Rational(0));
    p.back() = 1;
    mod_monic(p, cyclotomic_polynomial(m));
    p.resize(static_cast<size_t>(euler_phi(m)), Rational(0));
    r.coords_ = std::move(p);
    r.canonicalize();
    return r;
}

CycloNum CycloNum::from_coords(int m, std::vector<Rational> coords) {
    CycloNum r;
    r.m_ = m;
    QPoly p = std::move(coords);
    mod_monic(p, cyclotomic_polynomial(m));
    p.resize(static_cast<size_t>(euler_phi(m)), Rational(0));
    r.coords_ = std::move(p);
    r.canonicalize();
    return r;
}

bool CycloNum::is_zero() const {
    for (const Rational& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_rational() const { return m_ == 1; }

Rational CycloNum::rational_value(const char* what) const {
    if (m_ != 1)
        throw internal_error(std::string(what) + " is not rational (conductor " +
                             std::to_string(m_) + ")");
    return coords_[0];
}

CycloNum CycloNum::lifted(int M) const {
    if (M == m_) return *this;
    if (M % m_ != 0)
        throw internal_error("cannot lift conductor " + std::to_string(m_) + " into " +
                             std::to_string(M));
    // zeta_m = zeta_M^{M/m}: substitute x -> x^{M/m} and reduce.
    const int step = M / m_;
    QPoly p;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        size_t pos = i * static_cast<size_t>(step);
        if (p.size() <= pos) p.resize(pos + 1, Rational(0));
        p[pos] = coords_[i];
    }
    mod_monic(p, cyclotomic_polynomial(M));
    p.resize(static_cast<size_t>(euler_phi(M)), Rational(0));
    CycloNum r;
    r.m_ = M;
    r.coords_ = std::move(p);
    // Deliberately not canonicalized: callers need the coordinates at M
    // itself (a rational lifted to M must not collapse straight back, or the
    // coordinatewise arithmetic above it would misalign).
    return r;
}

CycloNum CycloNum::galois(long j) const {
    if (m_ == 1) return *this;
    j %= m_;
    if (j < 0) j += m_;
    if (std::gcd(static_cast<long>(m_), j) != 1)
        throw internal_error("Galois exponent must be coprime to the conductor");
    QPoly p;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        size_t pos = (i * static_cast<size_t>(j)) % static_cast<size_t>(m_);
        if (p.size() <= pos) p.resize(pos + 1, Rational(0));
        p[pos] += coords_[i];
    }
    mod_monic(p, cyclotomic_polynomial(m_));
    p.resize(static_cast<size_t>(euler_phi(m_)), Rational(0));
    CycloNum r;
    r.m_ = m_;
    r.coords_ = std::move(p);
    r.canonicalize();
    return r;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (m_ == 1) {
        CycloNum r;
        r.coords_[0] = Rational(1) / coords_[0];
        return r;
    }
    // Extended Euclid in Q[x]: u * this + v * Phi_m = gcd; the gcd is a
    // nonzero constant because Phi_m is irreducible over Q.
    QPoly phi;
    for (const BigInt& c : cyclotomic_polynomial(m_)) phi.emplace_back(c);
    QPoly r0 = phi, r1 = coords_;
    trim(r1);
    QPoly u0 = {}, u1 = {Rational(1)}; // track the coefficient of `this`
    while (true) {
        trim(r1);
        if (r1.empty()) throw internal_error("cyclotomic inverse hit a zero remainder");
        if (r1.size() == 1) break; // constant gcd reached
        // r0 = q * r1 + r2 via monic-style long division
        QPoly q(r0.size() - r1.size() + 1, Rational(0));
        QPoly rem = r0;
        for (size_t qi = q.size(); qi-- > 0;) {
            if (rem.size() < r1.size() + qi) continue;
            Rational f = rem[qi + r1.size() - 1] / r1.back();
            q[qi] = f;
            if (f != 0)
                for (size_t i = 0; i < r1.size(); ++i) rem[qi + i] -= f * r1[i];
        }
        trim(rem);
        QPoly u2 = u0;
        QPoly qu = mul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rational g = r1[0];
    QPoly inv = u1;
    for (Rational& c : inv) c /= g;
    mod_monic(inv, cyclotomic_polynomial(m_));
    inv.resize(static_cast<size_t>(euler_phi(m_)), Rational(0));
    CycloNum r;
    r.m_ = m_;
    r.coords_ = std::move(inv);
    r.canonicalize();
    return r;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    int M = std::lcm(a.m_, b.m_);
    CycloNum x = a.lifted(M), y = b.lifted(M);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
    x.canonicalize();
    return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    int M = std::lcm(a.m_, b.m_);
    CycloNum x = a.lifted(M), y = b.lifted(M);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
    x.canonicalize();
    return x;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (Rational& c : r.coords_) c = -c;
    return r;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    int M = std::lcm(a.m_, b.m_);
    CycloNum x = a.lifted(M), y = b.lifted(M);
    QPoly p = mul(x.coords_, y.coords_);
    return CycloNum::from_coords(M, std::move(p));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

bool CycloNum::operator==(const CycloNum& o) const {
    int M = std::lcm(m_, o.m_);
    return lifted(M).coords_ == o.lifted(M).coords_;
}

std::string CycloNum::key() const {
    std::ostringstream os;
    os << m_ << '|';
    for (const Rational& c : coords_) os << c << ';';
    return os.str();
}

std::string CycloNum::key_at(int M) const { return lifted(M).key(); }

std::string CycloNum::to_string() const {
    if (m_ == 1) {
        std::ostringstream os;
        os << coords_[0];
        return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        Rational c = coords_[i];
        if (!first) {
            os << (c > 0 ? " + " : " - ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << '-';
            c = -c;
        }
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'z' << m_;
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

} // namespace mckay
