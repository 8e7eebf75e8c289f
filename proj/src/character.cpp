#include "mckay/character.hpp"

#include <algorithm>
#include <numeric>

#include "mckay/errors.hpp"

namespace mckay {

BigInt Character::dim() const {
    if (values.empty()) throw internal_error("character with no values");
    CycloNum v = values[0];
    Rational q = v.rational_value("character dimension");
    return to_integer(q, "character dimension");
}

std::vector<BigInt> CharacterTable::dims() const {
    std::vector<BigInt> d;
    for (const Character& chi : irreducibles) d.push_back(chi.dim());
    return d;
}

namespace {

// ---- arithmetic in F_p ----------------------------------------------------

long mod_mul(long a, long b, long p) { return (a % p) * (b % p) % p; }

long mod_pow(long b, long e, long p) {
    long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, b, p);
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw internal_error("inverse of zero in F_p");
    return mod_pow(a, p - 2, p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p with p ≡ 1 (mod e) and p > order: the character degrees
// and eigenvalue multiplicities are then recoverable as exact least residues.
long dixon_prime(long e, long order) {
    for (long p = e + 1;; p += e)
        if (p > order && is_prime(p)) return p;
}

long primitive_root(long p) {
    if (p == 2) return 1;
    std::vector<long> primes;
    long n = p - 1;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) primes.push_back(n);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : primes)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw internal_error("no primitive root found");
}

using FpMat = std::vector<std::vector<long>>;
using FpVec = std::vector<long>;

// Basis of the kernel of a (r x c) matrix over F_p.
std::vector<FpVec> fp_kernel(FpMat a, long p) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        long inv = mod_inv(a[r][c], p);
        for (auto& x : a[r]) x = mod_mul(x, inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            long f = a[i][c];
            for (size_t j = 0; j < cols; ++j)
                a[i][j] = ((a[i][j] - mod_mul(f, a[r][j], p)) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FpVec v(cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (p - a[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution of a x = b for a full-column-rank (r x c) system.
FpVec fp_solve(FpMat a, FpVec b, long p) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        long inv = mod_inv(a[r][c], p);
        for (auto& x : a[r]) x = mod_mul(x, inv, p);
        b[r] = mod_mul(b[r], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            long f = a[i][c];
            for (size_t j = 0; j < cols; ++j)
                a[i][j] = ((a[i][j] - mod_mul(f, a[r][j], p)) % p + p) % p;
            b[i] = ((b[i] - mod_mul(f, b[r], p)) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != cols) throw internal_error("singular restriction system");
    for (size_t i = cols; i < rows; ++i)
        if (b[i] != 0) throw internal_error("inconsistent restriction system");
    FpVec x(cols, 0);
    for (size_t i = 0; i < cols; ++i) x[pivot_col[i]] = b[i];
    return x;
}

long isqrt_exact(long r, const char* what) {
    long d = 0;
    while (d * d < r) ++d;
    if (d * d != r) throw internal_error(std::string(what) + ": not a perfect square");
    return d;
}

} // namespace

CharacterTable character_table(const FiniteSubgroup& g) {
    const int k = g.num_classes();
    const long n = g.order();
    const long p = dixon_prime(g.exponent(), n);
    const long root = primitive_root(p);

    // Class-algebra structure constants: c[i][j][l] counts pairs in
    // C_i x C_j multiplying to a fixed element of C_l. For x in C_i the
    // second factor is forced, so one sweep per (l, i) suffices.
    std::vector<std::vector<std::vector<long>>> cc(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int l = 0; l < k; ++l) {
        int z = g.class_rep(l);
        for (int i = 0; i < k; ++i)
            for (int x : g.classes()[i]) {
                int j = g.class_of(g.mul(g.inv(x), z));
                ++cc[i][j][l];
            }
    }

    // Simultaneous eigenvectors of the class matrices M_i (acting by
    // (M_i v)_j = sum_l c[i][j][l] v_l) over F_p: split the full space by one
    // class matrix at a time until every invariant piece is a line.
    std::vector<std::vector<FpVec>> spaces;
    {
        std::vector<FpVec> full;
        for (int i = 0; i < k; ++i) {
            FpVec e(k, 0);
            e[i] = 1;
            full.push_back(e);
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        FpMat M(k, FpVec(k, 0));
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) M[j][l] = cc[i][j][l] % p;
        std::vector<std::vector<FpVec>> next;
        for (auto& S : spaces) {
            size_t d = S.size();
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // Restrict M to span(S): columns of B are the basis vectors.
            FpMat B(k, FpVec(d, 0));
            for (size_t c = 0; c < d; ++c)
                for (int r = 0; r < k; ++r) B[r][c] = S[c][r];
            FpMat X(d, FpVec(d, 0)); // restriction matrix, column per basis vector
            for (size_t c = 0; c < d; ++c) {
                FpVec mb(k, 0);
                for (int r = 0; r < k; ++r)
                    for (int l = 0; l < k; ++l)
                        mb[r] = (mb[r] + mod_mul(M[r][l], S[c][l], p)) % p;
                FpVec x = fp_solve(B, mb, p);
                for (size_t r = 0; r < d; ++r) X[r][c] = x[r];
            }
            size_t found = 0;
            for (long lam = 0; lam < p && found < d; ++lam) {
                FpMat shifted = X;
                for (size_t r = 0; r < d; ++r)
                    shifted[r][r] = ((shifted[r][r] - lam) % p + p) % p;
                auto ker = fp_kernel(shifted, p);
                if (ker.empty()) continue;
                std::vector<FpVec> piece;
                for (auto& kv : ker) {
                    FpVec v(k, 0);
                    for (size_t c = 0; c < d; ++c)
                        for (int r = 0; r < k; ++r)
                            v[r] = (v[r] + mod_mul(kv[c], S[c][r], p)) % p;
                    piece.push_back(std::move(v));
                }
                found += piece.size();
                next.push_back(std::move(piece));
            }
            if (found != d)
                throw internal_error("class matrix failed to diagonalize over F_p");
        }
        spaces = std::move(next);
        if (std::all_of(spaces.begin(), spaces.end(),
                        [](const auto& s) { return s.size() == 1; }))
            break;
    }
    if (static_cast<int>(spaces.size()) != k)
        throw internal_error("class algebra splitting produced " +
                             std::to_string(spaces.size()) + " lines, expected " +
                             std::to_string(k));

    // Each line carries one irreducible: normalize so the identity-class
    // coordinate is 1, recover the degree from the orthogonality relation,
    // then read off the character values mod p.
    std::vector<FpVec> chi_p;
    std::vector<long> degree;
    for (auto& S : spaces) {
        FpVec v = S[0];
        if (v[0] == 0) throw internal_error("eigenvector vanishes at the identity class");
        long s = mod_inv(v[0], p);
        for (auto& x : v) x = mod_mul(x, s, p);
        long acc = 0;
        for (int l = 0; l < k; ++l) {
            long lp = v[g.class_of_inverse(l)];
            acc = (acc + mod_mul(mod_mul(v[l], lp, p),
                                 mod_inv(g.class_size(l) % p, p), p)) % p;
        }
        long d2 = mod_mul(n % p, mod_inv(acc, p), p); // = d^2, and d^2 <= |G| < p
        long dl = isqrt_exact(d2, "squared character degree");
        FpVec chi(k, 0);
        for (int l = 0; l < k; ++l)
            chi[l] = mod_mul(mod_mul(dl, v[l], p), mod_inv(g.class_size(l) % p, p), p);
        chi_p.push_back(std::move(chi));
        degree.push_back(dl);
    }

    // Lift to exact cyclotomic values. With one fixed primitive root the maps
    // zeta_m -> root^((p-1)/m) are mutually consistent, and the multiplicity
    // of each eigenvalue of rho(g) is a small nonnegative integer recovered
    // exactly as a least residue.
    std::vector<Character> chars;
    for (size_t a = 0; a < chi_p.size(); ++a) {
        Character chi;
        for (int l = 0; l < k; ++l) {
            int rep = g.class_rep(l);
            int m = g.element_order(rep);
            long w = mod_pow(root, (p - 1) / m, p);
            long winv = mod_inv(w, p);
            CycloNum value;
            long total = 0;
            for (int t = 0; t < m; ++t) {
                long acc = 0;
                for (int s = 0; s < m; ++s) {
                    long cp = chi_p[a][g.class_of(g.power(rep, s))];
                    acc = (acc + mod_mul(cp, mod_pow(winv, (static_cast<long>(t) * s) % m, p), p)) % p;
                }
                long mt = mod_mul(acc, mod_inv(m % p, p), p);
                if (mt > degree[a])
                    throw internal_error("eigenvalue multiplicity exceeds the degree");
                total += mt;
                if (mt != 0)
                    value = value + CycloNum(Rational(mt)) * CycloNum::zeta(m, t);
            }
            if (total != degree[a])
                throw internal_error("eigenvalue multiplicities do not sum to the degree");
            chi.values.push_back(value);
        }
        chars.push_back(std::move(chi));
    }

    // Deterministic order: trivial character first, then by degree and the
    // canonical coordinate key of the value vector.
    const int E = static_cast<int>(g.exponent());
    auto fingerprint = [E](const Character& c) {
        std::string f;
        for (const CycloNum& v : c.values) f += v.key_at(E) + '#';
        return f;
    };
    std::sort(chars.begin(), chars.end(), [&](const Character& x, const Character& y) {
        auto is_trivial = [](const Character& c) {
            for (const CycloNum& v : c.values)
                if (!(v == CycloNum(Rational(1)))) return false;
            return true;
        };
        bool tx = is_trivial(x), ty = is_trivial(y);
        if (tx != ty) return tx;
        BigInt dx = x.dim(), dy = y.dim();
        if (dx != dy) return dx < dy;
        return fingerprint(x) < fingerprint(y);
    });

    CharacterTable table;
    table.irreducibles = std::move(chars);

    // Never hand back an unverified table: sum of squared degrees and both
    // orthogonality relations, all exact.
    BigInt sumsq = 0;
    for (const Character& chi : table.irreducibles) sumsq += chi.dim() * chi.dim();
    if (sumsq != BigInt(n))
        throw internal_error("character degrees violate sum of squares for " + g.name());
    for (size_t a = 0; a < table.irreducibles.size(); ++a)
        for (size_t b = 0; b < table.irreducibles.size(); ++b) {
            Rational ip = inner_product(g, table.irreducibles[a], table.irreducibles[b]);
            if (ip != (a == b ? Rational(1) : Rational(0)))
                throw internal_error("row orthogonality fails for " + g.name());
        }
    for (int l = 0; l < k; ++l)
        for (int m = 0; m < k; ++m) {
            CycloNum s;
            for (const Character& chi : table.irreducibles)
                s = s + chi.values[l] * chi.values[m].conj();
            CycloNum expect = l == m ? CycloNum(Rational(n, g.class_size(l))) : CycloNum();
            if (!(s == expect))
                throw internal_error("column orthogonality fails for " + g.name());
        }
    return table;
}

Character fundamental_character(const FiniteSubgroup& g) {
    Character chi;
    for (int c = 0; c < g.num_classes(); ++c)
        chi.values.push_back(g.elements()[g.class_rep(c)].trace());
    return chi;
}

Character trivial_character(const FiniteSubgroup& g) {
    Character chi;
    chi.values.assign(g.num_classes(), CycloNum(Rational(1)));
    return chi;
}

Character symmetric_power_character(const FiniteSubgroup& g, int k) {
    Character prev = trivial_character(g);
    if (k == 0) return prev;
    Character cur = fundamental_character(g);
    const Character chi_v = cur;
    for (int i = 1; i < k; ++i) {
        Character next;
        for (int c = 0; c < g.num_classes(); ++c)
            next.values.push_back(chi_v.values[c] * cur.values[c] - prev.values[c]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational inner_product(const FiniteSubgroup& g, const Character& a, const Character& b) {
    CycloNum s;
    for (int c = 0; c < g.num_classes(); ++c)
        s = s + CycloNum(Rational(g.class_size(c))) * a.values[c] * b.values[c].conj();
    CycloNum r = CycloNum(Rational(1, g.order())) * s;
    return r.rational_value("character inner product");
}

Character restrict_character(const SubgroupPair& pair, const Character& chi_of_big) {
    Character chi;
    for (int c = 0; c < pair.sub.num_classes(); ++c)
        chi.values.push_back(chi_of_big.values[pair.big_class_of_sub[pair.sub.class_rep(c)]]);
    return chi;
}

Character induce_character(const SubgroupPair& pair, const Character& phi_of_sub) {
    const auto sub_class = pair.sub_class_of_big_element();
    const long gsize = pair.big.order();
    Character chi;
    for (int l = 0; l < pair.big.num_classes(); ++l) {
        int z = pair.big.class_rep(l);
        CycloNum acc;
        for (long x = 0; x < gsize; ++x) {
            int xi = static_cast<int>(x);
            int y = pair.big.mul(pair.big.mul(pair.big.inv(xi), z), xi);
            if (sub_class[y] >= 0) acc = acc + phi_of_sub.values[sub_class[y]];
        }
        chi.values.push_back(CycloNum(Rational(1, pair.sub.order())) * acc);
    }
    return chi;
}

} // namespace mckay
