#include "mckay/dynkin.hpp"

#include <algorithm>
#include <map>

#include "mckay/errors.hpp"

namespace mckay {

ZVec affine_kernel_vector(const ZMat& cartan, const char* what) {
    QMat q(cartan.size(), QVec(cartan.size()));
    for (size_t i = 0; i < cartan.size(); ++i)
        for (size_t j = 0; j < cartan.size(); ++j) q[i][j] = Rational(cartan[i][j]);
    auto basis = nullspace(std::move(q));
    if (basis.size() != 1)
        throw input_error(std::string(what) + ": kernel is not a line (dimension " +
                          std::to_string(basis.size()) + ")");
    ZVec v = primitive_integer(basis[0]);
    for (const BigInt& x : v)
        if (x <= 0)
            throw input_error(std::string(what) + ": kernel vector is not positive");
    return v;
}

namespace {

// Path with single bonds everywhere; family builders then adjust the ends.
ZMat chain(int size) {
    ZMat c(size, ZVec(size, BigInt(0)));
    for (int i = 0; i < size; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < size; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
}

void bond(ZMat& c, int i, int j, long cij = -1, long cji = -1) {
    c[i][j] = cij;
    c[j][i] = cji;
}

AffineType make(std::string name, ZMat cartan, long h) {
    AffineType t;
    t.name = std::move(name);
    t.marks = affine_kernel_vector(cartan, t.name.c_str());
    t.labels = affine_kernel_vector(z_transpose(cartan), t.name.c_str());
    t.cartan = std::move(cartan);
    t.coxeter_number = h;
    return t;
}

void expect_multiset(const AffineType& t, const ZVec& v, std::vector<long> want) {
    std::vector<long> got;
    for (const BigInt& x : v) got.push_back(static_cast<long>(x));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
        throw internal_error("catalog construction broke for " + t.name);
}

std::vector<AffineType> build_catalog() {
    std::vector<AffineType> v;

    // ---- untwisted -----------------------------------------------------
    v.push_back(make("A1^(1)", ZMat{{2, -2}, {-2, 2}}, 2));
    for (int n = 2; n <= 12; ++n) { // cycle on n+1 nodes
        ZMat c = chain(n + 1);
        bond(c, 0, n);
        v.push_back(make("A" + std::to_string(n) + "^(1)", std::move(c), n + 1));
    }
    for (int n = 3; n <= 12; ++n) { // fork at one end, double bond at the other
        ZMat c = chain(n + 1);
        bond(c, 0, 1, 0, 0);
        bond(c, 0, 2);
        bond(c, n - 1, n, -1, -2);
        v.push_back(make("B" + std::to_string(n) + "^(1)", std::move(c), 2 * n));
    }
    for (int n = 2; n <= 12; ++n) { // double bonds pointing inward at both ends
        ZMat c = chain(n + 1);
        bond(c, 0, 1, -1, -2);
        bond(c, n - 1, n, -2, -1);
        v.push_back(make("C" + std::to_string(n) + "^(1)", std::move(c), 2 * n));
    }
    for (int n = 4; n <= 12; ++n) { // forks at both ends
        ZMat c = chain(n + 1);
        bond(c, 0, 1, 0, 0);
        bond(c, 0, 2);
        bond(c, n - 1, n, 0, 0);
        bond(c, n - 2, n);
        v.push_back(make("D" + std::to_string(n) + "^(1)", std::move(c), 2 * n - 2));
    }
    {
        ZMat c(7, ZVec(7, BigInt(0)));
        for (int i = 0; i < 7; ++i) c[i][i] = 2;
        bond(c, 1, 2);
        bond(c, 2, 3);
        bond(c, 3, 4);
        bond(c, 4, 5);
        bond(c, 3, 6);
        bond(c, 6, 0);
        AffineType t = make("E6^(1)", std::move(c), 12);
        expect_multiset(t, t.marks, {1, 1, 1, 2, 2, 2, 3});
        v.push_back(std::move(t));
    }
    {
        ZMat c = chain(8);
        bond(c, 6, 7, 0, 0);
        bond(c, 3, 7);
        AffineType t = make("E7^(1)", std::move(c), 18);
        expect_multiset(t, t.marks, {1, 1, 2, 2, 2, 3, 3, 4});
        v.push_back(std::move(t));
    }
    {
        ZMat c = chain(9);
        bond(c, 7, 8, 0, 0);
        bond(c, 5, 8);
        AffineType t = make("E8^(1)", std::move(c), 30);
        expect_multiset(t, t.marks, {1, 2, 2, 3, 3, 4, 4, 5, 6});
        v.push_back(std::move(t));
    }
    {
        ZMat c = chain(5);
        bond(c, 2, 3, -1, -2);
        AffineType t = make("F4^(1)", std::move(c), 12);
        expect_multiset(t, t.labels, {1, 1, 2, 2, 3});
        v.push_back(std::move(t));
    }
    {
        ZMat c = chain(3);
        bond(c, 1, 2, -1, -3);
        AffineType t = make("G2^(1)", std::move(c), 6);
        expect_multiset(t, t.labels, {1, 2, 1});
        v.push_back(std::move(t));
    }

    // ---- twisted -------------------------------------------------------
    v.push_back(make("A2^(2)", ZMat{{2, -4}, {-1, 2}}, 2));
    for (int n = 2; n <= 6; ++n) { // path, both end bonds doubled inward-to-out
        ZMat c = chain(n + 1);
        bond(c, 0, 1, -2, -1);
        bond(c, n - 1, n, -2, -1);
        AffineType t = make("A" + std::to_string(2 * n) + "^(2)", std::move(c), 2 * n);
        std::vector<long> want_marks(n, 2);
        want_marks.push_back(1);
        expect_multiset(t, t.marks, want_marks);
        v.push_back(std::move(t));
    }
    for (int n = 3; n <= 6; ++n) { // fork at one end, doubled bond at the other
        ZMat c = chain(n + 1);
        bond(c, 0, 1, 0, 0);
        bond(c, 0, 2);
        bond(c, n - 1, n, -2, -1);
        v.push_back(make("A" + std::to_string(2 * n - 1) + "^(2)", std::move(c), 2 * n));
    }
    for (int n = 2; n <= 6; ++n) { // path with both doubled bonds pointing outward
        ZMat c = chain(n + 1);
        bond(c, 0, 1, -2, -1);
        bond(c, n, n - 1, -2, -1);
        AffineType t = make("D" + std::to_string(n + 1) + "^(2)", std::move(c), 2 * n);
        expect_multiset(t, t.marks, std::vector<long>(n + 1, 1));
        v.push_back(std::move(t));
    }
    {
        ZMat c = chain(5);
        bond(c, 2, 3, -2, -1);
        AffineType t = make("E6^(2)", std::move(c), 12);
        expect_multiset(t, t.labels, {1, 2, 3, 4, 2});
        v.push_back(std::move(t));
    }
    {
        ZMat c = chain(3);
        bond(c, 1, 2, -3, -1);
        AffineType t = make("D4^(3)", std::move(c), 6);
        expect_multiset(t, t.labels, {1, 2, 3});
        v.push_back(std::move(t));
    }
    return v;
}

} // namespace

const std::vector<AffineType>& affine_catalog() {
    static const std::vector<AffineType> catalog = build_catalog();
    return catalog;
}

const AffineType& affine_type_by_name(const std::string& name) {
    for (const AffineType& t : affine_catalog())
        if (t.name == name) return t;
    throw input_error("unknown affine type '" + name + "'");
}

namespace {

// Permutation-invariant description of a node: its label/mark and the
// multiset of bonds (with the label/mark on the far end).
std::string node_signature(const ZMat& c, const ZVec& labels, const ZVec& marks, size_t i) {
    std::vector<std::string> bonds;
    for (size_t j = 0; j < c.size(); ++j) {
        if (j == i || c[i][j] == 0) continue;
        bonds.push_back(c[i][j].str() + ',' + c[j][i].str() + ',' + labels[j].str() +
                        ',' + marks[j].str());
    }
    std::sort(bonds.begin(), bonds.end());
    std::string s = labels[i].str() + '|' + marks[i].str() + '|';
    for (const auto& b : bonds) s += b + ';';
    return s;
}

bool extend_match(const ZMat& qc, const ZMat& cc,
                  const std::vector<std::vector<int>>& candidates, size_t i,
                  std::vector<int>& perm, std::vector<bool>& used) {
    if (i == qc.size()) return true;
    for (int cand : candidates[i]) {
        if (used[cand]) continue;
        bool ok = true;
        for (size_t j = 0; j < i && ok; ++j)
            ok = qc[i][j] == cc[cand][perm[j]] && qc[j][i] == cc[perm[j]][cand];
        if (!ok) continue;
        perm[i] = cand;
        used[cand] = true;
        if (extend_match(qc, cc, candidates, i + 1, perm, used)) return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

TypeMatch detect_type(const ZMat& cartan, const ZVec& labels) {
    const size_t n = cartan.size();
    ZVec marks = affine_kernel_vector(cartan, "diagram");
    {
        // labels must be the transpose-kernel this matrix actually has
        ZVec expect = affine_kernel_vector(z_transpose(cartan), "diagram");
        if (expect != labels)
            throw input_error("labels do not match the Cartan matrix kernel");
    }
    std::vector<std::string> qsig(n);
    for (size_t i = 0; i < n; ++i) qsig[i] = node_signature(cartan, labels, marks, i);

    for (const AffineType& t : affine_catalog()) {
        if (t.cartan.size() != n) continue;
        std::vector<std::string> csig(n);
        for (size_t i = 0; i < n; ++i)
            csig[i] = node_signature(t.cartan, t.labels, t.marks, i);
        std::vector<std::vector<int>> candidates(n);
        bool feasible = true;
        for (size_t i = 0; i < n && feasible; ++i) {
            for (size_t j = 0; j < n; ++j)
                if (qsig[i] == csig[j]) candidates[i].push_back(static_cast<int>(j));
            // keep node 0 on the canonical affine node when possible, so the
            // canonical reordering of results is reproducible
            if (i == 0)
                std::stable_partition(candidates[0].begin(), candidates[0].end(),
                                      [](int x) { return x == 0; });
            feasible = !candidates[i].empty();
        }
        if (!feasible) continue;
        std::vector<int> perm(n, -1);
        std::vector<bool> used(n, false);
        if (extend_match(cartan, t.cartan, candidates, 0, perm, used))
            return TypeMatch{t.name, perm};
    }
    throw input_error("diagram is outside the recognized affine catalog");
}

} // namespace mckay
