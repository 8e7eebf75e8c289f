#include "mckay/verify.hpp"

#include <algorithm>
#include <string>

#include "mckay/catalog.hpp"
#include "mckay/character.hpp"
#include "mckay/coxeter.hpp"
#include "mckay/errors.hpp"
#include "mckay/kostant.hpp"

namespace mckay {

namespace {

struct Sink {
    std::vector<CheckResult>& rows;
    std::string prefix;

    void pass_fail(const std::string& name, bool ok, const std::string& detail = "") {
        rows.push_back({prefix + name, ok ? "PASS" : "FAIL", detail});
    }
    void skipped(const std::string& name, const std::string& reason) {
        rows.push_back({prefix + name, "SKIPPED", reason});
    }
    void info(const std::string& name, const std::string& detail) {
        rows.push_back({prefix + name, "INFO", detail});
    }
};

ZMat canon_mat(const McKayQuiver& q, const ZMat& m) {
    int n = q.size();
    ZMat out(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[q.type.to_canonical[i]][q.type.to_canonical[j]] = m[i][j];
    return out;
}

// d^2 sum(d_i) - 3 d sum(d_i^2) + 2 sum(d_i^3) = 0 with d the largest label
bool cubic_identity(const ZVec& labels) {
    BigInt d = 0, s1 = 0, s2 = 0, s3 = 0;
    for (const BigInt& l : labels) {
        if (l > d) d = l;
        s1 += l;
        s2 += l * l;
        s3 += l * l * l;
    }
    return d * d * s1 - 3 * d * s2 + 2 * s3 == 0;
}

// both orthogonality relations plus the dimension sum-of-squares
bool table_sound(const FiniteSubgroup& g, const CharacterTable& t) {
    int nc = g.num_classes();
    BigInt sq = 0;
    for (const auto& d : t.dims()) sq += d * d;
    if (sq != g.order()) return false;
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            Rational ip = inner_product(g, t.irreducibles[i], t.irreducibles[j]);
            if (ip != Rational(i == j ? 1 : 0)) return false;
        }
    for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nc; ++d) {
            CycloNum acc;
            for (int i = 0; i < nc; ++i)
                acc = acc + t.irreducibles[i].values[c] * t.irreducibles[i].values[d].conj();
            CycloNum expect;
            if (c == d) expect = CycloNum(Rational(g.order()) / Rational(g.class_size(c)));
            if (acc != expect) return false;
        }
    return true;
}

std::string mode_tag(QuiverMode m) { return std::string("[") + mode_name(m) + "] "; }

ZVec e0_vec(int n) {
    ZVec e(n, 0);
    e[0] = 1;
    return e;
}

void check_mode(Sink s, const PreparedInput& in, QuiverMode mode,
                const std::string& expected_type, bool a_even_row, bool full) {
    McKayQuiver q = build_quiver(in, mode);
    CoxeterData cd = build_coxeter(q);
    int n = q.size();

    s.pass_fail("type", q.type.name == expected_type, q.type.name);

    bool kernel_ok = z_matvec(z_transpose(q.cartan), q.labels) == ZVec(n, BigInt(0)) &&
                     z_matvec(q.cartan, q.marks) == ZVec(n, BigInt(0));
    s.pass_fail("label kernel", kernel_ok);

    if (mode == QuiverMode::induced) {
        // each induced module is index-of-N-in-G times its label in size
        BigInt index = BigInt(q.pair.big.order()) / q.pair.sub.order();
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            int rep = -1;
            for (size_t l = 0; l < q.ntable.irreducibles.size() && rep < 0; ++l)
                if (q.R[j][l] != 0) rep = (int)l;
            Character ind = induce_character(q.pair, q.ntable.irreducibles[rep]);
            ok = ind.dim() == index * q.labels[j];
        }
        s.pass_fail("label dimensions", ok, "induced dimension = index times label");
    } else {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && q.labels[j] == q.node_dims[j];
        s.pass_fail("label dimensions", ok, "labels = module dimensions");
    }

    s.pass_fail("cubic label identity", cubic_identity(q.labels));

    if (cd.bipartite) {
        int p1 = (int)std::count(cd.part.begin(), cd.part.end(), 1);
        s.pass_fail("bipartition", true,
                    "parts of sizes " + std::to_string(p1) + "+" + std::to_string(n - p1));
    } else {
        s.skipped("bipartition", cd.skip_reason);
    }

    if (!in.spec.is_pair) {
        // class-sum route to the Coxeter number (pairs get this at pair level)
        BigInt dimsum = 0;
        for (const auto& d : q.ntable.dims()) dimsum += d;
        if (cd.bipartite)
            s.pass_fail("class-sum coxeter number", dimsum == cd.h);
        else
            s.skipped("class-sum coxeter number", cd.skip_reason);
    }

    int kb = full ? 40 : 20;
    std::vector<ZVec> xc = xk_character(q, kb);

    bool book = true;
    for (int k = 0; k <= kb && book; ++k) {
        BigInt total = 0;
        for (int i = 0; i < n; ++i) {
            if (xc[k][i] < 0) book = false;
            total += xc[k][i] * q.labels[i];
        }
        book = book && total == k + 1;
    }
    s.pass_fail("bookkeeping", book, "sum of label-weighted multiplicities is k+1");

    if (cd.bipartite) {
        bool vanish = true;
        for (int k = 0; k <= kb && vanish; ++k)
            for (int i = 0; i < n && vanish; ++i)
                if ((cd.part[i] + k) % 2 == 1 && xc[k][i] != 0) vanish = false;
        s.pass_fail("parity vanishing", vanish, "to k=" + std::to_string(kb));
    } else {
        s.skipped("parity vanishing", cd.skip_reason);
    }

    std::string gate_reason = cd.bipartite ? cd.orbit_skip_reason : cd.skip_reason;

    {
        int K = cd.bipartite ? (int)(full ? 2 * cd.h : cd.h) : kb;
        std::vector<ZVec> xr = xk_recursive(q, K);
        bool agree = xk_binomial(q, K) == xr;
        agree = agree && (K <= kb ? std::vector<ZVec>(xc.begin(), xc.begin() + K + 1)
                                  : xk_character(q, K)) == xr;
        if (cd.orbit_ok) {
            agree = agree && xk_orbit(q, cd, K) == xr;
            agree = agree && xk_theorem(q, cd, K) == xr;
            s.pass_fail("method agreement", agree, "five routes to k=" + std::to_string(K));
        } else {
            s.pass_fail("method agreement", agree,
                        "recursion, binomial, character to k=" + std::to_string(K) +
                            "; orbit routes excluded (" + gate_reason + ")");
        }
    }

    if (cd.orbit_ok) {
        // Ca^±i alpha_0 against the reciprocal-sequence expansion
        long top = full ? 2 * cd.h : cd.h;
        std::vector<BigInt> b = b_seq(cd, (int)top);
        std::vector<ZVec> cpow(top + 1);
        cpow[0] = e0_vec(n);
        for (long t = 1; t <= top; ++t) cpow[t] = z_matvec(cd.cox, cpow[t - 1]);
        bool ok = true;
        ZVec ca = e0_vec(n);
        for (long i = 0; i <= top && ok; ++i) {
            ZVec rhs(n, 0);
            for (long j = 0; j <= i; ++j)
                for (int l = 0; l < n; ++l) rhs[l] += b[j] * cpow[i - j][l];
            ok = ca == rhs;
            ca = z_matvec(cd.cox_affine, ca);
        }
        ZVec cainv = z_matvec(cd.cox_affine_inv, e0_vec(n));
        for (long i = 1; i <= top && ok; ++i) {
            ZVec rhs(n, 0);
            for (long j = 0; j < i; ++j) {
                ZVec term = z_matvec(cd.c1, cpow[i - j - 1]);
                for (int l = 0; l < n; ++l) rhs[l] -= b[j] * term[l];
            }
            ok = cainv == rhs;
            cainv = z_matvec(cd.cox_affine_inv, cainv);
        }
        s.pass_fail("orbit identities", ok, "to i=" + std::to_string(top));
    } else {
        s.skipped("orbit identities", gate_reason);
    }

    if (cd.bipartite && cd.h % 2 == 0) {
        bool anti = cd.a[cd.half] == -2;
        for (long i = 1; i < cd.half && anti; ++i) anti = cd.a[i] + cd.a[i + cd.half] == 0;
        s.pass_fail("a-sequence antiperiodicity", anti);
    } else {
        s.skipped("a-sequence antiperiodicity", cd.bipartite ? "odd Coxeter number" : cd.skip_reason);
    }

    if (cd.bipartite) {
        int K = (int)(full ? 4 * cd.h : 2 * cd.h);
        std::vector<BigInt> b = b_seq(cd, K);
        bool ok = b == b_series(cd).expand_int(K);
        for (int k = 1; k <= K && ok; ++k) {
            BigInt acc = 0;
            for (int j = 0; j <= k; ++j) acc += b[j] * a_ext(cd, k - j);
            ok = acc == 0;
        }
        s.pass_fail("reciprocal series", ok, "a(t) b(t) = 1 to degree " + std::to_string(K));
    } else {
        s.skipped("reciprocal series", cd.skip_reason);
    }

    if (cd.bipartite && cd.h % 2 == 0) {
        bool ok = c_increment_poly(cd) == exponents_denominator(cd);
        ok = ok && cd.exp_a * cd.exp_b == 2 * q.pair.sub.order();
        ok = ok && cd.exp_a + cd.exp_b == cd.h + 2;
        s.pass_fail("exponent factorization", ok,
                    "(a,b) = (" + std::to_string(cd.exp_a) + "," + std::to_string(cd.exp_b) + ")");
    } else {
        s.skipped("exponent factorization", cd.bipartite ? "odd Coxeter number" : cd.skip_reason);
    }

    if (cd.orbit_ok) {
        bool ok = cd.istar >= 0;
        for (long k = 0; k <= cd.h && ok; ++k) ok = cd.z[k] == cd.z[cd.h - k];
        if (ok) {
            // the center picks out one node of the parity matching g
            ok = (cd.part[cd.istar] + cd.half) % 2 == 0;
            for (int i = 0; i < n && ok; ++i)
                if (i != cd.istar) ok = cd.z[cd.half][i] == 0;
            ok = ok && cd.z[cd.half][cd.istar] == 2;
        }
        if (ok) {
            for (int i = 0; i < n && ok; ++i) {
                BigInt total = 0;
                for (long k = 0; k <= cd.h; ++k) total += cd.z[k][i];
                ok = total == 2 * q.marks[i];
            }
        }
        s.pass_fail("z palindrome and center", ok,
                    ok ? "center node " + std::to_string(cd.istar) : "");
    } else {
        s.skipped("z palindrome and center", gate_reason);
    }

    std::vector<RationalSeries> mol = molien_series(q);

    if (cd.bipartite && cd.h % 2 == 0) {
        s.pass_fail("node-0 closed form", mol[0].same_function(node0_series(cd)),
                    "(1+t^h)/((1-t^a)(1-t^b))");
    } else {
        s.skipped("node-0 closed form", cd.bipartite ? "odd Coxeter number" : cd.skip_reason);
    }

    if (cd.orbit_ok) {
        int K = (int)(full ? 3 * cd.h : 2 * cd.h);
        std::vector<RationalSeries> gf = genfunc_series(q, cd);
        std::vector<ZVec> oracle = xk_character(q, K);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::vector<BigInt> zc = gf[i].expand_int(K);
            std::vector<BigInt> mc = mol[i].expand_int(K);
            for (int k = 0; k <= K && ok; ++k) ok = zc[k] == oracle[k][i] && mc[k] == oracle[k][i];
        }
        s.pass_fail("generating function equals oracle", ok, "to k=" + std::to_string(K));
    } else {
        s.skipped("generating function equals oracle", gate_reason);
    }

    if (a_even_row && mode == QuiverMode::restricted && cd.bipartite && cd.h % 2 == 0) {
        // the closed-form denominator is not asserted for these rows; just
        // report whether every node's series happens to admit it
        IntPoly d = exponents_denominator(cd);
        bool holds = true;
        for (int i = 0; i < n && holds; ++i)
            holds = poly_divides(mol[i].den, mol[i].num * d);
        s.info("denominator form", holds ? "all nodes admit (1-t^a)(1-t^b)"
                                         : "some node refuses (1-t^a)(1-t^b)");
    }

    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::vector<BigInt> mc = mol[i].expand_int(kb);
            for (int k = 0; k <= kb && ok; ++k) ok = mc[k] == xc[k][i];
        }
        s.pass_fail("oracle agreement", ok, "Molien matches character to k=" + std::to_string(kb));
    }

    {
        RationalSeries total;
        for (int i = 0; i < n; ++i) total = total + q.labels[i] * mol[i];
        RationalSeries full_dim{IntPoly({1}), IntPoly({1, -2, 1})};
        s.pass_fail("Molien totals", total.same_function(full_dim), "1/(1-t)^2");
    }
}

void check_pair_level(Sink s, const CatalogInstance& inst, const PreparedInput& in) {
    McKayQuiver qr = build_quiver(in, QuiverMode::restricted);
    McKayQuiver qi = build_quiver(in, QuiverMode::induced);
    CoxeterData cdr = build_coxeter(qr);

    s.pass_fail("node count parity", qr.size() == qi.size(),
                std::to_string(qr.size()) + " nodes each");

    // restricted dimensions summed over the node set, against the order of
    // the Coxeter element
    BigInt dimsum = 0;
    for (const auto& d : qr.node_dims) dimsum += d;
    if (inst.a_even_row)
        s.pass_fail("class-sum coxeter number", dimsum == cdr.h + 1,
                    "A-even row: sum is h+1, the documented overshoot");
    else
        s.pass_fail("class-sum coxeter number", dimsum == cdr.h);

    if (inst.dual_modes)
        s.pass_fail("mode duality",
                    canon_mat(qr, qr.adjacency) == z_transpose(canon_mat(qi, qi.adjacency)),
                    "restricted adjacency = induced adjacency transposed");
    else
        s.skipped("mode duality", "the two modes' types are not dual");

    if (inst.a_even_row) {
        ZVec lab = qr.to_canonical(qr.labels);
        ZVec mk = qr.to_canonical(qr.marks);
        std::reverse(mk.begin(), mk.end());
        s.pass_fail("label reversal", lab == mk, "canonical labels = reversed marks");
    }

    bool frob = true;
    for (const Character& phi : in.ntable.irreducibles) {
        Character ind = induce_character(in.pair, phi);
        for (const Character& rho : in.gtable.irreducibles) {
            Character res = restrict_character(in.pair, rho);
            if (inner_product(in.pair.big, ind, rho) != inner_product(in.pair.sub, phi, res)) {
                frob = false;
                break;
            }
        }
        if (!frob) break;
    }
    s.pass_fail("Frobenius reciprocity", frob, "all irreducible pairs");
}

} // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
    if (!opt.only_input.empty() && find_instance(opt.only_input) == nullptr)
        throw input_error("input '" + opt.only_input + "' is not in the verification catalog");

    std::vector<CheckResult> rows;
    for (const CatalogInstance& inst : catalog_instances()) {
        if (!opt.only_input.empty() && inst.input != opt.only_input) continue;

        std::vector<std::pair<QuiverMode, std::string>> modes;
        if (inst.is_pair()) {
            if (!opt.has_mode || opt.only_mode == QuiverMode::restricted)
                modes.emplace_back(QuiverMode::restricted, inst.restricted_type);
            if (!opt.has_mode || opt.only_mode == QuiverMode::induced)
                modes.emplace_back(QuiverMode::induced, inst.induced_type);
            if (modes.empty())
                throw input_error("mode 'irreducible' needs a single group, not a pair");
        } else {
            if (opt.has_mode && opt.only_mode != QuiverMode::irreducible)
                throw input_error("a single group only has the irreducible mode");
            modes.emplace_back(QuiverMode::irreducible, inst.irreducible_type);
        }

        PreparedInput in(parse_input(inst.input));
        std::string base = opt.only_input.empty() ? inst.input + " " : "";
        bool tag_modes = modes.size() > 1;
        for (const auto& [mode, expected] : modes) {
            Sink s{rows, base + (tag_modes ? mode_tag(mode) : "")};
            check_mode(s, in, mode, expected, inst.a_even_row, opt.full);
        }
        if (inst.is_pair() && !opt.has_mode)
            check_pair_level(Sink{rows, base}, inst, in);

        Sink s{rows, base};
        bool sound = table_sound(in.pair.sub, in.ntable);
        if (!in.pair.same_group) sound = sound && table_sound(in.pair.big, in.gtable);
        s.pass_fail("character orthogonality", sound, "rows, columns, and dimension squares");
    }
    return rows;
}

bool verify_passed(const std::vector<CheckResult>& rows) {
    for (const CheckResult& r : rows)
        if (r.status == "FAIL") return false;
    return true;
}

std::string format_check(const CheckResult& r) {
    std::string line = r.name + ": " + r.status;
    if (!r.detail.empty()) line += " (" + r.detail + ")";
    return line;
}

} // namespace mckay
