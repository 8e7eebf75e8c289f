#include "mckay/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mckay/errors.hpp"

namespace mckay {

const char* mode_name(QuiverMode m) {
    switch (m) {
        case QuiverMode::irreducible: return "irreducible";
        case QuiverMode::restricted: return "restricted";
        case QuiverMode::induced: return "induced";
    }
    return "?";
}

QuiverMode parse_mode(const std::string& s) {
    if (s == "irreducible") return QuiverMode::irreducible;
    if (s == "restricted") return QuiverMode::restricted;
    if (s == "induced") return QuiverMode::induced;
    throw input_error("unknown mode '" + s +
                      "' (expected irreducible, restricted, or induced)");
}

namespace {

long family_param(const SubgroupSpec& s) {
    // Cn has order n, Dn has order 4n.
    return s.name[0] == 'C' ? s.order : s.order / 4;
}

bool pair_supported(const SubgroupSpec& n, const SubgroupSpec& g) {
    if (n.name == "T" && g.name == "O") return true;
    if (n.name == "D2" && g.name == "T") return true;
    if (n.name[0] == 'C' && g.name[0] == 'D') {
        long k = family_param(n), m = family_param(g);
        return k % 2 == 0 && (k == 2 * m || k == m); // C_2m < D_m or C_2m < D_2m
    }
    if (n.name[0] == 'D' && g.name[0] == 'D')
        return family_param(g) == 2 * family_param(n); // D_m < D_2m
    return false;
}

} // namespace

InputSpec parse_input(const std::string& s) {
    InputSpec in;
    auto lt = s.find('<');
    if (lt == std::string::npos) {
        in.nspec = parse_group_name(s);
        in.gspec = in.nspec;
        in.is_pair = false;
        in.text = in.nspec.name;
        return in;
    }
    in.nspec = parse_group_name(s.substr(0, lt));
    in.gspec = parse_group_name(s.substr(lt + 1));
    in.is_pair = true;
    in.text = in.nspec.name + "<" + in.gspec.name;
    if (in.nspec.name == in.gspec.name)
        throw input_error("write the group once for the N = G case, not '" + in.text + "'");
    if (!pair_supported(in.nspec, in.gspec))
        throw input_error("pair '" + in.text + "' is not in the supported catalog");
    return in;
}

QuiverMode default_mode(const InputSpec& in) {
    return in.is_pair ? QuiverMode::restricted : QuiverMode::irreducible;
}

PreparedInput::PreparedInput(const InputSpec& in)
    : spec(in),
      pair(in.nspec, in.gspec),
      ntable(character_table(pair.sub)),
      gtable(pair.same_group ? ntable : character_table(pair.big)) {}

Character McKayQuiver::node_character(int j) const {
    Character chi;
    chi.values.assign(pair.sub.num_classes(), CycloNum());
    for (size_t f = 0; f < ntable.irreducibles.size(); ++f) {
        if (R[j][f] == 0) continue;
        BigInt m = to_integer(R[j][f], "node content");
        for (int c = 0; c < pair.sub.num_classes(); ++c)
            chi.values[c] =
                chi.values[c] + CycloNum(Rational(m)) * ntable.irreducibles[f].values[c];
    }
    return chi;
}

ZVec McKayQuiver::to_canonical(const ZVec& x) const {
    ZVec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[type.to_canonical[i]] = x[i];
    return y;
}

namespace {

// Multiplicity of each irreducible of N inside the class function chi.
std::vector<BigInt> decompose(const FiniteSubgroup& g, const CharacterTable& table,
                              const Character& chi) {
    std::vector<BigInt> m;
    for (const Character& irr : table.irreducibles) {
        Rational ip = inner_product(g, chi, irr);
        m.push_back(to_integer(ip, "decomposition multiplicity"));
    }
    return m;
}

Character tensor_with_fundamental(const FiniteSubgroup& g, const Character& chi) {
    Character f = fundamental_character(g);
    Character r;
    for (int c = 0; c < g.num_classes(); ++c) r.values.push_back(f.values[c] * chi.values[c]);
    return r;
}

} // namespace

McKayQuiver build_quiver(const PreparedInput& in, QuiverMode mode) {
    const bool single = !in.spec.is_pair;
    if (single && mode != QuiverMode::irreducible)
        throw input_error(std::string(mode_name(mode)) +
                          " mode needs a pair N<G; for a single group use irreducible");
    if (!single && mode == QuiverMode::irreducible)
        throw input_error("irreducible mode applies to a single group, not a pair");

    McKayQuiver q{mode, in.spec.text, in.pair, in.ntable, in.gtable};
    const FiniteSubgroup& N = q.pair.sub;
    const size_t nirr = q.ntable.irreducibles.size();

    if (mode == QuiverMode::irreducible) {
        // one node per irreducible of N, in table order (trivial first)
        q.R = q_identity(nirr);
        for (const Character& chi : q.ntable.irreducibles) q.node_dims.push_back(chi.dim());
    } else if (mode == QuiverMode::restricted) {
        // nodes = distinct restrictions of the irreducibles of G, in order of
        // first appearance (the trivial restriction comes first)
        std::map<std::string, int> seen;
        for (const Character& chi : q.gtable.irreducibles) {
            Character res = restrict_character(q.pair, chi);
            std::vector<BigInt> m = decompose(N, q.ntable, res);
            std::string key;
            for (const BigInt& v : m) key += v.str() + ',';
            if (seen.emplace(key, q.size()).second) {
                QVec row;
                for (const BigInt& v : m) row.emplace_back(v);
                q.R.push_back(std::move(row));
                q.node_dims.push_back(res.dim());
            }
        }
    } else {
        // nodes = orbits of the conjugation action of G on the irreducibles
        // of N, ordered by their smallest table index (trivial orbit first)
        const auto sub_class = q.pair.sub_class_of_big_element();
        const int E = static_cast<int>(N.exponent());
        std::map<std::string, int> irr_by_key;
        for (size_t f = 0; f < nirr; ++f) {
            std::string key;
            for (const CycloNum& v : q.ntable.irreducibles[f].values) key += v.key_at(E) + '#';
            irr_by_key[key] = static_cast<int>(f);
        }
        std::vector<int> orbit_of(nirr);
        for (size_t f = 0; f < nirr; ++f) orbit_of[f] = static_cast<int>(f);
        std::function<int(int)> find = [&](int x) {
            while (orbit_of[x] != x) x = orbit_of[x] = orbit_of[orbit_of[x]];
            return x;
        };
        for (long g = 0; g < q.pair.big.order(); ++g) {
            int gi = static_cast<int>(g);
            for (size_t f = 0; f < nirr; ++f) {
                // conjugate character: n -> chi(g n g^-1), evaluated per N-class
                std::string key;
                for (int c = 0; c < N.num_classes(); ++c) {
                    int y = q.pair.big.mul(
                        q.pair.big.mul(gi, q.pair.into_big[N.class_rep(c)]),
                        q.pair.big.inv(gi));
                    if (sub_class[y] < 0)
                        throw internal_error("conjugate left the normal subgroup");
                    key += q.ntable.irreducibles[f].values[sub_class[y]].key_at(E) + '#';
                }
                auto it = irr_by_key.find(key);
                if (it == irr_by_key.end())
                    throw internal_error("conjugated character is not in the table");
                int a = find(static_cast<int>(f)), b = find(it->second);
                if (a != b) orbit_of[std::max(a, b)] = std::min(a, b);
            }
        }
        std::map<int, std::vector<int>> orbits; // root -> sorted members
        for (size_t f = 0; f < nirr; ++f) orbits[find(static_cast<int>(f))].push_back(static_cast<int>(f));
        for (auto& [root, members] : orbits) {
            QVec row(nirr, Rational(0));
            for (int f : members) row[f] = 1;
            q.R.push_back(std::move(row));
            q.node_dims.push_back(q.ntable.irreducibles[members[0]].dim());
        }
    }

    const int nn = q.size();

    // adjacency rows: decompose V (x) node_j over the irreducibles of N and
    // express the result in node coordinates
    QMat rrt_inv;
    if (mode == QuiverMode::restricted)
        rrt_inv = q_inverse(q_mul(q.R, q_transpose(q.R)));
    q.adjacency.assign(nn, ZVec(nn, BigInt(0)));
    for (int j = 0; j < nn; ++j) {
        // induced nodes tensor through one orbit representative: inducing
        // V (x) phi gives V (x) Ind(phi), and conjugate representatives give
        // the same row because the orbits are G-stable
        Character base;
        if (mode == QuiverMode::induced) {
            int rep = -1;
            for (size_t f = 0; f < nirr && rep < 0; ++f)
                if (q.R[j][f] != 0) rep = static_cast<int>(f);
            base = q.ntable.irreducibles[rep];
        } else {
            base = q.node_character(j);
        }
        Character vj = tensor_with_fundamental(N, base);
        std::vector<BigInt> m = decompose(N, q.ntable, vj);
        QVec mq;
        for (const BigInt& v : m) mq.emplace_back(v);
        if (mode == QuiverMode::restricted) {
            // x = (R R^T)^-1 R m is the unique node combination with
            // R^T x = m; both existence and integrality are then checked
            QVec x = q_matvec(q_mul(rrt_inv, q.R), mq);
            QVec back = q_matvec(q_transpose(q.R), x);
            if (back != mq)
                throw identity_error(
                    "tensoring a restricted node left the span of restricted nodes");
            for (int i = 0; i < nn; ++i) {
                BigInt e = to_integer(x[i], "restricted adjacency entry");
                if (e < 0) throw identity_error("negative restricted adjacency entry");
                q.adjacency[j][i] = e;
            }
        } else {
            // irreducible: R is the identity; induced: sum multiplicities
            // over each orbit. Both are rows of R m.
            QVec x = q_matvec(q.R, mq);
            for (int i = 0; i < nn; ++i)
                q.adjacency[j][i] = to_integer(x[i], "adjacency entry");
        }
    }

    for (int i = 0; i < nn; ++i)
        if (q.adjacency[i][i] != 0)
            throw input_error("V contains a node's own module: the quiver has a "
                              "self-loop and is outside the affine catalog");

    q.cartan.assign(nn, ZVec(nn, BigInt(0)));
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j)
            q.cartan[i][j] = (i == j ? BigInt(2) : BigInt(0)) - q.adjacency[j][i];

    // the node dimensions must be exactly the primitive transpose-kernel
    q.labels = affine_kernel_vector(z_transpose(q.cartan), "quiver labels");
    if (q.labels != q.node_dims)
        throw identity_error("node dimensions disagree with the label kernel");
    q.marks = affine_kernel_vector(q.cartan, "quiver marks");
    q.type = detect_type(q.cartan, q.labels);
    return q;
}

} // namespace mckay
