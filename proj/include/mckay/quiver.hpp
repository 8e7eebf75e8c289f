#pragma once

#include <string>
#include <vector>

#include "mckay/character.hpp"
#include "mckay/dynkin.hpp"
#include "mckay/group.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

// How quiver nodes are formed from a pair N normal in G:
//   irreducible — nodes are the irreducibles of N (requires N = G),
//   restricted  — nodes are the distinct restrictions to N of irreducibles of G,
//   induced     — nodes are the G-orbits on the irreducibles of N.
enum class QuiverMode { irreducible, restricted, induced };

const char* mode_name(QuiverMode m);
QuiverMode parse_mode(const std::string& s);

// Parsed user input: a single group "C4" (N = G) or a pair "C4<D2".
struct InputSpec {
    SubgroupSpec nspec;
    SubgroupSpec gspec;
    bool is_pair = false;
    std::string text;
};

// Accepts group names and the cataloged pair shapes C2n<Dn, C2n<D2n,
// Dm<D2m, D2<T, T<O; everything else is rejected.
InputSpec parse_input(const std::string& s);

QuiverMode default_mode(const InputSpec& in);

// Groups and character tables built once per input, shared by the per-mode
// quivers.
struct PreparedInput {
    InputSpec spec;
    SubgroupPair pair;
    CharacterTable ntable; // table of N
    CharacterTable gtable; // table of G (same object as ntable when N = G)

    explicit PreparedInput(const InputSpec& in);
};

// The McKay-type quiver of V acting on the chosen node set.
//   adjacency[j][i] = multiplicity of node i in V tensor (node j)
//   cartan = 2I - adjacency^T
//   labels = node dimensions = primitive kernel of cartan^T (verified)
//   marks  = primitive kernel of cartan
struct McKayQuiver {
    QuiverMode mode;
    std::string input_name;
    SubgroupPair pair;
    CharacterTable ntable;
    CharacterTable gtable;

    // R[node][j] = multiplicity of the j-th irreducible of N inside the
    // node's module; every mode's bookkeeping runs through this matrix.
    QMat R;
    std::vector<BigInt> node_dims;
    ZMat adjacency;
    ZMat cartan;
    ZVec labels;
    ZVec marks;
    TypeMatch type;

    int size() const { return static_cast<int>(node_dims.size()); }
    // Character of node j as a class function on N (R row against the table).
    Character node_character(int j) const;
    // Reorder a coordinate vector from quiver order into the canonical node
    // order of the detected type.
    ZVec to_canonical(const ZVec& x) const;
};

McKayQuiver build_quiver(const PreparedInput& in, QuiverMode mode);

} // namespace mckay
