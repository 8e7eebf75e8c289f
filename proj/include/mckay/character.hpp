#pragma once

#include <vector>

#include "mckay/cyclo.hpp"
#include "mckay/group.hpp"

namespace mckay {

// Class function: one exact cyclotomic value per conjugacy class, indexed as
// the group's classes are.
struct Character {
    std::vector<CycloNum> values;

    BigInt dim() const; // value at the identity class, must be an integer
    bool operator==(const Character& o) const { return values == o.values; }
};

struct CharacterTable {
    std::vector<Character> irreducibles; // trivial first, then by (dim, values)
    std::vector<BigInt> dims() const;
};

// Full table of irreducible characters via class-algebra eigenvectors over a
// prime field, lifted back to exact cyclotomic numbers. Both orthogonality
// relations and sum-of-squares are verified before returning.
CharacterTable character_table(const FiniteSubgroup& g);

// Trace of the defining 2x2 matrix on each class.
Character fundamental_character(const FiniteSubgroup& g);

// Character of the k-th symmetric power of the defining module, through the
// three-term recursion p_{k+1} = chi_V * p_k - p_{k-1}.
Character symmetric_power_character(const FiniteSubgroup& g, int k);

Character trivial_character(const FiniteSubgroup& g);

// <a, b> = (1/|G|) sum over classes |C| a(C) conj(b(C)); exact.
Rational inner_product(const FiniteSubgroup& g, const Character& a, const Character& b);

// Restriction of a character of G to N along the pair's embedding.
Character restrict_character(const SubgroupPair& pair, const Character& chi_of_big);

// Induction from N to G (Frobenius formula).
Character induce_character(const SubgroupPair& pair, const Character& phi_of_sub);

} // namespace mckay
