#pragma once

#include <map>
#include <string>
#include <vector>

#include "mckay/cyclo.hpp"

namespace mckay {

// 2x2 matrix over a cyclotomic field; every group element here is one of
// these (a unitary of determinant 1, though we never need to assume it).
struct Mat2 {
    CycloNum a, b, c, d; // [[a, b], [c, d]]

    static Mat2 identity();
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;
    CycloNum trace() const { return a + d; }
    bool operator==(const Mat2& o) const;
    // Canonical per-entry key at conductor M; used to hash elements during
    // closure enumeration and to match elements across two groups.
    std::string key_at(int M) const;
};

// Which finite subgroup of SL(2, C) to build. The five families: cyclic,
// binary dihedral (order 4n), and the binary tetrahedral / octahedral /
// icosahedral groups.
struct SubgroupSpec {
    std::string name;           // e.g. "C4", "D3", "T", "O", "I"
    long order = 0;
    int conductor = 1;          // field the generator entries live in
    std::vector<Mat2> generators;
};

SubgroupSpec cyclic_spec(long n);
SubgroupSpec binary_dihedral_spec(long n);
SubgroupSpec binary_tetrahedral_spec();
SubgroupSpec binary_octahedral_spec();
SubgroupSpec binary_icosahedral_spec();

// "C4" / "D3" / "T" / "O" / "I" -> spec; anything else is a user input error.
SubgroupSpec parse_group_name(const std::string& name);

// A concrete finite matrix group: elements enumerated breadth-first from the
// identity (so indices are deterministic and the identity is index 0), with
// full multiplication/inverse tables and conjugacy classes.
class FiniteSubgroup {
  public:
    explicit FiniteSubgroup(const SubgroupSpec& spec);

    const std::string& name() const { return name_; }
    long order() const { return static_cast<long>(elements_.size()); }
    int conductor() const { return conductor_; }
    const std::vector<Mat2>& elements() const { return elements_; }

    int mul(int i, int j) const { return mul_[i][j]; }
    int inv(int i) const { return inv_[i]; }
    int power(int i, long k) const;

    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int i) const { return class_of_[i]; }
    // Smallest enumeration index in the class — the canonical representative.
    int class_rep(int c) const { return classes_[c][0]; }
    long class_size(int c) const { return static_cast<long>(classes_[c].size()); }
    int class_of_inverse(int c) const { return class_of_[inv_[classes_[c][0]]]; }

    int element_order(int i) const { return element_order_[i]; }
    long exponent() const { return exponent_; }

    // Index of the element with this key (at this group's conductor), or -1.
    int index_of_key(const std::string& key) const;

  private:
    std::string name_;
    int conductor_;
    std::vector<Mat2> elements_;
    std::map<std::string, int> key_to_index_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<int> element_order_;
    long exponent_;
};

// N inside G with the element-index embedding, N verified normal. The
// N = G case is allowed (identity embedding).
struct SubgroupPair {
    FiniteSubgroup sub; // N
    FiniteSubgroup big; // G
    std::vector<int> into_big;         // N element index -> G element index
    std::vector<int> big_class_of_sub; // N element index -> G class
    bool same_group;

    SubgroupPair(const SubgroupSpec& nspec, const SubgroupSpec& gspec);

    // G element index -> N class of that element, -1 off N. Per element, not
    // per G-class: one G-class can meet several N-classes.
    std::vector<int> sub_class_of_big_element() const;
};

} // namespace mckay
