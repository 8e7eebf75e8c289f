#pragma once

#include <string>
#include <vector>

#include "mckay/linalg.hpp"

namespace mckay {

// One affine (generalized) Cartan matrix in its canonical node ordering,
// together with its primitive kernel vectors: marks (kernel of the matrix)
// and labels (kernel of the transpose).
struct AffineType {
    std::string name;    // "A2^(2)", "E8^(1)", "D4^(3)", ...
    ZMat cartan;
    ZVec marks;
    ZVec labels;
    long coxeter_number; // order of the Coxeter element built from the diagram
};

// Every diagram this tool recognizes, built once.
const std::vector<AffineType>& affine_catalog();

const AffineType& affine_type_by_name(const std::string& name);

// Result of matching a quiver's Cartan matrix against the catalog:
// to_canonical[i] is the canonical node for quiver node i.
struct TypeMatch {
    std::string name;
    std::vector<int> to_canonical;
};

// Find the unique catalog entry permutation-equivalent to this Cartan matrix
// (labels must transport along the same permutation, which pins it down).
// Preference for mapping node 0 to the canonical affine node keeps reordered
// output stable. Unrecognized diagrams are a user-input error.
TypeMatch detect_type(const ZMat& cartan, const ZVec& labels);

// Primitive positive kernel vector of an affine Cartan matrix; throws
// input_error when the kernel is not a line or has mixed signs.
ZVec affine_kernel_vector(const ZMat& cartan, const char* what);

} // namespace mckay
