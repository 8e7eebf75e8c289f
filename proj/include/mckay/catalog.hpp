#pragma once

#include <string>
#include <vector>

namespace mckay {

// One cataloged input with its expected affine types. Singles carry the
// irreducible type; pairs carry one type per mode.
struct CatalogInstance {
    std::string input;            // "C4" or "T<O"
    std::string irreducible_type; // singles only
    std::string restricted_type;  // pairs only
    std::string induced_type;     // pairs only

    // the two modes' canonical Cartan matrices are transposes of one another
    bool dual_modes = false;
    // restricted side is an A-even twisted type: orbit machinery is gated,
    // the class sum overshoots the Coxeter number by 1, and the canonical
    // labels read as the reversed marks
    bool a_even_row = false;

    bool is_pair() const { return !restricted_type.empty(); }
};

const std::vector<CatalogInstance>& catalog_instances();

// nullptr when the input names nothing in the catalog.
const CatalogInstance* find_instance(const std::string& input);

} // namespace mckay
