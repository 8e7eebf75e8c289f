#include "mckay/catalog.hpp"

namespace mckay {

const std::vector<CatalogInstance>& catalog_instances() {
    static const std::vector<CatalogInstance> table = [] {
        std::vector<CatalogInstance> t;
        auto single = [&](const char* in, const char* type) {
            CatalogInstance c;
            c.input = in;
            c.irreducible_type = type;
            t.push_back(c);
        };
        auto pair = [&](const char* in, const char* res, const char* ind, bool dual, bool aeven) {
            CatalogInstance c;
            c.input = in;
            c.restricted_type = res;
            c.induced_type = ind;
            c.dual_modes = dual;
            c.a_even_row = aeven;
            t.push_back(c);
        };
        single("C2", "A1^(1)");
        single("C3", "A2^(1)");
        single("C4", "A3^(1)");
        single("C5", "A4^(1)");
        single("C6", "A5^(1)");
        single("C7", "A6^(1)");
        single("C8", "A7^(1)");
        single("D2", "D4^(1)");
        single("D3", "D5^(1)");
        single("D4", "D6^(1)");
        single("D5", "D7^(1)");
        single("T", "E6^(1)");
        single("O", "E7^(1)");
        single("I", "E8^(1)");
        pair("D2<D4", "A5^(2)", "B3^(1)", true, false);
        pair("D3<D6", "A7^(2)", "B4^(1)", true, false);
        pair("D4<D8", "A9^(2)", "B5^(1)", true, false);
        pair("C4<D2", "D3^(2)", "C2^(1)", true, false);
        pair("C6<D3", "D4^(2)", "C3^(1)", true, false);
        pair("C8<D4", "D5^(2)", "C4^(1)", true, false);
        pair("C10<D5", "D6^(2)", "C5^(1)", true, false);
        pair("C4<D4", "A4^(2)", "C2^(1)", false, true);
        pair("C6<D6", "A6^(2)", "C3^(1)", false, true);
        pair("C8<D8", "A8^(2)", "C4^(1)", false, true);
        pair("C2<D2", "A2^(2)", "A1^(1)", false, true);
        pair("T<O", "E6^(2)", "F4^(1)", true, false);
        pair("D2<T", "D4^(3)", "G2^(1)", true, false);
        return t;
    }();
    return table;
}

const CatalogInstance* find_instance(const std::string& input) {
    for (const CatalogInstance& c : catalog_instances())
        if (c.input == input) return &c;
    return nullptr;
}

} // namespace mckay
