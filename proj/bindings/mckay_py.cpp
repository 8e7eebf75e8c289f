#include <pybind11/pybind11.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mckay/cli.hpp"

namespace py = pybind11;

namespace {

// Run one CLI invocation with --format json and hand back the payload.
// Bad input surfaces as ValueError; identity violations and internal errors
// as RuntimeError.
std::string call_json(std::vector<std::string> args, bool allow_fail_rows = false) {
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream out, err;
    int code = mckay::run_cli(args, out, err);
    if (code == 0 || (allow_fail_rows && code == 3)) return out.str();
    if (code == 2) throw py::value_error(err.str());
    throw std::runtime_error(err.str());
}

void add_mode(std::vector<std::string>& args, const std::string& mode) {
    if (!mode.empty()) {
        args.push_back("--mode");
        args.push_back(mode);
    }
}

} // namespace

PYBIND11_MODULE(_mckay, m) {
    m.doc() = "McKay quivers, Kostant multiplicity vectors and Poincare series for "
              "finite subgroups of SL2(C); every function returns a JSON string";

    m.def(
        "list_json", [] { return call_json({"list"}); },
        "Cataloged inputs with their affine types");

    m.def(
        "quiver_json",
        [](const std::string& input, const std::string& mode) {
            std::vector<std::string> args{"quiver", "--input", input};
            add_mode(args, mode);
            return call_json(std::move(args));
        },
        py::arg("input"), py::arg("mode") = "",
        "Adjacency, Cartan matrix, labels and marks for one input");

    m.def(
        "kostant_json",
        [](const std::string& input, const std::string& mode, int k) {
            std::vector<std::string> args{"kostant", "--input", input};
            add_mode(args, mode);
            if (k >= 0) {
                args.push_back("--k");
                args.push_back(std::to_string(k));
            }
            return call_json(std::move(args));
        },
        py::arg("input"), py::arg("mode") = "", py::arg("k") = -1,
        "Symmetric-power multiplicity vectors x_k with root data and node series");

    m.def(
        "poincare_json",
        [](const std::string& input, const std::string& mode) {
            std::vector<std::string> args{"poincare", "--input", input};
            add_mode(args, mode);
            return call_json(std::move(args));
        },
        py::arg("input"), py::arg("mode") = "", "Per-node Poincare series");

    m.def(
        "verify_json",
        [](const std::string& input, const std::string& mode, const std::string& level) {
            std::vector<std::string> args{"verify", "--level", level};
            if (!input.empty()) {
                args.push_back("--input");
                args.push_back(input);
            }
            add_mode(args, mode);
            return call_json(std::move(args), /*allow_fail_rows=*/true);
        },
        py::arg("input") = "", py::arg("mode") = "", py::arg("level") = "fast",
        "Identity-suite rows as a JSON array");
}
