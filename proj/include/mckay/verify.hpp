#pragma once

#include <string>
#include <vector>

#include "mckay/quiver.hpp"

namespace mckay {

// One verification row: an identity (or documented exclusion) with its
// outcome. INFO rows report observations that are deliberately not asserted.
struct CheckResult {
    std::string name;
    std::string status; // "PASS", "FAIL", "SKIPPED", "INFO"
    std::string detail; // reason or supplementary value; may be empty
};

struct VerifyOptions {
    bool full = false;      // full truncation depths instead of the fast ones
    std::string only_input; // restrict to one cataloged input; empty = all
    bool has_mode = false;  // restrict further to a single mode
    QuiverMode only_mode = QuiverMode::irreducible;
};

// Run the whole identity suite over the catalog (or the selected slice).
// Deterministic row order; never throws for identity failures — those
// become FAIL rows. Unknown --input selections throw input_error.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

// True when no row failed.
bool verify_passed(const std::vector<CheckResult>& rows);

// "name: STATUS" or "name: STATUS (detail)".
std::string format_check(const CheckResult& r);

} // namespace mckay
