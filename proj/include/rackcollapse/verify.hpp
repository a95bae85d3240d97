#pragma once

#include "rackcollapse/json_io.hpp"

namespace rackcollapse {

struct CheckResult {
    std::string name;
    bool pass = false;
    ordered_json details;
};

// The named checks behind `verify-paper`, in registry order: field
// identities, the two matrix identities, the smallest-Suzuki exhaustive
// kthulhu proof, the order-4 and split-torus certificates over GF(8), the
// reality rules, the braiding analyses, the smallest-Ree suite, the
// direct-product instance and the involution square witness. h_max <= 1
// skips nothing of the registry (GF(32) parts are field-level only).
std::vector<CheckResult> run_verification_suite(const RunConfig& cfg, unsigned h_max = 1);

ordered_json checks_to_json(const RunConfig& cfg, const std::vector<CheckResult>& checks);

} // namespace rackcollapse
