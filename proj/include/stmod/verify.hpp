#pragma once

// The replication suite: one check per acceptance criterion, shared by the
// command line and the acceptance test.

#include "stmod/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stmod {

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    int lo = -4;
    int hi = 4;
    std::size_t cap_order = 128;
};

struct CheckResult {
    std::string id;
    std::string title;
    bool passed = false;
    Json details;
    double seconds = 0;
};

// In acceptance order: cyclic-ghost-number, gh-cyclic, klein-four,
// quaternion-example, abelian-bounds, duality, target-k, soc-rad,
// nilpotency, bound-chain, heller-dims.
const std::vector<std::string>& verify_ids();
std::string verify_title(const std::string& id);

// Throws InputError for an unknown id.
CheckResult run_check(const std::string& id, const VerifyOptions& opts);

}  // namespace stmod
