#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbg/root_system.hpp"

namespace qbg {

struct SuiteResult {
    std::string suite;
    std::string system;     // "A2"
    std::string parabolic;  // "{1,3}", or "-" when the suite sweeps J itself
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

struct SuiteOptions {
    std::optional<NodeSet> parabolic;  // restrict to one J
    std::optional<Vec> lambda;         // level-zero suite only
    int window = 2;                    // level-zero suite only
};

// quantum-roots, special-nodes, duality, lift, diamond, level-zero, tilted,
// postnikov, connectivity
const std::vector<std::string>& suite_names();
// One-line description naming the property the suite checks.
std::string suite_header(const std::string& suite);
// Throws ConfigError for an unknown suite or an unusable option.
std::vector<SuiteResult> run_suite(const std::string& suite, char type, int rank, const SuiteOptions& opts = {});

struct TypeSpec {
    char type;
    int rank;
};

// "A2", or ranges and lists: "A1..A4,B2..B4,G2". Throws ConfigError.
std::vector<TypeSpec> parse_types(const std::string& text);

}  // namespace qbg
