#pragma once

#include "rpa/rpa.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpalab {

struct SuiteInfo {
    std::string name;
    std::string summary;
};

/// Registered property suites, in display order.
const std::vector<SuiteInfo> &suites();

struct SuiteReport {
    std::string suite;
    std::string filter;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    /// The first failing case in full: case index, its own seed, the law and
    /// every input serialized.
    std::optional<rpa::Json> counterexample;
};

rpa::Json to_json(const SuiteReport &report);

/// Case k draws from a generator seeded by mixing `seed` with k, so reports
/// are reproducible and independent of evaluation order. Throws
/// FrontendError(E_NAME) for an unknown suite.
SuiteReport run_suite(const std::string &name, std::uint64_t cases, std::uint64_t seed, const rpa::Filter &filter);

} // namespace rpalab
