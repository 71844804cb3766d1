#pragma once

// Exhaustive invariant suites. Each suite sweeps every instance up to its
// size bounds and counts checks and failures; nothing is sampled except the
// random word sweep, which uses a fixed seed.

#include "tenv/backends/degree.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tenv {

struct SuiteOptions {
    /// Carrier bound. Suites derive their own sweeps from it; see README.
    std::uint32_t max_size = 3;
    unsigned threads = 1;
};

struct SuiteReport {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// The first few failure descriptions.
    std::vector<std::string> messages;
    double seconds = 0;

    bool passed() const { return failures == 0 && checks > 0; }
};

/// Suite names in the order `verify --all` runs them.
const std::vector<std::string>& suite_names();

/// The degree functions the axioms hold for on a backend.
std::vector<Degree> applicable_degrees(Backend b);

/// Throws ParseError for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opt);
/// Runs the suites on up to opt.threads workers; reports come back in input order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt);

}  // namespace tenv
