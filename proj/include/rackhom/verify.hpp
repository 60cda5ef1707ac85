#pragma once

#include "rackhom/basis.hpp"
#include "rackhom/serialize.hpp"
#include "rackhom/shelf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rackhom {

struct VerifyOptions {
    int max_degree = 4;
    // Fixed field for the cochain suites; by default they run over Z, F_2, F_3.
    std::optional<unsigned long> modulus;
    // Extra coefficient system for the complex suite (trivial and self always run).
    std::optional<CoefficientSystem> coeff;
    // Total-degree cap for identities over pairs/triples of cocycles; defaults
    // to max_degree.
    std::optional<int> cocycle_degree;
    ResourceLimits limits;
    std::uint64_t seed = 20240601;
};

struct SuiteResult {
    std::string suite;
    std::size_t checks = 0;
    bool passed = true;
    // First failing instance: identity name plus everything needed to rerun it.
    std::string failure;
    Json instance;
    std::vector<std::string> notes;  // informational, never failures
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws InputError for an unknown suite and Unsupported when the shelf does
// not meet the suite's precondition ("all" skips such suites with a note).
std::vector<SuiteResult> run_suite(const FiniteShelf& shelf, const std::string& suite, const VerifyOptions& options);

Json to_json(const SuiteResult& r);

}  // namespace rackhom
