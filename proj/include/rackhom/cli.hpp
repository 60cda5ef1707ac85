#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rackhom {

struct RunConfig {
    std::string command;  // validate, homology, cohomology, cup, decompose, verify

    // Exactly one shelf source.
    std::optional<std::string> shelf_file;
    std::optional<int> dihedral;
    std::optional<int> trivial;
    std::optional<std::string> permutation;  // "0,2,1"

    std::string coeff = "trivial";  // trivial, self, xset
    std::optional<std::string> xset_file;
    std::optional<unsigned long> modulus;
    int max_degree = 3;
    std::string suite = "all";
    std::string format = "text";  // json or text

    // cup
    std::optional<std::string> f_file;
    std::optional<std::string> g_file;
    std::string half;  // "", "left" or "right"
};

enum ExitCode { kOk = 0, kMathFailure = 1, kUsageError = 2 };

// Runs one command; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses command-line arguments (argv[0] is the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackhom
