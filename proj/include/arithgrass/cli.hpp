#pragma once

#include "arithgrass/lefschetz.hpp"
#include "arithgrass/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace arithgrass::cli {

enum class Command { verify_grassmannian, verify_pn, verify_ortho, verify_needed, scan_bound, sigma, table };

std::string to_string(Command c);

/// Raised for configurations that cannot be run; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::sigma;

    int N = 6;
    int k = -1;  // -1: every k with 2k <= N
    int N_max = 16;
    std::vector<int> k_set;  // empty: every valid k
    int T = 0;               // 0: use [T_min, T_max]
    int T_min = 3;
    int T_max = 25;
    int n_max = 30;
    SigmaMethod method = SigmaMethod::both;

    std::string sequence = "harmonic";  // harmonic | random | path to a file
    int count = 100;                    // random sequences per T
    std::uint64_t seed = 1;

    std::string table_kind = "sigma";  // sigma | racah | deviation
    OutputFormat format = OutputFormat::json;
    unsigned workers = 1;
    bool timing = true;
    bool inject_failure = false;  // flips the first row's verdict, for testing exit codes
};

/// Throws UsageError if a range falls outside the command's domain.
void validate(const RunConfig& config);

/// Runs one command. Rows go to `out` in sort-key order; diagnostics go to
/// `err`. Returns 0 if every check passed, 1 if any failed, 2 on usage
/// errors (including an unreadable or malformed sequence file).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One positive value per line (rational "p/q", integer or decimal), read as
/// H_1..H_m. Blank lines are skipped. Throws UsageError on anything else.
std::vector<Rational> read_sequence_file(const std::string& path);

}  // namespace arithgrass::cli
