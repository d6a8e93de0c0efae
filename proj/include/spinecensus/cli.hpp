#ifndef SPINECENSUS_CLI_HPP
#define SPINECENSUS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinecensus/graph.hpp"

namespace spinecensus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAnomaly = 2;

/// Environment variable naming the directory for output files when no --out
/// is given.
inline constexpr const char* kOutDirVariable = "SPINECENSUS_OUT_DIR";

struct RunConfig {
    std::string command;
    std::string graph_class = "A";
    int n = 5;
    int n_from = 5;
    int n_to = 12;
    int max_n = 3;
    int r = 4;
    int index = -1;
    EnumerationLimits limits;
    int bfs_depth = 6;
    std::uint64_t budget = 2'000'000;
    std::string format = "json";
    std::string output;
    std::string input;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    int jobs = 1;
};

/// Runs one subcommand. Returns 0 on success, 2 when anomaly reports were
/// emitted, 1 on error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) and runs.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spinecensus::cli

#endif
