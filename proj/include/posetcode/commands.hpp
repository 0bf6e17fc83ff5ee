#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace posetcode {

inline constexpr const char* kToolVersion = "0.1.0";

// Shared knobs forwarded from the command line / environment.
struct CommonOptions {
    int jobs = 1;
    std::uint64_t node_limit = 0; // 0 = unlimited
};

// Every command yields an exit code, a full JSON report (schema stable
// across runs; identical inputs give identical payloads, timing excluded)
// and a human-readable rendering of the same content.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;
    std::string text;
};

// Ideal-family statistics, essential part, ball size for one radius.
CommandResult cmd_analyze(const std::string& poset_file, int r);

// Packing/covering verification; exit 0 iff perfect. oracle=true replaces
// the cardinality identity by a direct coverage sweep.
CommandResult cmd_verify(const std::string& poset_file,
                         const std::string& code_file, int r, bool oracle);

// Full criteria battery; exit 0 existence, 2 nonexistence, 3 inconclusive.
CommandResult cmd_criteria(const std::string& poset_file, int m, int r);

// Exhaustive perfect-code search; exit 0 found, 2 none, 3 budget exceeded.
// out_file (optional) receives the found code.
CommandResult cmd_search(const std::string& poset_file, int r,
                         const CommonOptions& opt,
                         const std::string& out_file = "");

// Run one constructive theorem (variant "th0": radius m; "m1": radius m-1)
// and write the resulting code file. Exit 2 when the theorem's
// characterization refutes existence.
CommandResult cmd_construct(const std::string& poset_file, int m,
                            const std::string& variant,
                            const std::string& out_file);

// Write a generated poset file. Kinds: chain n | antichain n | crown t |
// disjoint_chains l1 l2 ...
CommandResult cmd_gen(const std::string& kind, const std::vector<int>& params,
                      const std::string& out_file);

// Battery-versus-brute-force sweep; text output is JSONL, one record per
// line. Exit 1 when any record disagrees.
CommandResult cmd_catalog(int n_max, int offset, const CommonOptions& opt);

} // namespace posetcode
