#ifndef MOTZGEN_CLI_HPP
#define MOTZGEN_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace motzgen::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct GenOptions {
    std::string family = "motzkin";  // motzkin | binary
    std::size_t size = 0;            // edges (motzkin) or leaves (binary)
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::string format;              // word | vector | dot | path | chords
    std::string mode = "fast";       // exact | fast
    std::string table_path;
    unsigned jobs = 1;
    bool verbose = false;
};

struct PrecomputeOptions {
    std::size_t max_n = 2;
    std::string out_path;  // empty: stdout
};

struct SelftestOptions {
    std::size_t max_size = 8;
    std::uint64_t seed = 0;
};

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::uint64_t reps = 0;  // 0: pick from size
    std::string table_path;
    bool verbose = false;
};

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_precompute(const PrecomputeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace motzgen::cli

#endif  // MOTZGEN_CLI_HPP
