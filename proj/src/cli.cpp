#include "motzgen/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "motzgen/codec.hpp"
#include "motzgen/numbers.hpp"
#include "motzgen/remy.hpp"
#include "motzgen/rng.hpp"
#include "motzgen/sampler.hpp"
#include "motzgen/verify.hpp"

namespace motzgen::cli {

namespace {

std::string render_motzkin(const SlantingVector& v, const std::string& format) {
    if (format == "vector") {
        std::string line;
        for (std::size_t i = 0; i < v.labels.size(); ++i) {
            if (i > 0) line.push_back(' ');
            line += std::to_string(v.labels[i]);
        }
        line.push_back('\n');
        return line;
    }
    if (format == "dot") {
        std::ostringstream doc;
        to_dot(to_motzkin_tree(v), doc);
        return doc.str();
    }
    const std::string word = tree_to_word(to_motzkin_tree(v));
    if (format == "word") return word + "\n";
    if (format == "path") return path_to_string(word_to_path(word)) + "\n";
    return chords_to_line(word_to_chords(word)) + "\n";  // chords
}

std::string render_binary(const BinaryTreeVector& v, const std::string& format) {
    if (format == "dot") {
        std::ostringstream doc;
        to_dot(v, doc);
        return doc.str();
    }
    std::string line;
    for (std::size_t i = 0; i < v.labels.size(); ++i) {
        if (i > 0) line.push_back(' ');
        line += std::to_string(v.labels[i]);
    }
    line.push_back('\n');
    return line;
}

}  // namespace

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    const bool binary = opt.family == "binary";
    std::string format = opt.format;
    if (format.empty()) format = binary ? "vector" : "word";
    if (binary) {
        if (format != "vector" && format != "dot") {
            err << "gen: family binary supports --format vector or dot\n";
            return 2;
        }
        if (opt.size < 1) {
            err << "gen: family binary needs --size >= 1 (leaf count)\n";
            return 2;
        }
    } else if (format != "word" && format != "vector" && format != "dot" && format != "path" &&
               format != "chords") {
        err << "gen: unknown --format " << format << "\n";
        return 2;
    }
    if (opt.mode != "exact" && opt.mode != "fast") {
        err << "gen: --mode must be exact or fast\n";
        return 2;
    }
    if (opt.count < 1) {
        err << "gen: --count must be at least 1\n";
        return 2;
    }
    if (opt.jobs < 1) {
        err << "gen: --jobs must be at least 1\n";
        return 2;
    }
    if (opt.size > kMaxSize) {
        err << "gen: --size exceeds the supported label range\n";
        return 2;
    }

    std::optional<RatioTable> table;
    if (!binary && opt.mode == "fast" && opt.size >= 2) {
        if (!opt.table_path.empty()) {
            std::ifstream in(opt.table_path);
            if (!in) {
                err << "gen: cannot open ratio table " << opt.table_path << "\n";
                return 2;
            }
            try {
                table = load_ratio_table(in);
            } catch (const RatioTableError& e) {
                err << "gen: " << e.what() << "\n";
                return 2;
            }
            if (table->max_n() < opt.size) {
                err << "gen: ratio table covers max_n=" << table->max_n() << ", need "
                    << opt.size << "\n";
                return 2;
            }
        } else {
            table = build_ratio_table(opt.size);
        }
    }
    if (opt.verbose) {
        err << "rng: " << RandomStream::kAlgorithm << " seed=" << opt.seed << " family="
            << opt.family << " mode=" << (binary ? "-" : opt.mode) << " jobs=" << opt.jobs;
        if (table) err << " table_max_n=" << table->max_n();
        err << "\n";
    }

    const bool dot = format == "dot";
    auto render_one = [&](RandomStream& stream) {
        if (binary) return render_binary(random_binary_tree(stream, opt.size), format);
        if (table) return render_motzkin(random_motzkin(stream, opt.size, *table), format);
        if (opt.mode == "fast")  // sizes 0 and 1 need no table
            return render_motzkin(base_vector(opt.size), format);
        return render_motzkin(random_motzkin(stream, opt.size), format);
    };

    if (opt.jobs == 1) {
        RandomStream stream(opt.seed);
        for (std::uint64_t i = 0; i < opt.count; ++i) {
            if (dot && i > 0) out << '\n';
            out << render_one(stream);
        }
        return 0;
    }

    const unsigned jobs = opt.jobs;
    std::vector<std::string> bufs(jobs);
    std::vector<std::string> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t shard = opt.count / jobs + (j < opt.count % jobs ? 1 : 0);
        threads.emplace_back([&, j, shard] {
            try {
                RandomStream stream(opt.seed + j);
                for (std::uint64_t i = 0; i < shard; ++i) {
                    if (dot && i > 0) bufs[j] += '\n';
                    bufs[j] += render_one(stream);
                }
            } catch (const std::exception& e) {
                errors[j] = e.what();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (!e.empty()) {
            err << "gen: " << e << "\n";
            return 1;
        }
    bool first = true;
    for (const auto& b : bufs) {
        if (b.empty()) continue;
        if (dot && !first) out << '\n';
        out << b;
        first = false;
    }
    return 0;
}

int cmd_precompute(const PrecomputeOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_n < 2) {
        err << "precompute: --max-n must be at least 2\n";
        return 2;
    }
    const RatioTable table = build_ratio_table(opt.max_n);
    if (opt.out_path.empty()) {
        save_ratio_table(table, out);
        return 0;
    }
    std::ofstream file(opt.out_path);
    if (!file) {
        err << "precompute: cannot open " << opt.out_path << " for writing\n";
        return 2;
    }
    try {
        save_ratio_table(table, file);
    } catch (const std::exception& e) {
        err << "precompute: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

namespace {

struct Reporter {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        if (ok) {
            out << "ok   " << name << "\n";
        } else {
            out << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
            all_ok = false;
        }
    }
};

// Tallies N samples by canonical word; false when a sample decodes to a
// word outside the enumerated set.
bool tally_motzkin(std::size_t n, std::uint64_t n_samples, RandomStream& stream,
                   const RatioTable* table, const std::vector<std::string>& words,
                   std::vector<std::uint64_t>& counts) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    counts.assign(words.size(), 0);
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        const SlantingVector v =
            table ? random_motzkin(stream, n, *table) : random_motzkin(stream, n);
        const auto it = index.find(tree_to_word(to_motzkin_tree(v)));
        if (it == index.end()) return false;
        ++counts[it->second];
    }
    return true;
}

std::uint64_t band_samples(std::size_t n) {
    const std::uint64_t m = mpz_get_ui(motzkin(n).get_mpz_t());
    return std::max<std::uint64_t>(100000, 1000 * m);
}

}  // namespace

int cmd_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err) {
    (void)err;
    Reporter r{out};
    const double z = 5.0;

    {
        bool ok = true;
        for (std::size_t n = 0; n <= 64 && ok; ++n) ok = motzkin(n) == motzkin_conv(n);
        r.check("motzkin holonomic vs convolution (n<=64)", ok);
    }
    {
        bool ok = true;
        for (std::size_t n = 2; n <= 64 && ok; ++n)
            ok = BigCount(n + 2) * motzkin(n) ==
                 BigCount(2 * n + 1) * motzkin(n - 1) + BigCount(3 * (n - 1)) * motzkin(n - 2);
        r.check("holonomic identity (n<=64)", ok);
    }
    {
        bool ok = true;
        for (std::size_t n = 2; n <= 64 && ok; ++n)
            ok = BigCount(n) * catalan(n) == BigCount(2 * (2 * n - 3)) * catalan(n - 1);
        r.check("catalan identity (n<=64)", ok);
    }
    {
        const RatioTable t = build_ratio_table(2000);
        const bool ok = t.p1(2) == 0.625 && t.p1(4) == 0x1.5555555555555p-1 &&
                        std::abs(t.p1(2000) - 2.0 / 3.0) < 1e-3;
        r.check("ratio table pinned values and asymptote", ok);
    }
    {
        bool ok = true;
        for (std::size_t n = 0; n <= std::min<std::size_t>(10, opt.max_size + 2); ++n)
            ok = ok && verify::enumerate_motzkin(n).size() == motzkin(n);
        r.check("enumeration count equals motzkin(n)", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 2; n <= std::min<std::size_t>(5, opt.max_size); ++n) {
            const auto report = verify::check_exact_uniformity(n);
            if (!report.uniform) {
                ok = false;
                detail = report.detail;
                break;
            }
        }
        r.check("exact sampler distribution uniform (n<=5)", ok, detail);
    }
    if (opt.max_size >= 2) {
        bool detected = false;
        std::string detail = "truncated ranges were not flagged as non-uniform";
        for (std::size_t n = 2; n <= std::min<std::size_t>(5, opt.max_size); ++n) {
            const auto report =
                verify::check_exact_uniformity(n, verify::ChoiceRanges::Truncated);
            if (!report.uniform) {
                detected = true;
                detail = report.detail;
                break;
            }
        }
        r.check("truncated draw ranges detected non-uniform (n<=5)", detected,
                detected ? "" : detail);
        if (detected) out << "     " << detail << "\n";
    }
    {
        RandomStream stream(opt.seed + 1);
        bool ok = true;
        std::string detail;
        for (std::size_t n = 2; n <= std::min<std::size_t>(8, opt.max_size) && ok; ++n) {
            const auto words = verify::enumerate_motzkin_words(n);
            std::vector<std::uint64_t> counts;
            const std::uint64_t N = band_samples(n);
            if (!tally_motzkin(n, N, stream, nullptr, words, counts)) {
                ok = false;
                detail = "sample outside the enumerated shapes at n=" + std::to_string(n);
                break;
            }
            const auto band =
                verify::frequency_band_test(counts, N, 1.0 / static_cast<double>(words.size()), z);
            if (!band.pass) {
                ok = false;
                detail = "n=" + std::to_string(n) + " shape \"" + words[band.worst_index] +
                         "\" off by " + std::to_string(band.worst_sigmas) + " sigma";
            }
        }
        r.check("exact-mode frequency bands (n<=8, z=5)", ok, detail);
    }
    if (opt.max_size >= 2) {
        RandomStream stream(opt.seed + 2);
        const RatioTable table = build_ratio_table(std::max<std::size_t>(opt.max_size, 2));
        bool ok = true;
        std::string detail;
        for (std::size_t n = 2; n <= std::min<std::size_t>(6, opt.max_size) && ok; ++n) {
            const auto words = verify::enumerate_motzkin_words(n);
            std::vector<std::uint64_t> counts;
            const std::uint64_t N = band_samples(n);
            if (!tally_motzkin(n, N, stream, &table, words, counts)) {
                ok = false;
                detail = "sample outside the enumerated shapes at n=" + std::to_string(n);
                break;
            }
            const auto band =
                verify::frequency_band_test(counts, N, 1.0 / static_cast<double>(words.size()), z);
            if (!band.pass) {
                ok = false;
                detail = "n=" + std::to_string(n) + " shape \"" + words[band.worst_index] +
                         "\" off by " + std::to_string(band.worst_sigmas) + " sigma";
            }
        }
        r.check("fast-mode frequency bands (n<=6, z=5)", ok, detail);
    }
    {
        const BinaryTreeVector before{
            {1, 13, 0, 2, 5, 9, 7, 8, 4, 11, 6, 12, 10, 15, 3, 16, 14}};
        const BinaryTreeVector after{
            {1, 13, 0, 2, 5, 9, 7, 8, 4, 11, 17, 12, 10, 15, 3, 16, 14, 18, 6}};
        r.check("remy insertion worked example", remy_step(before, 21) == after);
    }
    {
        RandomStream stream(opt.seed + 3);
        bool ok = true;
        std::string detail;
        for (std::size_t leaves = 2; leaves <= 6 && ok; ++leaves) {
            const auto shapes = verify::enumerate_binary(leaves);
            std::map<std::string, std::size_t> index;
            for (std::size_t i = 0; i < shapes.size(); ++i) index[shapes[i]] = i;
            std::vector<std::uint64_t> counts(shapes.size(), 0);
            const std::uint64_t N = 100000;
            for (std::uint64_t i = 0; i < N; ++i) {
                const auto v = random_binary_tree(stream, leaves);
                ++counts.at(index.at(verify::binary_shape_key(v)));
            }
            const auto band = verify::frequency_band_test(
                counts, N, 1.0 / static_cast<double>(shapes.size()), z);
            if (!band.pass) {
                ok = false;
                detail = "leaves=" + std::to_string(leaves) + " worst shape off by " +
                         std::to_string(band.worst_sigmas) + " sigma";
            }
        }
        r.check("binary shape frequency bands (leaves<=6, z=5)", ok, detail);
    }
    {
        RandomStream stream(opt.seed + 4);
        const std::size_t cap = 200;
        const RatioTable table = build_ratio_table(cap);
        bool ok = true;
        for (int i = 0; i < 2000 && ok; ++i) {
            const std::size_t n = static_cast<std::size_t>(stream.next_below(cap + 1));
            const SlantingVector v = random_motzkin(stream, n, table);
            const MotzkinTree t = to_motzkin_tree(v);
            const std::string w = tree_to_word(t);
            ok = w.size() == n && word_to_tree(w) == t &&
                 to_motzkin_tree(slanting_from_tree(t)) == t &&
                 path_to_word(word_to_path(w)) == w && chords_to_word(word_to_chords(w)) == w;
        }
        r.check("codec round-trips on random samples (n<=200)", ok);
    }

    return r.all_ok ? 0 : 1;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::size_t> sizes = opt.sizes;
    if (sizes.empty()) sizes = {100000, 1000000};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2 || (i > 0 && sizes[i] <= sizes[i - 1])) {
            err << "bench: sizes must be ascending and at least 2\n";
            return 2;
        }
    }
    std::optional<RatioTable> table;
    if (!opt.table_path.empty()) {
        std::ifstream in(opt.table_path);
        if (!in) {
            err << "bench: cannot open ratio table " << opt.table_path << "\n";
            return 2;
        }
        try {
            table = load_ratio_table(in);
        } catch (const RatioTableError& e) {
            err << "bench: " << e.what() << "\n";
            return 2;
        }
        if (table->max_n() < sizes.back()) {
            err << "bench: ratio table covers max_n=" << table->max_n() << ", need "
                << sizes.back() << "\n";
            return 2;
        }
    } else {
        err << "bench: precomputing ratio table up to " << sizes.back()
            << " (not part of the timings)\n";
        table = build_ratio_table(sizes.back());
    }

    RandomStream stream(opt.seed);
    out << "size\tseconds\tns_per_edge\n";
    for (const std::size_t size : sizes) {
        const std::uint64_t reps =
            opt.reps > 0 ? opt.reps : std::max<std::uint64_t>(1, 20000000 / size);
        std::vector<double> times;
        times.reserve(reps);
        for (std::uint64_t rep = 0; rep < reps; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const SlantingVector v = random_motzkin(stream, size, *table);
            const auto t1 = std::chrono::steady_clock::now();
            if (v.labels.size() != 2 * size + 3) {
                err << "bench: unexpected vector length\n";
                return 1;
            }
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        out << size << '\t' << std::setprecision(9) << median << '\t'
            << std::setprecision(4) << median * 1e9 / static_cast<double>(size) << '\n';
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("motzgen");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"uniform random generation of Motzkin trees and binary trees"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate random trees");
    gen_cmd->add_option("--family", gen.family, "motzkin or binary")
        ->check(CLI::IsMember({"motzkin", "binary"}));
    gen_cmd->add_option("--size", gen.size, "edges (motzkin) or leaves (binary)")->required();
    gen_cmd->add_option("--count", gen.count, "number of samples");
    gen_cmd->add_option("--seed", gen.seed, "rng seed");
    gen_cmd->add_option("--format", gen.format, "word | vector | dot | path | chords");
    gen_cmd->add_option("--mode", gen.mode, "exact or fast")
        ->check(CLI::IsMember({"exact", "fast"}));
    gen_cmd->add_option("--table", gen.table_path, "ratio table file (fast mode)");
    gen_cmd->add_option("--jobs", gen.jobs, "shard samples over seeds seed+0..seed+J-1");
    gen_cmd->add_flag("--verbose", gen.verbose, "print rng and mode details to stderr");

    PrecomputeOptions pre;
    auto* pre_cmd = app.add_subcommand("precompute", "build and store a ratio table");
    pre_cmd->add_option("--max-n", pre.max_n, "largest size the table covers")->required();
    pre_cmd->add_option("--out", pre.out_path, "output file (default: stdout)");

    SelftestOptions st;
    auto* st_cmd = app.add_subcommand("selftest", "run the verification suites");
    st_cmd->add_option("--max-size", st.max_size, "cap for the statistical suites");
    st_cmd->add_option("--seed", st.seed, "rng seed for the statistical suites");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "time fast-mode generation");
    bench_cmd->add_option("--sizes", bench.sizes, "ascending sizes")->delimiter(',');
    bench_cmd->add_option("--seed", bench.seed, "rng seed");
    bench_cmd->add_option("--reps", bench.reps, "repetitions per size (0: auto)");
    bench_cmd->add_option("--table", bench.table_path, "ratio table file");
    bench_cmd->add_flag("--verbose", bench.verbose, "extra notes to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
        if (pre_cmd->parsed()) return cmd_precompute(pre, out, err);
        if (st_cmd->parsed()) return cmd_selftest(st, out, err);
        if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
    } catch (const std::invalid_argument& e) {
        err << "motzgen: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "motzgen: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace motzgen::cli
