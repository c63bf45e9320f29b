// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The heavy ratio table for criterion 7 is cached next to the
// working directory so reruns skip the one-time precompute.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "motzgen/codec.hpp"
#include "motzgen/numbers.hpp"
#include "motzgen/remy.hpp"
#include "motzgen/rng.hpp"
#include "motzgen/sampler.hpp"
#include "motzgen/verify.hpp"

using namespace motzgen;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& text) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << text
              << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t band_samples(std::size_t n) {
    return std::max<std::uint64_t>(100000, 1000 * mpz_get_ui(motzkin(n).get_mpz_t()));
}

bool motzkin_band(std::size_t n, const RatioTable* table, std::uint64_t seed,
                  std::string& detail) {
    const auto words = verify::enumerate_motzkin_words(n);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    std::vector<std::uint64_t> counts(words.size(), 0);
    const std::uint64_t N = band_samples(n);
    RandomStream stream(seed);
    for (std::uint64_t i = 0; i < N; ++i) {
        const SlantingVector v =
            table ? random_motzkin(stream, n, *table) : random_motzkin(stream, n);
        const auto it = index.find(tree_to_word(to_motzkin_tree(v)));
        if (it == index.end()) {
            detail = "n=" + std::to_string(n) + ": sample outside the enumerated shapes";
            return false;
        }
        ++counts[it->second];
    }
    const auto band =
        verify::frequency_band_test(counts, N, 1.0 / static_cast<double>(words.size()), 5.0);
    if (!band.pass) {
        detail = "n=" + std::to_string(n) + ": shape \"" + words[band.worst_index] +
                 "\" deviates by " + std::to_string(band.worst_sigmas) + " sigma";
        return false;
    }
    return true;
}

void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = motzkin(0) == 1 && motzkin(1) == 1 && motzkin(4) == 9;
    for (std::size_t n = 0; n <= 64 && ok; ++n) {
        ok = motzkin(n) == motzkin_conv(n);
        if (n >= 2)
            ok = ok && BigCount(n + 2) * motzkin(n) ==
                           BigCount(2 * n + 1) * motzkin(n - 1) +
                               BigCount(3 * (n - 1)) * motzkin(n - 2);
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    std::ostringstream text;
    text << "motzkin(0..64) satisfies both recurrences, M_0=M_1=1, M_4=9 ("
         << std::fixed << elapsed << " s < 1 s)";
    report(1, ok, text.str());
}

void criterion2() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 2; n <= 5 && ok; ++n) {
        const auto rep = verify::check_exact_uniformity(n);
        if (!rep.uniform) {
            ok = false;
            detail = rep.detail;
        }
    }
    const auto d4 = verify::exact_sampler_distribution(4);
    ok = ok && d4.size() == 9;
    for (const auto& [word, mass] : d4) ok = ok && mass == mpq_class(1, 9);
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 60.0;
    std::ostringstream text;
    text << "exact sampler distribution equals 1/M_n per shape for n=2..5, all 9 at 1/9 for "
            "n=4 ("
         << std::fixed << elapsed << " s < 60 s)" << (detail.empty() ? "" : "; " + detail);
    report(2, ok, text.str());
}

void criterion3() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 2; n <= 8 && ok; ++n) ok = motzkin_band(n, nullptr, 1000 + n, detail);
    const RatioTable table = build_ratio_table(6);
    for (std::size_t n = 2; n <= 6 && ok; ++n) ok = motzkin_band(n, &table, 2000 + n, detail);
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 300.0;
    std::ostringstream text;
    text << "5-sigma uniformity bands, exact mode n=2..8 and fast mode n=2..6 ("
         << std::fixed << elapsed << " s < 300 s)" << (detail.empty() ? "" : "; " + detail);
    report(3, ok, text.str());
}

void criterion4() {
    const BinaryTreeVector before{{1, 13, 0, 2, 5, 9, 7, 8, 4, 11, 6, 12, 10, 15, 3, 16, 14}};
    const BinaryTreeVector after{
        {1, 13, 0, 2, 5, 9, 7, 8, 4, 11, 17, 12, 10, 15, 3, 16, 14, 18, 6}};
    bool ok = remy_step(before, 21) == after;
    std::string detail = ok ? "" : "worked example mismatch";
    for (std::size_t leaves = 2; leaves <= 6 && ok; ++leaves) {
        const auto shapes = verify::enumerate_binary(leaves);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < shapes.size(); ++i) index[shapes[i]] = i;
        std::vector<std::uint64_t> counts(shapes.size(), 0);
        const std::uint64_t N = 100000;
        RandomStream stream(3000 + leaves);
        for (std::uint64_t i = 0; i < N; ++i)
            ++counts.at(index.at(verify::binary_shape_key(random_binary_tree(stream, leaves))));
        const auto band = verify::frequency_band_test(
            counts, N, 1.0 / static_cast<double>(shapes.size()), 5.0);
        if (!band.pass) {
            ok = false;
            detail = "leaves=" + std::to_string(leaves) + ": worst shape deviates by " +
                     std::to_string(band.worst_sigmas) + " sigma";
        }
    }
    report(4, ok,
           "Remy worked example reproduces bit-exactly; binary shape bands pass for 2..6 "
           "leaves" +
               (detail.empty() ? "" : "; " + detail));
}

void criterion5() {
    const std::size_t max_size = 10000;
    const RatioTable table = build_ratio_table(max_size);
    RandomStream stream(4000);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 10000 && ok; ++i) {
        const std::size_t n = static_cast<std::size_t>(stream.next_below(max_size + 1));
        const SlantingVector v = random_motzkin(stream, n, table);
        if (v.length() != 2 * n + 3) {
            ok = false;
            detail = "wrong length at n=" + std::to_string(n);
            break;
        }
        if (const auto defect = check_slanting(v.labels); defect != VectorDefect::Ok) {
            ok = false;
            detail = "n=" + std::to_string(n) + ": " + defect_message(defect);
            break;
        }
        std::size_t evens = 0;
        for (Label l : v.labels) evens += l % 2 == 0;
        const MotzkinTree t = to_motzkin_tree(v);
        if (evens != n + 2 || v.length() - evens != n + 1 || t.size() != n) {
            ok = false;
            detail = "counts off at n=" + std::to_string(n);
        }
    }
    report(5, ok,
           "10^4 random sizes <= 10^4: vectors are permutations of the right length, decode "
           "to slanting trees of size n with n+2 leaves" +
               (detail.empty() ? "" : "; " + detail));
}

void criterion6() {
    bool ok = true;
    std::string detail;
    const RatioTable table = build_ratio_table(1000);
    RandomStream stream(5000);
    for (int i = 0; i < 10000 && ok; ++i) {
        const std::size_t n = static_cast<std::size_t>(stream.next_below(std::uint64_t{1001}));
        const SlantingVector v = random_motzkin(stream, n, table);
        const MotzkinTree t = to_motzkin_tree(v);
        const std::string w = tree_to_word(t);
        ok = w.size() == n && word_to_tree(w) == t &&
             to_motzkin_tree(slanting_from_tree(t)) == t &&
             path_to_word(word_to_path(w)) == w && chords_to_word(word_to_chords(w)) == w;
        if (!ok) detail = "round-trip failed at n=" + std::to_string(n);
    }
    const std::vector<std::string> expected = {"(())", "()()", "()cc", "(c)c", "(cc)",
                                               "c()c", "c(c)", "cc()", "cccc"};
    if (ok && verify::enumerate_motzkin_words(4) != expected) {
        ok = false;
        detail = "size-4 canonical words differ from the nine expected words";
    }
    if (ok) {
        const auto trees = verify::enumerate_motzkin(4);
        for (std::size_t i = 0; i < trees.size() && ok; ++i)
            ok = tree_to_word(trees[i]) == expected[i];
        if (!ok) detail = "enumerated tree canonical form mismatch";
    }
    report(6, ok,
           "codec round-trips hold on 10^4 samples up to n=1000; the nine length-4 words are "
           "the canonical forms of the nine size-4 trees" +
               (detail.empty() ? "" : "; " + detail));
}

RatioTable table_for_bench(std::size_t max_n) {
    const std::string cache = "acceptance-ratio-" + std::to_string(max_n) + ".tsv";
    {
        std::ifstream in(cache);
        if (in) {
            try {
                RatioTable t = load_ratio_table(in);
                if (t.max_n() >= max_n) {
                    std::cerr << "[acceptance] loaded cached ratio table " << cache << "\n";
                    return t;
                }
            } catch (const RatioTableError&) {
                // rebuild below
            }
        }
    }
    std::cerr << "[acceptance] building ratio table up to " << max_n
              << " (one-time, untimed)...\n";
    RatioTable t = build_ratio_table(max_n);
    std::ofstream out(cache);
    if (out) save_ratio_table(t, out);
    return t;
}

double timed_gen(const RatioTable& table, RandomStream& stream, std::size_t size) {
    const auto t0 = std::chrono::steady_clock::now();
    const SlantingVector v = random_motzkin(stream, size, table);
    const auto t1 = std::chrono::steady_clock::now();
    if (v.length() != 2 * size + 3) return -1.0;
    return std::chrono::duration<double>(t1 - t0).count();
}

void criterion7() {
    const RatioTable table = table_for_bench(1000000);
    // interleave the two sizes so slow drifts in machine speed hit both
    RandomStream stream(6000);
    timed_gen(table, stream, 100000);   // warm-up
    timed_gen(table, stream, 1000000);
    std::vector<double> small, big;
    for (int round = 0; round < 15; ++round) {
        small.push_back(timed_gen(table, stream, 100000));
        big.push_back(timed_gen(table, stream, 1000000));
    }
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    const double t_small = small[small.size() / 2];
    const double t_big = big[big.size() / 2];
    const double ratio = t_big / t_small;
    const bool ok = t_small > 0 && t_big > 0 && t_big < 2.0 && ratio >= 8.0 && ratio <= 15.0;
    std::ostringstream text;
    text << "fast-mode generation: size 10^6 in " << std::fixed << t_big
         << " s (< 2 s), time(10^6)/time(10^5) = " << ratio << " in [8,15]";
    report(7, ok, text.str());
}

void criterion8() {
    bool detected = false;
    std::string detail;
    for (std::size_t n = 2; n <= 5 && !detected; ++n) {
        const auto rep = verify::check_exact_uniformity(n, verify::ChoiceRanges::Truncated);
        if (!rep.uniform) {
            detected = true;
            detail = rep.detail;
        }
    }
    const bool names_ranges = detail.find("2n") != std::string::npos &&
                              detail.find("3n-6") != std::string::npos;
    report(8, detected && names_ranges,
           detected ? "truncated ranges flagged non-uniform: " + detail
                    : "truncated ranges were not flagged as non-uniform");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
