#include "motzgen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "motzgen/codec.hpp"

namespace motzgen::verify {

std::vector<std::string> enumerate_motzkin_words(std::size_t n, std::size_t cap) {
    if (n > cap) throw std::invalid_argument("enumerate_motzkin_words: n above the cap");
    std::vector<std::vector<std::string>> w(n + 1);
    w[0] = {""};
    for (std::size_t m = 1; m <= n; ++m) {
        for (const auto& s : w[m - 1]) w[m].push_back("c" + s);
        for (std::size_t i = 0; i + 2 <= m; ++i)
            for (const auto& a : w[i])
                for (const auto& b : w[m - 2 - i]) w[m].push_back("(" + a + ")" + b);
    }
    std::sort(w[n].begin(), w[n].end());
    return std::move(w[n]);
}

std::vector<MotzkinTree> enumerate_motzkin(std::size_t n, std::size_t cap) {
    std::vector<MotzkinTree> trees;
    for (const auto& word : enumerate_motzkin_words(n, cap)) trees.push_back(word_to_tree(word));
    return trees;
}

std::vector<std::string> enumerate_binary(std::size_t leaves, std::size_t cap) {
    if (leaves == 0) throw std::invalid_argument("enumerate_binary: need at least one leaf");
    if (leaves > cap) throw std::invalid_argument("enumerate_binary: leaf count above the cap");
    std::vector<std::vector<std::string>> shapes(leaves + 1);
    shapes[1] = {"l"};
    for (std::size_t m = 2; m <= leaves; ++m)
        for (std::size_t i = 1; i < m; ++i)
            for (const auto& a : shapes[i])
                for (const auto& b : shapes[m - i]) shapes[m].push_back("(" + a + b + ")");
    std::sort(shapes[leaves].begin(), shapes[leaves].end());
    return std::move(shapes[leaves]);
}

std::string binary_shape_key(const BinaryTreeVector& v) {
    if (auto err = check_binary_vector(v.labels); !err.empty())
        throw std::invalid_argument("binary_shape_key: " + err);
    std::string key;
    key.reserve(2 * v.labels.size());
    struct Item {
        std::size_t idx;
        char literal;  // 0 means expand the node at idx
    };
    std::vector<Item> stack{{0, 0}};
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        if (item.literal != 0) {
            key.push_back(item.literal);
            continue;
        }
        const Label l = v.labels[item.idx];
        if (l % 2 == 0) {
            key.push_back('l');
        } else {
            key.push_back('(');
            stack.push_back({0, ')'});
            stack.push_back({static_cast<std::size_t>(l) + 1, 0});
            stack.push_back({static_cast<std::size_t>(l), 0});
        }
    }
    return key;
}

namespace {

using VecDist = std::map<std::vector<Label>, mpq_class>;

VecDist vector_distribution(std::size_t n, ChoiceRanges ranges) {
    std::vector<VecDist> dist(n + 1);
    dist[0][base_vector(0).labels] = 1;
    if (n >= 1) dist[1][base_vector(1).labels] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
        mpq_class p1(case1_weight(m), total_weight(m));
        p1.canonicalize();
        const std::size_t k_range = ranges == ChoiceRanges::Full ? 2 * m + 1 : 2 * m;
        const mpq_class per_k = p1 / static_cast<unsigned long>(k_range);
        for (const auto& [labels, mass] : dist[m - 1]) {
            const SlantingVector v{labels};
            for (std::size_t k = 0; k < k_range; ++k)
                dist[m][case1_step(v, k).labels] += mass * per_k;
        }
        // the truncated 3m-6 is zero at m = 2, where floor(x * 0) forces r = 0
        const std::size_t r_range =
            ranges == ChoiceRanges::Full ? 3 * (m - 1) : std::max<std::size_t>(3 * m - 6, 1);
        const mpq_class per_r = (1 - p1) / static_cast<unsigned long>(r_range);
        for (const auto& [labels, mass] : dist[m - 2]) {
            const SlantingVector v{labels};
            for (std::size_t r = 0; r < r_range; ++r)
                dist[m][case2_step(v, r / 3, static_cast<unsigned>(r % 3)).labels] +=
                    mass * per_r;
        }
    }
    return dist[n];
}

std::string range_description(ChoiceRanges ranges) {
    return ranges == ChoiceRanges::Full
               ? "case1 k below 2n+1, case2 r below 3(n-1) (full ranges)"
               : "case1 k below 2n, case2 r below 3n-6 (truncated ranges)";
}

}  // namespace

ExactDistribution exact_sampler_distribution(std::size_t n, ChoiceRanges ranges,
                                             std::size_t cap) {
    if (n > cap) throw std::invalid_argument("exact_sampler_distribution: n above the cap");
    ExactDistribution out;
    mpq_class total = 0;
    for (const auto& [labels, mass] : vector_distribution(n, ranges)) {
        out[tree_to_word(to_motzkin_tree(SlantingVector{labels}))] += mass;
        total += mass;
    }
    if (total != 1)
        throw std::logic_error("exact_sampler_distribution: masses do not sum to 1");
    return out;
}

UniformityReport check_exact_uniformity(std::size_t n, ChoiceRanges ranges) {
    const ExactDistribution dist = exact_sampler_distribution(n, ranges);
    mpq_class expected(1, motzkin(n));
    expected.canonicalize();
    if (dist.size() != motzkin(n)) {
        return {false, "exact distribution at n=" + std::to_string(n) + " reaches " +
                           std::to_string(dist.size()) + " shapes, expected M_n; " +
                           range_description(ranges)};
    }
    for (const auto& [word, mass] : dist) {
        if (mass != expected) {
            return {false, "exact distribution at n=" + std::to_string(n) + ": shape \"" + word +
                               "\" has mass " + mass.get_str() + " instead of " +
                               expected.get_str() + "; " + range_description(ranges)};
        }
    }
    return {true, "uniform at n=" + std::to_string(n) + "; " + range_description(ranges)};
}

BandResult frequency_band_test(std::span<const std::uint64_t> counts, std::uint64_t n_samples,
                               double p, double z) {
    if (n_samples < 1000)
        throw std::invalid_argument("frequency_band_test: need at least 1000 samples");
    const double mean = static_cast<double>(n_samples) * p;
    const double sigma = std::sqrt(static_cast<double>(n_samples) * p * (1.0 - p));
    BandResult result{true, 0, 0.0};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double dev = std::abs(static_cast<double>(counts[i]) - mean) / sigma;
        if (dev > result.worst_sigmas) {
            result.worst_sigmas = dev;
            result.worst_index = i;
        }
    }
    result.pass = result.worst_sigmas <= z;
    return result;
}

}  // namespace motzgen::verify
