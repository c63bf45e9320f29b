#ifndef MOTZGEN_VERIFY_HPP
#define MOTZGEN_VERIFY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "motzgen/numbers.hpp"
#include "motzgen/remy.hpp"
#include "motzgen/sampler.hpp"
#include "motzgen/tree.hpp"

namespace motzgen::verify {

// Every Motzkin word of length n, lexicographically sorted. Distinctness
// comes from the grammar being unambiguous; the count equals motzkin(n).
std::vector<std::string> enumerate_motzkin_words(std::size_t n, std::size_t cap = 14);

// The same trees, decoded, in word order.
std::vector<MotzkinTree> enumerate_motzkin(std::size_t n, std::size_t cap = 14);

// Canonical keys of all binary-tree shapes with the given leaf count:
// leaf -> "l", internal -> "(" left right ")". Count equals catalan(n).
std::vector<std::string> enumerate_binary(std::size_t leaves, std::size_t cap = 12);

// Shape key of a decoded vector (decoration dropped).
std::string binary_shape_key(const BinaryTreeVector& v);

// Which position-draw ranges the distribution walk uses. Full is what
// random_motzkin implements: k below 2n+1 and r below 3n-3. Truncated is
// the plausible off-by-one variant with k below 2n and r below 3n-6
// (degenerating to a forced r = 0 at n = 2); the regression gate keeps on
// record that it is non-uniform.
enum class ChoiceRanges { Full, Truncated };

// Canonical word -> exact probability mass under the exact-mode sampler,
// obtained by walking every (case, position) decision path with exact
// rational weights. Masses sum to exactly 1. n is capped (default 6).
using ExactDistribution = std::map<std::string, mpq_class>;

ExactDistribution exact_sampler_distribution(std::size_t n,
                                             ChoiceRanges ranges = ChoiceRanges::Full,
                                             std::size_t cap = 6);

struct UniformityReport {
    bool uniform = false;
    std::string detail;  // names the offending shape and ranges when not uniform
};

UniformityReport check_exact_uniformity(std::size_t n,
                                        ChoiceRanges ranges = ChoiceRanges::Full);

struct BandResult {
    bool pass = false;
    std::size_t worst_index = 0;
    double worst_sigmas = 0.0;  // deviation of the worst bucket in sigma units
};

// Passes iff every tally lies within z * sqrt(N p (1-p)) of N p.
// Requires N >= 1000.
BandResult frequency_band_test(std::span<const std::uint64_t> counts, std::uint64_t n_samples,
                               double p, double z);

}  // namespace motzgen::verify

#endif  // MOTZGEN_VERIFY_HPP
