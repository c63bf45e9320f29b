#ifndef MOTZGEN_REMY_HPP
#define MOTZGEN_REMY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "motzgen/label.hpp"
#include "motzgen/rng.hpp"

namespace motzgen {

// Flat encoding of an extended binary tree with L leaves: labels[0..2L-2]
// is a permutation of {0..2L-2}; decoding from index 0 reaches every index
// exactly once.
struct BinaryTreeVector {
    std::vector<Label> labels;

    std::size_t length() const { return labels.size(); }
    std::size_t leaf_count() const { return (labels.size() + 1) / 2; }

    bool operator==(const BinaryTreeVector&) const = default;
};

// One leaf insertion. For a vector with L leaves the insertion code x runs
// over {0, ..., 4L-3}:  k = x/2 picks the node at index k, the parity of x
// picks the side. The node at k is displaced by a fresh internal node
// labeled 2L-1 whose children are the old occupant and a fresh leaf labeled
// 2L (leaf on the right when x is even, on the left when x is odd).
BinaryTreeVector remy_step(const BinaryTreeVector& v, std::uint64_t x);

// Uniform random binary tree with n >= 1 leaves: start from the single
// leaf and insert n-1 times, drawing x below 4L-2 at each intermediate
// leaf count L. One allocation; O(n) time.
BinaryTreeVector random_binary_tree(RandomStream& stream, std::size_t n_leaves);

// Empty string when valid, otherwise a description of the first defect
// found (bad length, not a permutation, wrong parity placement, or decode
// from the root not spanning the array).
std::string check_binary_vector(std::span<const Label> labels);

namespace detail {
// In-place insertion into storage whose prefix [0, used) holds a valid
// vector and whose capacity admits two more slots.
void remy_insert(std::vector<Label>& labels, std::size_t used, std::uint64_t x);
}  // namespace detail

}  // namespace motzgen

#endif  // MOTZGEN_REMY_HPP
