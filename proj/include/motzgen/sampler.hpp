#ifndef MOTZGEN_SAMPLER_HPP
#define MOTZGEN_SAMPLER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "motzgen/label.hpp"
#include "motzgen/numbers.hpp"
#include "motzgen/rng.hpp"
#include "motzgen/tree.hpp"

namespace motzgen {

// Flat encoding of a labeled slanting tree for a Motzkin tree of size n
// (n edges): length 2n+3, a permutation of {0..2n+2}, root label odd, and
// no internal node with a leaf left child next to an internal right child.
// n+1 internal labels, n+2 leaf labels.
struct SlantingVector {
    std::vector<Label> labels;

    std::size_t length() const { return labels.size(); }
    std::size_t size() const { return (labels.size() - 3) / 2; }  // edges

    bool operator==(const SlantingVector&) const = default;
};

// Largest size whose labels fit the Label type.
inline constexpr std::size_t kMaxSize = (0xFFFFFFFFull - 2) / 2;

// Size 0 -> [1,0,2]; size 1 -> [1,3,0,2,4]. Other sizes rejected.
SlantingVector base_vector(std::size_t n);

enum class Case : std::uint8_t { Case1, Case2 };

// Weights of the two ways to reach size n: case 1 marks any of the 2n+1
// nodes of a size n-1 tree, case 2 marks one of the n-1 internal nodes of
// a size n-2 tree together with one of three placements.
BigCount case1_weight(std::size_t n);  // (2n+1) M_{n-1}
BigCount total_weight(std::size_t n);  // (n+2) M_n

// Exact-mode classification of a draw u uniform on {0..(n+2)M_n - 1}:
// Case1 iff u < (2n+1) M_{n-1}.
Case classify_exact(std::size_t n, const BigCount& u);

// Draws and classifies. Exact mode consumes one big-integer draw; fast
// mode consumes one unit draw and compares against p1[n]. n >= 2; fast
// mode needs table.max_n() >= n.
Case select_case(RandomStream& stream, std::size_t n);
Case select_case(RandomStream& stream, std::size_t n, const RatioTable& table);

// Case-1 insertion on a vector of size n-1 producing size n. k picks any
// of the 2n+1 positions. When position k holds a right-child leaf whose
// left sister is also a leaf (k even and nonzero, v[k] and v[k-1] even),
// the insertion lands at k-1 instead, keeping the result slanting.
// The displaced occupant becomes the left child of the fresh internal node
// 2n+1 and the fresh leaf 2n+2 its right child.
SlantingVector case1_step(const SlantingVector& v, std::size_t k);

// Case-2 insertion on a vector of size n-2 producing size n. k picks the
// internal node labeled 2k+1, whose children become the fresh internal
// nodes 2n-1 (left) and 2n+1 (right). c in {0,1} hangs the fresh leaf
// pair {2n, 2n+2} under the left one and the displaced subtrees under the
// right one; c = 2 swaps the two roles.
SlantingVector case2_step(const SlantingVector& v, std::size_t k, unsigned c);

// Record of the descent phase: sizes from n down to the base, adjacent
// entries differing by 1 (case 1) or 2 (case 2); last entry is 0 or 1.
using SampleHistory = std::vector<std::size_t>;

SampleHistory descend(RandomStream& stream, std::size_t n);
SampleHistory descend(RandomStream& stream, std::size_t n, const RatioTable& table);

// Ascent phase: allocate the final 2n+3 slots once, write the base vector
// and replay the recorded cases upward, drawing one position per level
// (k below 2m+1 for case 1; r below 3(m-1), split as k = r/3, c = r%3,
// for case 2).
SlantingVector replay(RandomStream& stream, const SampleHistory& history);

// Uniform random Motzkin tree of size n, O(n) time and O(n) draws.
// Draw order per seed: all case draws (descending), then all position
// draws (ascending).
SlantingVector random_motzkin(RandomStream& stream, std::size_t n);
SlantingVector random_motzkin(RandomStream& stream, std::size_t n, const RatioTable& table);

// Structural validation; Ok means all SlantingVector invariants hold.
enum class VectorDefect : std::uint8_t {
    Ok,
    BadLength,       // even or shorter than 3
    NotPermutation,  // labels not a permutation of {0..len-1}
    Parity,          // root label even
    LeafInternal,    // some internal node has children (leaf, internal)
    NotSpanning,     // decode from the root misses part of the array
};

VectorDefect check_slanting(std::span<const Label> labels);
std::string defect_message(VectorDefect defect);

class SlantingVectorError : public std::invalid_argument {
public:
    SlantingVectorError(VectorDefect defect, const std::string& what)
        : std::invalid_argument(what), defect_(defect) {}
    VectorDefect defect() const { return defect_; }

private:
    VectorDefect defect_;
};

// Decodes the three child configurations: (internal, internal) -> Binary,
// (internal, leaf) -> Unary, (leaf, leaf) -> Leaf. Throws
// SlantingVectorError on malformed input.
MotzkinTree to_motzkin_tree(const SlantingVector& v);

// Canonical encoder: labels assigned breadth-first. Left inverse of
// to_motzkin_tree on trees; reproduces the base vectors for sizes 0 and 1.
SlantingVector slanting_from_tree(const MotzkinTree& tree);

namespace detail {
// In-place insertions on storage holding a valid vector of size m-1
// (case 1) or m-2 (case 2); capacity must admit the appended slots.
void case1_insert(std::vector<Label>& v, std::size_t m, std::size_t k);
void case2_insert(std::vector<Label>& v, std::size_t m, std::size_t k, unsigned c);
}  // namespace detail

}  // namespace motzgen

#endif  // MOTZGEN_SAMPLER_HPP
