#include "motzgen/remy.hpp"

#include <cassert>
#include <stdexcept>

namespace motzgen {

namespace detail {

void remy_insert(std::vector<Label>& labels, std::size_t used, std::uint64_t x) {
    const std::size_t leaves = (used + 1) / 2;
    if (x >= 4 * leaves - 2)
        throw std::out_of_range("remy_step: insertion code out of range");
    const std::size_t k = static_cast<std::size_t>(x / 2);
    const Label displaced = labels[k];
    const Label node = static_cast<Label>(2 * leaves - 1);
    const Label leaf = static_cast<Label>(2 * leaves);
    labels[k] = node;
    if (x % 2 == 0) {  // old subtree on the left, new leaf on the right
        labels.push_back(displaced);
        labels.push_back(leaf);
    } else {
        labels.push_back(leaf);
        labels.push_back(displaced);
    }
}

}  // namespace detail

BinaryTreeVector remy_step(const BinaryTreeVector& v, std::uint64_t x) {
    if (v.labels.empty() || v.labels.size() % 2 == 0)
        throw std::invalid_argument("remy_step: vector length must be odd and positive");
    BinaryTreeVector out = v;
    out.labels.reserve(v.labels.size() + 2);
    detail::remy_insert(out.labels, v.labels.size(), x);
    return out;
}

BinaryTreeVector random_binary_tree(RandomStream& stream, std::size_t n_leaves) {
    if (n_leaves == 0)
        throw std::invalid_argument("random_binary_tree: need at least one leaf");
    BinaryTreeVector v;
    v.labels.reserve(2 * n_leaves - 1);
    v.labels.push_back(0);
    for (std::size_t leaves = 1; leaves < n_leaves; ++leaves) {
        const std::uint64_t x = stream.next_below(std::uint64_t{4} * leaves - 2);
        detail::remy_insert(v.labels, v.labels.size(), x);
        assert(check_binary_vector(v.labels).empty());
    }
    return v;
}

std::string check_binary_vector(std::span<const Label> labels) {
    const std::size_t len = labels.size();
    if (len == 0 || len % 2 == 0) return "length must be odd and positive";
    std::vector<bool> seen(len, false);
    for (Label l : labels) {
        if (l >= len) return "label out of range";
        if (seen[l]) return "label repeated";
        seen[l] = true;
    }
    // walk from the root; every index must be reached exactly once
    std::vector<bool> visited(len, false);
    std::vector<std::size_t> stack{0};
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        if (visited[i]) return "index reached twice";
        visited[i] = true;
        ++reached;
        const Label l = labels[i];
        if (l % 2 == 1) {  // internal: children at indices l and l+1
            if (l + 1 >= len) return "internal node missing child slots";
            stack.push_back(l);
            stack.push_back(l + 1);
        }
    }
    if (reached != len) return "decode does not span the array";
    return {};
}

}  // namespace motzgen
