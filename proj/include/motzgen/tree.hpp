#ifndef MOTZGEN_TREE_HPP
#define MOTZGEN_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace motzgen {

// Unary-binary (Motzkin) tree: Leaf | Unary(child) | Binary(left, right).
// Size is the edge count, i.e. nodes - 1. Nodes live in a pool indexed by
// id so that construction, traversal and destruction stay iterative and
// million-node trees cannot exhaust the call stack.
class MotzkinTree {
public:
    enum class Kind : std::uint8_t { Leaf, Unary, Binary };
    using NodeId = std::uint32_t;

    static MotzkinTree leaf();
    static MotzkinTree unary(MotzkinTree child);
    static MotzkinTree binary(MotzkinTree left, MotzkinTree right);

    std::size_t size() const { return nodes_.size() - 1; }  // edges
    std::size_t node_count() const { return nodes_.size(); }

    NodeId root() const { return root_; }
    Kind kind(NodeId id) const { return nodes_[id].kind; }
    NodeId child(NodeId id) const { return nodes_[id].left; }  // unary
    NodeId left(NodeId id) const { return nodes_[id].left; }
    NodeId right(NodeId id) const { return nodes_[id].right; }

    bool operator==(const MotzkinTree& other) const;  // structural

private:
    struct Node {
        Kind kind;
        NodeId left = 0;
        NodeId right = 0;
    };

    MotzkinTree() = default;
    NodeId absorb(MotzkinTree&& other);  // splice other's pool, return its root

    std::vector<Node> nodes_;
    NodeId root_ = 0;

    friend class MotzkinTreeBuilder;
};

// Incremental bottom-up construction without intermediate pools; push
// children first, then the parent.
class MotzkinTreeBuilder {
public:
    MotzkinTree::NodeId add_leaf();
    MotzkinTree::NodeId add_unary(MotzkinTree::NodeId child);
    MotzkinTree::NodeId add_binary(MotzkinTree::NodeId left, MotzkinTree::NodeId right);
    MotzkinTree finish(MotzkinTree::NodeId root);

private:
    MotzkinTree tree_;
};

}  // namespace motzgen

#endif  // MOTZGEN_TREE_HPP
