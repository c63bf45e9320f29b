#include "motzgen/tree.hpp"

#include <stdexcept>
#include <utility>

namespace motzgen {

MotzkinTree MotzkinTree::leaf() {
    MotzkinTree t;
    t.nodes_.push_back({Kind::Leaf});
    t.root_ = 0;
    return t;
}

MotzkinTree::NodeId MotzkinTree::absorb(MotzkinTree&& other) {
    const NodeId offset = static_cast<NodeId>(nodes_.size());
    for (const Node& n : other.nodes_) {
        Node shifted = n;
        if (n.kind != Kind::Leaf) {
            shifted.left = n.left + offset;
            shifted.right = n.right + offset;
        }
        nodes_.push_back(shifted);
    }
    return other.root_ + offset;
}

MotzkinTree MotzkinTree::unary(MotzkinTree child) {
    MotzkinTree t;
    t.nodes_.reserve(child.nodes_.size() + 1);
    const NodeId c = t.absorb(std::move(child));
    t.nodes_.push_back({Kind::Unary, c, c});
    t.root_ = static_cast<NodeId>(t.nodes_.size() - 1);
    return t;
}

MotzkinTree MotzkinTree::binary(MotzkinTree left, MotzkinTree right) {
    MotzkinTree t;
    t.nodes_.reserve(left.nodes_.size() + right.nodes_.size() + 1);
    const NodeId l = t.absorb(std::move(left));
    const NodeId r = t.absorb(std::move(right));
    t.nodes_.push_back({Kind::Binary, l, r});
    t.root_ = static_cast<NodeId>(t.nodes_.size() - 1);
    return t;
}

bool MotzkinTree::operator==(const MotzkinTree& other) const {
    if (nodes_.size() != other.nodes_.size()) return false;
    std::vector<std::pair<NodeId, NodeId>> stack{{root_, other.root_}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (kind(a) != other.kind(b)) return false;
        switch (kind(a)) {
            case Kind::Leaf:
                break;
            case Kind::Unary:
                stack.emplace_back(child(a), other.child(b));
                break;
            case Kind::Binary:
                stack.emplace_back(left(a), other.left(b));
                stack.emplace_back(right(a), other.right(b));
                break;
        }
    }
    return true;
}

MotzkinTree::NodeId MotzkinTreeBuilder::add_leaf() {
    tree_.nodes_.push_back({MotzkinTree::Kind::Leaf});
    return static_cast<MotzkinTree::NodeId>(tree_.nodes_.size() - 1);
}

MotzkinTree::NodeId MotzkinTreeBuilder::add_unary(MotzkinTree::NodeId child) {
    if (child >= tree_.nodes_.size())
        throw std::out_of_range("MotzkinTreeBuilder: unknown child id");
    tree_.nodes_.push_back({MotzkinTree::Kind::Unary, child, child});
    return static_cast<MotzkinTree::NodeId>(tree_.nodes_.size() - 1);
}

MotzkinTree::NodeId MotzkinTreeBuilder::add_binary(MotzkinTree::NodeId left,
                                                   MotzkinTree::NodeId right) {
    if (left >= tree_.nodes_.size() || right >= tree_.nodes_.size())
        throw std::out_of_range("MotzkinTreeBuilder: unknown child id");
    tree_.nodes_.push_back({MotzkinTree::Kind::Binary, left, right});
    return static_cast<MotzkinTree::NodeId>(tree_.nodes_.size() - 1);
}

MotzkinTree MotzkinTreeBuilder::finish(MotzkinTree::NodeId root) {
    if (root >= tree_.nodes_.size())
        throw std::out_of_range("MotzkinTreeBuilder: unknown root id");
    tree_.root_ = root;
    return std::move(tree_);
}

}  // namespace motzgen
