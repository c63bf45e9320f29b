#include "motzgen/codec.hpp"

#include <algorithm>
#include <ostream>

namespace motzgen {

namespace {

[[noreturn]] void raise(WordVerdict v) {
    std::string msg;
    switch (v.kind) {
        case WordVerdict::Kind::PrematureClose:
            msg = "word: ')' without matching '(' at position " + std::to_string(v.position);
            break;
        case WordVerdict::Kind::Unbalanced:
            msg = "word: unbalanced at end";
            break;
        case WordVerdict::Kind::BadSymbol:
            msg = "word: symbol outside {c,(,)} at position " + std::to_string(v.position);
            break;
        case WordVerdict::Kind::Ok:
            msg = "word: ok";
            break;
    }
    throw WordError(v, msg);
}

}  // namespace

WordVerdict validate_word(std::string_view word) {
    std::size_t depth = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        switch (word[i]) {
            case 'c':
                break;
            case '(':
                ++depth;
                break;
            case ')':
                if (depth == 0) return {WordVerdict::Kind::PrematureClose, i + 1};
                --depth;
                break;
            default:
                return {WordVerdict::Kind::BadSymbol, i + 1};
        }
    }
    if (depth != 0) return {WordVerdict::Kind::Unbalanced, word.size() + 1};
    return {};
}

MotzkinTree word_to_tree(std::string_view word) {
    if (auto v = validate_word(word); !v.ok()) raise(v);
    MotzkinTreeBuilder builder;
    // Item list per nesting level; kUnaryMark stands for a pending 'c',
    // other entries are finished subtrees of parenthesized groups.
    constexpr std::int64_t kUnaryMark = -1;
    std::vector<std::vector<std::int64_t>> levels(1);
    auto fold = [&](std::vector<std::int64_t>& items) {
        // f is right-associative: start from the trailing Leaf and wrap
        MotzkinTree::NodeId acc = builder.add_leaf();
        for (auto it = items.rbegin(); it != items.rend(); ++it)
            acc = *it == kUnaryMark
                      ? builder.add_unary(acc)
                      : builder.add_binary(static_cast<MotzkinTree::NodeId>(*it), acc);
        return acc;
    };
    for (char ch : word) {
        if (ch == 'c') {
            levels.back().push_back(kUnaryMark);
        } else if (ch == '(') {
            levels.emplace_back();
        } else {  // ')'
            const MotzkinTree::NodeId group = fold(levels.back());
            levels.pop_back();
            levels.back().push_back(static_cast<std::int64_t>(group));
        }
    }
    return builder.finish(fold(levels.front()));
}

std::string tree_to_word(const MotzkinTree& tree) {
    std::string out;
    out.reserve(tree.size());
    // entries: node ids to expand, or a pending ')' literal
    struct Item {
        MotzkinTree::NodeId id;
        bool literal_close;
    };
    std::vector<Item> stack{{tree.root(), false}};
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        if (item.literal_close) {
            out.push_back(')');
            continue;
        }
        switch (tree.kind(item.id)) {
            case MotzkinTree::Kind::Leaf:
                break;
            case MotzkinTree::Kind::Unary:
                out.push_back('c');
                stack.push_back({tree.child(item.id), false});
                break;
            case MotzkinTree::Kind::Binary:
                out.push_back('(');
                stack.push_back({tree.right(item.id), false});
                stack.push_back({0, true});
                stack.push_back({tree.left(item.id), false});
                break;
        }
    }
    return out;
}

MotzkinPath word_to_path(std::string_view word) {
    if (auto v = validate_word(word); !v.ok()) raise(v);
    MotzkinPath path;
    path.reserve(word.size());
    for (char ch : word)
        path.push_back(ch == '(' ? Step::Up : ch == ')' ? Step::Down : Step::Straight);
    return path;
}

std::string path_to_word(const MotzkinPath& path) {
    std::string word;
    word.reserve(path.size());
    for (Step s : path)
        word.push_back(s == Step::Up ? '(' : s == Step::Down ? ')' : 'c');
    if (auto v = validate_word(word); !v.ok())
        throw std::invalid_argument("path: prefix dips below zero or does not return to zero");
    return word;
}

std::string path_to_string(const MotzkinPath& path) {
    std::string out;
    out.reserve(path.size());
    for (Step s : path)
        out.push_back(s == Step::Up ? 'U' : s == Step::Down ? 'D' : 'S');
    return out;
}

MotzkinPath path_from_string(std::string_view text) {
    MotzkinPath path;
    path.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'U': path.push_back(Step::Up); break;
            case 'D': path.push_back(Step::Down); break;
            case 'S': path.push_back(Step::Straight); break;
            default: throw std::invalid_argument("path: symbol outside {U,D,S}");
        }
    }
    return path;
}

ChordDiagram word_to_chords(std::string_view word) {
    if (auto v = validate_word(word); !v.ok()) raise(v);
    ChordDiagram d;
    d.n_points = word.size();
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == '(') {
            open.push_back(i + 1);
        } else if (word[i] == ')') {
            d.chords.emplace_back(open.back(), i + 1);
            open.pop_back();
        }
    }
    std::sort(d.chords.begin(), d.chords.end());
    return d;
}

std::string chords_to_word(const ChordDiagram& diagram) {
    enum class Role : std::uint8_t { None, Open, Close };
    std::vector<Role> role(diagram.n_points + 1, Role::None);
    std::vector<std::size_t> mate(diagram.n_points + 1, 0);
    for (const auto& [i, j] : diagram.chords) {
        if (i < 1 || j <= i || j > diagram.n_points)
            throw std::invalid_argument("chords: endpoint pair out of range");
        if (role[i] != Role::None || role[j] != Role::None)
            throw std::invalid_argument("chords: duplicate endpoint");
        role[i] = Role::Open;
        role[j] = Role::Close;
        mate[i] = j;
    }
    std::string word;
    word.reserve(diagram.n_points);
    std::vector<std::size_t> expected_close;
    for (std::size_t p = 1; p <= diagram.n_points; ++p) {
        switch (role[p]) {
            case Role::None:
                word.push_back('c');
                break;
            case Role::Open:
                expected_close.push_back(mate[p]);
                word.push_back('(');
                break;
            case Role::Close:
                if (expected_close.empty() || expected_close.back() != p)
                    throw std::invalid_argument("chords: crossing chords");
                expected_close.pop_back();
                word.push_back(')');
                break;
        }
    }
    return word;
}

std::string chords_to_line(const ChordDiagram& diagram) {
    std::string out = std::to_string(diagram.n_points);
    auto chords = diagram.chords;
    std::sort(chords.begin(), chords.end());
    for (const auto& [i, j] : chords) {
        out.push_back(' ');
        out += std::to_string(i);
        out.push_back('-');
        out += std::to_string(j);
    }
    return out;
}

void to_dot(const MotzkinTree& tree, std::ostream& out) {
    out << "digraph motzkin {\n";
    // preorder ids so output is deterministic
    std::vector<MotzkinTree::NodeId> order;
    std::vector<std::size_t> name(tree.node_count());
    std::vector<MotzkinTree::NodeId> stack{tree.root()};
    while (!stack.empty()) {
        const auto id = stack.back();
        stack.pop_back();
        name[id] = order.size();
        order.push_back(id);
        switch (tree.kind(id)) {
            case MotzkinTree::Kind::Leaf:
                break;
            case MotzkinTree::Kind::Unary:
                stack.push_back(tree.child(id));
                break;
            case MotzkinTree::Kind::Binary:
                stack.push_back(tree.right(id));
                stack.push_back(tree.left(id));
                break;
        }
    }
    for (const auto id : order) {
        if (tree.kind(id) == MotzkinTree::Kind::Leaf)
            out << "  n" << name[id] << " [shape=point];\n";
        else
            out << "  n" << name[id] << " [shape=circle, label=\"\"];\n";
    }
    for (const auto id : order) {
        switch (tree.kind(id)) {
            case MotzkinTree::Kind::Leaf:
                break;
            case MotzkinTree::Kind::Unary:
                out << "  n" << name[id] << " -> n" << name[tree.child(id)] << ";\n";
                break;
            case MotzkinTree::Kind::Binary:
                out << "  n" << name[id] << " -> n" << name[tree.left(id)] << ";\n";
                out << "  n" << name[id] << " -> n" << name[tree.right(id)] << ";\n";
                break;
        }
    }
    out << "}\n";
}

void to_dot(const BinaryTreeVector& v, std::ostream& out) {
    out << "digraph binary {\n";
    for (std::size_t i = 0; i < v.labels.size(); ++i) {
        if (v.labels[i] % 2 == 0)
            out << "  n" << v.labels[i] << " [shape=point];\n";
        else
            out << "  n" << v.labels[i] << " [shape=circle, label=\"" << v.labels[i] << "\"];\n";
    }
    for (std::size_t i = 0; i < v.labels.size(); ++i) {
        const Label l = v.labels[i];
        if (l % 2 == 1)
            out << "  n" << l << " -> n" << v.labels[l] << ";\n  n" << l << " -> n"
                << v.labels[l + 1] << ";\n";
    }
    out << "}\n";
}

}  // namespace motzgen
