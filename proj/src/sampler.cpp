#include "motzgen/sampler.hpp"

#include <cassert>
#include <stdexcept>

namespace motzgen {

SlantingVector base_vector(std::size_t n) {
    if (n == 0) return {{1, 0, 2}};
    if (n == 1) return {{1, 3, 0, 2, 4}};
    throw std::invalid_argument("base_vector: only sizes 0 and 1 have base vectors");
}

BigCount case1_weight(std::size_t n) {
    if (n < 2) throw std::invalid_argument("case1_weight: n must be at least 2");
    BigCount w;
    mpz_mul_ui(w.get_mpz_t(), motzkin(n - 1).get_mpz_t(), 2 * n + 1);
    return w;
}

BigCount total_weight(std::size_t n) {
    BigCount w;
    mpz_mul_ui(w.get_mpz_t(), motzkin(n).get_mpz_t(), n + 2);
    return w;
}

Case classify_exact(std::size_t n, const BigCount& u) {
    return u < case1_weight(n) ? Case::Case1 : Case::Case2;
}

Case select_case(RandomStream& stream, std::size_t n) {
    if (n < 2) throw std::invalid_argument("select_case: n must be at least 2");
    const BigCount u = stream.next_below(total_weight(n));
    return classify_exact(n, u);
}

Case select_case(RandomStream& stream, std::size_t n, const RatioTable& table) {
    if (n < 2) throw std::invalid_argument("select_case: n must be at least 2");
    if (table.max_n() < n)
        throw std::invalid_argument("select_case: ratio table does not cover n");
    return stream.next_unit() < table.p1(n) ? Case::Case1 : Case::Case2;
}

namespace detail {

void case1_insert(std::vector<Label>& v, std::size_t m, std::size_t k) {
    if (k >= 2 * m + 1) throw std::out_of_range("case1_step: position out of range");
    // pattern 7: a right-child leaf whose left sister is a leaf; the
    // insertion moves to the sister, everything else is a plain right
    // insertion at k. k = 0 is always the plain branch (the root is odd).
    if (k != 0 && k % 2 == 0 && v[k] % 2 == 0 && v[k - 1] % 2 == 0) --k;
    const Label node = static_cast<Label>(2 * m + 1);
    const Label leaf = static_cast<Label>(2 * m + 2);
    v.push_back(v[k]);  // index 2m+1: displaced occupant as left child
    v.push_back(leaf);  // index 2m+2: fresh leaf as right child
    v[k] = node;
}

void case2_insert(std::vector<Label>& v, std::size_t m, std::size_t k, unsigned c) {
    if (k + 2 > m) throw std::out_of_range("case2_step: node index out of range");
    if (c > 2) throw std::out_of_range("case2_step: placement must be 0, 1 or 2");
    const Label left_node = static_cast<Label>(2 * m - 1);
    const Label right_node = static_cast<Label>(2 * m + 1);
    const Label old_left = v[2 * k + 1];
    const Label old_right = v[2 * k + 2];
    v[2 * k + 1] = left_node;
    v[2 * k + 2] = right_node;
    if (c < 2) {
        // LL/LR: fresh leaf pair under the left node, displaced subtrees
        // under the right one
        v.push_back(static_cast<Label>(2 * m));      // index 2m-1
        v.push_back(static_cast<Label>(2 * m + 2));  // index 2m
        v.push_back(old_left);                       // index 2m+1
        v.push_back(old_right);                      // index 2m+2
    } else {
        // RL: displaced subtrees left, fresh pair right
        v.push_back(old_left);
        v.push_back(old_right);
        v.push_back(static_cast<Label>(2 * m));
        v.push_back(static_cast<Label>(2 * m + 2));
    }
}

}  // namespace detail

SlantingVector case1_step(const SlantingVector& v, std::size_t k) {
    SlantingVector out = v;
    out.labels.reserve(v.labels.size() + 2);
    detail::case1_insert(out.labels, v.size() + 1, k);
    return out;
}

SlantingVector case2_step(const SlantingVector& v, std::size_t k, unsigned c) {
    SlantingVector out = v;
    out.labels.reserve(v.labels.size() + 4);
    detail::case2_insert(out.labels, v.size() + 2, k, c);
    return out;
}

namespace {

SampleHistory descend_impl(RandomStream& stream, std::size_t n, const RatioTable* table) {
    if (n > kMaxSize) throw std::invalid_argument("random_motzkin: size exceeds label range");
    if (table != nullptr && n >= 2 && table->max_n() < n)
        throw std::invalid_argument("random_motzkin: ratio table does not cover the size");
    SampleHistory history;
    history.reserve(n + 1);
    history.push_back(n);
    std::size_t m = n;
    while (m >= 2) {
        const Case chosen = table ? select_case(stream, m, *table) : select_case(stream, m);
        m -= chosen == Case::Case1 ? 1 : 2;
        history.push_back(m);
    }
    return history;
}

// Same two phases as descend + replay, with the case sequence packed into
// bits so a size-10^6 descent touches kilobytes instead of megabytes. The
// draw sequence is identical.
SlantingVector random_motzkin_impl(RandomStream& stream, std::size_t n, const RatioTable* table) {
    if (n > kMaxSize) throw std::invalid_argument("random_motzkin: size exceeds label range");
    if (table != nullptr && n >= 2 && table->max_n() < n)
        throw std::invalid_argument("random_motzkin: ratio table does not cover the size");
    std::vector<std::uint64_t> case2_bits(n / 64 + 1, 0);
    std::size_t levels = 0;
    std::size_t m = n;
    while (m >= 2) {
        const Case chosen = table ? select_case(stream, m, *table) : select_case(stream, m);
        if (chosen == Case::Case2) {
            case2_bits[levels / 64] |= std::uint64_t{1} << (levels % 64);
            m -= 2;
        } else {
            m -= 1;
        }
        ++levels;
    }
    SlantingVector v = base_vector(m);
    v.labels.reserve(2 * n + 3);
    for (std::size_t i = levels; i-- > 0;) {
        if (case2_bits[i / 64] >> (i % 64) & 1) {
            m += 2;
            const std::uint64_t r = stream.next_below(std::uint64_t{3} * (m - 1));
            detail::case2_insert(v.labels, m, static_cast<std::size_t>(r / 3),
                                 static_cast<unsigned>(r % 3));
        } else {
            m += 1;
            const std::uint64_t k = stream.next_below(std::uint64_t{2} * m + 1);
            detail::case1_insert(v.labels, m, static_cast<std::size_t>(k));
        }
        assert(check_slanting(v.labels) == VectorDefect::Ok);
    }
    return v;
}

}  // namespace

SampleHistory descend(RandomStream& stream, std::size_t n) {
    return descend_impl(stream, n, nullptr);
}

SampleHistory descend(RandomStream& stream, std::size_t n, const RatioTable& table) {
    return descend_impl(stream, n, &table);
}

SlantingVector replay(RandomStream& stream, const SampleHistory& history) {
    if (history.empty() || history.back() > 1)
        throw std::invalid_argument("replay: history must end at size 0 or 1");
    const std::size_t n = history.front();
    SlantingVector v = base_vector(history.back());
    v.labels.reserve(2 * n + 3);
    for (std::size_t i = history.size() - 1; i-- > 0;) {
        const std::size_t m = history[i];
        if (m == history[i + 1] + 1) {
            const std::uint64_t k = stream.next_below(std::uint64_t{2} * m + 1);
            detail::case1_insert(v.labels, m, static_cast<std::size_t>(k));
        } else if (m == history[i + 1] + 2) {
            const std::uint64_t r = stream.next_below(std::uint64_t{3} * (m - 1));
            detail::case2_insert(v.labels, m, static_cast<std::size_t>(r / 3),
                                 static_cast<unsigned>(r % 3));
        } else {
            throw std::invalid_argument("replay: adjacent sizes must differ by 1 or 2");
        }
        assert(check_slanting(v.labels) == VectorDefect::Ok);
    }
    return v;
}

SlantingVector random_motzkin(RandomStream& stream, std::size_t n) {
    if (n <= 1) return base_vector(n);
    return random_motzkin_impl(stream, n, nullptr);
}

SlantingVector random_motzkin(RandomStream& stream, std::size_t n, const RatioTable& table) {
    if (n <= 1) return base_vector(n);
    return random_motzkin_impl(stream, n, &table);
}

VectorDefect check_slanting(std::span<const Label> labels) {
    const std::size_t len = labels.size();
    if (len < 3 || len % 2 == 0) return VectorDefect::BadLength;
    std::vector<bool> seen(len, false);
    for (Label l : labels) {
        if (l >= len || seen[l]) return VectorDefect::NotPermutation;
        seen[l] = true;
    }
    if (labels[0] % 2 == 0) return VectorDefect::Parity;
    std::vector<std::size_t> stack{0};
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        const Label l = labels[i];
        ++reached;
        if (l % 2 == 0) continue;
        const Label lc = labels[l];
        const Label rc = labels[l + 1];
        if (lc % 2 == 0 && rc % 2 == 1) return VectorDefect::LeafInternal;
        stack.push_back(l);
        stack.push_back(l + 1);
    }
    if (reached != len) return VectorDefect::NotSpanning;
    return VectorDefect::Ok;
}

std::string defect_message(VectorDefect defect) {
    switch (defect) {
        case VectorDefect::Ok: return "ok";
        case VectorDefect::BadLength: return "length must be odd and at least 3";
        case VectorDefect::NotPermutation: return "labels are not a permutation of 0..len-1";
        case VectorDefect::Parity: return "root label must be odd";
        case VectorDefect::LeafInternal: return "forbidden (leaf, internal) child pair";
        case VectorDefect::NotSpanning: return "decode from the root does not span the array";
    }
    return "unknown defect";
}

MotzkinTree to_motzkin_tree(const SlantingVector& v) {
    if (const VectorDefect d = check_slanting(v.labels); d != VectorDefect::Ok)
        throw SlantingVectorError(d, "to_motzkin_tree: " + defect_message(d));
    MotzkinTreeBuilder builder;
    const std::size_t len = v.labels.size();
    std::vector<MotzkinTree::NodeId> built(len, 0);
    struct Frame {
        std::size_t idx;
        bool expanded;
    };
    std::vector<Frame> stack{{0, false}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        const Label l = v.labels[f.idx];
        const Label lc = v.labels[l];
        const Label rc = v.labels[l + 1];
        if (!f.expanded) {
            stack.back().expanded = true;
            bool pushed = false;
            if (lc % 2 == 1) {
                stack.push_back({l, false});
                pushed = true;
            }
            if (rc % 2 == 1) {
                stack.push_back({static_cast<std::size_t>(l) + 1, false});
                pushed = true;
            }
            if (pushed) continue;
        }
        stack.pop_back();
        if (lc % 2 == 0 && rc % 2 == 0)
            built[f.idx] = builder.add_leaf();
        else if (rc % 2 == 0)
            built[f.idx] = builder.add_unary(built[l]);
        else
            built[f.idx] = builder.add_binary(built[l], built[l + 1]);
    }
    return builder.finish(built[0]);
}

SlantingVector slanting_from_tree(const MotzkinTree& tree) {
    const std::size_t n = tree.size();
    if (n > kMaxSize) throw std::invalid_argument("slanting_from_tree: tree too large");
    // Breadth-first: the i-th visited slot is index i, internal nodes take
    // odd labels in visit order and leaves even labels. When the j-th
    // internal node is dequeued the queue holds 2j+1 items, so its children
    // land at indices 2j+1 and 2j+2, exactly where its label points.
    struct Item {
        MotzkinTree::NodeId node;
        bool slant_leaf;
    };
    std::vector<Item> queue;
    queue.reserve(2 * n + 3);
    queue.push_back({tree.root(), false});
    SlantingVector v;
    v.labels.assign(2 * n + 3, 0);
    Label next_odd = 1;
    Label next_even = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Item item = queue[i];
        if (item.slant_leaf) {
            v.labels[i] = next_even;
            next_even += 2;
            continue;
        }
        v.labels[i] = next_odd;
        next_odd += 2;
        switch (tree.kind(item.node)) {
            case MotzkinTree::Kind::Leaf:
                queue.push_back({0, true});
                queue.push_back({0, true});
                break;
            case MotzkinTree::Kind::Unary:
                queue.push_back({tree.child(item.node), false});
                queue.push_back({0, true});
                break;
            case MotzkinTree::Kind::Binary:
                queue.push_back({tree.left(item.node), false});
                queue.push_back({tree.right(item.node), false});
                break;
        }
    }
    return v;
}

}  // namespace motzgen
