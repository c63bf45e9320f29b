#include <doctest.h>

#include <algorithm>
#include <set>

#include "motzgen/codec.hpp"
#include "motzgen/sampler.hpp"

using namespace motzgen;

TEST_CASE("base vectors") {
    CHECK(base_vector(0).labels == std::vector<Label>{1, 0, 2});
    CHECK(base_vector(1).labels == std::vector<Label>{1, 3, 0, 2, 4});
    CHECK_THROWS_AS(base_vector(2), std::invalid_argument);
}

TEST_CASE("exact case selection at n = 2") {
    CHECK(case1_weight(2) == 5);   // 5 M_1
    CHECK(total_weight(2) == 8);   // 4 M_2
    CHECK(classify_exact(2, BigCount(4)) == Case::Case1);
    CHECK(classify_exact(2, BigCount(5)) == Case::Case2);
    int case1 = 0;
    for (int u = 0; u < 8; ++u)
        if (classify_exact(2, BigCount(u)) == Case::Case1) ++case1;
    CHECK(case1 == 5);  // P(case1) = 5/8
}

TEST_CASE("select_case rejects bad inputs") {
    RandomStream s(0);
    CHECK_THROWS_AS(select_case(s, 1), std::invalid_argument);
    const RatioTable table = build_ratio_table(4);
    CHECK_THROWS_AS(select_case(s, 6, table), std::invalid_argument);
}

TEST_CASE("case1_step examples") {
    const SlantingVector v1{{1, 3, 0, 2, 4}};
    CHECK(case1_step(v1, 2).labels == std::vector<Label>{1, 3, 5, 2, 4, 0, 6});
    CHECK(case1_step(v1, 4).labels == std::vector<Label>{1, 3, 0, 5, 4, 2, 6});  // pattern 7
    // at size 0 the plain branch applies at the root; this level is never
    // reached by random_motzkin (the descent stops at the bases)
    CHECK(case1_step(SlantingVector{{1, 0, 2}}, 0).labels == std::vector<Label>{3, 0, 2, 1, 4});
    CHECK_THROWS_AS(case1_step(v1, 5), std::out_of_range);
}

TEST_CASE("case1_step keeps vectors slanting") {
    const SlantingVector v1{{1, 3, 0, 2, 4}};
    for (std::size_t k = 0; k <= 4; ++k) {
        const SlantingVector next = case1_step(v1, k);
        CHECK(next.length() == 7);
        CHECK(check_slanting(next.labels) == VectorDefect::Ok);
    }
}

TEST_CASE("case2_step examples") {
    const SlantingVector v0{{1, 0, 2}};
    CHECK(case2_step(v0, 0, 0).labels == std::vector<Label>{1, 3, 5, 4, 6, 0, 2});
    CHECK(case2_step(v0, 0, 1).labels == std::vector<Label>{1, 3, 5, 4, 6, 0, 2});
    CHECK(case2_step(v0, 0, 2).labels == std::vector<Label>{1, 3, 5, 0, 2, 4, 6});
    CHECK_THROWS_AS(case2_step(v0, 1, 0), std::out_of_range);
    CHECK_THROWS_AS(case2_step(v0, 0, 3), std::out_of_range);
}

TEST_CASE("case2_step adds four labels and stays valid") {
    const SlantingVector v1{{1, 3, 0, 2, 4}};  // size 1, internal nodes 1 and 3
    for (std::size_t k = 0; k <= 1; ++k)
        for (unsigned c = 0; c <= 2; ++c) {
            const SlantingVector next = case2_step(v1, k, c);
            CHECK(next.length() == v1.length() + 4);
            CHECK(next.size() == 3);
            CHECK(check_slanting(next.labels) == VectorDefect::Ok);
            std::set<Label> labels(next.labels.begin(), next.labels.end());
            CHECK(labels.size() == next.length());
            CHECK(*labels.rbegin() == next.length() - 1);
        }
}

TEST_CASE("random_motzkin tiny sizes are deterministic") {
    RandomStream s(77);
    CHECK(random_motzkin(s, 0).labels == std::vector<Label>{1, 0, 2});
    CHECK(random_motzkin(s, 1).labels == std::vector<Label>{1, 3, 0, 2, 4});
    const RatioTable table = build_ratio_table(2);
    CHECK(random_motzkin(s, 0, table).labels == std::vector<Label>{1, 0, 2});
}

TEST_CASE("equal seeds give equal samples in both modes") {
    const RatioTable table = build_ratio_table(64);
    RandomStream a(9), b(9);
    for (int i = 0; i < 50; ++i) CHECK(random_motzkin(a, 40) == random_motzkin(b, 40));
    RandomStream c(9), d(9);
    for (int i = 0; i < 50; ++i)
        CHECK(random_motzkin(c, 40, table) == random_motzkin(d, 40, table));
}

TEST_CASE("random_motzkin matches replay of descend draw for draw") {
    const RatioTable table = build_ratio_table(300);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomStream a(seed), b(seed);
        CHECK(random_motzkin(a, 300) == replay(b, descend(b, 300)));
        RandomStream c(seed), d(seed);
        CHECK(random_motzkin(c, 300, table) == replay(d, descend(d, 300, table)));
    }
}

TEST_CASE("descend records a history down to a base") {
    RandomStream s(123);
    for (int i = 0; i < 200; ++i) {
        const SampleHistory h = descend(s, 37);
        CHECK(h.front() == 37);
        CHECK(h.back() <= 1);
        for (std::size_t j = 1; j < h.size(); ++j) {
            const std::size_t diff = h[j - 1] - h[j];
            CHECK(diff >= 1);
            CHECK(diff <= 2);
        }
    }
}

TEST_CASE("structural invariants on random sizes, both modes") {
    RandomStream s(31337);
    const RatioTable table = build_ratio_table(500);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = static_cast<std::size_t>(s.next_below(std::uint64_t{501}));
        const SlantingVector v =
            i % 2 == 0 ? random_motzkin(s, n) : random_motzkin(s, n, table);
        CHECK(v.length() == 2 * n + 3);
        CHECK(check_slanting(v.labels) == VectorDefect::Ok);
        std::size_t evens = 0;
        for (Label l : v.labels) evens += l % 2 == 0;
        CHECK(evens == n + 2);                     // leaves
        CHECK(v.length() - evens == n + 1);        // internal nodes
        CHECK(to_motzkin_tree(v).size() == n);
    }
}

TEST_CASE("fast mode demands a covering table") {
    RandomStream s(4);
    const RatioTable table = build_ratio_table(8);
    CHECK_THROWS_AS(random_motzkin(s, 9, table), std::invalid_argument);
}

TEST_CASE("to_motzkin_tree on the defining configurations") {
    CHECK(to_motzkin_tree(SlantingVector{{1, 0, 2}}) == MotzkinTree::leaf());
    CHECK(to_motzkin_tree(SlantingVector{{1, 3, 0, 2, 4}}) ==
          MotzkinTree::unary(MotzkinTree::leaf()));
    CHECK(to_motzkin_tree(SlantingVector{{1, 3, 5, 4, 6, 0, 2}}) ==
          MotzkinTree::binary(MotzkinTree::leaf(), MotzkinTree::leaf()));
}

TEST_CASE("to_motzkin_tree reports each defect distinctly") {
    auto defect_of = [](std::vector<Label> labels) {
        try {
            to_motzkin_tree(SlantingVector{std::move(labels)});
        } catch (const SlantingVectorError& e) {
            return e.defect();
        }
        return VectorDefect::Ok;
    };
    CHECK(defect_of({1, 0, 2, 4}) == VectorDefect::BadLength);
    CHECK(defect_of({1, 1, 2}) == VectorDefect::NotPermutation);
    CHECK(defect_of({1, 0, 5}) == VectorDefect::NotPermutation);
    CHECK(defect_of({0, 1, 2}) == VectorDefect::Parity);
    CHECK(defect_of({1, 0, 3, 2, 4}) == VectorDefect::LeafInternal);
    CHECK(defect_of({1, 0, 2, 3, 4}) == VectorDefect::NotSpanning);
}

TEST_CASE("slanting_from_tree is canonical and decodes back") {
    CHECK(slanting_from_tree(MotzkinTree::leaf()).labels == base_vector(0).labels);
    CHECK(slanting_from_tree(MotzkinTree::unary(MotzkinTree::leaf())).labels ==
          base_vector(1).labels);
    RandomStream s(55);
    const RatioTable table = build_ratio_table(200);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = static_cast<std::size_t>(s.next_below(std::uint64_t{201}));
        const MotzkinTree t = to_motzkin_tree(random_motzkin(s, n, table));
        const SlantingVector encoded = slanting_from_tree(t);
        CHECK(check_slanting(encoded.labels) == VectorDefect::Ok);
        CHECK(to_motzkin_tree(encoded) == t);
    }
}
