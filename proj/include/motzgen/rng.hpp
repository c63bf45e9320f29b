#ifndef MOTZGEN_RNG_HPP
#define MOTZGEN_RNG_HPP

#include <cstdint>
#include <random>

#include "motzgen/numbers.hpp"

namespace motzgen {

// Deterministic stream of random draws. The word source is std::mt19937_64,
// whose algorithm and output are pinned bit-exactly by the C++ standard, so
// equal seeds give equal sequences on every platform. All derived draws
// (bounded integers, unit doubles) are defined here on top of the raw
// 64-bit words; std::* distributions are never used because their output is
// implementation-defined.
//
// Single-owner: a stream may be moved between threads but not shared.
class RandomStream {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit RandomStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Uniform on {0, ..., bound-1} by masked rejection: draw bit_width(bound-1)
    // low bits of a word, retry while >= bound. No modulo bias. bound = 1
    // returns 0 without consuming a word. Rejects bound = 0.
    std::uint64_t next_below(std::uint64_t bound);

    // Same contract for big-integer bounds. Words are consumed least
    // significant first; the top word is masked to the needed bit count.
    BigCount next_below(const BigCount& bound);

    // Uniform on [0,1): the top 53 bits of one word, scaled by 2^-53.
    double next_unit();

    // One raw word from the generator.
    std::uint64_t next_word() { return gen_(); }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace motzgen

#endif  // MOTZGEN_RNG_HPP
