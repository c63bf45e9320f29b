#include "motzgen/rng.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace motzgen {

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    const int bits = std::bit_width(bound - 1);
    if (bits == 0) return 0;
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (;;) {
        const std::uint64_t v = next_word() & mask;
        if (v < bound) return v;
    }
}

BigCount RandomStream::next_below(const BigCount& bound) {
    if (bound <= 0) throw std::invalid_argument("next_below: bound must be positive");
    if (mpz_fits_ulong_p(bound.get_mpz_t()))
        return BigCount(static_cast<unsigned long>(next_below(mpz_get_ui(bound.get_mpz_t()))));
    BigCount top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    std::vector<std::uint64_t> buf(words);
    BigCount result;
    for (;;) {
        for (std::size_t i = 0; i < words; ++i) buf[i] = next_word();
        buf[words - 1] &= top_mask;
        mpz_import(result.get_mpz_t(), words, -1 /* LSW first */, sizeof(std::uint64_t),
                   0 /* native endian */, 0, buf.data());
        if (result < bound) return result;
    }
}

double RandomStream::next_unit() {
    return static_cast<double>(next_word() >> 11) * 0x1.0p-53;
}

}  // namespace motzgen
