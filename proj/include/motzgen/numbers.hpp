#ifndef MOTZGEN_NUMBERS_HPP
#define MOTZGEN_NUMBERS_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace motzgen {

// Arbitrary-precision nonnegative count. M_n grows like 3^n and C_n like
// 4^n, so fixed-width integers give out around n = 40.
using BigCount = mpz_class;

// n-th Motzkin number via the holonomic recurrence
//   (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2},   M_0 = M_1 = 1.
// The division by n+2 always comes out even; a nonzero remainder throws
// std::logic_error. Values are memoized: reads are lock-free once computed,
// growth of the memo is serialized internally. The returned reference stays
// valid for the lifetime of the program.
const BigCount& motzkin(std::size_t n);

// Same sequence through the convolution
//   M_{n+1} = M_n + sum_{i=0}^{n-1} M_i M_{n-1-i}.
// Deliberately separate from motzkin(): O(n^2) bigint multiplies, no shared
// table, used as an independent cross-check.
BigCount motzkin_conv(std::size_t n);

// Number of binary-tree shapes with n leaves: C_1 = 1 and
//   n C_n = 2(2n-3) C_{n-1},
// equivalently (m+1) Cat_m = 2(2m-1) Cat_{m-1} for Cat_m = C_{m+1}.
// Rejects n = 0.
BigCount catalan(std::size_t n);

// floor(2^63 * num / den) scaled back to [0,1]; requires 0 <= num <= den,
// den > 0. At most 1 ulp from the exact quotient, independent of the
// quality of the bigint-to-double conversion.
double quotient_to_double(const BigCount& num, const BigCount& den);

// Case-1 selection probabilities for the fast sampler:
//   p1[n] = (2n+1) M_{n-1} / ((n+2) M_n),  2 <= n <= max_n,
// each entry rounded from the exact rational to within 1 ulp.
// Immutable after construction; safe to share across threads.
class RatioTable {
public:
    RatioTable(std::size_t max_n, std::vector<double> p1);

    std::size_t max_n() const { return max_n_; }

    // valid for 2 <= n <= max_n()
    double p1(std::size_t n) const;

    // entries in order n = 2..max_n
    const std::vector<double>& entries() const { return p1_; }

    bool operator==(const RatioTable&) const = default;

private:
    std::size_t max_n_;
    std::vector<double> p1_;  // p1_[n-2] holds p1[n]
};

// Builds the table with a sliding window over (M_{n-1}, M_n); O(max_n)
// bigint operations, O(max_n^2) bit complexity. Rejects max_n < 2.
RatioTable build_ratio_table(std::size_t max_n);

// Text format, LF line endings:
//   motzgen-ratio v1
//   max_n=<decimal>
//   <n><TAB><p1[n] as shortest decimal that round-trips binary64>   (n = 2..max_n)
void save_ratio_table(const RatioTable& table, std::ostream& out);
RatioTable load_ratio_table(std::istream& in);

class RatioTableError : public std::runtime_error {
public:
    enum class Kind {
        BadHeader,   // missing or wrong magic line
        BadMaxN,     // malformed max_n line, or max_n < 2
        Truncated,   // fewer than max_n-1 data lines
        BadEntry,    // malformed data line or value outside (0,1)
    };

    RatioTableError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace motzgen

#endif  // MOTZGEN_NUMBERS_HPP
