#include "motzgen/numbers.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>

namespace motzgen {

namespace {

// num / den with the remainder asserted to be zero.
void exact_div_ui(BigCount& quotient, const BigCount& num, unsigned long den) {
    BigCount r;
    mpz_fdiv_qr_ui(quotient.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den);
    if (r != 0)
        throw std::logic_error("holonomic recurrence: division by " +
                               std::to_string(den) + " left a remainder");
}

// Memo for motzkin(): fixed directory of lazily allocated blocks so that
// readers never touch a reallocating container. Entries below `known_` are
// fully constructed and may be read without the lock.
class MotzkinMemo {
public:
    static constexpr std::size_t kBlock = 4096;
    static constexpr std::size_t kMaxBlocks = 4096;

    const BigCount& get(std::size_t n) {
        if (n >= known_.load(std::memory_order_acquire)) grow(n);
        return blocks_[n / kBlock].load(std::memory_order_acquire)[n % kBlock];
    }

private:
    void grow(std::size_t n) {
        std::lock_guard<std::mutex> lock(grow_mutex_);
        std::size_t known = known_.load(std::memory_order_relaxed);
        if (n < known) return;
        if (n >= kBlock * kMaxBlocks)
            throw std::invalid_argument("motzkin: n exceeds the memo capacity");
        for (std::size_t b = known / kBlock; b * kBlock <= n; ++b)
            if (blocks_[b].load(std::memory_order_relaxed) == nullptr)
                blocks_[b].store(new BigCount[kBlock], std::memory_order_release);
        BigCount acc, term;
        for (std::size_t i = known; i <= n; ++i) {
            BigCount& slot = blocks_[i / kBlock].load(std::memory_order_relaxed)[i % kBlock];
            if (i <= 1) {
                slot = 1;
                continue;
            }
            const BigCount& m1 = blocks_[(i - 1) / kBlock].load(std::memory_order_relaxed)[(i - 1) % kBlock];
            const BigCount& m2 = blocks_[(i - 2) / kBlock].load(std::memory_order_relaxed)[(i - 2) % kBlock];
            mpz_mul_ui(acc.get_mpz_t(), m1.get_mpz_t(), 2 * i + 1);
            mpz_mul_ui(term.get_mpz_t(), m2.get_mpz_t(), 3 * (i - 1));
            acc += term;
            exact_div_ui(slot, acc, i + 2);
        }
        known_.store(n + 1, std::memory_order_release);
    }

    std::array<std::atomic<BigCount*>, kMaxBlocks> blocks_{};
    std::atomic<std::size_t> known_{0};
    std::mutex grow_mutex_;
};

MotzkinMemo& memo() {
    static MotzkinMemo m;
    return m;
}

}  // namespace

const BigCount& motzkin(std::size_t n) { return memo().get(n); }

BigCount motzkin_conv(std::size_t n) {
    std::vector<BigCount> m(std::max<std::size_t>(n + 1, 2));
    m[0] = 1;
    m[1] = 1;
    BigCount term;
    for (std::size_t k = 1; k < n; ++k) {
        // M_{k+1} = M_k + sum_{i=0}^{k-1} M_i M_{k-1-i}
        m[k + 1] = m[k];
        for (std::size_t i = 0; i < k; ++i) {
            mpz_mul(term.get_mpz_t(), m[i].get_mpz_t(), m[k - 1 - i].get_mpz_t());
            m[k + 1] += term;
        }
    }
    return m[n];
}

BigCount catalan(std::size_t n) {
    if (n == 0) throw std::invalid_argument("catalan: n must be at least 1");
    BigCount c = 1, num;
    for (std::size_t k = 2; k <= n; ++k) {
        // k C_k = 2(2k-3) C_{k-1}, with C indexed by leaf count
        mpz_mul_ui(num.get_mpz_t(), c.get_mpz_t(), 2 * (2 * k - 3));
        exact_div_ui(c, num, k);
    }
    return c;
}

double quotient_to_double(const BigCount& num, const BigCount& den) {
    if (den <= 0 || num < 0 || num > den)
        throw std::invalid_argument("quotient_to_double: need 0 <= num <= den, den > 0");
    BigCount scaled, q;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), 63);
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    // q < 2^63 unless num == den; fits an unsigned long, and the integer
    // to double conversion rounds to nearest.
    if (num == den) return 1.0;
    return std::ldexp(static_cast<double>(mpz_get_ui(q.get_mpz_t())), -63);
}

RatioTable::RatioTable(std::size_t max_n, std::vector<double> p1)
    : max_n_(max_n), p1_(std::move(p1)) {
    if (max_n_ < 2) throw std::invalid_argument("RatioTable: max_n must be at least 2");
    if (p1_.size() != max_n_ - 1)
        throw std::invalid_argument("RatioTable: expected max_n-1 entries");
}

double RatioTable::p1(std::size_t n) const {
    if (n < 2 || n > max_n_)
        throw std::out_of_range("RatioTable::p1: n outside [2, max_n]");
    return p1_[n - 2];
}

RatioTable build_ratio_table(std::size_t max_n) {
    if (max_n < 2) throw std::invalid_argument("build_ratio_table: max_n must be at least 2");
    std::vector<double> p1;
    p1.reserve(max_n - 1);
    BigCount prev = 1, cur = 1;  // (M_0, M_1)
    BigCount num1, full, den;
    for (std::size_t n = 2; n <= max_n; ++n) {
        mpz_mul_ui(num1.get_mpz_t(), cur.get_mpz_t(), 2 * n + 1);     // (2n+1) M_{n-1}
        mpz_mul_ui(full.get_mpz_t(), prev.get_mpz_t(), 3 * (n - 1));  // 3(n-1) M_{n-2}
        full += num1;
        mpz_swap(prev.get_mpz_t(), cur.get_mpz_t());
        exact_div_ui(cur, full, n + 2);                               // M_n
        mpz_mul_ui(den.get_mpz_t(), cur.get_mpz_t(), n + 2);          // (n+2) M_n
        p1.push_back(quotient_to_double(num1, den));
    }
    return RatioTable(max_n, std::move(p1));
}

namespace {

constexpr char kMagic[] = "motzgen-ratio v1";

std::string shortest_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        throw std::logic_error("save_ratio_table: double formatting failed");
    return std::string(buf, end);
}

}  // namespace

void save_ratio_table(const RatioTable& table, std::ostream& out) {
    out << kMagic << '\n';
    out << "max_n=" << table.max_n() << '\n';
    for (std::size_t n = 2; n <= table.max_n(); ++n)
        out << n << '\t' << shortest_double(table.p1(n)) << '\n';
    if (!out) throw std::runtime_error("save_ratio_table: write failed");
}

RatioTable load_ratio_table(std::istream& in) {
    using Kind = RatioTableError::Kind;
    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw RatioTableError(Kind::BadHeader, "ratio table: bad or missing magic line");
    if (!std::getline(in, line) || line.rfind("max_n=", 0) != 0)
        throw RatioTableError(Kind::BadMaxN, "ratio table: missing max_n line");
    std::size_t max_n = 0;
    {
        const char* first = line.data() + 6;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, max_n);
        if (ec != std::errc() || ptr != last)
            throw RatioTableError(Kind::BadMaxN, "ratio table: unparsable max_n");
    }
    if (max_n < 2)
        throw RatioTableError(Kind::BadMaxN, "ratio table: max_n must be at least 2");
    std::vector<double> p1;
    p1.reserve(max_n - 1);
    for (std::size_t n = 2; n <= max_n; ++n) {
        if (!std::getline(in, line))
            throw RatioTableError(Kind::Truncated,
                                  "ratio table: payload ends before n=" + std::to_string(n));
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw RatioTableError(Kind::BadEntry, "ratio table: missing tab in data line");
        std::size_t got_n = 0;
        {
            auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, got_n);
            if (ec != std::errc() || ptr != line.data() + tab || got_n != n)
                throw RatioTableError(Kind::BadEntry,
                                      "ratio table: expected entry for n=" + std::to_string(n));
        }
        double value = 0.0;
        {
            const char* first = line.data() + tab + 1;
            const char* last = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last)
                throw RatioTableError(Kind::BadEntry, "ratio table: unparsable probability");
        }
        if (!(value > 0.0 && value < 1.0))
            throw RatioTableError(Kind::BadEntry, "ratio table: probability outside (0,1)");
        p1.push_back(value);
    }
    return RatioTable(max_n, std::move(p1));
}

}  // namespace motzgen
