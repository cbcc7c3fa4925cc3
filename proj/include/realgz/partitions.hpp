#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace realgz::partitions {

/// Weakly decreasing list of positive parts.
struct Partition {
    std::vector<unsigned> parts;

    unsigned weight() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
    unsigned largest() const { return parts.empty() ? 0 : parts.front(); }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Visits every partition of n in lexicographically descending order,
/// starting from {n} and ending at {1, ..., 1}.
template <class F>
void for_each_partition(unsigned n, F&& visit)
{
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<unsigned> parts{n};
    for (;;) {
        visit(Partition{parts});
        // Rightmost part greater than 1.
        std::size_t k = parts.size();
        unsigned ones = 0;
        while (k > 0 && parts[k - 1] == 1) {
            --k;
            ++ones;
        }
        if (k == 0) {
            return;
        }
        const unsigned head = parts[k - 1] - 1;
        unsigned rest = ones + 1;
        parts.resize(k - 1);
        parts.push_back(head);
        while (rest > 0) {
            const unsigned p = std::min(head, rest);
            parts.push_back(p);
            rest -= p;
        }
    }
}

inline std::vector<Partition> enumerate(unsigned n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// Immutable table of p(n, ≤b), the number of partitions of n with all
/// parts at most b, for 0 ≤ b ≤ n ≤ limit.
class PartitionTable {
public:
    explicit PartitionTable(unsigned limit) : limit_(limit), rows_(limit + 1)
    {
        for (unsigned n = 0; n <= limit; ++n) {
            auto& row = rows_[n];
            row.resize(n + 1);
            row[0] = n == 0 ? 1 : 0;
            for (unsigned b = 1; b <= n; ++b) {
                // Partitions with largest part exactly b, plus those below b.
                row[b] = row[b - 1] + at_most(n - b, b);
            }
        }
    }

    unsigned limit() const { return limit_; }

    BigInt at_most(unsigned n, unsigned b) const
    {
        const auto& row = rows_.at(n);
        return row[std::min<std::size_t>(b, n)];
    }

    BigInt count(unsigned n) const { return at_most(n, n); }

    /// p(n, b): largest part exactly b.
    BigInt with_largest(unsigned n, unsigned b) const
    {
        if (b > n) {
            return 0;
        }
        if (b == 0) {
            return n == 0 ? 1 : 0;
        }
        return at_most(n - b, b);
    }

private:
    unsigned limit_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Shared table covering at least n; grows by rebuilding and never mutates
/// a table a caller may still hold.
inline std::shared_ptr<const PartitionTable> table_for(unsigned n)
{
    static std::mutex mutex;
    static std::shared_ptr<const PartitionTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->limit() < n) {
        unsigned limit = std::max(n, table ? 2 * table->limit() : 64u);
        table = std::make_shared<const PartitionTable>(limit);
    }
    return table;
}

/// p(n).
inline BigInt count(unsigned n) { return table_for(n)->count(n); }

/// p(n, b), the number of partitions of n with largest part exactly b.
inline BigInt count_with_largest(unsigned n, unsigned b) { return table_for(n)->with_largest(n, b); }

/// Number of i-cells of the real punctual Hilbert scheme Hilb^n_R(0):
/// p(n, n − i), zero when i > n.
inline BigInt local_betti(unsigned n, unsigned i)
{
    if (i > n) {
        return 0;
    }
    return count_with_largest(n, n - i);
}

/// Σ_i (−1)^i p(n, n − i): Euler characteristic from the cell counts.
inline BigInt signed_cell_count(unsigned n)
{
    BigInt sum = 0;
    for (unsigned i = 0; i <= n; ++i) {
        if (i % 2 == 0) {
            sum += local_betti(n, i);
        } else {
            sum -= local_betti(n, i);
        }
    }
    return sum;
}

/// B(x, y) = ∏_k 1/(1 − x^k y^{k−1}), with x the series variable and
/// coefficients in Q[y]. The x^n coefficient is Σ_i p(n, n − i) y^i.
inline Series<PolyY> betti_series(std::size_t order)
{
    auto result = Series<PolyY>::one(order);
    for (std::size_t k = 1; k <= order; ++k) {
        const PolyY step = PolyY::monomial({static_cast<unsigned>(k - 1)}, Rational(1));
        std::vector<PolyY> geometric(order + 1);
        PolyY power(Rational(1));
        for (std::size_t j = 0; j * k <= order; ++j) {
            geometric[j * k] = power;
            power *= step;
        }
        result = mul(result, Series<PolyY>(order, std::move(geometric)));
    }
    return result;
}

/// ∏_k 1/(1 + (−x)^k), expanded factor by factor as geometric series.
inline Series<Rational> local_euler_real_series(std::size_t order)
{
    auto result = Series<Rational>::one(order);
    for (std::size_t k = 1; k <= order; ++k) {
        // 1/(1 + εx^k) = Σ_j (−ε)^j x^{kj}, ε = (−1)^k.
        const long ratio = k % 2 == 0 ? -1 : 1;
        std::vector<Rational> geometric(order + 1, Rational(0));
        long term = 1;
        for (std::size_t j = 0; j * k <= order; ++j) {
            geometric[j * k] = term;
            term *= ratio;
        }
        result = mul(result, Series<Rational>(order, std::move(geometric)));
    }
    return result;
}

/// e(Hilb^n_R(0)) from the product expansion.
inline BigInt local_euler_real(unsigned n)
{
    return BigInt(local_euler_real_series(n)[n].get_num());
}

/// e(Hilb^n_C(0)) = p(n); every complex cell contributes 1.
inline BigInt local_euler_complex(unsigned n) { return count(n); }

} // namespace realgz::partitions
