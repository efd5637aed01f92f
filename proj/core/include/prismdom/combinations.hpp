#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace prismdom {

// binom(x, i) for 0 <= x <= n and 0 <= i <= k + 1, saturating at
// UINT64_MAX.
class BinomialTable {
public:
    static constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

    BinomialTable(int n, int k);

    std::uint64_t operator()(int x, int i) const
    {
        if (i > x)
            return 0;
        return table_[static_cast<std::size_t>(x) * width_ + static_cast<std::size_t>(i)];
    }

    int n() const { return n_; }
    int k() const { return k_; }

private:
    int n_;
    int k_;
    std::size_t width_;
    std::vector<std::uint64_t> table_;
};

// Colexicographic rank of a sorted k-subset: sum of binom(c_i, i + 1).
inline std::uint64_t colex_rank(std::span<const int> sorted, const BinomialTable& binom)
{
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        r += binom(sorted[i], static_cast<int>(i) + 1);
    return r;
}

// Inverse of colex_rank; out.size() is the subset size.
void colex_unrank(std::uint64_t rank, std::span<int> out, const BinomialTable& binom);

// Advances a sorted subset of 0..n-1 to its colex successor. Returns false
// after the last subset.
inline bool next_colex(std::span<int> c, int n)
{
    const std::size_t k = c.size();
    for (std::size_t j = 0; j < k; ++j) {
        const int limit = (j + 1 < k) ? c[j + 1] : n;
        if (c[j] + 1 < limit) {
            ++c[j];
            for (std::size_t i = 0; i < j; ++i)
                c[i] = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

} // namespace prismdom
