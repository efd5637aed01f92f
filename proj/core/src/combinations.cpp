#include "prismdom/combinations.hpp"

#include <stdexcept>

namespace prismdom {

BinomialTable::BinomialTable(int n, int k)
    : n_(n), k_(k), width_(static_cast<std::size_t>(k) + 2),
      table_((static_cast<std::size_t>(n) + 1) * width_, 0)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("negative binomial table size");
    for (int x = 0; x <= n; ++x) {
        auto row = static_cast<std::size_t>(x) * width_;
        table_[row] = 1;
        for (std::size_t i = 1; i < width_ && static_cast<int>(i) <= x; ++i) {
            auto above = table_[row - width_ + i - 1];
            auto left = table_[row - width_ + i];
            table_[row + i] = (above > saturated - left) ? saturated : above + left;
        }
    }
}

void colex_unrank(std::uint64_t rank, std::span<int> out, const BinomialTable& binom)
{
    int x = binom.n();
    for (auto i = out.size(); i-- > 0;) {
        const int slot = static_cast<int>(i) + 1;
        while (x > 0 && binom(x, slot) > rank)
            --x;
        out[i] = x;
        rank -= binom(x, slot);
        --x;
    }
}

} // namespace prismdom
