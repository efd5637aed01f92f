#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace prismdom {

using Vertex = int;

// Fixed-capacity set of vertices 0..capacity-1 stored as 64-bit words.
// Bits at or above capacity are always zero.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((static_cast<std::size_t>(capacity) + 63) / 64, 0)
    {
    }

    static VertexSet full(int capacity)
    {
        VertexSet s(capacity);
        for (auto& w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int capacity() const { return capacity_; }
    std::span<const std::uint64_t> words() const { return words_; }

    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    // Lowest member, or -1.
    Vertex first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool intersects(const VertexSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

private:
    void trim()
    {
        if (capacity_ & 63)
            words_.back() &= (std::uint64_t{1} << (capacity_ & 63)) - 1;
    }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace prismdom
