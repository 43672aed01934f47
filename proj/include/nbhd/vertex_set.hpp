#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nbhd {

/// Subset of {0, ..., universe-1}, stored as a dense bitset.
///
/// Binary set operations require both operands to share a universe.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }
    VertexSet(int universe, const std::vector<int> & members) : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept
    {
        return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }

    void insert(int v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const noexcept
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1 if empty.
    int first() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool is_subset_of(const VertexSet & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool intersects(const VertexSet & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    template <class F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first_item = true;
        for_each([&](int v) {
            if (!first_item)
                s += ",";
            s += std::to_string(v);
            first_item = false;
        });
        return s + "}";
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace nbhd
