#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>

namespace kakeya {

/// Fixed-width bitset with the handful of operations the search loops need.
/// W is the number of 64-bit words.
template <std::size_t W>
struct SmallBitset {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    /// Index of the lowest set bit; -1 when empty.
    int lowest() const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i]) return int(i * 64 + std::countr_zero(w[i]));
        return -1;
    }

    bool intersects(const SmallBitset& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    bool contains(const SmallBitset& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (o.w[i] & ~w[i]) return false;
        return true;
    }

    SmallBitset operator|(const SmallBitset& o) const {
        SmallBitset r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }

    SmallBitset operator&(const SmallBitset& o) const {
        SmallBitset r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }

    SmallBitset& operator|=(const SmallBitset& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }

    SmallBitset& operator&=(const SmallBitset& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
        return *this;
    }

    bool operator==(const SmallBitset&) const = default;
};

/// Covers the q^3 affine points for q <= 5.
using PointBits = SmallBitset<2>;
/// Covers the (q+1)*q^2 candidate lines for q <= 5.
using LineBits = SmallBitset<4>;

} // namespace kakeya
