#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace adnil {

// Fixed-width set of positive-root indices. E8 has 120 positive roots, so two
// machine words cover every simple type.
class RootMask {
public:
    static constexpr int kCapacity = 128;

    constexpr RootMask() = default;

    static constexpr RootMask first_n(int n) {
        RootMask m;
        for (int i = 0; i < n; ++i) m.set(i);
        return m;
    }

    constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
    constexpr bool any() const { return !empty(); }
    constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }

    // Lowest member index, or -1 when empty.
    constexpr int lowest() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    constexpr bool subset_of(const RootMask& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    constexpr bool intersects(const RootMask& o) const {
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }

    constexpr RootMask& operator|=(const RootMask& o) {
        words_[0] |= o.words_[0];
        words_[1] |= o.words_[1];
        return *this;
    }
    constexpr RootMask& operator&=(const RootMask& o) {
        words_[0] &= o.words_[0];
        words_[1] &= o.words_[1];
        return *this;
    }
    friend constexpr RootMask operator|(RootMask a, const RootMask& b) { return a |= b; }
    friend constexpr RootMask operator&(RootMask a, const RootMask& b) { return a &= b; }
    constexpr RootMask without(const RootMask& o) const {
        RootMask r = *this;
        r.words_[0] &= ~o.words_[0];
        r.words_[1] &= ~o.words_[1];
        return r;
    }

    // Calls f(index) for every member in increasing index order.
    template <class F>
    constexpr void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    constexpr std::uint64_t word(int w) const { return words_[w]; }

    friend constexpr bool operator==(const RootMask&, const RootMask&) = default;

    // Lexicographic order on the membership string b0 b1 b2 ... with 0 < 1:
    // at the lowest index where the masks differ, the mask lacking it is smaller.
    friend constexpr std::strong_ordering operator<=>(const RootMask& a, const RootMask& b) {
        for (int w = 0; w < 2; ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff) {
                const int bit = std::countr_zero(diff);
                return ((a.words_[w] >> bit) & 1u) ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

private:
    std::uint64_t words_[2] = {0, 0};
};

}  // namespace adnil
