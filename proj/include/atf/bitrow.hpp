#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace atf {

// Fixed-width row of bits backed by 64-bit words. Used for dense adjacency
// rows; the word vector is exposed so scans can run word-at-a-time.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(int bits) { assign(bits); }

    void assign(int bits)
    {
        bits_ = bits;
        words_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
    }

    int size() const { return bits_; }

    bool test(int i) const
    {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    void set(int i)
    {
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i)
    {
        words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const
    {
        int c = 0;
        for (std::uint64_t w : words_)
            c += std::popcount(w);
        return c;
    }

    // First set bit at position >= from, or -1.
    int next(int from) const
    {
        if (from >= bits_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from >> 6);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        for (;;) {
            if (w != 0) {
                int pos = static_cast<int>(wi) * 64 + std::countr_zero(w);
                return pos < bits_ ? pos : -1;
            }
            if (++wi >= words_.size())
                return -1;
            w = words_[wi];
        }
    }

    template <class F> void for_each(F f) const
    {
        for (int v = next(0); v != -1; v = next(v + 1))
            f(v);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const BitRow& o) const = default;

  private:
    std::vector<std::uint64_t> words_;
    int bits_ = 0;
};

} // namespace atf
