#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fallcolor {

/// Set of vertex ids backed by 64-bit words. Capacity is fixed at
/// construction; graphs up to 64 vertices stay in a single word.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int nbits)
        : nbits_(nbits), words_((static_cast<size_t>(nbits) + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= word_bit(i); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~word_bit(i); }

    bool test(int i) const {
        return (words_[static_cast<size_t>(i) >> 6] & word_bit(i)) != 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Lowest set bit, or -1.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& and_not(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool operator==(const VertexSet&) const = default;

    /// Visit set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return words_; }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(nbits_);
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    static uint64_t word_bit(int i) { return uint64_t{1} << (i & 63); }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace fallcolor
