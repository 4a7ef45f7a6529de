#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mmvc {

// Dynamic fixed-size bitset over 64-bit blocks.  std::bitset needs a
// compile-time size and boost is overkill here; the search kernels want raw
// word access (intersect-and-count over adjacency rows), so this stays
// deliberately small and inlineable.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    // |this & o|
    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    // this subset-of o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Lowest set bit, or -1.
    int find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    // Lowest set bit > i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= bits_) return -1;
        std::size_t w = static_cast<std::size_t>(i) >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }

private:
    void trim() {
        if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace mmvc
