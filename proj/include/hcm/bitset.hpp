#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hcm {

// Fixed-universe bitset over {0, ..., n-1}. The heavy recursions key
// memo tables on these, so equality and hashing are first-class.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int universe() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, or -1.
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset minus(Bitset a, const Bitset& b) { return a.subtract(b); }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(nbits_);
        for (std::uint64_t w : w_) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }

private:
    int nbits_;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace hcm
