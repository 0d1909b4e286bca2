#pragma once

#include <cstdint>
#include <vector>

namespace tdc {

// Fixed-width bit vector over a dense vertex index space.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // first set bit at index >= from, or -1
    int next(int from = 0) const {
        for (int i = from; i < nbits_;) {
            std::uint64_t word = w_[i >> 6] >> (i & 63);
            if (word) return i + __builtin_ctzll(word);
            i = (i | 63) + 1;
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

    std::uint64_t word(int i) const { return w_[i]; }
    int words() const { return static_cast<int>(w_.size()); }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace tdc
