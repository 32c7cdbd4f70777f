#ifndef PLCAT_BITSET_HPP
#define PLCAT_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace plcat {

// Fixed-size bit vector backed by 64-bit words. Used both as a subset of
// simplices and as a GF(2) vector (XOR is addition mod 2).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n, bool fill = false)
        : n_(n), w_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    bool operator[](std::size_t i) const { return test(i); }

    void set(std::size_t i, bool v = true) {
        assert(i < n_);
        if (v)
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void reset(std::size_t i) { set(i, false); }
    void flip(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    Bitset& operator^=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    // Index of the lowest set bit, -1 when empty.
    int lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    std::vector<int> ones() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                out.push_back(static_cast<int>(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : w_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h ^ n_;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void trim() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (~std::uint64_t{0}) >> (64 - n_ % 64);
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace plcat

#endif
