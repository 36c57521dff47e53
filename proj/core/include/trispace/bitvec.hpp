#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace trispace {

/// Packed GF(2) vector. Bits past size() are kept zero so whole-word
/// operations (xor, popcount, scans) never need masking on read.
class BitVec {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVec() = default;
    explicit BitVec(std::size_t nbits) : len_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return len_; }
    std::size_t word_count() const { return w_.size(); }
    const std::uint64_t* words() const { return w_.data(); }

    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) {
        check_index(i);
        w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    BitVec& operator^=(const BitVec& rhs) {
        check_match(rhs);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= rhs.w_[k];
        return *this;
    }
    BitVec& operator&=(const BitVec& rhs) {
        check_match(rhs);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= rhs.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    /// xor starting at a word offset; rhs must be zero below that word.
    /// Lets basis reduction skip the all-zero prefix before a row's pivot.
    void xor_from(std::size_t word_idx, const BitVec& rhs) {
        for (std::size_t k = word_idx; k < w_.size(); ++k) w_[k] ^= rhs.w_[k];
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t first_set() const { return next_set(0); }

    /// Index of the first set bit at position >= from, or npos.
    std::size_t next_set(std::size_t from) const {
        if (from >= len_) return npos;
        std::size_t k = from >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == w_.size()) return npos;
            w = w_[k];
        }
    }

    std::vector<std::size_t> set_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first_set(); i != npos; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.len_ == b.len_ && a.w_ == b.w_;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVec: index out of range");
    }
    void check_match(const BitVec& rhs) const {
        if (len_ != rhs.len_) throw std::invalid_argument("BitVec: length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// popcount(a & b) without allocating the intersection.
inline std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("and_popcount: length mismatch");
    std::size_t c = 0;
    const std::uint64_t* wa = a.words();
    const std::uint64_t* wb = b.words();
    for (std::size_t k = 0; k < a.word_count(); ++k)
        c += static_cast<std::size_t>(std::popcount(wa[k] & wb[k]));
    return c;
}

/// Parity of the GF(2) inner product <a, b>.
inline bool odd_overlap(const BitVec& a, const BitVec& b) {
    return and_popcount(a, b) & 1u;
}

}  // namespace trispace
