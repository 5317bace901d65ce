#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace blockca {

// Packed bit sequence, 64 bits per word, LSB-first within a word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t nbits, bool fill = false)
        : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~0ull : 0ull) {
        clear_tail();
    }

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(size_t i, bool b) {
        uint64_t m = 1ull << (i & 63);
        if (b) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }

    void push_back(bool b) {
        if ((nbits_ & 63) == 0) words_.push_back(0);
        if (b) words_[nbits_ >> 6] |= 1ull << (nbits_ & 63);
        ++nbits_;
    }

    // Ones in the half-open bit range [a, b).
    size_t popcount_range(size_t a, size_t b) const {
        if (a >= b) return 0;
        size_t wa = a >> 6, wb = (b - 1) >> 6;
        uint64_t first_mask = ~0ull << (a & 63);
        uint64_t last_mask = (b & 63) ? (~0ull >> (64 - (b & 63))) : ~0ull;
        if (wa == wb) return std::popcount(words_[wa] & first_mask & last_mask);
        size_t n = std::popcount(words_[wa] & first_mask);
        for (size_t w = wa + 1; w < wb; ++w) n += std::popcount(words_[w]);
        n += std::popcount(words_[wb] & last_mask);
        return n;
    }

    size_t find_first(bool b) const {  // size() if absent
        for (size_t i = 0; i < nbits_; ++i)
            if (get(i) == b) return i;
        return nbits_;
    }

    size_t find_last(bool b) const {  // size() if absent
        for (size_t i = nbits_; i-- > 0;)
            if (get(i) == b) return i;
        return nbits_;
    }

    BitVec slice(size_t a, size_t b) const {  // bits [a, b)
        BitVec out;
        out.nbits_ = b - a;
        out.words_.resize((out.nbits_ + 63) / 64, 0);
        for (size_t i = a; i < b; ++i)
            if (get(i)) out.words_[(i - a) >> 6] |= 1ull << ((i - a) & 63);
        return out;
    }

    bool operator==(const BitVec& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

private:
    void clear_tail() {
        if (nbits_ & 63) words_.back() &= ~0ull >> (64 - (nbits_ & 63));
    }

    size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace blockca
