#pragma once

#include "tenv/kernels/bitset_kernels.hpp"

#include <bit>
#include <cstddef>
#include <span>
#include <vector>

namespace tenv::kernels {

/// Fixed-length packed bitset whose bulk operations go through the dispatched kernels.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(Word{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    std::size_t count() const { return popcount_words(words_); }
    bool subset_of(const Bitset& o) const { return is_subset(words_, o.words_); }

    friend Bitset operator&(const Bitset& a, const Bitset& b) {
        Bitset r(a.bits_);
        and_words(a.words_, b.words_, r.words_);
        return r;
    }

    /// Calls f(i) for every set bit in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

}  // namespace tenv::kernels
