#include "tenv/kernels/bitset_kernels.hpp"

#include <bit>

namespace tenv::kernels::scalar {

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

std::size_t popcount_words(std::span<const Word> a) {
    std::size_t n = 0;
    for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
}

std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values) {
    std::int64_t sum = 0;
    for (std::size_t w = 0; w < mask.size(); ++w) {
        Word bits = mask[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            sum += values[w * 64 + static_cast<std::size_t>(b)];
            bits &= bits - 1;
        }
    }
    return sum;
}

}  // namespace tenv::kernels::scalar
