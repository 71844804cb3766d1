#include "tenv/kernels/bitset_kernels.hpp"

#include <array>
#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TENV_HAVE_X86 1
#endif

namespace tenv::kernels::avx2 {

#ifdef TENV_HAVE_X86

namespace {

#define TENV_AVX2 __attribute__((target("avx2,popcnt")))

// nibble -> four 64-bit lane masks
struct NibbleMasks {
    alignas(32) std::array<std::array<std::int64_t, 4>, 16> lanes{};
    constexpr NibbleMasks() {
        for (int n = 0; n < 16; ++n) {
            for (int l = 0; l < 4; ++l) lanes[n][l] = ((n >> l) & 1) ? -1 : 0;
        }
    }
};
constexpr NibbleMasks kNibble;

TENV_AVX2 void and_impl(const Word* a, const Word* b, Word* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_and_si256(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] & b[i];
}

TENV_AVX2 std::size_t popcount_impl(const Word* a, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return count;
}

TENV_AVX2 bool subset_impl(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // (a & ~b) == 0
        if (!_mm256_testc_si256(vb, va)) return false;
    }
    for (; i < n; ++i) {
        if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
}

TENV_AVX2 std::int64_t masked_sum_impl(const Word* mask, std::size_t nwords, const std::int64_t* values,
                                       std::size_t nvalues) {
    __m256i acc = _mm256_setzero_si256();
    std::int64_t tail = 0;
    for (std::size_t w = 0; w < nwords; ++w) {
        Word bits = mask[w];
        if (bits == 0) continue;
        const std::size_t base = w * 64;
        if (base + 64 <= nvalues) {
            for (int nib = 0; nib < 16; ++nib) {
                const unsigned sel = static_cast<unsigned>((bits >> (nib * 4)) & 0xF);
                if (sel == 0) continue;
                const __m256i m = _mm256_load_si256(reinterpret_cast<const __m256i*>(kNibble.lanes[sel].data()));
                const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + base + nib * 4));
                acc = _mm256_add_epi64(acc, _mm256_and_si256(m, v));
            }
        } else {
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                tail += values[base + static_cast<std::size_t>(b)];
                bits &= bits - 1;
            }
        }
    }
    alignas(32) std::array<std::int64_t, 4> lanes{};
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3] + tail;
}

#undef TENV_AVX2

}  // namespace

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
    and_impl(a.data(), b.data(), out.data(), out.size());
}

std::size_t popcount_words(std::span<const Word> a) { return popcount_impl(a.data(), a.size()); }

bool is_subset(std::span<const Word> a, std::span<const Word> b) { return subset_impl(a.data(), b.data(), a.size()); }

std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values) {
    return masked_sum_impl(mask.data(), mask.size(), values.data(), values.size());
}

#else  // no x86: forward to the scalar reference

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
    scalar::and_words(a, b, out);
}
std::size_t popcount_words(std::span<const Word> a) { return scalar::popcount_words(a); }
bool is_subset(std::span<const Word> a, std::span<const Word> b) { return scalar::is_subset(a, b); }
std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values) {
    return scalar::masked_sum(mask, values);
}

#endif

}  // namespace tenv::kernels::avx2
