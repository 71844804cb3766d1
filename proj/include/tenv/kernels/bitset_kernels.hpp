#pragma once

// Word-parallel kernels over packed bitsets, used by the lattice layer for
// interval extraction, meet search and Möbius accumulation.
//
// Each kernel has a portable scalar reference and an AVX2 variant. The
// dispatching entry points pick the variant once at startup from CPUID;
// the variants are required to agree bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tenv::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// Variant chosen by the dispatchers. Defaults to the best available ISA.
Isa active_isa();
/// Overrides the dispatcher; throws if the ISA is unavailable.
void set_active_isa(Isa isa);

namespace scalar {
void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
std::size_t popcount_words(std::span<const Word> a);
bool is_subset(std::span<const Word> a, std::span<const Word> b);
std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values);
}  // namespace scalar

namespace avx2 {
void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
std::size_t popcount_words(std::span<const Word> a);
bool is_subset(std::span<const Word> a, std::span<const Word> b);
std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values);
}  // namespace avx2

/// out[i] = a[i] & b[i]; all spans have equal length.
void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
std::size_t popcount_words(std::span<const Word> a);
/// true iff every bit set in a is set in b.
bool is_subset(std::span<const Word> a, std::span<const Word> b);
/// Sum of values[i] over set bits i of mask. values.size() must cover every set bit.
std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values);

}  // namespace tenv::kernels
