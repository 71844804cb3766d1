#include "tenv/errors.hpp"
#include "tenv/kernels/bitset_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace tenv::kernels {

namespace {

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) return Isa::avx2;
#endif
    return Isa::scalar;
}

// TENV_ISA=scalar|avx2 overrides detection; an unavailable or unknown value is ignored.
Isa initial() {
    const Isa best = detect();
    const char* env = std::getenv("TENV_ISA");
    if (!env) return best;
    const std::string_view want(env);
    if (want == "scalar") return Isa::scalar;
    return best;
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{initial()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    if (isa == Isa::scalar) return true;
    return detect() == Isa::avx2;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa)) throw CapabilityError("ISA not available on this CPU: " + std::string(isa_name(isa)));
    active().store(isa, std::memory_order_relaxed);
}

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
    if (active_isa() == Isa::avx2) return avx2::and_words(a, b, out);
    scalar::and_words(a, b, out);
}

std::size_t popcount_words(std::span<const Word> a) {
    return active_isa() == Isa::avx2 ? avx2::popcount_words(a) : scalar::popcount_words(a);
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
    return active_isa() == Isa::avx2 ? avx2::is_subset(a, b) : scalar::is_subset(a, b);
}

std::int64_t masked_sum(std::span<const Word> mask, std::span<const std::int64_t> values) {
    return active_isa() == Isa::avx2 ? avx2::masked_sum(mask, values) : scalar::masked_sum(mask, values);
}

}  // namespace tenv::kernels
