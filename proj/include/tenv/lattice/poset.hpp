#pragma once

// Finite posets with packed up/down sets, meets, intervals and a lazily
// memoized Möbius function.

#include "tenv/kernels/bitset.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tenv {

class FinitePoset {
public:
    using Leq = std::function<bool(std::size_t, std::size_t)>;

    FinitePoset() = default;
    /// `leq(i, j)` must be a partial order on {0, ..., n-1}; it is evaluated n^2 times.
    FinitePoset(std::size_t n, const Leq& leq);

    FinitePoset(const FinitePoset&) = delete;
    FinitePoset& operator=(const FinitePoset&) = delete;

    std::size_t size() const { return n_; }
    bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
    const kernels::Bitset& up(std::size_t i) const { return up_[i]; }
    const kernels::Bitset& down(std::size_t i) const { return down_[i]; }

    /// Indices sorted so that i < j in the order implies i comes first.
    const std::vector<std::size_t>& linear_extension() const { return order_; }

    std::optional<std::size_t> top() const { return top_; }
    std::optional<std::size_t> bottom() const { return bottom_; }

    /// Greatest lower bound, if the common down-set is nonempty and has a maximum.
    std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;

    /// Every v with i <= v <= j, in increasing index order. Throws unless i <= j.
    std::vector<std::size_t> interval(std::size_t i, std::size_t j) const;

    /// mu(i, j). Throws unless i <= j.
    std::int64_t mobius(std::size_t i, std::size_t j) const;

    /// mu(i, v) for all v >= i (entries outside up(i) are zero). Memoized.
    const std::vector<std::int64_t>& mobius_row(std::size_t i) const;
    /// mu(v, j) for all v <= j (entries outside down(j) are zero). Memoized.
    const std::vector<std::int64_t>& mobius_column(std::size_t j) const;

    /// Cover pairs (i, j): i < j with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    /// Drops memoized Möbius rows and columns.
    void clear_cache() const;

private:
    void require_leq(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::vector<kernels::Bitset> up_;
    std::vector<kernels::Bitset> down_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    std::optional<std::size_t> top_;
    std::optional<std::size_t> bottom_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<std::size_t, std::unique_ptr<std::vector<std::int64_t>>> rows_;
    mutable std::unordered_map<std::size_t, std::unique_ptr<std::vector<std::int64_t>>> cols_;
};

}  // namespace tenv
