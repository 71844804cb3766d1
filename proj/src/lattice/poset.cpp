#include "tenv/lattice/poset.hpp"

#include "tenv/errors.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace tenv {

FinitePoset::FinitePoset(std::size_t n, const Leq& leq) : n_(n) {
    up_.assign(n, kernels::Bitset(n));
    down_.assign(n, kernels::Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || leq(i, j)) {
                up_[i].set(j);
                down_[j].set(i);
            }
        }
    }
    // |down(v)| strictly increases along the order, so sorting by it is a linear extension.
    std::vector<std::size_t> ranks(n);
    for (std::size_t i = 0; i < n; ++i) ranks[i] = down_[i].count();
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
    position_.resize(n);
    for (std::size_t k = 0; k < n; ++k) position_[order_[k]] = k;

    for (std::size_t i = 0; i < n; ++i) {
        if (down_[i].count() == n) top_ = i;
        if (up_[i].count() == n) bottom_ = i;
    }
}

std::optional<std::size_t> FinitePoset::meet(std::size_t i, std::size_t j) const {
    const kernels::Bitset common = down_[i] & down_[j];
    std::optional<std::size_t> best;
    std::size_t best_pos = 0;
    common.for_each([&](std::size_t v) {
        if (!best || position_[v] > best_pos) {
            best = v;
            best_pos = position_[v];
        }
    });
    // The latest element in the linear extension is maximal; it is the meet
    // only if it dominates the whole common down-set.
    if (best && common.subset_of(down_[*best])) return best;
    return std::nullopt;
}

void FinitePoset::require_leq(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw PreconditionError("poset index out of range");
    if (!leq(i, j)) {
        throw PreconditionError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not comparable in the required direction");
    }
}

std::vector<std::size_t> FinitePoset::interval(std::size_t i, std::size_t j) const {
    require_leq(i, j);
    std::vector<std::size_t> out;
    (up_[i] & down_[j]).for_each([&](std::size_t v) { out.push_back(v); });
    return out;
}

const std::vector<std::int64_t>& FinitePoset::mobius_row(std::size_t i) const {
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = rows_.find(i); it != rows_.end()) return *it->second;
    }
    auto row = std::make_unique<std::vector<std::int64_t>>(n_, 0);
    std::vector<std::size_t> members;
    up_[i].for_each([&](std::size_t v) { members.push_back(v); });
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return position_[a] < position_[b]; });
    (*row)[i] = 1;
    for (std::size_t v : members) {
        if (v == i) continue;
        kernels::Bitset mask = up_[i] & down_[v];
        mask.reset(v);
        (*row)[v] = -kernels::masked_sum(mask.words(), *row);
    }
    std::unique_lock lock(cache_mutex_);
    auto [it, inserted] = rows_.emplace(i, std::move(row));
    return *it->second;
}

const std::vector<std::int64_t>& FinitePoset::mobius_column(std::size_t j) const {
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = cols_.find(j); it != cols_.end()) return *it->second;
    }
    auto col = std::make_unique<std::vector<std::int64_t>>(n_, 0);
    std::vector<std::size_t> members;
    down_[j].for_each([&](std::size_t v) { members.push_back(v); });
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return position_[a] > position_[b]; });
    (*col)[j] = 1;
    for (std::size_t v : members) {
        if (v == j) continue;
        kernels::Bitset mask = up_[v] & down_[j];
        mask.reset(v);
        (*col)[v] = -kernels::masked_sum(mask.words(), *col);
    }
    std::unique_lock lock(cache_mutex_);
    auto [it, inserted] = cols_.emplace(j, std::move(col));
    return *it->second;
}

std::int64_t FinitePoset::mobius(std::size_t i, std::size_t j) const {
    require_leq(i, j);
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = rows_.find(i); it != rows_.end()) return (*it->second)[j];
        if (auto it = cols_.find(j); it != cols_.end()) return (*it->second)[i];
    }
    if (up_[i].count() <= down_[j].count()) return mobius_row(i)[j];
    return mobius_column(j)[i];
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        up_[i].for_each([&](std::size_t j) {
            if (j == i) return;
            // i < j is a cover iff the open interval is empty.
            if ((up_[i] & down_[j]).count() == 2) out.emplace_back(i, j);
        });
    }
    return out;
}

void FinitePoset::clear_cache() const {
    std::unique_lock lock(cache_mutex_);
    rows_.clear();
    cols_.clear();
}

}  // namespace tenv
