#pragma once

#include "tenv/backends/category.hpp"
#include "tenv/backends/degree.hpp"
#include "tenv/lattice/sub_lattice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <typeindex>
#include <unordered_map>

namespace tenv {

/// A backend, a degree function and the size limits, plus memo tables.
/// All caches hold pure values: a cached entry always equals a fresh
/// recomputation, and every cache is internally synchronized.
class Context {
public:
    Context(Backend backend, Degree degree, Limits limits = {});

    const Category& cat() const { return *cat_; }
    Backend backend() const { return cat_->backend(); }
    Degree degree() const { return degree_; }
    const Limits& limits() const { return limits_; }

    Obj object(std::uint32_t size) const { return cat_->object(size); }
    Poly delta(const Mor& f) const { return tenv::delta(*cat_, degree_, f); }

    /// O(x), built once per carrier size. Throws SizeGuardError above the lattice limit.
    std::shared_ptr<const SubLattice> lattice(const Obj& x) const;
    std::uint32_t lattice_limit() const;

    /// Per-module memo slot, default-constructed on first use. T must be
    /// internally synchronized.
    template <class T>
    T& cache() const {
        std::lock_guard lock(slots_mutex_);
        auto& slot = slots_[std::type_index(typeid(T))];
        if (!slot) slot = std::make_shared<T>();
        return *static_cast<T*>(slot.get());
    }

private:
    const Category* cat_;
    Degree degree_;
    Limits limits_;
    mutable std::mutex lattice_mutex_;
    mutable std::map<std::uint32_t, std::shared_ptr<const SubLattice>> lattices_;
    mutable std::mutex slots_mutex_;
    mutable std::unordered_map<std::type_index, std::shared_ptr<void>> slots_;
};

}  // namespace tenv
