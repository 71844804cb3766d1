#include "tenv/backends/context.hpp"

#include "tenv/errors.hpp"

#include <string>

namespace tenv {

Context::Context(Backend backend, Degree degree, Limits limits)
    : cat_(&category(backend)), degree_(degree), limits_(limits) {
    require_degree(*cat_, degree_);
}

std::uint32_t Context::lattice_limit() const {
    return backend() == Backend::finset ? limits_.finset_lattice : limits_.opset_lattice;
}

std::shared_ptr<const SubLattice> Context::lattice(const Obj& x) const {
    if (x.backend != backend()) throw PreconditionError("object belongs to another backend");
    if (x.size > lattice_limit()) {
        throw SizeGuardError("subobject lattice refused: carrier " + std::to_string(x.size) + " exceeds " +
                             std::to_string(lattice_limit()) + " for " + std::string(cat_->name()));
    }
    {
        std::lock_guard lock(lattice_mutex_);
        if (auto it = lattices_.find(x.size); it != lattices_.end()) return it->second;
    }
    const Obj plain = cat_->object(x.size);
    std::vector<Sub> elements = cat_->subobjects(plain, limits_);
    const Category& cat = *cat_;
    auto built = std::make_shared<const SubLattice>(
        plain, elements, [&](std::size_t i, std::size_t j) { return cat.sub_leq(elements[i], elements[j]); });
    std::lock_guard lock(lattice_mutex_);
    return lattices_.emplace(x.size, std::move(built)).first->second;
}

}  // namespace tenv
