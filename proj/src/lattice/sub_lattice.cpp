#include "tenv/lattice/sub_lattice.hpp"

#include "tenv/errors.hpp"

namespace tenv {

SubLattice::SubLattice(Obj object, std::vector<Sub> elements, const FinitePoset::Leq& leq)
    : object_(std::move(object)), elements_(std::move(elements)), poset_(elements_.size(), leq) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    if (!poset_.top()) throw InternalError("subobject poset without a top element");
}

std::size_t SubLattice::index_of(const Sub& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) throw PreconditionError("subobject does not belong to this lattice");
    return it->second;
}

const Sub& SubLattice::top() const { return elements_[*poset_.top()]; }

std::optional<Sub> SubLattice::bottom() const {
    if (auto b = poset_.bottom()) return elements_[*b];
    return std::nullopt;
}

std::optional<Sub> SubLattice::meet(const Sub& u, const Sub& v) const {
    if (auto m = poset_.meet(index_of(u), index_of(v))) return elements_[*m];
    return std::nullopt;
}

std::vector<Sub> SubLattice::interval(const Sub& u, const Sub& w) const {
    std::vector<Sub> out;
    for (std::size_t i : poset_.interval(index_of(u), index_of(w))) out.push_back(elements_[i]);
    return out;
}

std::vector<Sub> SubLattice::below(const Sub& w) const {
    std::vector<Sub> out;
    poset_.down(index_of(w)).for_each([&](std::size_t i) { out.push_back(elements_[i]); });
    return out;
}

std::int64_t SubLattice::mobius(const Sub& u, const Sub& w) const {
    return poset_.mobius(index_of(u), index_of(w));
}

}  // namespace tenv
