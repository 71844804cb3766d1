#pragma once

#include "tenv/backends/types.hpp"
#include "tenv/lattice/poset.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace tenv {

/// The poset O(x) of canonical subobjects of one object, in the backend's
/// canonical element order. Meets are greatest lower bounds in the poset and
/// may be undefined (FinSet has no empty subobject).
class SubLattice {
public:
    SubLattice(Obj object, std::vector<Sub> elements, const FinitePoset::Leq& leq);

    const Obj& object() const { return object_; }
    const std::vector<Sub>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const FinitePoset& poset() const { return poset_; }

    bool contains(const Sub& u) const { return index_.contains(u); }
    /// Throws PreconditionError for a subobject not in the lattice.
    std::size_t index_of(const Sub& u) const;

    const Sub& top() const;
    std::optional<Sub> bottom() const;

    bool leq(const Sub& u, const Sub& v) const { return poset_.leq(index_of(u), index_of(v)); }
    std::optional<Sub> meet(const Sub& u, const Sub& v) const;

    std::vector<Sub> interval(const Sub& u, const Sub& w) const;
    /// All v <= w, in canonical order.
    std::vector<Sub> below(const Sub& w) const;

    std::int64_t mobius(const Sub& u, const Sub& w) const;

private:
    Obj object_;
    std::vector<Sub> elements_;
    std::unordered_map<Sub, std::size_t> index_;
    FinitePoset poset_;
};

}  // namespace tenv
