#pragma once

#include "tenv/backends/category.hpp"

namespace tenv {

/// The opposite of finite sets. A morphism x -> y is stored as its
/// underlying set map Y -> X. Products are disjoint unions, subobjects are
/// partitions (restricted growth strings), pullbacks are pushouts of sets.
class OpSet final : public Category {
public:
    Backend backend() const override { return Backend::opset; }
    Capabilities capabilities() const override { return {true, true}; }

    Obj object(std::uint32_t size) const override;
    Obj terminal() const override;
    Mor identity(const Obj& x) const override;
    Mor to_terminal(const Obj& x) const override;
    Mor compose(const Mor& f, const Mor& g) const override;

    Product product(const Obj& x, const Obj& y) const override;
    Mor pair(const Mor& f, const Mor& g, const Product& target) const override;

    Factorization image(const Mor& f) const override;
    std::optional<Span> pullback(const Mor& f, const Mor& g) const override;

    bool is_injective(const Mor& f) const override;
    bool is_surjective(const Mor& f) const override;

    Mor inclusion(const Sub& u) const override;
    /// u <= v iff the partition u is coarser than v.
    bool sub_leq(const Sub& u, const Sub& v) const override;
    void for_each_subobject(const Obj& x, const std::function<void(const Sub&)>& f) const override;
    std::uint64_t subobject_count(const Obj& x) const override;

    void validate(const Mor& f) const override;
    void validate(const Sub& u) const override;

protected:
    std::uint32_t table_length(const Obj&, const Obj& cod) const override { return cod.size; }
    std::uint32_t table_range(const Obj& dom, const Obj&) const override { return dom.size; }
    std::uint32_t enumeration_limit(const Limits& limits) const override { return limits.opset_enumeration; }
};

/// Restricted growth string of the partition of {0..n-1} into fibers of `labels`.
std::vector<std::uint32_t> fiber_code(const std::vector<std::uint32_t>& labels);

}  // namespace tenv
