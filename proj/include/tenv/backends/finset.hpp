#pragma once

#include "tenv/backends/category.hpp"

namespace tenv {

/// Nonempty finite sets. Tables run dom -> cod; subobjects are nonempty
/// subsets stored as strictly increasing index lists.
class FinSet final : public Category {
public:
    Backend backend() const override { return Backend::finset; }
    Capabilities capabilities() const override { return {false, false}; }

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
    bool sub_leq(const Sub& u, const Sub& v) const override;
    void for_each_subobject(const Obj& x, const std::function<void(const Sub&)>& f) const override;
    std::uint64_t subobject_count(const Obj& x) const override;

    void validate(const Mor& f) const override;
    void validate(const Sub& u) const override;

protected:
    std::uint32_t table_length(const Obj& dom, const Obj&) const override { return dom.size; }
    std::uint32_t table_range(const Obj&, const Obj& cod) const override { return cod.size; }
    std::uint32_t enumeration_limit(const Limits& limits) const override { return limits.finset_enumeration; }
};

}  // namespace tenv
