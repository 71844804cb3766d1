#pragma once

// The finite regular category interface. A backend supplies the primitive
// structure (composition, products, images, pullbacks, subobject
// enumeration); everything else (meets, preimages, images of subobjects,
// products of morphisms) is derived here from those primitives.
//
// A new backend (e.g. finite-dimensional F_q vector spaces) implements the
// pure virtuals below and reports its capabilities; no other module has to
// change.

#include "tenv/backends/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace tenv {

struct Capabilities {
    /// Every cospan has a pullback (false for FinSet: empty fiber products are absent).
    bool has_all_pullbacks = false;
    bool is_exact_maltsev = false;
};

/// Blow-up guards for exhaustive enumerations.
struct Limits {
    std::uint32_t finset_lattice = 12;
    std::uint32_t opset_lattice = 8;
    /// Bounds for plain subobject enumeration (no order matrix is built).
    std::uint32_t finset_enumeration = 16;
    std::uint32_t opset_enumeration = 10;
    /// Maximum number of function tables in a morphism sweep.
    std::uint64_t morphism_tables = 256;
};

class Category {
public:
    virtual ~Category() = default;

    virtual Backend backend() const = 0;
    virtual Capabilities capabilities() const = 0;
    std::string_view name() const { return backend_name(backend()); }

    /// Object with the given carrier size; rejects sizes the backend excludes.
    virtual Obj object(std::uint32_t size) const = 0;
    virtual Obj terminal() const = 0;
    virtual Mor identity(const Obj& x) const = 0;
    virtual Mor to_terminal(const Obj& x) const = 0;
    /// f o g. Throws PreconditionError unless cod(g) == dom(f).
    virtual Mor compose(const Mor& f, const Mor& g) const = 0;

    virtual Product product(const Obj& x, const Obj& y) const = 0;
    /// The morphism w -> x*y with components f: w -> x and g: w -> y.
    virtual Mor pair(const Mor& f, const Mor& g, const Product& target) const = 0;

    virtual Factorization image(const Mor& f) const = 0;
    /// Pullback of f: x -> z and g: y -> z; nullopt when it does not exist.
    virtual std::optional<Span> pullback(const Mor& f, const Mor& g) const = 0;

    virtual bool is_injective(const Mor& f) const = 0;
    virtual bool is_surjective(const Mor& f) const = 0;

    /// The canonical mono u -> ambient representing a subobject.
    virtual Mor inclusion(const Sub& u) const = 0;
    virtual bool sub_leq(const Sub& u, const Sub& v) const = 0;
    /// Calls f on every subobject of x in canonical order (no size guard).
    virtual void for_each_subobject(const Obj& x, const std::function<void(const Sub&)>& f) const = 0;
    /// Number of subobjects of x (2^n - 1 or Bell(n)), saturating at UINT64_MAX.
    virtual std::uint64_t subobject_count(const Obj& x) const = 0;

    virtual void validate(const Mor& f) const = 0;
    /// Throws PreconditionError unless u is the canonical form for its ambient object.
    virtual void validate(const Sub& u) const = 0;

    // Derived operations.

    Sub top(const Obj& x) const;
    /// Subobject represented by a morphism that is already injective.
    Sub canonical(const Mor& mono) const;
    /// Image of u -> x -> y.
    Sub sub_image(const Mor& f, const Sub& u) const;
    /// Pullback of z along f; nullopt when it does not exist.
    std::optional<Sub> preimage(const Mor& f, const Sub& z) const;
    /// Intersection u x_x v; nullopt when empty (FinSet).
    std::optional<Sub> meet(const Sub& u, const Sub& v) const;
    /// f x g : a*b -> c*d for f: a -> c, g: b -> d.
    Mor product_map(const Mor& f, const Mor& g, const Product& source, const Product& target) const;
    Mor product_map(const Mor& f, const Mor& g) const;
    bool is_iso(const Mor& f) const { return is_injective(f) && is_surjective(f); }

    /// All subobjects of x in canonical order; guarded by the enumeration limit.
    std::vector<Sub> subobjects(const Obj& x, const Limits& limits) const;
    /// All morphisms x -> y; refuses sweeps above limits.morphism_tables.
    std::vector<Mor> morphisms(const Obj& x, const Obj& y, const Limits& limits) const;
    /// Number of morphisms x -> y, saturating.
    std::uint64_t morphism_count(const Obj& x, const Obj& y) const;

protected:
    /// Size of the carrier the table is indexed by, and the range of its values.
    virtual std::uint32_t table_length(const Obj& dom, const Obj& cod) const = 0;
    virtual std::uint32_t table_range(const Obj& dom, const Obj& cod) const = 0;
    virtual std::uint32_t enumeration_limit(const Limits& limits) const = 0;
};

const Category& category(Backend b);

}  // namespace tenv
