#pragma once

#include "tenv/backends/context.hpp"
#include "tenv/relcat/rel.hpp"

#include <memory>
#include <vector>

namespace tenv {

/// p_u = [i][i]^v for the inclusion i: u >-> x.
TMor p_sub(const Context& ctx, const Obj& x, const Sub& u);
/// p_u^* = sum over v <= u of mu(v,u) p_v. Memoized.
const TMor& p_star(const Context& ctx, const Obj& x, const Sub& u);
/// p_x^* for the top subobject, the identity of [x]^*.
const TMor& p_star_top(const Context& ctx, const Obj& x);

/// omega_e = sum over u in O(dom e) with e(u) = cod e of mu(u, top) delta(u ->> cod e).
/// Throws PreconditionError unless e is surjective. Memoized.
Poly omega(const Context& ctx, const Mor& e);

struct ProjectorFamily {
    Obj x;
    std::shared_ptr<const SubLattice> lattice;
    std::vector<TMor> p;       ///< indexed like lattice->elements()
    std::vector<TMor> p_star;  ///< indexed like lattice->elements()
};

/// All p_u and p_u^* of x. With `verify`, checks sum p_u^* = id and
/// p_u^* p_v^* = [u=v] p_u^*, throwing InternalError on failure.
ProjectorFamily subobject_decomposition(const Context& ctx, const Obj& x, bool verify = true);

}  // namespace tenv
