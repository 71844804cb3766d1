#pragma once

#include "tenv/starbasis/star.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace tenv {

struct TensorSummand {
    Rel r;          ///< r in R(x,y)
    TMor projector; ///< p_r^* in End([x*y])
};

/// [x]^* (x) [y]^* = sum of [r]^* over R(x,y). With `verify`, checks
/// p_x^* (x) p_y^* = sum p_r^* exactly and throws InternalError otherwise.
std::vector<TensorSummand> tensor_decompose(const Context& ctx, const Obj& x, const Obj& y, bool verify = true);

/// Left-nested product ((x1*x2)*x3)*... with factor metadata.
Obj nested_product(const Category& cat, const std::vector<Obj>& xs);
/// Projections of a (possibly nested) product onto its leaf factors.
std::vector<Mor> leaf_projections(const Category& cat, const Obj& x);
/// Subobjects of x surjecting onto every leaf factor, in canonical order.
std::vector<Sub> leaf_summands(const Context& ctx, const Obj& x);

struct MultiDecomposition {
    Obj product;
    std::vector<Sub> summands;
    std::vector<TMor> projectors;
};

MultiDecomposition multi_tensor_decompose(const Context& ctx, const std::vector<Obj>& xs, bool verify = true);

/// Index map between the leaf summands of iso.dom and iso.cod induced by the iso.
std::vector<std::size_t> summand_transport(const Context& ctx, const Mor& iso);
/// Summands of ([x]*(x)[y]*)(x)[z]* -> summands of [x]*(x)([y]*(x)[z]*).
std::vector<std::size_t> assoc_constraint(const Context& ctx, const Obj& x, const Obj& y, const Obj& z);
/// R(x,y) -> R(y,x).
std::vector<std::size_t> comm_constraint(const Context& ctx, const Obj& x, const Obj& y);

bool pentagon_holds(const Context& ctx, const Obj& x, const Obj& y, const Obj& z, const Obj& w);
bool hexagon_holds(const Context& ctx, const Obj& x, const Obj& y, const Obj& z);
/// (id x lambda) o assoc = rho x id on summands of (x*1)*y.
bool triangle_holds(const Context& ctx, const Obj& x, const Obj& y);

/// A morphism [x]*(x)[x2]* -> [y]*(x)[y2]* as a matrix of star morphisms
/// [u]* -> [v]* over the summands u in R(x,x2), v in R(y,y2).
struct BlockMap {
    std::vector<Rel> src;
    std::vector<Rel> dst;
    /// (dst index, src index) -> block; absent blocks are zero.
    std::map<std::pair<std::size_t, std::size_t>, StarMor> blocks;
    /// Blocks whose defining relation fell outside R(u,v) and were computed by conjugation.
    std::set<std::pair<std::size_t, std::size_t>> flagged;

    void add(std::size_t v, std::size_t u, const StarMor& m);
    StarMor block(const Context& ctx, std::size_t v, std::size_t u, Flavor flavor) const;
};

/// Blockwise equality, comparing blocks across bases.
bool same_block_map(const Context& ctx, const BlockMap& a, const BlockMap& b);

BlockMap tensor_round(const Context& ctx, const StarMor& rho, const StarMor& rho2);
BlockMap tensor_curly(const Context& ctx, const StarMor& rho, const StarMor& rho2);
/// Reference: tmor_tensor of the embeddings, cut into blocks by the summand inclusions.
BlockMap tensor_oracle(const Context& ctx, const StarMor& rho, const StarMor& rho2, Flavor flavor);

}  // namespace tenv
