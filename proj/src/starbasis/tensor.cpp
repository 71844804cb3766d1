#include "tenv/starbasis/tensor.hpp"

#include "tenv/errors.hpp"
#include "tenv/projectors/projectors.hpp"
#include "tenv/relcat/structural.hpp"

#include <algorithm>

namespace tenv {

namespace {

std::size_t index_in(const std::vector<Rel>& sorted, const Rel& r) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), r);
    if (it == sorted.end() || !(*it == r)) throw InternalError("relation is missing from its summand list");
    return static_cast<std::size_t>(it - sorted.begin());
}

std::size_t index_in(const std::vector<Sub>& sorted, const Sub& s) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    if (it == sorted.end() || !(*it == s)) throw InternalError("subobject is missing from its summand list");
    return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<std::size_t> compose_maps(const std::vector<std::size_t>& second, const std::vector<std::size_t>& first) {
    std::vector<std::size_t> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

}  // namespace

std::vector<TensorSummand> tensor_decompose(const Context& ctx, const Obj& x, const Obj& y, bool verify) {
    const Obj xy = ctx.cat().product(x, y).object;
    std::vector<TensorSummand> out;
    for (const Rel& r : r_set(ctx, x, y)) out.push_back(TensorSummand{r, p_star(ctx, xy, r.sub)});
    if (verify) {
        TMor sum(xy, xy);
        for (const TensorSummand& s : out) sum += s.projector;
        if (!(tmor_tensor(ctx, p_star_top(ctx, x), p_star_top(ctx, y)) == sum)) {
            throw InternalError("tensor_decompose: p_x* (x) p_y* differs from the sum of p_r*");
        }
    }
    return out;
}

Obj nested_product(const Category& cat, const std::vector<Obj>& xs) {
    if (xs.empty()) throw PreconditionError("nested_product: no factors");
    Obj acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = cat.product(acc, xs[i]).object;
    return acc;
}

std::vector<Mor> leaf_projections(const Category& cat, const Obj& x) {
    if (!x.factors) return {cat.identity(x)};
    const Product p = cat.product(x.factors->left, x.factors->right);
    std::vector<Mor> out;
    for (const Mor& m : leaf_projections(cat, x.factors->left)) out.push_back(cat.compose(m, p.first));
    for (const Mor& m : leaf_projections(cat, x.factors->right)) out.push_back(cat.compose(m, p.second));
    return out;
}

std::vector<Sub> leaf_summands(const Context& ctx, const Obj& x) {
    const Category& cat = ctx.cat();
    const std::vector<Mor> leaves = leaf_projections(cat, x);
    std::vector<Sub> out;
    for (const Sub& s : cat.subobjects(x, ctx.limits())) {
        const Mor i = cat.inclusion(s);
        const bool all = std::all_of(leaves.begin(), leaves.end(),
                                     [&](const Mor& p) { return cat.is_surjective(cat.compose(p, i)); });
        if (all) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultiDecomposition multi_tensor_decompose(const Context& ctx, const std::vector<Obj>& xs, bool verify) {
    if (xs.size() < 2) throw PreconditionError("multi_tensor_decompose needs at least two factors");
    MultiDecomposition out{nested_product(ctx.cat(), xs), {}, {}};
    out.summands = leaf_summands(ctx, out.product);
    for (const Sub& s : out.summands) out.projectors.push_back(p_star(ctx, out.product, s));
    if (verify) {
        TMor lhs = p_star_top(ctx, xs.front());
        for (std::size_t i = 1; i < xs.size(); ++i) lhs = tmor_tensor(ctx, lhs, p_star_top(ctx, xs[i]));
        TMor sum(out.product, out.product);
        for (const TMor& q : out.projectors) sum += q;
        if (!(lhs == sum)) throw InternalError("multi_tensor_decompose: tensor of p* differs from the sum of p_r*");
    }
    return out;
}

std::vector<std::size_t> summand_transport(const Context& ctx, const Mor& iso) {
    const Category& cat = ctx.cat();
    if (!cat.is_iso(iso)) throw PreconditionError("summand_transport: morphism is not an isomorphism");
    const std::vector<Sub> from = leaf_summands(ctx, iso.dom);
    const std::vector<Sub> to = leaf_summands(ctx, iso.cod);
    if (from.size() != to.size()) throw InternalError("summand_transport: summand counts differ");
    std::vector<std::size_t> out;
    out.reserve(from.size());
    for (const Sub& s : from) {
        const Sub image = cat.sub_image(iso, s);
        out.push_back(index_in(to, Sub{iso.cod, image.code, image.size}));
    }
    return out;
}

std::vector<std::size_t> assoc_constraint(const Context& ctx, const Obj& x, const Obj& y, const Obj& z) {
    return summand_transport(ctx, assoc_iso(ctx.cat(), x, y, z));
}

std::vector<std::size_t> comm_constraint(const Context& ctx, const Obj& x, const Obj& y) {
    return summand_transport(ctx, swap_iso(ctx.cat(), x, y));
}

bool pentagon_holds(const Context& ctx, const Obj& x, const Obj& y, const Obj& z, const Obj& w) {
    const Category& cat = ctx.cat();
    const Obj xy = cat.product(x, y).object;
    const Obj yz = cat.product(y, z).object;
    const Obj zw = cat.product(z, w).object;
    const Mor id_w = cat.identity(w);
    const Mor id_x = cat.identity(x);
    const auto top = compose_maps(summand_transport(ctx, assoc_iso(cat, x, y, zw)),
                                  summand_transport(ctx, assoc_iso(cat, xy, z, w)));
    auto bottom = summand_transport(ctx, cat.product_map(assoc_iso(cat, x, y, z), id_w));
    bottom = compose_maps(summand_transport(ctx, assoc_iso(cat, x, yz, w)), bottom);
    bottom = compose_maps(summand_transport(ctx, cat.product_map(id_x, assoc_iso(cat, y, z, w))), bottom);
    return top == bottom;
}

bool hexagon_holds(const Context& ctx, const Obj& x, const Obj& y, const Obj& z) {
    const Category& cat = ctx.cat();
    const Obj yz = cat.product(y, z).object;
    auto left = summand_transport(ctx, assoc_iso(cat, x, y, z));
    left = compose_maps(summand_transport(ctx, swap_iso(cat, x, yz)), left);
    left = compose_maps(summand_transport(ctx, assoc_iso(cat, y, z, x)), left);
    auto right = summand_transport(ctx, cat.product_map(swap_iso(cat, x, y), cat.identity(z)));
    right = compose_maps(summand_transport(ctx, assoc_iso(cat, y, x, z)), right);
    right = compose_maps(summand_transport(ctx, cat.product_map(cat.identity(y), swap_iso(cat, x, z))), right);
    return left == right;
}

bool triangle_holds(const Context& ctx, const Obj& x, const Obj& y) {
    const Category& cat = ctx.cat();
    const Obj one = cat.terminal();
    const auto via_assoc =
        compose_maps(summand_transport(ctx, cat.product_map(cat.identity(x), left_unitor(cat, y))),
                     summand_transport(ctx, assoc_iso(cat, x, one, y)));
    const auto direct = summand_transport(ctx, cat.product_map(right_unitor(cat, x), cat.identity(y)));
    return via_assoc == direct;
}

void BlockMap::add(std::size_t v, std::size_t u, const StarMor& m) {
    if (m.is_zero()) return;
    auto key = std::make_pair(v, u);
    auto it = blocks.find(key);
    if (it == blocks.end()) {
        blocks.emplace(key, m);
        return;
    }
    it->second += m;
    if (it->second.is_zero()) blocks.erase(it);
}

StarMor BlockMap::block(const Context& ctx, std::size_t v, std::size_t u, Flavor flavor) const {
    auto it = blocks.find({v, u});
    if (it == blocks.end()) return StarMor(src.at(u).sub.source(), dst.at(v).sub.source(), flavor);
    return basis_convert(ctx, it->second, flavor);
}

bool same_block_map(const Context& ctx, const BlockMap& a, const BlockMap& b) {
    if (a.src != b.src || a.dst != b.dst) return false;
    std::set<std::pair<std::size_t, std::size_t>> keys;
    for (const auto& [k, m] : a.blocks) keys.insert(k);
    for (const auto& [k, m] : b.blocks) keys.insert(k);
    for (const auto& [v, u] : keys) {
        if (!same_morphism(ctx, a.block(ctx, v, u, Flavor::round), b.block(ctx, v, u, Flavor::round))) return false;
    }
    return true;
}

BlockMap tensor_round(const Context& ctx, const StarMor& rho_in, const StarMor& rho2_in) {
    const Category& cat = ctx.cat();
    const StarMor rho = basis_convert(ctx, rho_in, Flavor::round);
    const StarMor rho2 = basis_convert(ctx, rho2_in, Flavor::round);
    BlockMap out{r_set(ctx, rho.x(), rho2.x()), r_set(ctx, rho.y(), rho2.y()), {}, {}};
    const Product xx = cat.product(rho.x(), rho2.x());
    const Product yy = cat.product(rho.y(), rho2.y());
    for (const auto& [r, c] : rho.terms()) {
        const RelLegs l = rel_legs(cat, r);
        const Obj ro = r.sub.source();
        for (const auto& [r2, c2] : rho2.terms()) {
            const RelLegs l2 = rel_legs(cat, r2);
            const Obj ro2 = r2.sub.source();
            const Product rr = cat.product(ro, ro2);
            const Mor aa = cat.product_map(l.a, l2.a, rr, xx);
            const Mor bb = cat.product_map(l.b, l2.b, rr, yy);
            for (const Rel& w : r_set(ctx, ro, ro2)) {
                const Mor iw = cat.inclusion(w.sub);
                const Factorization fx = cat.image(cat.compose(aa, iw));
                const Factorization fy = cat.image(cat.compose(bb, iw));
                const Obj rw = fx.image.source();
                const Obj rw2 = fy.image.source();
                const Mor joint = cat.pair(fx.epi, fy.epi, cat.product(rw, rw2));
                if (!cat.is_injective(joint)) throw InternalError("tensor_round: w -> r_w x r'_w is not injective");
                const Rel wr{rw, rw2, cat.image(joint).image};
                const std::size_t u = index_in(out.src, Rel{rho.x(), rho2.x(), fx.image});
                const std::size_t v = index_in(out.dst, Rel{rho.y(), rho2.y(), fy.image});
                out.add(v, u, StarMor(wr, Flavor::round, c * c2));
            }
        }
    }
    return out;
}

BlockMap tensor_curly(const Context& ctx, const StarMor& rho_in, const StarMor& rho2_in) {
    const Category& cat = ctx.cat();
    const StarMor rho = basis_convert(ctx, rho_in, Flavor::curly);
    const StarMor rho2 = basis_convert(ctx, rho2_in, Flavor::curly);
    BlockMap out{r_set(ctx, rho.x(), rho2.x()), r_set(ctx, rho.y(), rho2.y()), {}, {}};
    for (const auto& [r, c] : rho.terms()) {
        for (const auto& [r2, c2] : rho2.terms()) {
            const Rel t = tensor_rel(cat, r, r2);
            const RelLegs lt = rel_legs(cat, t);
            for (std::size_t ui = 0; ui < out.src.size(); ++ui) {
                const Sub& u = out.src[ui].sub;
                auto p1 = cat.pullback(lt.a, cat.inclusion(u));
                if (!p1) continue;
                const Mor to_y = cat.compose(lt.b, p1->to_first);
                for (std::size_t vi = 0; vi < out.dst.size(); ++vi) {
                    const Sub& v = out.dst[vi].sub;
                    auto p2 = cat.pullback(to_y, cat.inclusion(v));
                    if (!p2) continue;
                    const Mor to_u = cat.compose(p1->to_second, p2->to_first);
                    const Obj uo = u.source();
                    const Obj vo = v.source();
                    const Mor joint = cat.pair(to_u, p2->to_second, cat.product(uo, vo));
                    if (!cat.is_injective(joint)) throw InternalError("tensor_curly: w_uv -> u x v is not injective");
                    const Rel w{uo, vo, cat.image(joint).image};
                    if (in_r_set(cat, w)) {
                        out.add(vi, ui, StarMor(w, Flavor::curly, c * c2));
                    } else {
                        out.flagged.emplace(vi, ui);
                        const TMor conj = tmor_chain(ctx, {p_star_top(ctx, vo), TMor(w), p_star_top(ctx, uo)});
                        out.add(vi, ui, (c * c2) * read_curly(ctx, conj));
                    }
                }
            }
        }
    }
    return out;
}

BlockMap tensor_oracle(const Context& ctx, const StarMor& rho, const StarMor& rho2, Flavor flavor) {
    const Category& cat = ctx.cat();
    BlockMap out{r_set(ctx, rho.x(), rho2.x()), r_set(ctx, rho.y(), rho2.y()), {}, {}};
    const TMor phi = tmor_tensor(ctx, embed(ctx, rho), embed(ctx, rho2));
    for (std::size_t ui = 0; ui < out.src.size(); ++ui) {
        const Sub& u = out.src[ui].sub;
        const TMor right = tmor_chain(ctx, {phi, graph(ctx, cat.inclusion(u)), p_star_top(ctx, u.source())});
        for (std::size_t vi = 0; vi < out.dst.size(); ++vi) {
            const Sub& v = out.dst[vi].sub;
            const TMor block =
                tmor_chain(ctx, {p_star_top(ctx, v.source()), cograph(ctx, cat.inclusion(v)), right});
            out.add(vi, ui, basis_convert(ctx, read_curly(ctx, block), flavor));
        }
    }
    return out;
}

}  // namespace tenv
