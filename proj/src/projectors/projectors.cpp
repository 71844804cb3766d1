#include "tenv/projectors/projectors.hpp"

#include "tenv/errors.hpp"

#include <map>
#include <shared_mutex>

namespace tenv {

namespace {

struct PStarMemo {
    std::shared_mutex mutex;
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<const TMor>> table;
};

struct OmegaMemo {
    std::shared_mutex mutex;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, Poly> table;
};

}  // namespace

TMor p_sub(const Context& ctx, const Obj& x, const Sub& u) {
    const Category& cat = ctx.cat();
    if (!(u.ambient == x)) throw PreconditionError("p_sub: subobject of another object");
    cat.validate(u);
    const Mor i = cat.inclusion(Sub{x, u.code, u.size});
    return TMor(rel_from_span(cat, i, i));
}

const TMor& p_star(const Context& ctx, const Obj& x, const Sub& u) {
    auto& memo = ctx.cache<PStarMemo>();
    auto key = std::make_pair(x.size, u.code);
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) return *it->second;
    }
    const auto lattice = ctx.lattice(x);
    const Sub plain{lattice->object(), u.code, u.size};
    auto value = std::make_unique<TMor>(x, x);
    for (const Sub& v : lattice->below(plain)) {
        *value += Poly(lattice->mobius(v, plain)) * p_sub(ctx, x, Sub{x, v.code, v.size});
    }
    std::unique_lock lock(memo.mutex);
    return *memo.table.emplace(std::move(key), std::move(value)).first->second;
}

const TMor& p_star_top(const Context& ctx, const Obj& x) { return p_star(ctx, x, ctx.cat().top(x)); }

Poly omega(const Context& ctx, const Mor& e) {
    const Category& cat = ctx.cat();
    if (!cat.is_surjective(e)) throw PreconditionError("omega: morphism is not surjective");
    auto& memo = ctx.cache<OmegaMemo>();
    auto key = std::make_tuple(e.dom.size, e.cod.size, e.table);
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
    }
    const auto lattice = ctx.lattice(e.dom);
    const Obj& dom = lattice->object();
    const Mor f{dom, e.cod, e.table};
    const Sub cod_top = cat.top(e.cod);
    const Sub& top = lattice->top();
    Poly value;
    for (const Sub& u : lattice->elements()) {
        const Mor restricted = cat.compose(f, cat.inclusion(u));
        if (!(cat.image(restricted).image == cod_top)) continue;
        value += Poly(lattice->mobius(u, top)) * ctx.delta(restricted);
    }
    std::unique_lock lock(memo.mutex);
    memo.table.emplace(std::move(key), value);
    return value;
}

ProjectorFamily subobject_decomposition(const Context& ctx, const Obj& x, bool verify) {
    ProjectorFamily fam{x, ctx.lattice(x), {}, {}};
    for (const Sub& u : fam.lattice->elements()) {
        const Sub v{x, u.code, u.size};
        fam.p.push_back(p_sub(ctx, x, v));
        fam.p_star.push_back(p_star(ctx, x, v));
    }
    if (!verify) return fam;
    TMor sum(x, x);
    for (const TMor& q : fam.p_star) sum += q;
    if (!(sum == tmor_identity(ctx, x))) throw InternalError("subobject decomposition: sum of p* is not the identity");
    const std::size_t n = fam.p_star.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const TMor prod = tmor_compose(ctx, fam.p_star[i], fam.p_star[j]);
            const bool ok = i == j ? prod == fam.p_star[i] : prod.is_zero();
            if (!ok) throw InternalError("subobject decomposition: p* family is not orthogonal");
        }
    }
    return fam;
}

}  // namespace tenv
