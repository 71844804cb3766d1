#include "tenv/starbasis/compose.hpp"

#include "tenv/errors.hpp"
#include "tenv/projectors/projectors.hpp"

#include <functional>

namespace tenv {

namespace {

void require_middle(const StarMor& sigma, const StarMor& rho) {
    if (!(rho.y() == sigma.x())) throw PreconditionError("star composition: middle objects differ");
}

/// The fibre product t = r x_y s with its maps to r, s, x and z.
struct Fibre {
    Obj t;
    Mor to_r;
    Mor to_s;
    Mor to_x;
    Mor to_z;
};

std::optional<Fibre> fibre(const Category& cat, const Rel& r, const Rel& s) {
    const RelLegs lr = rel_legs(cat, r);
    const RelLegs ls = rel_legs(cat, s);
    auto pb = cat.pullback(lr.b, ls.a);
    if (!pb) return std::nullopt;
    return Fibre{pb->apex, pb->to_first, pb->to_second, cat.compose(lr.a, pb->to_first),
                 cat.compose(ls.b, pb->to_second)};
}

/// Sums omega(u ->> u-bar) (u-bar) over subobjects u of t accepted by `keep`.
StarMor omega_sum(const Context& ctx, const Rel& r, const Rel& s,
                  const std::function<bool(const Fibre&, const Mor&)>& keep) {
    const Category& cat = ctx.cat();
    StarMor out(r.x, s.y, Flavor::round);
    const auto f = fibre(cat, r, s);
    if (!f) return out;
    const Product xz = cat.product(r.x, s.y);
    for (const Sub& u : cat.subobjects(f->t, ctx.limits())) {
        const Mor iu = cat.inclusion(u);
        if (!keep(*f, iu)) continue;
        const Factorization fac = cat.image(cat.pair(cat.compose(f->to_x, iu), cat.compose(f->to_z, iu), xz));
        Poly w = omega(ctx, fac.epi);
        out.add(Rel{r.x, s.y, fac.image}, w);
    }
    return out;
}

template <class Product>
StarMor bilinear(const Context& ctx, const StarMor& sigma, const StarMor& rho, Flavor in, Flavor out_flavor,
                 Product basis_product) {
    require_middle(sigma, rho);
    const StarMor a = basis_convert(ctx, sigma, in);
    const StarMor b = basis_convert(ctx, rho, in);
    StarMor out(rho.x(), sigma.y(), out_flavor);
    for (const auto& [r, c] : b.terms()) {
        for (const auto& [s, d] : a.terms()) out += (c * d) * basis_product(ctx, s, r);
    }
    return out;
}

}  // namespace

StarMor round_product(const Context& ctx, const Rel& s, const Rel& r) {
    const Category& cat = ctx.cat();
    return omega_sum(ctx, r, s, [&](const Fibre& f, const Mor& iu) {
        return cat.is_surjective(cat.compose(f.to_r, iu)) && cat.is_surjective(cat.compose(f.to_s, iu));
    });
}

StarMor curly_product_as_round(const Context& ctx, const Rel& s, const Rel& r) {
    const Category& cat = ctx.cat();
    const Mor to_y = rel_legs(cat, r).b;
    return omega_sum(ctx, r, s, [&](const Fibre& f, const Mor& iu) {
        return cat.is_surjective(cat.compose(f.to_x, iu)) && cat.is_surjective(cat.compose(f.to_z, iu)) &&
               cat.is_surjective(cat.compose(cat.compose(to_y, f.to_r), iu));
    });
}

StarMor curly_product(const Context& ctx, const Rel& s, const Rel& r) {
    const Category& cat = ctx.cat();
    const Obj& x = r.x;
    const Obj& y = r.y;
    const Obj& z = s.y;
    StarMor out(x, z, Flavor::curly);
    const RelLegs lr = rel_legs(cat, r);
    const RelLegs ls = rel_legs(cat, s);
    const auto lattice = ctx.lattice(y);
    const Sub& top = lattice->top();
    const Product xz = cat.product(x, z);
    for (const Sub& yp : lattice->elements()) {
        const Mor iy = cat.inclusion(Sub{y, yp.code, yp.size});
        // r x_y y' and y' x_y s
        auto rp = cat.pullback(lr.b, iy);
        auto sp = cat.pullback(ls.a, iy);
        if (!rp || !sp) continue;
        const Mor rp_x = cat.compose(lr.a, rp->to_first);
        const Mor sp_z = cat.compose(ls.b, sp->to_first);
        if (!cat.is_surjective(rp_x) || !cat.is_surjective(sp_z)) continue;
        auto t = cat.pullback(rp->to_second, sp->to_second);
        if (!t) continue;
        const Factorization fac =
            cat.image(cat.pair(cat.compose(rp_x, t->to_first), cat.compose(sp_z, t->to_second), xz));
        Rel composite{x, z, fac.image};
        // Terms outside R(x,z) vanish after conjugation by p_z^*, p_x^*.
        if (!in_r_set(cat, composite)) continue;
        out.add(composite, Poly(lattice->mobius(yp, top)) * ctx.delta(fac.epi));
    }
    return out;
}

StarMor compose_round(const Context& ctx, const StarMor& sigma, const StarMor& rho) {
    return bilinear(ctx, sigma, rho, Flavor::round, Flavor::round, round_product);
}

StarMor compose_curly(const Context& ctx, const StarMor& sigma, const StarMor& rho) {
    return bilinear(ctx, sigma, rho, Flavor::curly, Flavor::curly, curly_product);
}

StarMor compose_curly_as_round(const Context& ctx, const StarMor& sigma, const StarMor& rho) {
    return bilinear(ctx, sigma, rho, Flavor::curly, Flavor::round, curly_product_as_round);
}

StarMor compose_oracle(const Context& ctx, const StarMor& sigma, const StarMor& rho, Flavor flavor) {
    require_middle(sigma, rho);
    return project(ctx, tmor_compose(ctx, embed(ctx, sigma), embed(ctx, rho)), flavor);
}

}  // namespace tenv
