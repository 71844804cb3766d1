#include "tenv/starbasis/star.hpp"

#include "tenv/errors.hpp"
#include "tenv/lattice/poset.hpp"
#include "tenv/projectors/projectors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace tenv {

namespace {

struct RSetMemo {
    std::shared_mutex mutex;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<const std::vector<Rel>>> table;
};

/// Down-set of r inside R(x,y); the Möbius column mu(-, r) is filled on first use.
struct Below {
    std::vector<Rel> rels;
    mutable std::once_flag mu_once;
    mutable std::vector<std::int64_t> mu;
};

struct BelowMemo {
    std::shared_mutex mutex;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<const Below>> table;
};

struct EmbedMemo {
    std::shared_mutex mutex;
    std::map<std::pair<Flavor, Rel>, std::unique_ptr<const TMor>> table;
};

const Below& below_of(const Context& ctx, const Rel& r) {
    auto& memo = ctx.cache<BelowMemo>();
    auto key = std::make_tuple(r.x.size, r.y.size, r.sub.code);
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) return *it->second;
    }
    const Category& cat = ctx.cat();
    const Mor incl = cat.inclusion(r.sub);
    auto value = std::make_unique<Below>();
    for (const Sub& s : cat.subobjects(r.sub.source(), ctx.limits())) {
        Rel candidate{r.x, r.y, cat.sub_image(incl, s)};
        if (in_r_set(cat, candidate)) value->rels.push_back(std::move(candidate));
    }
    std::sort(value->rels.begin(), value->rels.end());
    std::unique_lock lock(memo.mutex);
    return *memo.table.emplace(std::move(key), std::move(value)).first->second;
}

const std::vector<std::int64_t>& below_mobius(const Context& ctx, const Rel& r, const Below& below) {
    std::call_once(below.mu_once, [&] {
        // The interval [s, r] of O(x*y) lies inside R(x,y) whenever s does, so
        // the Möbius function of the down-set agrees with the one of O(x*y).
        const Category& cat = ctx.cat();
        const auto& rels = below.rels;
        FinitePoset poset(rels.size(),
                          [&](std::size_t i, std::size_t j) { return cat.sub_leq(rels[i].sub, rels[j].sub); });
        const auto top = std::find(rels.begin(), rels.end(), r) - rels.begin();
        below.mu = poset.mobius_column(static_cast<std::size_t>(top));
    });
    return below.mu;
}

}  // namespace

std::string_view flavor_name(Flavor f) { return f == Flavor::round ? "round" : "curly"; }

Flavor parse_flavor(std::string_view name) {
    if (name == "round") return Flavor::round;
    if (name == "curly") return Flavor::curly;
    throw ParseError("unknown basis flavor: " + std::string(name));
}

StarMor::StarMor(const Rel& r, Flavor flavor, const Poly& c) : x_(r.x), y_(r.y), flavor_(flavor) { add(r, c); }

Poly StarMor::coeff(const Rel& r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? Poly() : it->second;
}

void StarMor::add(const Rel& r, const Poly& c) {
    if (!(r.x == x_) || !(r.y == y_)) throw PreconditionError("relation endpoints do not match the star morphism");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(r, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void StarMor::require_compatible(const StarMor& other) const {
    if (!(x_ == other.x_) || !(y_ == other.y_)) throw PreconditionError("star morphisms have different endpoints");
    if (flavor_ != other.flavor_) throw PreconditionError("star morphisms are in different bases");
}

StarMor& StarMor::operator+=(const StarMor& other) {
    require_compatible(other);
    for (const auto& [r, c] : other.terms_) add(r, c);
    return *this;
}

StarMor& StarMor::operator-=(const StarMor& other) {
    require_compatible(other);
    for (const auto& [r, c] : other.terms_) add(r, -c);
    return *this;
}

StarMor& StarMor::operator*=(const Poly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [r, v] : terms_) v *= c;
    return *this;
}

bool in_r_set(const Category& cat, const Rel& r) {
    const RelLegs legs = rel_legs(cat, r);
    return cat.is_surjective(legs.a) && cat.is_surjective(legs.b);
}

const std::vector<Rel>& r_set(const Context& ctx, const Obj& x, const Obj& y) {
    auto& memo = ctx.cache<RSetMemo>();
    const auto key = std::make_pair(x.size, y.size);
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) return *it->second;
    }
    const Category& cat = ctx.cat();
    const Product p = cat.product(x, y);
    if (p.object.size > (ctx.backend() == Backend::finset ? ctx.limits().finset_enumeration
                                                          : ctx.limits().opset_enumeration)) {
        throw SizeGuardError("R(x,y) enumeration refused: product carrier " + std::to_string(p.object.size) +
                             " is above the enumeration limit");
    }
    auto value = std::make_unique<std::vector<Rel>>();
    cat.for_each_subobject(p.object, [&](const Sub& s) {
        Rel r{x, y, s};
        if (in_r_set(cat, r)) value->push_back(std::move(r));
    });
    std::sort(value->begin(), value->end());
    std::unique_lock lock(memo.mutex);
    return *memo.table.emplace(key, std::move(value)).first->second;
}

std::size_t star_hom_dim(const Context& ctx, const Obj& x, const Obj& y) { return r_set(ctx, x, y).size(); }

std::vector<Rel> r_below(const Context& ctx, const Rel& r) { return below_of(ctx, r).rels; }

StarMor basis_convert(const Context& ctx, const StarMor& phi, Flavor target) {
    if (phi.flavor() == target) return phi;
    StarMor out(phi.x(), phi.y(), target);
    for (const auto& [r, c] : phi.terms()) {
        const Below& below = below_of(ctx, r);
        if (target == Flavor::round) {
            for (const Rel& s : below.rels) out.add(s, c);
            continue;
        }
        const auto& mu = below_mobius(ctx, r, below);
        for (std::size_t i = 0; i < below.rels.size(); ++i) {
            if (mu[i] != 0) out.add(below.rels[i], Poly(mu[i]) * c);
        }
    }
    return out;
}

const TMor& embed_basis(const Context& ctx, const Rel& r, Flavor flavor) {
    auto& memo = ctx.cache<EmbedMemo>();
    auto key = std::make_pair(flavor, r);
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) return *it->second;
    }
    const Category& cat = ctx.cat();
    if (!in_r_set(cat, r)) throw PreconditionError("embed: relation is not in R(x,y)");
    const TMor& px = p_star_top(ctx, r.x);
    const TMor& py = p_star_top(ctx, r.y);
    std::unique_ptr<TMor> value;
    if (flavor == Flavor::curly) {
        value = std::make_unique<TMor>(tmor_chain(ctx, {py, TMor(r), px}));
    } else {
        const RelLegs legs = rel_legs(cat, r);
        value = std::make_unique<TMor>(tmor_chain(
            ctx, {py, graph(ctx, legs.b), p_star_top(ctx, r.sub.source()), cograph(ctx, legs.a), px}));
    }
    std::unique_lock lock(memo.mutex);
    return *memo.table.emplace(std::move(key), std::move(value)).first->second;
}

TMor embed(const Context& ctx, const StarMor& phi) {
    TMor out(phi.x(), phi.y());
    for (const auto& [r, c] : phi.terms()) out += c * embed_basis(ctx, r, phi.flavor());
    return out;
}

StarMor read_curly(const Context& ctx, const TMor& conjugated) {
    StarMor out(conjugated.dom(), conjugated.cod(), Flavor::curly);
    for (const auto& [r, c] : conjugated.terms()) {
        if (in_r_set(ctx.cat(), r)) out.add(r, c);
    }
    return out;
}

StarMor project(const Context& ctx, const TMor& psi, Flavor flavor, bool check) {
    const TMor conjugated = tmor_chain(ctx, {p_star_top(ctx, psi.cod()), psi, p_star_top(ctx, psi.dom())});
    StarMor curly = read_curly(ctx, conjugated);
    if (check && !(embed(ctx, curly) == conjugated)) {
        throw InternalError("project: conjugated morphism is not spanned by the curly basis");
    }
    return basis_convert(ctx, curly, flavor);
}

bool same_morphism(const Context& ctx, const StarMor& a, const StarMor& b) {
    if (a.flavor() == b.flavor()) return a == b;
    return basis_convert(ctx, a, Flavor::round) == basis_convert(ctx, b, Flavor::round);
}

}  // namespace tenv
