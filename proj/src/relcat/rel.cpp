#include "tenv/relcat/rel.hpp"

#include "tenv/errors.hpp"
#include "tenv/relcat/structural.hpp"

#include <shared_mutex>
#include <unordered_map>

namespace tenv {

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept { return hash_words(v); }
};

/// Memo for rel_compose keyed by the three carrier sizes and both codes.
struct RelComposeMemo {
    std::shared_mutex mutex;
    std::unordered_map<std::vector<std::uint32_t>, std::optional<std::pair<Sub, Poly>>, WordsHash> table;
};

std::vector<std::uint32_t> compose_key(const Rel& r, const Rel& s) {
    std::vector<std::uint32_t> key;
    key.reserve(4 + r.sub.code.size() + s.sub.code.size());
    key.push_back(r.x.size);
    key.push_back(r.y.size);
    key.push_back(s.y.size);
    key.push_back(static_cast<std::uint32_t>(r.sub.code.size()));
    key.insert(key.end(), r.sub.code.begin(), r.sub.code.end());
    key.insert(key.end(), s.sub.code.begin(), s.sub.code.end());
    return key;
}

}  // namespace

Rel make_rel(const Category& cat, const Obj& x, const Obj& y, const Sub& sub) {
    const Product p = cat.product(x, y);
    if (!(sub.ambient == p.object)) throw PreconditionError("relation is not a subobject of the product");
    cat.validate(sub);
    return Rel{x, y, Sub{p.object, sub.code, sub.size}};
}

Rel rel_from_span(const Category& cat, const Mor& f, const Mor& g) {
    const Product p = cat.product(f.cod, g.cod);
    return Rel{f.cod, g.cod, cat.image(cat.pair(f, g, p)).image};
}

RelLegs rel_legs(const Category& cat, const Rel& r) {
    const Product p = cat.product(r.x, r.y);
    const Mor incl = cat.inclusion(r.sub);
    return RelLegs{cat.compose(p.first, incl), cat.compose(p.second, incl)};
}

Rel diagonal(const Category& cat, const Obj& x) { return graph_rel(cat, cat.identity(x)); }

Rel graph_rel(const Category& cat, const Mor& f) { return rel_from_span(cat, cat.identity(f.dom), f); }

Rel transpose(const Category& cat, const Rel& r) {
    return Rel{r.y, r.x, cat.sub_image(swap_iso(cat, r.x, r.y), r.sub)};
}

std::optional<std::pair<Rel, Poly>> rel_compose(const Context& ctx, const Rel& r, const Rel& s) {
    if (!(r.y == s.x)) throw PreconditionError("rel_compose: middle objects differ");
    const Category& cat = ctx.cat();
    auto& memo = ctx.cache<RelComposeMemo>();
    const std::vector<std::uint32_t> key = compose_key(r, s);
    const Obj xz = cat.product(r.x, s.y).object;
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) {
            if (!it->second) return std::nullopt;
            const Sub& sub = it->second->first;
            return std::make_pair(Rel{r.x, s.y, Sub{xz, sub.code, sub.size}}, it->second->second);
        }
    }
    const RelLegs lr = rel_legs(cat, r);
    const RelLegs ls = rel_legs(cat, s);
    std::optional<std::pair<Sub, Poly>> value;
    if (auto pb = cat.pullback(lr.b, ls.a)) {
        const Mor f = cat.compose(lr.a, pb->to_first);
        const Mor g = cat.compose(ls.b, pb->to_second);
        const Factorization fac = cat.image(cat.pair(f, g, cat.product(r.x, s.y)));
        value.emplace(fac.image, ctx.delta(fac.epi));
    }
    {
        std::unique_lock lock(memo.mutex);
        memo.table.emplace(key, value);
    }
    if (!value) return std::nullopt;
    return std::make_pair(Rel{r.x, s.y, Sub{xz, value->first.code, value->first.size}}, value->second);
}

TMor::TMor(const Rel& r, const Poly& c) : dom_(r.x), cod_(r.y) { add(r, c); }

Poly TMor::coeff(const Rel& r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? Poly() : it->second;
}

void TMor::add(const Rel& r, const Poly& c) {
    if (!(r.x == dom_) || !(r.y == cod_)) throw PreconditionError("relation endpoints do not match the morphism");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(r, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TMor::require_same_ends(const TMor& other) const {
    if (!(dom_ == other.dom_) || !(cod_ == other.cod_)) throw PreconditionError("morphisms have different endpoints");
}

TMor& TMor::operator+=(const TMor& other) {
    require_same_ends(other);
    for (const auto& [r, c] : other.terms_) add(r, c);
    return *this;
}

TMor& TMor::operator-=(const TMor& other) {
    require_same_ends(other);
    for (const auto& [r, c] : other.terms_) add(r, -c);
    return *this;
}

TMor& TMor::operator*=(const Poly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [r, v] : terms_) v *= c;
    return *this;
}

TMor tmor_identity(const Context& ctx, const Obj& x) { return TMor(diagonal(ctx.cat(), x)); }

TMor tmor_compose(const Context& ctx, const TMor& psi, const TMor& phi) {
    if (!(phi.cod() == psi.dom())) throw PreconditionError("tmor_compose: cod(phi) != dom(psi)");
    TMor out(phi.dom(), psi.cod());
    for (const auto& [r, a] : phi.terms()) {
        for (const auto& [s, b] : psi.terms()) {
            if (auto c = rel_compose(ctx, r, s)) out.add(c->first, a * b * c->second);
        }
    }
    return out;
}

TMor tmor_chain(const Context& ctx, const std::vector<TMor>& chain) {
    if (chain.empty()) throw PreconditionError("tmor_chain: empty chain");
    TMor out = chain.back();
    for (std::size_t i = chain.size() - 1; i-- > 0;) out = tmor_compose(ctx, chain[i], out);
    return out;
}

TMor adjoint(const Context& ctx, const TMor& phi) {
    const Category& cat = ctx.cat();
    const Mor swap = swap_iso(cat, phi.dom(), phi.cod());
    TMor out(phi.cod(), phi.dom());
    for (const auto& [r, c] : phi.terms()) out.add(Rel{r.y, r.x, cat.sub_image(swap, r.sub)}, c);
    return out;
}

TMor graph(const Context& ctx, const Mor& f) { return TMor(graph_rel(ctx.cat(), f)); }

TMor cograph(const Context& ctx, const Mor& f) { return adjoint(ctx, graph(ctx, f)); }

Rel tensor_rel(const Category& cat, const Rel& r, const Rel& s) {
    const Product pr = cat.product(r.x, r.y);
    const Product ps = cat.product(s.x, s.y);
    const Product src = cat.product(r.sub.source(), s.sub.source());
    const Product dst = cat.product(pr.object, ps.object);
    const Mor both = cat.product_map(cat.inclusion(r.sub), cat.inclusion(s.sub), src, dst);
    const Mor mid = middle_swap(cat, r.x, r.y, s.x, s.y);
    return Rel{cat.product(r.x, s.x).object, cat.product(r.y, s.y).object, cat.image(cat.compose(mid, both)).image};
}

TMor tmor_tensor(const Context& ctx, const TMor& phi, const TMor& psi) {
    const Category& cat = ctx.cat();
    TMor out(cat.product(phi.dom(), psi.dom()).object, cat.product(phi.cod(), psi.cod()).object);
    for (const auto& [r, a] : phi.terms()) {
        for (const auto& [s, b] : psi.terms()) out.add(tensor_rel(cat, r, s), a * b);
    }
    return out;
}

TMor ev(const Context& ctx, const Obj& x) {
    const Category& cat = ctx.cat();
    const Product xx = cat.product(x, x);
    const Mor id = cat.identity(x);
    const Mor diag = cat.pair(id, id, xx);
    return TMor(rel_from_span(cat, diag, cat.to_terminal(x)));
}

TMor coev(const Context& ctx, const Obj& x) { return adjoint(ctx, ev(ctx, x)); }

TMor snake_left(const Context& ctx, const Obj& x) {
    const Category& cat = ctx.cat();
    const TMor id = tmor_identity(ctx, x);
    return tmor_chain(ctx, {graph(ctx, left_unitor(cat, x)), tmor_tensor(ctx, ev(ctx, x), id),
                            graph(ctx, assoc_inverse(cat, x, x, x)), tmor_tensor(ctx, id, coev(ctx, x)),
                            cograph(ctx, right_unitor(cat, x))});
}

TMor snake_right(const Context& ctx, const Obj& x) {
    const Category& cat = ctx.cat();
    const TMor id = tmor_identity(ctx, x);
    return tmor_chain(ctx, {graph(ctx, right_unitor(cat, x)), tmor_tensor(ctx, id, ev(ctx, x)),
                            graph(ctx, assoc_iso(cat, x, x, x)), tmor_tensor(ctx, coev(ctx, x), id),
                            cograph(ctx, left_unitor(cat, x))});
}

Obj letter_source(const Letter& l) { return l.dual ? l.f.cod : l.f.dom; }

Obj letter_target(const Letter& l) { return l.dual ? l.f.dom : l.f.cod; }

TMor NormalForm::to_tmor(const Obj& dom, const Obj& cod) const {
    TMor out(dom, cod);
    if (rel) out.add(*rel, coefficient);
    return out;
}

namespace {

void require_composable(const std::vector<Letter>& word) {
    if (word.empty()) throw PreconditionError("word_normalize: empty word");
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (!(letter_source(word[i]) == letter_target(word[i + 1]))) {
            throw PreconditionError("word letters " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                    " are not composable");
        }
    }
}

}  // namespace

NormalForm word_normalize(const Context& ctx, const std::vector<Letter>& input) {
    require_composable(input);
    const Category& cat = ctx.cat();
    std::vector<Letter> w = input;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size() && !changed; ++i) {
            Letter& l = w[i];
            Letter& r = w[i + 1];
            if (!l.dual && !r.dual) {
                l = Letter{cat.compose(l.f, r.f), false};
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
            } else if (l.dual && r.dual) {
                l = Letter{cat.compose(r.f, l.f), true};
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
            } else if (l.dual && !r.dual) {
                // [f]^v [g] = [q][p]^v for the pullback square of f and g.
                auto pb = cat.pullback(r.f, l.f);
                if (!pb) return NormalForm{Poly(), std::nullopt};
                l = Letter{pb->to_second, false};
                r = Letter{pb->to_first, true};
                changed = true;
            }
        }
    }
    // Now w is [g], [f]^v or [g][f]^v.
    Mor f;
    Mor g;
    if (w.size() == 2) {
        g = w[0].f;
        f = w[1].f;
    } else if (w[0].dual) {
        f = w[0].f;
        g = cat.identity(f.dom);
    } else {
        g = w[0].f;
        f = cat.identity(g.dom);
    }
    const Product p = cat.product(f.cod, g.cod);
    const Factorization fac = cat.image(cat.pair(f, g, p));
    Poly c = ctx.delta(fac.epi);
    if (c.is_zero()) return NormalForm{Poly(), std::nullopt};
    return NormalForm{std::move(c), Rel{f.cod, g.cod, fac.image}};
}

TMor word_tmor(const Context& ctx, const std::vector<Letter>& word) {
    require_composable(word);
    std::vector<TMor> chain;
    chain.reserve(word.size());
    for (const Letter& l : word) chain.push_back(l.dual ? cograph(ctx, l.f) : graph(ctx, l.f));
    return tmor_chain(ctx, chain);
}

}  // namespace tenv
