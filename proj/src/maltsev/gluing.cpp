#include "tenv/maltsev/gluing.hpp"

#include "tenv/errors.hpp"
#include "tenv/projectors/projectors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>

namespace tenv {

namespace {

struct QuotMemo {
    std::mutex mutex;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const QuotLattice>> table;
};

}  // namespace

void require_maltsev(const Category& cat) {
    if (!cat.capabilities().is_exact_maltsev) {
        throw CapabilityError("backend " + std::string(cat.name()) + " is not exact Mal'tsev");
    }
}

CoRel make_corel(const Category& cat, const Obj& x, const Obj& y,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    require_maltsev(cat);
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> used_x(x.size, false);
    std::vector<bool> used_y(y.size, false);
    for (const auto& [i, j] : pairs) {
        if (i >= x.size || j >= y.size) throw PreconditionError("gluing index outside the carrier");
        if (used_x[i] || used_y[j]) throw PreconditionError("gluing is not a partial bijection");
        used_x[i] = true;
        used_y[j] = true;
    }
    return CoRel{x, y, std::move(pairs)};
}

Mor corel_left(const Category& cat, const CoRel& u) {
    require_maltsev(cat);
    Mor m{u.x, u.apex(), {}};
    for (const auto& p : u.pairs) m.table.push_back(p.first);
    return m;
}

Mor corel_right(const Category& cat, const CoRel& u) {
    require_maltsev(cat);
    Mor m{u.y, u.apex(), {}};
    for (const auto& p : u.pairs) m.table.push_back(p.second);
    return m;
}

std::vector<CoRel> corel_set(const Context& ctx, const Obj& x, const Obj& y) {
    require_maltsev(ctx.cat());
    std::vector<CoRel> out;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> current;
    std::vector<bool> used(y.size, false);
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t i) {
        if (i == x.size) {
            out.push_back(CoRel{x, y, current});
            return;
        }
        extend(i + 1);
        for (std::uint32_t j = 0; j < y.size; ++j) {
            if (used[j]) continue;
            used[j] = true;
            current.emplace_back(i, j);
            extend(i + 1);
            current.pop_back();
            used[j] = false;
        }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
}

Rel push_pull(const Context& ctx, const CoRel& u) {
    const Category& cat = ctx.cat();
    auto pb = cat.pullback(corel_left(cat, u), corel_right(cat, u));
    if (!pb) throw InternalError("push_pull: missing pullback in an exact Mal'tsev backend");
    return rel_from_span(cat, pb->to_first, pb->to_second);
}

CoRel pull_push(const Context& ctx, const Rel& r) {
    const Category& cat = ctx.cat();
    require_maltsev(cat);
    if (!in_r_set(cat, r)) throw PreconditionError("pull_push: relation is not in R(x,y)");
    // Blocks of r meet X and Y at most once each; glue the pairs sharing a block.
    const std::uint32_t nx = r.x.size;
    std::vector<std::uint32_t> y_of_block(r.sub.size, UINT32_MAX);
    for (std::uint32_t j = 0; j < r.y.size; ++j) y_of_block[r.sub.code[nx + j]] = j;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < nx; ++i) {
        const std::uint32_t j = y_of_block[r.sub.code[i]];
        if (j != UINT32_MAX) pairs.emplace_back(i, j);
    }
    return CoRel{r.x, r.y, std::move(pairs)};
}

QuotLattice::QuotLattice(const Context& ctx, const Obj& x, const Obj& y)
    : elements_(corel_set(ctx, x, y)),
      poset_(elements_.size(), [this](std::size_t i, std::size_t j) {
          const auto& a = elements_[i].pairs;
          const auto& b = elements_[j].pairs;
          return std::includes(a.begin(), a.end(), b.begin(), b.end());
      }) {}

std::size_t QuotLattice::index_of(const CoRel& t) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
    if (it == elements_.end() || !(*it == t)) throw PreconditionError("co-relation is not in this lattice");
    return static_cast<std::size_t>(it - elements_.begin());
}

std::shared_ptr<const QuotLattice> quot_lattice(const Context& ctx, const Obj& x, const Obj& y) {
    require_maltsev(ctx.cat());
    auto& memo = ctx.cache<QuotMemo>();
    const auto key = std::make_pair(x.size, y.size);
    {
        std::lock_guard lock(memo.mutex);
        if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
    }
    auto built = std::make_shared<const QuotLattice>(ctx, ctx.object(x.size), ctx.object(y.size));
    std::lock_guard lock(memo.mutex);
    return memo.table.emplace(key, std::move(built)).first->second;
}

StarMor curly_prime(const Context& ctx, const CoRel& u) { return StarMor(push_pull(ctx, u), Flavor::curly); }

StarMor curly_prime_word(const Context& ctx, const CoRel& u) {
    const Category& cat = ctx.cat();
    const TMor word = tmor_chain(ctx, {p_star_top(ctx, u.y), cograph(ctx, corel_right(cat, u)),
                                       graph(ctx, corel_left(cat, u)), p_star_top(ctx, u.x)});
    return project(ctx, word, Flavor::curly, true);
}

CoRel corel_through(const CoRel& t, const CoRel& u, const CoRel& v) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& [p, q] : t.pairs) pairs.emplace_back(u.pairs.at(p).first, v.pairs.at(q).second);
    std::sort(pairs.begin(), pairs.end());
    return CoRel{u.x, v.y, std::move(pairs)};
}

StarMor malcev_compose(const Context& ctx, const CoRel& v, const CoRel& u) {
    const Category& cat = ctx.cat();
    require_maltsev(cat);
    if (!(u.y == v.x)) throw PreconditionError("malcev_compose: middle objects differ");
    const Obj uo = u.apex();
    const Obj vo = v.apex();
    // y-bar = im(y -> u x v) and the push-out w of u <<- y ->> v.
    const Mor to_u = corel_right(cat, u);
    const Mor to_v = corel_left(cat, v);
    const Factorization ybar = cat.image(cat.pair(to_u, to_v, cat.product(uo, vo)));
    const Poly w_omega = omega(ctx, ybar.epi);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> glued;
    for (std::uint32_t p = 0; p < u.pairs.size(); ++p) {
        for (std::uint32_t q = 0; q < v.pairs.size(); ++q) {
            if (u.pairs[p].second == v.pairs[q].first) glued.emplace_back(p, q);
        }
    }
    const auto lattice = quot_lattice(ctx, uo, vo);
    const CoRel w{lattice->elements().front().x, lattice->elements().front().y, std::move(glued)};
    StarMor out(u.x, v.y, Flavor::curly);
    for (const CoRel& t : lattice->elements()) {
        if (!lattice->leq(t, w)) continue;
        const std::int64_t mu = lattice->mobius(t, w);
        if (mu == 0) continue;
        out += (w_omega * Poly(mu)) * curly_prime(ctx, corel_through(t, u, v));
    }
    return out;
}

WitnessReport maltsev_witness(const Context& ctx, const Obj& x) {
    const Category& cat = ctx.cat();
    require_maltsev(cat);
    const Rel diag = diagonal(cat, x);
    WitnessReport report;
    for (const Sub& s : cat.subobjects(cat.product(x, x).object, ctx.limits())) {
        const Rel r{x, x, s};
        if (!cat.sub_leq(diag.sub, r.sub)) continue;
        ++report.checked;
        const bool symmetric = transpose(cat, r) == r;
        const auto square = rel_compose(ctx, r, r);
        const bool transitive = square && cat.sub_leq(square->first.sub, r.sub);
        if (!symmetric || !transitive) ++report.failures;
    }
    return report;
}

WitnessReport exactness_witness(const Context& ctx, const Obj& x) {
    const Category& cat = ctx.cat();
    require_maltsev(cat);
    const Rel diag = diagonal(cat, x);
    WitnessReport report;
    for (const Sub& s : cat.subobjects(cat.product(x, x).object, ctx.limits())) {
        const Rel r{x, x, s};
        if (!cat.sub_leq(diag.sub, r.sub) || !(transpose(cat, r) == r)) continue;
        const auto square = rel_compose(ctx, r, r);
        if (!square || !cat.sub_leq(square->first.sub, r.sub)) continue;
        ++report.checked;
        const CoRel q = pull_push(ctx, r);
        const Mor e = corel_left(cat, q);
        bool ok = e.table == corel_right(cat, q).table;
        if (ok) {
            auto kernel = cat.pullback(e, e);
            ok = kernel && rel_from_span(cat, kernel->to_first, kernel->to_second) == r;
        }
        if (!ok) ++report.failures;
    }
    return report;
}

}  // namespace tenv
