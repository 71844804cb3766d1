#include "tenv/errors.hpp"
#include "tenv/io/text.hpp"
#include "tenv/relcat/rel.hpp"
#include "tenv/relcat/structural.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace tenv;

namespace {

// Classical diagram composition of set partitions: glue along the middle
// points, keep the outer points, count the components living only in the
// middle.
struct Diagram {
    std::vector<std::uint32_t> labels;  // canonical block labels of the outer points
    std::uint32_t closed_loops = 0;
};

Diagram compose_partitions(const std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& s, std::uint32_t nx,
                           std::uint32_t ny, std::uint32_t nz) {
    std::vector<std::uint32_t> parent(nx + ny + nz);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto join_blocks = [&](const std::vector<std::uint32_t>& code, auto point) {
        std::vector<std::int64_t> first(code.size(), -1);
        for (std::uint32_t i = 0; i < code.size(); ++i) {
            if (first[code[i]] < 0) {
                first[code[i]] = point(i);
            } else {
                parent[find(point(i))] = find(static_cast<std::uint32_t>(first[code[i]]));
            }
        }
    };
    // points: x at 0.., y at nx.., z at nx+ny..
    join_blocks(r, [&](std::uint32_t i) { return i; });
    join_blocks(s, [&](std::uint32_t i) { return nx + i; });
    Diagram d;
    std::vector<std::int64_t> relabel(nx + ny + nz, -1);
    std::uint32_t next = 0;
    std::vector<bool> outer(nx + ny + nz, false);
    for (std::uint32_t i = 0; i < nx + ny + nz; ++i) {
        if (i < nx || i >= nx + ny) outer[find(i)] = true;
    }
    for (std::uint32_t i = 0; i < nx + ny + nz; ++i) {
        if (i >= nx && i < nx + ny) continue;
        const std::uint32_t root = find(i);
        if (relabel[root] < 0) relabel[root] = next++;
        d.labels.push_back(static_cast<std::uint32_t>(relabel[root]));
    }
    for (std::uint32_t i = nx; i < nx + ny; ++i) {
        if (find(i) == i && !outer[i]) ++d.closed_loops;
    }
    return d;
}

Rel rel(const Context& ctx, std::uint32_t a, std::uint32_t b, const char* text) {
    return parse_rel(ctx.cat(), ctx.object(a), ctx.object(b), text);
}

TMor random_tmor(const Context& ctx, const Obj& x, const Obj& y, std::mt19937_64& rng) {
    TMor out(x, y);
    const Product p = ctx.cat().product(x, y);
    for (const Sub& s : ctx.cat().subobjects(p.object, ctx.limits())) {
        if (rng() % 3 == 0) out.add(make_rel(ctx.cat(), x, y, s), Poly{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3)});
    }
    return out;
}

}  // namespace

TEST_CASE("opset relation composition matches diagram composition") {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    std::size_t checked = 0;
    for (std::uint32_t a = 0; a <= 2; ++a) {
        for (std::uint32_t b = 0; b <= 2; ++b) {
            for (std::uint32_t c = 0; c <= 2; ++c) {
                const Obj x = ctx.object(a), y = ctx.object(b), z = ctx.object(c);
                for (const Sub& rs : cat.subobjects(cat.product(x, y).object, {})) {
                    for (const Sub& ss : cat.subobjects(cat.product(y, z).object, {})) {
                        const Diagram d = compose_partitions(rs.code, ss.code, a, b, c);
                        const auto got = rel_compose(ctx, make_rel(cat, x, y, rs), make_rel(cat, y, z, ss));
                        REQUIRE(got);
                        CHECK(got->first.sub.code == d.labels);
                        CHECK(got->second == Poly::monomial(1, d.closed_loops));
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked == 564);
}

TEST_CASE("relation composition examples") {
    const Context op(Backend::opset, Degree::t_power);
    const Rel disc = rel(op, 1, 1, "[[0],[1]]");
    const auto dd = rel_compose(op, disc, disc);
    REQUIRE(dd);
    CHECK(dd->first == disc);
    CHECK(dd->second == Poly::t());
    CHECK(tmor_compose(op, TMor(disc), TMor(disc)) == Poly::t() * TMor(disc));

    const Context fin(Backend::finset, Degree::one);
    CHECK_FALSE(rel_compose(fin, rel(fin, 1, 2, "[0]"), rel(fin, 2, 1, "[1]")).has_value());
    for (const Context* ctx : {&op, &fin}) {
        for (std::uint32_t n = ctx->backend() == Backend::opset ? 0 : 1; n <= 2; ++n) {
            const Obj x = ctx->object(n);
            for (const Sub& s : ctx->cat().subobjects(ctx->cat().product(x, x).object, {})) {
                const Rel r = make_rel(ctx->cat(), x, x, s);
                const auto rd = rel_compose(*ctx, diagonal(ctx->cat(), x), r);
                REQUIRE(rd);
                CHECK(rd->first == r);
                CHECK(rd->second == Poly(1));
            }
        }
    }
}

TEST_CASE("graphs, cographs and adjoints") {
    for (Backend b : {Backend::finset, Backend::opset}) {
        const Context ctx(b, b == Backend::opset ? Degree::t_power : Degree::one);
        const Category& cat = ctx.cat();
        for (std::uint32_t n = 1; n <= 2; ++n) {
            const Obj x = ctx.object(n);
            CHECK(graph(ctx, cat.identity(x)) == tmor_identity(ctx, x));
            CHECK(cograph(ctx, cat.identity(x)) == tmor_identity(ctx, x));
            CHECK(transpose(cat, diagonal(cat, x)) == diagonal(cat, x));
            for (std::uint32_t m = 1; m <= 2; ++m) {
                const Obj y = ctx.object(m);
                for (const Sub& s : cat.subobjects(cat.product(x, y).object, {})) {
                    const Rel r = make_rel(cat, x, y, s);
                    const RelLegs legs = rel_legs(cat, r);
                    CHECK(tmor_compose(ctx, graph(ctx, legs.b), cograph(ctx, legs.a)) == TMor(r));
                    CHECK(adjoint(ctx, adjoint(ctx, TMor(r))) == TMor(r));
                }
            }
        }
    }
}

TEST_CASE("adjoint reverses composition; composition is associative") {
    const Context ctx(Backend::opset, Degree::t_power);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const Obj x = ctx.object(rng() % 3), y = ctx.object(rng() % 3), z = ctx.object(rng() % 3), w = ctx.object(rng() % 2);
        const TMor r = random_tmor(ctx, x, y, rng), s = random_tmor(ctx, y, z, rng), u = random_tmor(ctx, z, w, rng);
        CHECK(adjoint(ctx, tmor_compose(ctx, s, r)) == tmor_compose(ctx, adjoint(ctx, r), adjoint(ctx, s)));
        CHECK(tmor_compose(ctx, u, tmor_compose(ctx, s, r)) == tmor_compose(ctx, tmor_compose(ctx, u, s), r));
    }
}

TEST_CASE("tensor product of T0 morphisms") {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    const Obj x = ctx.object(1), y = ctx.object(2);
    CHECK(tensor_rel(cat, diagonal(cat, x), diagonal(cat, y)) == diagonal(cat, cat.product(x, y).object));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Obj a = ctx.object(rng() % 2), b = ctx.object(rng() % 2), c = ctx.object(rng() % 2);
        const Obj a2 = ctx.object(rng() % 2), b2 = ctx.object(rng() % 2), c2 = ctx.object(rng() % 2);
        const TMor f = random_tmor(ctx, a, b, rng), g = random_tmor(ctx, b, c, rng);
        const TMor f2 = random_tmor(ctx, a2, b2, rng), g2 = random_tmor(ctx, b2, c2, rng);
        CHECK(tmor_compose(ctx, tmor_tensor(ctx, g, g2), tmor_tensor(ctx, f, f2)) ==
              tmor_tensor(ctx, tmor_compose(ctx, g, f), tmor_compose(ctx, g2, f2)));
    }
}

TEST_CASE("duality") {
    const Context op(Backend::opset, Degree::t_power);
    const Context fin(Backend::finset, Degree::one);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        const TMor eo = tmor_compose(op, ev(op, op.object(n)), coev(op, op.object(n)));
        CHECK(eo == Poly::monomial(1, n) * tmor_identity(op, op.cat().terminal()));
        const TMor ef = tmor_compose(fin, ev(fin, fin.object(n)), coev(fin, fin.object(n)));
        CHECK(ef == tmor_identity(fin, fin.cat().terminal()));
        for (const Context* ctx : {&op, &fin}) {
            CHECK(snake_left(*ctx, ctx->object(n)) == tmor_identity(*ctx, ctx->object(n)));
            CHECK(snake_right(*ctx, ctx->object(n)) == tmor_identity(*ctx, ctx->object(n)));
        }
    }
}

TEST_CASE("word normal forms") {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    const Obj x = ctx.object(2);
    const NormalForm id = word_normalize(ctx, {Letter{cat.identity(x), false}});
    CHECK(id.coefficient == Poly(1));
    CHECK(id.rel == diagonal(cat, x));
    // [g][f]^v = delta(u ->> r) <r> with r the image of <f, g>.
    const Obj u = ctx.object(3), y = ctx.object(1);
    for (const Mor& f : cat.morphisms(u, x, {})) {
        for (const Mor& g : cat.morphisms(u, y, {})) {
            const NormalForm nf = word_normalize(ctx, {Letter{g, false}, Letter{f, true}});
            const Product p = cat.product(x, y);
            const Factorization fac = cat.image(cat.pair(f, g, p));
            REQUIRE(nf.rel);
            CHECK(nf.rel->sub == fac.image);
            CHECK(nf.coefficient == ctx.delta(fac.epi));
        }
    }
}

TEST_CASE("random words normalize to their composite") {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> word(1 + rng() % 4);
        Obj cur = ctx.object(rng() % 3);
        for (std::size_t k = word.size(); k-- > 0;) {
            const Obj next = ctx.object(1 + rng() % 2);
            const bool dual = rng() % 2;
            const auto ms = dual ? cat.morphisms(next, cur, {}) : cat.morphisms(cur, next, {});
            if (ms.empty()) {
                word[k] = Letter{cat.identity(cur), dual};
                continue;
            }
            word[k] = Letter{ms[rng() % ms.size()], dual};
            cur = next;
        }
        const Obj dom = letter_source(word.back()), cod = letter_target(word.front());
        CHECK(word_normalize(ctx, word).to_tmor(dom, cod) == word_tmor(ctx, word));
    }
}
