#include "tenv/errors.hpp"
#include "tenv/io/text.hpp"
#include "tenv/maltsev/gluing.hpp"
#include "tenv/starbasis/compose.hpp"

#include <doctest.h>

using namespace tenv;

TEST_CASE("gluing counts") {
    const Context ctx(Backend::opset, Degree::t_power);
    CHECK(corel_set(ctx, ctx.object(1), ctx.object(1)).size() == 2);
    CHECK(corel_set(ctx, ctx.object(2), ctx.object(2)).size() == 7);
    for (std::uint32_t n = 0; n <= 3; ++n) CHECK(corel_set(ctx, ctx.object(n), ctx.cat().terminal()).size() == 1);
}

TEST_CASE("gluings and relations") {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    const Obj one = ctx.object(1), two = ctx.object(2);
    const CoRel empty = make_corel(cat, one, two, {});
    CHECK(push_pull(ctx, empty).sub == cat.top(cat.product(one, two).object));
    const CoRel full = make_corel(cat, one, one, {{0, 0}});
    const Rel joined = parse_rel(cat, one, one, "[[0,1]]");
    CHECK(push_pull(ctx, full) == joined);
    CHECK(curly_prime(ctx, full) == StarMor(joined, Flavor::curly));
    CHECK(curly_prime(ctx, make_corel(cat, one, one, {})) == StarMor(parse_rel(cat, one, one, "[[0],[1]]"), Flavor::curly));
    for (std::uint32_t a = 0; a <= 2; ++a) {
        for (std::uint32_t b = 0; b <= 2; ++b) {
            for (const Rel& r : r_set(ctx, ctx.object(a), ctx.object(b))) CHECK(push_pull(ctx, pull_push(ctx, r)) == r);
        }
    }
}

TEST_CASE("{u}' in the round basis is the sum of (x *_t y) over t <= u") {
    const Context ctx(Backend::opset, Degree::t_power);
    for (std::uint32_t a = 0; a <= 2; ++a) {
        for (std::uint32_t b = 0; b <= 2; ++b) {
            const Obj x = ctx.object(a), y = ctx.object(b);
            const auto q = quot_lattice(ctx, x, y);
            for (const CoRel& u : q->elements()) {
                StarMor want(x, y, Flavor::round);
                for (const CoRel& s : q->elements()) {
                    if (q->leq(s, u)) want.add(push_pull(ctx, s), 1);
                }
                CHECK(basis_convert(ctx, curly_prime(ctx, u), Flavor::round) == want);
            }
        }
    }
}

TEST_CASE("gluing products") {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    const Obj one = ctx.object(1);
    const CoRel empty = make_corel(cat, one, one, {});
    const CoRel full = make_corel(cat, one, one, {{0, 0}});
    CHECK(malcev_compose(ctx, empty, empty) == StarMor(parse_rel(cat, one, one, "[[0],[1]]"), Flavor::curly, Poly::t()));
    CHECK(malcev_compose(ctx, full, full) == StarMor(parse_rel(cat, one, one, "[[0,1]]"), Flavor::curly));
    for (const CoRel& u : corel_set(ctx, ctx.object(2), ctx.object(1))) {
        for (const CoRel& v : corel_set(ctx, ctx.object(1), ctx.object(2))) {
            CHECK(malcev_compose(ctx, v, u) == compose_curly(ctx, curly_prime(ctx, v), curly_prime(ctx, u)));
        }
    }
}

TEST_CASE("witnesses and capability gate") {
    const Context ctx(Backend::opset, Degree::t_power);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        const WitnessReport m = maltsev_witness(ctx, ctx.object(n));
        const WitnessReport e = exactness_witness(ctx, ctx.object(n));
        CHECK(m.checked > 0);
        CHECK(m.failures == 0);
        CHECK(e.checked > 0);
        CHECK(e.failures == 0);
    }
    const Context fin(Backend::finset, Degree::one);
    CHECK_THROWS_AS(corel_set(fin, fin.object(1), fin.object(1)), CapabilityError);
    CHECK_THROWS_AS(maltsev_witness(fin, fin.object(2)), CapabilityError);
    CHECK_THROWS_AS(make_corel(ctx.cat(), ctx.object(2), ctx.object(2), {{0, 0}, {1, 0}}), PreconditionError);
}
