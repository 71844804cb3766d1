#include "tenv/backends/context.hpp"
#include "tenv/errors.hpp"
#include "tenv/io/text.hpp"
#include "tenv/relcat/structural.hpp"

#include <doctest.h>

using namespace tenv;

namespace {

const Category& fin = category(Backend::finset);
const Category& op = category(Backend::opset);

Mor fmor(std::uint32_t d, std::uint32_t c, std::vector<std::uint32_t> t) { return Mor{fin.object(d), fin.object(c), std::move(t)}; }
Mor omor(std::uint32_t d, std::uint32_t c, std::vector<std::uint32_t> t) { return Mor{op.object(d), op.object(c), std::move(t)}; }

std::uint64_t bell(std::uint32_t n) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    s[0][0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
    }
    std::uint64_t b = 0;
    for (auto v : s[n]) b += v;
    return b;
}

}  // namespace

TEST_CASE("composition") {
    const Mor f = fmor(2, 2, {1, 1});
    const Mor g = fmor(1, 2, {0});
    CHECK(fin.compose(f, g) == fmor(1, 2, {1}));
    CHECK(fin.compose(fin.identity(f.cod), f) == f);
    const Mor h = omor(2, 1, {0});
    CHECK(op.compose(h, op.identity(h.dom)) == h);
    CHECK(op.compose(op.identity(h.cod), h) == h);
    CHECK_THROWS_AS(fin.compose(g, f), PreconditionError);
}

TEST_CASE("injective and surjective") {
    CHECK(op.is_surjective(omor(3, 1, {0})));
    CHECK_FALSE(op.is_injective(omor(3, 1, {0})));
    const Mor c = fmor(2, 2, {0, 0});
    CHECK_FALSE(fin.is_injective(c));
    CHECK_FALSE(fin.is_surjective(c));
    CHECK(fin.is_iso(fin.identity(fin.object(3))));
    CHECK(op.is_iso(op.identity(op.object(3))));
}

TEST_CASE("terminal objects and products") {
    CHECK(fin.terminal().size == 1);
    CHECK(op.terminal().size == 0);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        CHECK(fin.morphisms(fin.object(n), fin.terminal(), {}).size() == 1);
        CHECK(op.morphisms(op.object(n), op.terminal(), {}).size() == 1);
    }
    const Product p = op.product(op.object(1), op.object(1));
    CHECK(p.object.size == 2);
    CHECK(p.first.table == std::vector<std::uint32_t>{0});
    CHECK(p.second.table == std::vector<std::uint32_t>{1});
    const Product q = fin.product(fin.object(2), fin.object(3));
    CHECK(q.object.size == 6);
    CHECK(q.first.table == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});
    CHECK(q.second.table == std::vector<std::uint32_t>{0, 1, 2, 0, 1, 2});
    for (const Category* cat : {&fin, &op}) {
        const Obj x = cat->object(2);
        CHECK(cat->is_iso(left_unitor(*cat, x)));
        CHECK(cat->is_iso(right_unitor(*cat, x)));
    }
}

TEST_CASE("image factorization") {
    const Factorization a = fin.image(fmor(3, 2, {0, 0, 0}));
    CHECK(a.image.code == std::vector<std::uint32_t>{0});
    CHECK(fin.is_surjective(a.epi));
    CHECK(fin.image(fin.identity(fin.object(2))).image == fin.top(fin.object(2)));
    const Factorization b = op.image(omor(2, 2, {0, 0}));
    CHECK(b.image.code == std::vector<std::uint32_t>{0, 0});
    CHECK(delta(op, Degree::t_power, b.epi) == Poly::t());
}

TEST_CASE("pullbacks") {
    const Mor f = fmor(2, 3, {0, 1});
    const auto pb = fin.pullback(fin.identity(f.cod), f);
    REQUIRE(pb);
    CHECK(pb->apex.size == 2);
    CHECK_FALSE(fin.pullback(fmor(1, 2, {0}), fmor(1, 2, {1})).has_value());
    // Gluing {a,b} and {b',c} along b ~ b' leaves three points.
    const auto g = op.pullback(omor(2, 1, {1}), omor(2, 1, {0}));
    REQUIRE(g);
    CHECK(g->apex.size == 3);
}

TEST_CASE("subobject enumeration") {
    CHECK(fin.subobjects(fin.object(2), {}).size() == 3);
    CHECK(op.subobjects(op.object(3), {}).size() == 5);
    CHECK(op.subobjects(op.object(0), {}).size() == 1);
    for (std::uint32_t n = 0; n <= 7; ++n) {
        CHECK(op.subobject_count(op.object(n)) == bell(n));
        CHECK(op.subobjects(op.object(n), {}).size() == bell(n));
    }
    for (std::uint32_t n = 1; n <= 8; ++n) CHECK(fin.subobjects(fin.object(n), {}).size() == (1u << n) - 1);
    CHECK_THROWS_AS(op.subobjects(op.object(11), {}), SizeGuardError);
    CHECK_THROWS_AS(fin.subobjects(fin.object(17), {}), SizeGuardError);
}

TEST_CASE("images and preimages of subobjects") {
    for (const Category* cat : {&fin, &op}) {
        const Obj x = cat->object(3);
        for (const Sub& u : cat->subobjects(x, {})) CHECK(cat->sub_image(cat->identity(x), u) == u);
        for (const Mor& f : cat->morphisms(x, cat->object(2), {})) {
            CHECK(cat->preimage(f, cat->top(f.cod)) == cat->top(x));
        }
    }
    const Mor f = omor(2, 1, {0});
    CHECK(op.sub_image(f, op.top(f.dom)) == op.top(f.cod));
}

TEST_CASE("degree functions") {
    for (const Category* cat : {&fin, &op}) {
        for (std::uint32_t n = cat->backend() == Backend::finset ? 1 : 0; n <= 3; ++n) {
            const Mor id = cat->identity(cat->object(n));
            CHECK(delta(*cat, Degree::one, id) == Poly(1));
            CHECK(delta(*cat, Degree::zero_noniso, id) == Poly(1));
        }
    }
    CHECK(delta(op, Degree::t_power, omor(3, 1, {0})) == Poly::monomial(1, 2));
    CHECK(delta(op, Degree::zero_noniso, omor(3, 1, {0})).is_zero());
    CHECK(delta(fin, Degree::zero_noniso, fmor(2, 1, {0, 0})).is_zero());
    CHECK_THROWS_AS(delta(fin, Degree::t_power, fin.identity(fin.object(1))), CapabilityError);
    CHECK_THROWS_AS(Context(Backend::finset, Degree::t_power), CapabilityError);
    CHECK(parse_degree("t_power") == Degree::t_power);
    CHECK_THROWS_AS(parse_degree("t"), ParseError);
}

TEST_CASE("zero-noniso is not pullback stable on finset") {
    // e identifies 0 and 1; pulling back along the point 2 gives an iso.
    const Mor e = fmor(3, 2, {0, 0, 1});
    const Mor g = fmor(1, 2, {1});
    const auto pb = fin.pullback(e, g);
    REQUIRE(pb);
    CHECK(fin.is_iso(pb->to_second));
    CHECK(delta(fin, Degree::zero_noniso, e).is_zero());
    CHECK(delta(fin, Degree::zero_noniso, pb->to_second) == Poly(1));
}

TEST_CASE("validation rejects malformed values") {
    CHECK_THROWS_AS(fin.validate(fmor(2, 2, {0, 2})), PreconditionError);
    CHECK_THROWS_AS(op.validate(omor(2, 2, {0})), PreconditionError);
    CHECK_THROWS_AS(fin.object(0), PreconditionError);
    CHECK_THROWS_AS(op.validate(Sub{op.object(2), {1, 0}, 2}), PreconditionError);
    CHECK_THROWS_AS(fin.validate(Sub{fin.object(2), {1, 0}, 2}), PreconditionError);
}

TEST_CASE("structural isomorphisms") {
    for (const Category* cat : {&fin, &op}) {
        const Obj a = cat->object(1), b = cat->object(2), c = cat->object(3);
        const Mor s = swap_iso(*cat, a, b);
        CHECK(cat->compose(swap_iso(*cat, b, a), s) == cat->identity(s.dom));
        const Mor al = assoc_iso(*cat, a, b, c);
        CHECK(cat->compose(assoc_inverse(*cat, a, b, c), al) == cat->identity(al.dom));
        CHECK(cat->compose(inverse_iso(*cat, al), al) == cat->identity(al.dom));
        CHECK(cat->is_iso(middle_swap(*cat, a, b, c, a)));
    }
}
