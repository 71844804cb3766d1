#include "tenv/errors.hpp"
#include "tenv/io/text.hpp"
#include "tenv/projectors/projectors.hpp"
#include "tenv/starbasis/compose.hpp"
#include "tenv/starbasis/tensor.hpp"

#include <doctest.h>

#include <random>

using namespace tenv;

namespace {

std::uint64_t partial_bijections(std::uint64_t m, std::uint64_t n) {
    // Recursion on the last point of the m-set: unmatched, or matched with one of n.
    if (m == 0 || n == 0) return 1;
    return partial_bijections(m - 1, n) + n * partial_bijections(m - 1, n - 1);
}

StarMor random_star(const Context& ctx, const Obj& x, const Obj& y, Flavor f, std::mt19937_64& rng) {
    StarMor out(x, y, f);
    for (const Rel& r : r_set(ctx, x, y)) {
        if (rng() % 2) out.add(r, Poly{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1});
    }
    return out;
}

struct OneOne {
    Context ctx{Backend::opset, Degree::t_power};
    Obj one = ctx.object(1);
    Rel disc = parse_rel(ctx.cat(), one, one, "[[0],[1]]");
    Rel joined = parse_rel(ctx.cat(), one, one, "[[0,1]]");
};

}  // namespace

TEST_CASE("R(x,y) sizes") {
    const Context op(Backend::opset, Degree::t_power);
    for (std::uint32_t m = 0; m <= 3; ++m) {
        for (std::uint32_t n = 0; n <= 3; ++n) CHECK(star_hom_dim(op, op.object(m), op.object(n)) == partial_bijections(m, n));
    }
    CHECK(star_hom_dim(op, op.object(2), op.object(3)) == 13);
    CHECK(star_hom_dim(op, op.object(3), op.cat().terminal()) == 1);
    const Context fin(Backend::finset, Degree::one);
    CHECK(r_set(fin, fin.object(1), fin.object(1)).size() == 1);
    CHECK(star_hom_dim(fin, fin.object(2), fin.object(2)) == 7);
    const auto& rs = r_set(op, op.object(2), op.object(2));
    CHECK(std::is_sorted(rs.begin(), rs.end()));
}

TEST_CASE("basis conversion on End([1]*)") {
    const OneOne s;
    StarMor want(s.one, s.one, Flavor::round);
    want.add(s.disc, 1);
    want.add(s.joined, 1);
    CHECK(basis_convert(s.ctx, StarMor(s.disc, Flavor::curly), Flavor::round) == want);
    CHECK(basis_convert(s.ctx, StarMor(s.joined, Flavor::round), Flavor::curly) == StarMor(s.joined, Flavor::curly));
}

TEST_CASE("basis conversion round trips") {
    std::mt19937_64 rng(31337);
    for (Backend b : {Backend::opset, Backend::finset}) {
        const Context ctx(b, b == Backend::opset ? Degree::t_power : Degree::one);
        for (int trial = 0; trial < 30; ++trial) {
            const Obj x = ctx.object(1 + rng() % 3), y = ctx.object(1 + rng() % 2);
            for (Flavor f : {Flavor::round, Flavor::curly}) {
                const StarMor phi = random_star(ctx, x, y, f, rng);
                const Flavor other = f == Flavor::round ? Flavor::curly : Flavor::round;
                CHECK(basis_convert(ctx, basis_convert(ctx, phi, other), f) == phi);
                CHECK(same_morphism(ctx, phi, basis_convert(ctx, phi, other)));
            }
        }
    }
}

TEST_CASE("embedding and projection") {
    for (Backend b : {Backend::opset, Backend::finset}) {
        const Context ctx(b, b == Backend::opset ? Degree::t_power : Degree::one);
        for (std::uint32_t m = 1; m <= 2; ++m) {
            const Obj x = ctx.object(m);
            CHECK(embed(ctx, StarMor(diagonal(ctx.cat(), x), Flavor::curly)) == p_star_top(ctx, x));
            for (std::uint32_t n = 1; n <= 2; ++n) {
                const Obj y = ctx.object(n);
                for (const Rel& r : r_set(ctx, x, y)) {
                    for (Flavor f : {Flavor::round, Flavor::curly}) {
                        const StarMor phi(r, f);
                        CHECK(project(ctx, embed(ctx, phi), f, true) == phi);
                    }
                }
            }
        }
    }
}

TEST_CASE("products on End([1]*)") {
    const OneOne s;
    const Poly t = Poly::t();
    StarMor rr(s.one, s.one, Flavor::round);
    rr.add(s.disc, t - Poly(2));
    rr.add(s.joined, t - Poly(1));
    const StarMor dr(s.disc, Flavor::round), jr(s.joined, Flavor::round);
    const StarMor dc(s.disc, Flavor::curly), jc(s.joined, Flavor::curly);
    CHECK(compose_round(s.ctx, dr, dr) == rr);
    CHECK(compose_round(s.ctx, jr, jr) == jr);
    CHECK(compose_curly(s.ctx, dc, dc) == StarMor(s.disc, Flavor::curly, t));
    CHECK(compose_curly(s.ctx, jc, jc) == jc);
    CHECK(compose_curly_as_round(s.ctx, dc, dc) == basis_convert(s.ctx, StarMor(s.disc, Flavor::curly, t), Flavor::round));
    CHECK(compose_oracle(s.ctx, dr, dr, Flavor::round) == rr);
    CHECK_THROWS_AS(compose_round(s.ctx, StarMor(parse_rel(s.ctx.cat(), s.ctx.object(2), s.one, "[[0,2],[1]]"), Flavor::round), dr),
                    PreconditionError);
}

TEST_CASE("products agree with the oracle on random combinations") {
    const Context ctx(Backend::opset, Degree::t_power);
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        const Obj x = ctx.object(rng() % 3), y = ctx.object(rng() % 3), z = ctx.object(rng() % 3);
        const StarMor a = random_star(ctx, x, y, Flavor::curly, rng);
        const StarMor b = random_star(ctx, y, z, Flavor::curly, rng);
        CHECK(compose_curly(ctx, b, a) == compose_oracle(ctx, b, a, Flavor::curly));
        const StarMor ar = basis_convert(ctx, a, Flavor::round), br = basis_convert(ctx, b, Flavor::round);
        CHECK(compose_round(ctx, br, ar) == compose_oracle(ctx, br, ar, Flavor::round));
    }
}

TEST_CASE("tensor decomposition") {
    const Context op(Backend::opset, Degree::t_power);
    const Context fin(Backend::finset, Degree::one);
    const auto two = tensor_decompose(op, op.object(1), op.object(1));
    REQUIRE(two.size() == 2);
    CHECK(two[0].r.sub.size == 1);
    CHECK(two[1].r.sub.size == 2);
    CHECK(tensor_decompose(fin, fin.object(1), fin.object(1)).size() == 1);
    CHECK(tensor_decompose(op, op.object(2), op.cat().terminal()).size() == 1);
    const Obj one = op.object(1);
    CHECK(multi_tensor_decompose(op, {one, one, one}).summands.size() == 5);
    CHECK(multi_tensor_decompose(op, {one, one}).summands.size() == 2);
    CHECK(pentagon_holds(op, one, one, one, one));
    CHECK(hexagon_holds(op, one, op.object(2), one));
    CHECK(triangle_holds(op, one, op.object(2)));
}

TEST_CASE("tensor of identities is the identity block map") {
    for (Backend b : {Backend::opset, Backend::finset}) {
        const Context ctx(b, b == Backend::opset ? Degree::t_power : Degree::one);
        const Obj x = ctx.object(1), x2 = ctx.object(2);
        const StarMor ix(diagonal(ctx.cat(), x), Flavor::curly), ix2(diagonal(ctx.cat(), x2), Flavor::curly);
        for (const BlockMap& m : {tensor_curly(ctx, ix, ix2), tensor_round(ctx, basis_convert(ctx, ix, Flavor::round),
                                                                             basis_convert(ctx, ix2, Flavor::round))}) {
            REQUIRE(m.src.size() == m.dst.size());
            for (std::size_t v = 0; v < m.dst.size(); ++v) {
                for (std::size_t u = 0; u < m.src.size(); ++u) {
                    const StarMor blk = m.block(ctx, v, u, Flavor::curly);
                    if (u == v) {
                        const Obj w = m.src[u].sub.source();
                        CHECK(blk == StarMor(diagonal(ctx.cat(), w), Flavor::curly));
                    } else {
                        CHECK(blk.is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("tensor products agree with the oracle") {
    const OneOne s;
    for (const Rel& r : {s.disc, s.joined}) {
        for (const Rel& r2 : {s.disc, s.joined}) {
            for (Flavor f : {Flavor::round, Flavor::curly}) {
                const StarMor a(r, f), b(r2, f);
                const BlockMap got = f == Flavor::round ? tensor_round(s.ctx, a, b) : tensor_curly(s.ctx, a, b);
                CHECK(same_block_map(s.ctx, got, tensor_oracle(s.ctx, a, b, f)));
            }
        }
    }
}
