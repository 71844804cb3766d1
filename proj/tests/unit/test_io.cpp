#include "tenv/errors.hpp"
#include "tenv/io/json.hpp"
#include "tenv/io/text.hpp"

#include <doctest.h>

using namespace tenv;

TEST_CASE("partitions and subsets") {
    const Category& op = category(Backend::opset);
    const Sub u = parse_sub(op, op.object(3), "[[2],[0, 1]]");
    CHECK(u.code == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(u.size == 2);
    CHECK(sub_text(u) == "[[0,1],[2]]");
    CHECK(parse_sub(op, op.object(0), "[]").size == 0);
    CHECK_THROWS_AS(parse_sub(op, op.object(3), "[[0,1],[1,2]]"), ParseError);
    CHECK_THROWS_AS(parse_sub(op, op.object(3), "[[0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_sub(op, op.object(3), "[[0,1],[3]]"), ParseError);
    CHECK_THROWS_AS(parse_sub(op, op.object(3), "[[0,1],[]]"), ParseError);
    CHECK_THROWS_AS(parse_sub(op, op.object(3), "[[0,1],[2]"), ParseError);
    CHECK_THROWS_AS(parse_sub(op, op.object(2), "[[0],[-1]]"), ParseError);

    const Category& fin = category(Backend::finset);
    const Sub s = parse_sub(fin, fin.object(3), "[2,0]");
    CHECK(s.code == std::vector<std::uint32_t>{0, 2});
    CHECK(sub_text(s) == "[0,2]");
    CHECK_THROWS(parse_sub(fin, fin.object(3), "[]"));
    CHECK_THROWS_AS(parse_sub(fin, fin.object(3), "[0,0]"), ParseError);

    for (const Category* cat : {&op, &fin}) {
        for (const Sub& v : cat->subobjects(cat->object(4), {})) CHECK(parse_sub(*cat, v.ambient, sub_text(v)) == v);
    }
}

TEST_CASE("tables and gluings") {
    const Category& op = category(Backend::opset);
    const Mor f = parse_table(op, op.object(3), op.object(2), "[0,2]");
    CHECK(table_text(f) == "[0,2]");
    CHECK_THROWS_AS(parse_table(op, op.object(3), op.object(2), "[0,3]"), PreconditionError);
    CHECK_THROWS_AS(parse_table(op, op.object(3), op.object(2), "0,2"), ParseError);

    const CoRel u = parse_gluing(op, op.object(1), op.object(2), "{x0:[0],y0:[1],bij:[[0,1]]}");
    CHECK(u.pairs.size() == 1);
    CHECK(gluing_text(u) == "{x0:[0],y0:[1],bij:[[0,1]]}");
    CHECK(parse_gluing(op, op.object(2), op.object(2), "{bij:[]}").pairs.empty());
    CHECK_THROWS_AS(parse_gluing(op, op.object(1), op.object(2), "{x0:[0],y0:[0],bij:[[0,1]]}"), ParseError);
    CHECK_THROWS_AS(parse_gluing(op, op.object(1), op.object(2), "{x0:[0]}"), ParseError);
    const Category& fin = category(Backend::finset);
    CHECK_THROWS_AS(parse_gluing(fin, fin.object(1), fin.object(1), "{bij:[[0,0]]}"), CapabilityError);
}

TEST_CASE("json forms") {
    CHECK(poly_json(Poly{-2, 1}).dump() == "[-2,1]");
    CHECK(poly_json(Poly()).dump() == "[]");
    const Poly big(std::vector<mpz_class>{mpz_class("100000000000000000000000")});
    CHECK(poly_json(big).dump() == "[\"100000000000000000000000\"]");

    const Context ctx(Backend::opset, Degree::t_power);
    const Obj one = ctx.object(1);
    const Rel disc = parse_rel(ctx.cat(), one, one, "[[0],[1]]");
    CHECK(rel_json(disc).dump() == R"({"x":1,"y":1,"blocks":[[0],[1]]})");
    StarMor phi(one, one, Flavor::round);
    phi.add(disc, Poly{-2, 1});
    JsonOptions at2;
    at2.eval_at = mpq_class(2);
    const Json j = star_json(phi, at2);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["value"] == "0");
    CHECK(j["terms"][0]["text"] == "-2 + t");
    CHECK(star_text(phi) == "(-2 + t)*([[0],[1]])");
    CHECK(star_text(phi, mpq_class(1, 2)) == "(-3/2)*([[0],[1]])");
    CHECK(sub_json(ctx.cat().top(one)).dump() == R"({"backend":"opset","size":1,"blocks":[[0]]})");
    CHECK(mor_json(ctx.cat().identity(one)).dump() == R"({"backend":"opset","dom":1,"cod":1,"table":[0]})");

    const auto lat = ctx.lattice(ctx.object(2));
    const Json l = lattice_json(*lat, true);
    CHECK(l["elements"].size() == 2);
    CHECK(l["covers"].size() == 1);
    CHECK(l["mobius"].dump() == "[[1,-1],[null,1]]");
}
