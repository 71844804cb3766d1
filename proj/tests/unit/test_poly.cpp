#include "tenv/errors.hpp"
#include "tenv/scalars/poly.hpp"

#include <doctest.h>

#include <random>

using tenv::Poly;

namespace {

Poly random_poly(std::mt19937_64& rng) {
    std::vector<mpz_class> c(rng() % 5);
    for (auto& x : c) {
        x = static_cast<long>(rng() % 21) - 10;
        if (rng() % 7 == 0) x *= mpz_class("123456789012345678901234567890");
    }
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
    const Poly t = Poly::t();
    CHECK(poly_arith(t, Poly(1), tenv::ArithOp::add) == Poly{1, 1});
    CHECK(poly_arith(t - Poly(2), t - Poly(1), tenv::ArithOp::mul) == Poly{2, -3, 1});
    CHECK(poly_arith(Poly(), Poly{4, 0, 7}, tenv::ArithOp::mul).is_zero());
    CHECK(poly_eval(Poly{2, -3, 1}, 2) == 0);
    CHECK(poly_eval(Poly(1), mpq_class(7, 3)) == 1);
    CHECK(poly_eval(t, 5) == 5);
    CHECK((t - t).degree() == -1);
}

TEST_CASE("poly text form") {
    CHECK(Poly{2, -3, 1}.to_string() == "2 - 3*t + t^2");
    CHECK(Poly{0, -1}.to_string() == "-t");
    CHECK(Poly().to_string() == "0");
    CHECK(Poly::parse("t^2 - 3*t + 2") == Poly{2, -3, 1});
    CHECK(Poly::parse("-t") == Poly{0, -1});
    CHECK_THROWS_AS(Poly::parse("2*s"), tenv::ParseError);
    CHECK_THROWS_AS(Poly::parse(""), tenv::ParseError);
    CHECK(tenv::rational_to_string(tenv::parse_rational("6/4")) == "3/2");
    CHECK_THROWS_AS(tenv::parse_rational("1/0"), tenv::ParseError);
}

TEST_CASE("poly ring laws on random polynomials") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 300; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
        CHECK(Poly::parse(a.to_string()) == a);
        const mpq_class v(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
        CHECK(poly_eval(a * b, v) == poly_eval(a, v) * poly_eval(b, v));
        CHECK(poly_eval(a + b, v) == poly_eval(a, v) + poly_eval(b, v));
    }
}
