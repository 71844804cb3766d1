#include "recorder.hpp"

#include "tenv/io/text.hpp"
#include "tenv/projectors/projectors.hpp"
#include "tenv/starbasis/compose.hpp"
#include "tenv/starbasis/tensor.hpp"

namespace tenv::verify {

namespace {

std::string sizes(std::initializer_list<std::uint32_t> ns) {
    std::string s = "(";
    for (auto n : ns) s += (s.size() > 1 ? "," : "") + std::to_string(n);
    return s + ")";
}

// All size tuples with entries in [lo, hi] and sum <= total.
std::vector<std::vector<std::uint32_t>> tuples(std::size_t k, std::uint32_t lo, std::uint32_t hi, std::uint32_t total) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t left) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t n = lo; n <= hi && n <= left; ++n) {
            cur.push_back(n);
            self(self, left - n);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

struct Sweep {
    Backend backend;
    std::uint32_t lo, hi, total;
};

std::vector<Sweep> oracle_sweeps(const SuiteOptions& opt, std::size_t arity) {
    const std::uint32_t fin = opt.max_size > 1 ? opt.max_size - 1 : 1;
    return {{Backend::opset, 0, 2 * opt.max_size, 2 * opt.max_size},
            {Backend::finset, 1, fin, static_cast<std::uint32_t>(arity) * fin}};
}

void compose_vs_oracle(Recorder& rec, const Context& ctx, const Obj& x, const Obj& y, const Obj& z) {
    for (const Rel& r : r_set(ctx, x, y)) {
        for (const Rel& s : r_set(ctx, y, z)) {
            auto where = [&](const char* what) {
                return label(ctx) + " " + what + " " + sizes({x.size, y.size, z.size}) + " r=" + rel_text(r) +
                       " s=" + rel_text(s);
            };
            const StarMor rr(r, Flavor::round), sr(s, Flavor::round);
            const StarMor rc(r, Flavor::curly), sc(s, Flavor::curly);
            const StarMor round_ref = compose_oracle(ctx, sr, rr, Flavor::round);
            rec.check(compose_round(ctx, sr, rr) == round_ref, [&] { return where("round product"); });
            rec.check(compose_curly(ctx, sc, rc) == compose_oracle(ctx, sc, rc, Flavor::curly),
                      [&] { return where("curly product"); });
            rec.check(compose_curly_as_round(ctx, sc, rc) == compose_oracle(ctx, sc, rc, Flavor::round),
                      [&] { return where("curly product in the round basis"); });
        }
    }
}

void tensor_vs_oracle(Recorder& rec, const Context& ctx, const std::vector<std::uint32_t>& n) {
    const Obj x = ctx.object(n[0]), x2 = ctx.object(n[1]), y = ctx.object(n[2]), y2 = ctx.object(n[3]);
    for (const Rel& r : r_set(ctx, x, y)) {
        for (const Rel& r2 : r_set(ctx, x2, y2)) {
            auto where = [&](const char* what) {
                return label(ctx) + " " + what + " " + sizes({n[0], n[1], n[2], n[3]}) + " r=" + rel_text(r) +
                       " r2=" + rel_text(r2);
            };
            for (Flavor f : {Flavor::round, Flavor::curly}) {
                const StarMor a(r, f), b(r2, f);
                const BlockMap got = f == Flavor::round ? tensor_round(ctx, a, b) : tensor_curly(ctx, a, b);
                rec.check(same_block_map(ctx, got, tensor_oracle(ctx, a, b, f)),
                          [&] { return where(f == Flavor::round ? "round tensor" : "curly tensor"); });
            }
        }
    }
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Partial bijections between an m-set and an n-set.
std::uint64_t partial_bijections(std::uint64_t m, std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k <= std::min(m, n); ++k) {
        std::uint64_t f = 1;
        for (std::uint64_t i = 2; i <= k; ++i) f *= i;
        total += binom(m, k) * binom(n, k) * f;
    }
    return total;
}

// B(n+1) = sum_k C(n,k) B(k).
std::uint64_t bell(std::uint32_t n) {
    std::vector<std::uint64_t> b{1};
    for (std::uint32_t m = 0; m < n; ++m) {
        std::uint64_t next = 0;
        for (std::uint32_t k = 0; k <= m; ++k) next += binom(m, k) * b[k];
        b.push_back(next);
    }
    return b[n];
}

// 0/1 matrices of shape m x n without a zero row or column, by inclusion-exclusion.
std::int64_t covering_relations(std::int64_t m, std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= m; ++i) {
        for (std::int64_t j = 0; j <= n; ++j) {
            const std::int64_t sign = (i + j) % 2 ? -1 : 1;
            total += sign * static_cast<std::int64_t>(binom(m, i) * binom(n, j)) * (std::int64_t{1} << ((m - i) * (n - j)));
        }
    }
    return total;
}

}  // namespace

void oracle(Recorder& rec, const SuiteOptions& opt) {
    for (const Sweep& sw : oracle_sweeps(opt, 3)) {
        for (Degree d : applicable_degrees(sw.backend)) {
            const Context ctx(sw.backend, d);
            for (const auto& n : tuples(3, sw.lo, sw.hi, sw.total)) {
                rec.guard(label(ctx) + " products " + sizes({n[0], n[1], n[2]}), [&] {
                    compose_vs_oracle(rec, ctx, ctx.object(n[0]), ctx.object(n[1]), ctx.object(n[2]));
                });
            }
        }
    }
    for (const Sweep& sw : oracle_sweeps(opt, 4)) {
        for (Degree d : applicable_degrees(sw.backend)) {
            const Context ctx(sw.backend, d);
            for (const auto& n : tuples(4, sw.lo, sw.hi, sw.total)) {
                rec.guard(label(ctx) + " tensors " + sizes({n[0], n[1], n[2], n[3]}), [&] { tensor_vs_oracle(rec, ctx, n); });
            }
        }
    }
}

void dimensions(Recorder& rec, const SuiteOptions& opt) {
    const Context op(Backend::opset, Degree::t_power);
    const Context fin(Backend::finset, Degree::one);
    const std::uint32_t n = opt.max_size;
    for (std::uint32_t a = 0; a <= n; ++a) {
        for (std::uint32_t b = 0; b <= n; ++b) {
            const Obj x = op.object(a), y = op.object(b);
            const std::size_t dim = star_hom_dim(op, x, y);
            rec.check(dim == partial_bijections(a, b), [&] {
                return "opset dim Hom([" + std::to_string(a) + "]*,[" + std::to_string(b) + "]*) = " + std::to_string(dim);
            });
            if (a >= 1 && b >= 1) {
                const std::size_t fdim = star_hom_dim(fin, fin.object(a), fin.object(b));
                rec.check(static_cast<std::int64_t>(fdim) == covering_relations(a, b), [&] {
                    return "finset dim Hom([" + std::to_string(a) + "]*,[" + std::to_string(b) + "]*) = " + std::to_string(fdim);
                });
            }
        }
    }
    for (std::uint32_t m = 0; m <= 2 * n; ++m) {
        // Hom_T0([m],[k]) has basis O(m*k); its size only depends on m+k.
        const Obj p = op.cat().product(op.object(m / 2), op.object(m - m / 2)).object;
        std::size_t count = 0;
        op.cat().for_each_subobject(p, [&](const Sub&) { ++count; });
        rec.check(count == bell(m) && op.cat().subobject_count(p) == bell(m),
                  [&] { return "Bell count for carrier " + std::to_string(m); });
    }
    for (std::uint32_t a = 1; a <= n; ++a) {
        rec.check(star_hom_dim(op, op.cat().terminal(), op.object(a)) == 1,
                  [&] { return "dim Hom(1,[" + std::to_string(a) + "]*) != 1"; });
        rec.check(star_hom_dim(op, op.object(a), op.cat().terminal()) == 1,
                  [&] { return "dim Hom([" + std::to_string(a) + "]*,1) != 1"; });
    }
    rec.check(star_hom_dim(fin, fin.cat().terminal(), fin.object(1)) == 1, [] { return std::string("finset dim Hom(1,[1]*)"); });
}

void structure_constants(Recorder& rec, const SuiteOptions&) {
    const Context ctx(Backend::opset, Degree::t_power);
    const Category& cat = ctx.cat();
    const Obj one = ctx.object(1);
    const Rel disc = parse_rel(cat, one, one, "[[0],[1]]");
    const Rel joined = parse_rel(cat, one, one, "[[0,1]]");
    const Poly t = Poly::t();

    StarMor rr(one, one, Flavor::round);
    rr.add(disc, t - Poly(2));
    rr.add(joined, t - Poly(1));
    rec.check(compose_round(ctx, StarMor(disc, Flavor::round), StarMor(disc, Flavor::round)) == rr,
              [] { return std::string("(disc)(disc) != (t-2)(disc) + (t-1)(joined)"); });
    rec.check(compose_oracle(ctx, StarMor(disc, Flavor::round), StarMor(disc, Flavor::round), Flavor::round) == rr,
              [] { return std::string("(disc)(disc) oracle"); });

    const StarMor cc(disc, Flavor::curly, t);
    rec.check(compose_curly(ctx, StarMor(disc, Flavor::curly), StarMor(disc, Flavor::curly)) == cc,
              [] { return std::string("{disc}{disc} != t{disc}"); });
    rec.check(compose_oracle(ctx, StarMor(disc, Flavor::curly), StarMor(disc, Flavor::curly), Flavor::curly) == cc,
              [] { return std::string("{disc}{disc} oracle"); });

    // End([1]*) in the curly basis: {joined} is the unit.
    const StarMor jc(joined, Flavor::curly), dc(disc, Flavor::curly);
    rec.check(compose_curly(ctx, jc, jc) == jc, [] { return std::string("{joined}{joined}"); });
    rec.check(compose_curly(ctx, jc, dc) == dc, [] { return std::string("{joined}{disc}"); });
    rec.check(compose_curly(ctx, dc, jc) == dc, [] { return std::string("{disc}{joined}"); });

    // omega of the carrier injections 2 -> 3 and 1 -> 2 (surjections 3 ->> 2 and 2 ->> 1 of opset).
    const Mor e32{ctx.object(3), ctx.object(2), {0, 1}};
    const Mor e21{ctx.object(2), ctx.object(1), {0}};
    rec.check(cat.is_surjective(e32) && omega(ctx, e32) == t - Poly(2), [] { return std::string("omega(2 -> 3) != t-2"); });
    rec.check(cat.is_surjective(e21) && omega(ctx, e21) == t - Poly(1), [] { return std::string("omega(1 -> 2) != t-1"); });

    // finset [1]*: a single basis element acting as the identity.
    const Context fin(Backend::finset, Degree::one);
    const Obj f1 = fin.object(1);
    const auto& rs = r_set(fin, f1, f1);
    rec.check(rs.size() == 1 && compose_curly(fin, StarMor(rs[0], Flavor::curly), StarMor(rs[0], Flavor::curly)) ==
                                    StarMor(rs[0], Flavor::curly),
              [] { return std::string("finset End([1]*) is not the 1x1 identity table"); });
}

void associativity(Recorder& rec, const SuiteOptions& opt) {
    for (Degree d : applicable_degrees(Backend::opset)) {
        const Context ctx(Backend::opset, d);
        const std::uint32_t hi = opt.max_size > 1 ? opt.max_size - 1 : 1;
        for (const auto& n : tuples(4, 0, hi, 4 * hi)) {
            const Obj a = ctx.object(n[0]), b = ctx.object(n[1]), c = ctx.object(n[2]), e = ctx.object(n[3]);
            rec.guard(label(ctx) + " associativity " + sizes({n[0], n[1], n[2], n[3]}), [&] {
                for (const Rel& r1 : r_set(ctx, a, b)) {
                    const StarMor s1(r1, Flavor::round);
                    for (const Rel& r2 : r_set(ctx, b, c)) {
                        const StarMor s2(r2, Flavor::round);
                        const StarMor s21 = compose_round(ctx, s2, s1);
                        for (const Rel& r3 : r_set(ctx, c, e)) {
                            const StarMor s3(r3, Flavor::round);
                            rec.check(compose_round(ctx, s3, s21) == compose_round(ctx, compose_round(ctx, s3, s2), s1), [&] {
                                return label(ctx) + " (r3 r2) r1 != r3 (r2 r1) for " + rel_text(r1) + ", " + rel_text(r2) +
                                       ", " + rel_text(r3);
                            });
                        }
                    }
                }
            });
        }
    }
}

}  // namespace tenv::verify
