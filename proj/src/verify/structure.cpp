#include "recorder.hpp"

#include "tenv/io/text.hpp"
#include "tenv/maltsev/gluing.hpp"
#include "tenv/projectors/projectors.hpp"
#include "tenv/starbasis/compose.hpp"
#include "tenv/starbasis/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace tenv::verify {

namespace {

std::string pair_label(std::uint32_t a, std::uint32_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool is_permutation_of_range(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != i) return false;
    }
    return true;
}

void round_trips(Recorder& rec, const Context& ctx, std::uint32_t hi) {
    for (std::uint32_t a = 0; a <= hi; ++a) {
        for (std::uint32_t b = 0; b <= hi; ++b) {
            const Obj x = ctx.object(a), y = ctx.object(b);
            const auto& rs = r_set(ctx, x, y);
            const auto us = corel_set(ctx, x, y);
            rec.check(rs.size() == us.size(), [&] { return label(ctx) + " |R| != |R_q| for " + pair_label(a, b); });
            for (const Rel& r : rs) {
                rec.check(push_pull(ctx, pull_push(ctx, r)) == r,
                          [&] { return label(ctx) + " push_pull(pull_push r) != r for r=" + rel_text(r); });
            }
            for (const CoRel& u : us) {
                rec.check(pull_push(ctx, push_pull(ctx, u)) == u,
                          [&] { return label(ctx) + " pull_push(push_pull u) != u for u=" + gluing_text(u); });
                rec.check(curly_prime_word(ctx, u) == curly_prime(ctx, u),
                          [&] { return label(ctx) + " {u}' word evaluation for u=" + gluing_text(u); });
            }
        }
    }
}

void gluing_products(Recorder& rec, const Context& ctx, std::uint32_t total) {
    for (std::uint32_t a = 0; a <= total; ++a) {
        for (std::uint32_t b = 0; a + b <= total; ++b) {
            for (std::uint32_t c = 0; a + b + c <= total; ++c) {
                const Obj x = ctx.object(a), y = ctx.object(b), z = ctx.object(c);
                const auto us = corel_set(ctx, x, y);
                const auto vs = corel_set(ctx, y, z);
                for (const CoRel& u : us) {
                    const StarMor pu = curly_prime(ctx, u);
                    for (const CoRel& v : vs) {
                        rec.check(malcev_compose(ctx, v, u) == compose_curly(ctx, curly_prime(ctx, v), pu), [&] {
                            return label(ctx) + " gluing product " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + " u=" + gluing_text(u) + " v=" + gluing_text(v);
                        });
                    }
                }
            }
        }
    }
}

void binary_decompositions(Recorder& rec, const Context& ctx, std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t a = lo; a <= hi; ++a) {
        for (std::uint32_t b = lo; b <= hi; ++b) {
            const Obj x = ctx.object(a), y = ctx.object(b);
            const auto parts = tensor_decompose(ctx, x, y, false);
            const Obj xy = ctx.cat().product(x, y).object;
            TMor sum(xy, xy);
            for (const auto& s : parts) sum += s.projector;
            rec.check(sum == tmor_tensor(ctx, p_star_top(ctx, x), p_star_top(ctx, y)),
                      [&] { return label(ctx) + " p*_x (x) p*_y != sum p*_r for " + pair_label(a, b); });
            rec.check(parts.size() == r_set(ctx, x, y).size(),
                      [&] { return label(ctx) + " summand count for " + pair_label(a, b); });
            for (std::size_t i = 0; i < parts.size(); ++i) {
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    const TMor prod = tmor_compose(ctx, parts[i].projector, parts[j].projector);
                    rec.check(prod == (i == j ? parts[i].projector : TMor(xy, xy)), [&] {
                        return label(ctx) + " summand projectors not orthogonal for " + pair_label(a, b);
                    });
                }
            }
        }
    }
}

void triple_decompositions(Recorder& rec, const Context& ctx, std::uint32_t lo, std::uint32_t hi, std::uint32_t total) {
    for (std::uint32_t a = lo; a <= hi; ++a) {
        for (std::uint32_t b = lo; b <= hi; ++b) {
            for (std::uint32_t c = lo; c <= hi && a + b + c <= total; ++c) {
                const Obj x = ctx.object(a), y = ctx.object(b), z = ctx.object(c);
                const std::string where = label(ctx) + " triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")";
                const MultiDecomposition m = multi_tensor_decompose(ctx, {x, y, z});
                std::size_t iterated = 0;
                for (const Rel& r : r_set(ctx, x, y)) iterated += r_set(ctx, r.sub.source(), z).size();
                rec.check(m.summands.size() == iterated, [&] { return where + ": iterated summand count"; });
                rec.check(is_permutation_of_range(assoc_constraint(ctx, x, y, z)),
                          [&] { return where + ": associativity transport is not a bijection"; });
                rec.check(hexagon_holds(ctx, x, y, z), [&] { return where + ": hexagon"; });
            }
        }
    }
}

}  // namespace

void maltsev(Recorder& rec, const SuiteOptions& opt) {
    const std::uint32_t hi = opt.max_size > 1 ? opt.max_size - 1 : 1;
    for (Degree d : applicable_degrees(Backend::opset)) {
        const Context ctx(Backend::opset, d);
        rec.guard(label(ctx) + " round trips", [&] { round_trips(rec, ctx, hi); });
        rec.guard(label(ctx) + " gluing products", [&] { gluing_products(rec, ctx, 2 * opt.max_size); });
    }
    const Context ctx(Backend::opset, Degree::t_power);
    for (std::uint32_t n = 1; n <= opt.max_size; ++n) {
        rec.guard("witnesses", [&] {
            const Obj x = ctx.object(n);
            const WitnessReport m = maltsev_witness(ctx, x);
            const WitnessReport e = exactness_witness(ctx, x);
            rec.check(m.checked > 0 && m.failures == 0, [&] { return "Mal'tsev witness on " + std::to_string(n); });
            rec.check(e.checked > 0 && e.failures == 0, [&] { return "exactness witness on " + std::to_string(n); });
        });
    }
    const Context fin(Backend::finset, Degree::one);
    const Obj f1 = fin.object(1);
    rec.expect_error(ErrorCode::capability, "finset corel_set", [&] { corel_set(fin, f1, f1); });
    rec.expect_error(ErrorCode::capability, "finset make_corel", [&] { make_corel(fin.cat(), f1, f1, {{0, 0}}); });
    rec.expect_error(ErrorCode::capability, "finset witness", [&] { maltsev_witness(fin, f1); });
}

void tensor_decomposition(Recorder& rec, const SuiteOptions& opt) {
    const std::uint32_t hi = opt.max_size > 1 ? opt.max_size - 1 : 1;
    for (Backend b : {Backend::opset, Backend::finset}) {
        for (Degree d : applicable_degrees(b)) {
            const Context ctx(b, d);
            const std::uint32_t lo = b == Backend::finset ? 1 : 0;
            rec.guard(label(ctx) + " binary", [&] { binary_decompositions(rec, ctx, lo, hi); });
            rec.guard(label(ctx) + " triple", [&] {
                triple_decompositions(rec, ctx, lo, hi, b == Backend::finset ? 2 * hi : 3 * hi);
            });
            rec.guard(label(ctx) + " coherence", [&] {
                const Obj one = ctx.object(1);
                const std::size_t want = b == Backend::opset ? 2 : 1;
                rec.check(tensor_decompose(ctx, one, one).size() == want, [&] { return label(ctx) + " [1]*(x)[1]* count"; });
                rec.check(pentagon_holds(ctx, one, one, one, one), [&] { return label(ctx) + " pentagon on [1]*"; });
                for (std::uint32_t a = lo; a <= hi; ++a) {
                    for (std::uint32_t c = lo; c <= hi; ++c) {
                        const Obj x = ctx.object(a), y = ctx.object(c);
                        rec.check(triangle_holds(ctx, x, y), [&] { return label(ctx) + " triangle " + pair_label(a, c); });
                        const auto there = comm_constraint(ctx, x, y);
                        const auto back = comm_constraint(ctx, y, x);
                        bool ok = is_permutation_of_range(there);
                        for (std::size_t i = 0; ok && i < there.size(); ++i) ok = back[there[i]] == i;
                        rec.check(ok, [&] { return label(ctx) + " symmetry is not involutive " + pair_label(a, c); });
                    }
                }
            });
        }
    }
    const Context ctx(Backend::opset, Degree::t_power);
    const Obj one = ctx.object(1);
    rec.check(multi_tensor_decompose(ctx, {one, one, one}).summands.size() == 5,
              [] { return std::string("opset [1]*(x)[1]*(x)[1]* should have 5 summands"); });
}

}  // namespace tenv::verify
