#include "request.hpp"

#include "tenv/backends/context.hpp"
#include "tenv/cli/app.hpp"
#include "tenv/errors.hpp"
#include "tenv/io/text.hpp"
#include "tenv/maltsev/gluing.hpp"
#include "tenv/projectors/projectors.hpp"
#include "tenv/starbasis/compose.hpp"
#include "tenv/starbasis/tensor.hpp"
#include "tenv/verify/suites.hpp"

#include <sstream>

namespace tenv::cli {

namespace {

enum class Basis { rel, round, curly, gluing };

Basis parse_basis(std::string_view s) {
    if (s == "rel") return Basis::rel;
    if (s == "round") return Basis::round;
    if (s == "curly") return Basis::curly;
    if (s == "gluing") return Basis::gluing;
    throw ParseError("unknown basis: " + std::string(s));
}

Flavor flavor_of(Basis b) {
    if (b == Basis::round) return Flavor::round;
    if (b == Basis::curly) return Flavor::curly;
    throw ParseError("this command takes --basis round or curly");
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag, const Request& req) {
    if (!v) throw ParseError(req.command + " requires " + flag);
    return *v;
}

void forbid(bool present, const char* flag, const Request& req) {
    if (present) throw ParseError(req.command + " does not take " + std::string(flag));
}

std::string method_of(const Request& req, std::initializer_list<const char*> allowed) {
    const std::string m = req.method.value_or("formula");
    for (const char* a : allowed) {
        if (m == a) return m;
    }
    throw ParseError("unsupported --method " + m + " for " + req.command);
}

class Run {
public:
    explicit Run(const Request& req) : req_(req), ctx_(req.backend, req.degree) {
        opt_.eval_at = req.eval_at;
        res_.doc["schema"] = kSchema;
        res_.doc["command"] = req.command;
        res_.doc["backend"] = backend_name(req.backend);
    }

    Response finish() { return std::move(res_); }

    void degree() { res_.doc["degree"] = degree_name(req_.degree); }
    void eval_at() {
        if (req_.eval_at) res_.doc["eval_at"] = rational_json(*req_.eval_at);
    }
    Obj obj(const std::optional<std::uint32_t>& v, const char* flag, const char* key) {
        const Obj o = ctx_.object(need(v, flag, req_));
        res_.doc[key] = o.size;
        return o;
    }
    Rel star_rel(const Obj& x, const Obj& y, const std::string& text) {
        const Rel r = parse_rel(ctx_.cat(), x, y, text);
        if (!in_r_set(ctx_.cat(), r)) {
            throw PreconditionError(rel_text(r) + " is not in R(" + std::to_string(x.size) + "," + std::to_string(y.size) +
                                    "): both legs must be surjective");
        }
        return r;
    }
    void line(const std::string& s) { text_ << s << '\n'; }
    void set_text() { res_.text = text_.str(); }

    const Request& req_;
    Context ctx_;
    JsonOptions opt_;
    Response res_;
    std::ostringstream text_;
};

Basis basis_or(const Request& req, Basis fallback) { return req.basis ? parse_basis(*req.basis) : fallback; }

void homdim(Run& run) {
    const Request& req = run.req_;
    const Basis b = basis_or(req, Basis::curly);
    const Obj x = run.obj(req.x, "--x", "x");
    const Obj y = run.obj(req.y, "--y", "y");
    run.res_.doc["basis"] = req.basis.value_or("curly");
    std::uint64_t dim = 0;
    switch (b) {
    case Basis::rel: dim = run.ctx_.cat().subobject_count(run.ctx_.cat().product(x, y).object); break;
    case Basis::round:
    case Basis::curly: dim = star_hom_dim(run.ctx_, x, y); break;
    case Basis::gluing: dim = corel_set(run.ctx_, x, y).size(); break;
    }
    run.res_.doc["dim"] = dim;
    run.line("dim = " + std::to_string(dim));
}

void compose(Run& run) {
    const Request& req = run.req_;
    const Basis b = basis_or(req, Basis::curly);
    run.degree();
    const Obj x = run.obj(req.x, "--x", "x");
    const Obj y = run.obj(req.y, "--y", "y");
    const Obj z = run.obj(req.z, "--z", "z");
    const std::string& ft = need(req.f, "--f", req);
    const std::string& gt = need(req.g, "--g", req);
    run.res_.doc["basis"] = req.basis.value_or("curly");
    run.eval_at();
    const Context& ctx = run.ctx_;
    if (b == Basis::rel) {
        method_of(req, {"formula"});
        const Rel r = parse_rel(ctx.cat(), x, y, ft);
        const Rel s = parse_rel(ctx.cat(), y, z, gt);
        const TMor out = tmor_compose(ctx, TMor(s), TMor(r));
        run.res_.doc["method"] = "formula";
        run.res_.doc["result"] = tmor_json(out, run.opt_);
        run.res_.doc["text"] = tmor_text(out, req.eval_at);
        run.line(tmor_text(out, req.eval_at));
        return;
    }
    StarMor out;
    std::string method;
    if (b == Basis::gluing) {
        method = method_of(req, {"formula", "oracle"});
        const CoRel u = parse_gluing(ctx.cat(), x, y, ft);
        const CoRel v = parse_gluing(ctx.cat(), y, z, gt);
        out = method == "formula" ? malcev_compose(ctx, v, u) : compose_curly(ctx, curly_prime(ctx, v), curly_prime(ctx, u));
    } else {
        const Flavor fl = flavor_of(b);
        method = fl == Flavor::curly ? method_of(req, {"formula", "oracle", "as-round"}) : method_of(req, {"formula", "oracle"});
        const StarMor rho(run.star_rel(x, y, ft), fl);
        const StarMor sigma(run.star_rel(y, z, gt), fl);
        if (method == "oracle") {
            out = compose_oracle(ctx, sigma, rho, fl);
        } else if (method == "as-round") {
            out = compose_curly_as_round(ctx, sigma, rho);
        } else {
            out = fl == Flavor::round ? compose_round(ctx, sigma, rho) : compose_curly(ctx, sigma, rho);
        }
    }
    run.res_.doc["method"] = method;
    run.res_.doc["result"] = star_json(out, run.opt_);
    run.res_.doc["text"] = star_text(out, req.eval_at);
    run.line(star_text(out, req.eval_at));
}

void tensor(Run& run) {
    const Request& req = run.req_;
    const Basis b = basis_or(req, Basis::curly);
    run.degree();
    const Obj x = run.obj(req.x, "--x", "x");
    const Obj y = run.obj(req.y, "--y", "y");
    const Obj x2 = run.obj(req.x2, "--x2", "x2");
    const Obj y2 = run.obj(req.y2, "--y2", "y2");
    const std::string& ft = need(req.f, "--f", req);
    const std::string& gt = need(req.g, "--g", req);
    run.res_.doc["basis"] = req.basis.value_or("curly");
    run.eval_at();
    const Context& ctx = run.ctx_;
    if (b == Basis::rel) {
        method_of(req, {"formula"});
        const TMor out = tmor_tensor(ctx, TMor(parse_rel(ctx.cat(), x, y, ft)), TMor(parse_rel(ctx.cat(), x2, y2, gt)));
        run.res_.doc["method"] = "formula";
        run.res_.doc["result"] = tmor_json(out, run.opt_);
        run.res_.doc["text"] = tmor_text(out, req.eval_at);
        run.line(tmor_text(out, req.eval_at));
        return;
    }
    const Flavor fl = flavor_of(b);
    const std::string method = method_of(req, {"formula", "oracle"});
    const StarMor a(run.star_rel(x, y, ft), fl);
    const StarMor c(run.star_rel(x2, y2, gt), fl);
    BlockMap out;
    if (method == "oracle") {
        out = tensor_oracle(ctx, a, c, fl);
    } else {
        out = fl == Flavor::round ? tensor_round(ctx, a, c) : tensor_curly(ctx, a, c);
    }
    run.res_.doc["method"] = method;
    run.res_.doc["result"] = block_map_json(out, run.opt_);
    for (std::size_t i = 0; i < out.src.size(); ++i) run.line("src " + std::to_string(i) + ": " + rel_text(out.src[i]));
    for (std::size_t i = 0; i < out.dst.size(); ++i) run.line("dst " + std::to_string(i) + ": " + rel_text(out.dst[i]));
    for (const auto& [key, m] : out.blocks) {
        run.line("block dst " + std::to_string(key.first) + " <- src " + std::to_string(key.second) + ": " +
                 star_text(m, req.eval_at));
    }
}

void convert(Run& run) {
    const Request& req = run.req_;
    const Flavor from = flavor_of(basis_or(req, Basis::round));
    const Flavor to = req.to ? flavor_of(parse_basis(*req.to)) : (from == Flavor::round ? Flavor::curly : Flavor::round);
    run.degree();
    const Obj x = run.obj(req.x, "--x", "x");
    const Obj y = run.obj(req.y, "--y", "y");
    const StarMor phi(run.star_rel(x, y, need(req.f, "--f", req)), from);
    run.res_.doc["basis"] = flavor_name(from);
    run.res_.doc["to"] = flavor_name(to);
    run.eval_at();
    const StarMor out = basis_convert(run.ctx_, phi, to);
    run.res_.doc["result"] = star_json(out, run.opt_);
    run.res_.doc["text"] = star_text(out, req.eval_at);
    run.line(star_text(out, req.eval_at));
}

void omega_cmd(Run& run) {
    const Request& req = run.req_;
    run.degree();
    const Obj x = run.obj(req.x, "--x", "x");
    const Obj y = run.obj(req.y, "--y", "y");
    const Mor e = parse_table(run.ctx_.cat(), x, y, need(req.f, "--f", req));
    run.res_.doc["table"] = e.table;
    run.eval_at();
    const Poly w = omega(run.ctx_, e);
    run.res_.doc["omega"] = poly_json(w);
    run.res_.doc["text"] = w.to_string();
    if (req.eval_at) run.res_.doc["value"] = rational_json(poly_eval(w, *req.eval_at));
    run.line(coefficient_text(w, req.eval_at));
}

void mobius_cmd(Run& run) {
    const Request& req = run.req_;
    const Obj x = run.obj(req.x, "--x", "x");
    const auto lat = run.ctx_.lattice(x);
    if (req.f || req.g) {
        const Sub u = parse_sub(run.ctx_.cat(), x, need(req.f, "--f", run.req_));
        const Sub w = parse_sub(run.ctx_.cat(), x, need(req.g, "--g", run.req_));
        const std::int64_t mu = lat->mobius(u, w);
        run.res_.doc["f"] = sub_text(u);
        run.res_.doc["g"] = sub_text(w);
        run.res_.doc["mobius"] = mu;
        run.line("mu = " + std::to_string(mu));
        return;
    }
    run.res_.doc["lattice"] = lattice_json(*lat, req.with_mobius);
    for (std::size_t i = 0; i < lat->size(); ++i) run.line(std::to_string(i) + ": " + sub_text(lat->elements()[i]));
    for (const auto& [a, b] : lat->poset().covers()) run.line(std::to_string(a) + " < " + std::to_string(b));
}

std::vector<std::uint32_t> parse_factors(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(tok, &used);
            if (used != tok.size() || v > 64) throw ParseError("");
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw ParseError("--factors expects comma separated sizes, got '" + s + "'");
        }
    }
    if (out.empty()) throw ParseError("--factors is empty");
    return out;
}

void decompose(Run& run) {
    const Request& req = run.req_;
    const Context& ctx = run.ctx_;
    run.degree();
    run.eval_at();
    if (req.factors) {
        forbid(req.x.has_value() || req.y.has_value(), "--x/--y together with --factors", req);
        std::vector<Obj> xs;
        for (auto n : parse_factors(*req.factors)) xs.push_back(ctx.object(n));
        run.res_.doc["factors"] = parse_factors(*req.factors);
        const MultiDecomposition m = multi_tensor_decompose(ctx, xs);
        run.res_.doc["product"] = obj_json(m.product);
        run.res_.doc["count"] = m.summands.size();
        Json s = Json::array();
        for (const Sub& u : m.summands) s.push_back(sub_json(u));
        run.res_.doc["summands"] = std::move(s);
        run.line("summands = " + std::to_string(m.summands.size()));
        for (const Sub& u : m.summands) run.line("  " + sub_text(u));
        return;
    }
    const Obj x = run.obj(req.x, "--x", "x");
    Json parts = Json::array();
    if (req.y) {
        const Obj y = run.obj(req.y, "--y", "y");
        const auto summands = tensor_decompose(ctx, x, y);
        for (const auto& s : summands) {
            parts.push_back({{"rel", rel_json(s.r)}, {"projector", tmor_json(s.projector, run.opt_)}});
            run.line(rel_text(s.r) + ": " + tmor_text(s.projector, req.eval_at));
        }
    } else {
        const ProjectorFamily fam = subobject_decomposition(ctx, x);
        const auto& el = fam.lattice->elements();
        for (std::size_t i = 0; i < el.size(); ++i) {
            parts.push_back({{"sub", sub_json(el[i])}, {"projector", tmor_json(fam.p_star[i], run.opt_)}});
            run.line(sub_text(el[i]) + ": " + tmor_text(fam.p_star[i], req.eval_at));
        }
    }
    run.res_.doc["count"] = parts.size();
    run.res_.doc["summands"] = std::move(parts);
}

void table(Run& run) {
    const Request& req = run.req_;
    const Context& ctx = run.ctx_;
    const Basis b = basis_or(req, Basis::curly);
    run.degree();
    const Obj x = run.obj(req.x, "--x", "x");
    run.res_.doc["basis"] = req.basis.value_or("curly");
    run.eval_at();
    std::vector<Rel> basis;
    if (b == Basis::rel) {
        const Product p = ctx.cat().product(x, x);
        for (const Sub& s : ctx.cat().subobjects(p.object, ctx.limits())) basis.push_back(make_rel(ctx.cat(), x, x, s));
    } else {
        basis = r_set(ctx, x, x);
    }
    std::map<Rel, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    Json elements = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        elements.push_back(rel_json(basis[i]));
        run.line("e" + std::to_string(i) + " = " + rel_text(basis[i]));
    }
    run.res_.doc["elements"] = std::move(elements);
    auto entry_json = [&](const std::map<Rel, Poly>& terms) {
        Json e = Json::array();
        for (const auto& [r, c] : terms) {
            Json t{{"element", index.at(r)}, {"poly", poly_json(c)}, {"text", c.to_string()}};
            if (req.eval_at) t["value"] = rational_json(poly_eval(c, *req.eval_at));
            e.push_back(std::move(t));
        }
        return e;
    };
    auto entry_text = [&](const std::map<Rel, Poly>& terms) {
        if (terms.empty()) return std::string("0");
        std::string s;
        for (const auto& [r, c] : terms) {
            if (!s.empty()) s += " + ";
            const std::string coeff = coefficient_text(c, req.eval_at);
            if (coeff != "1") s += "(" + coeff + ")*";
            s += "e" + std::to_string(index.at(r));
        }
        return s;
    };
    Json rows = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::map<Rel, Poly> terms;
            if (b == Basis::rel) {
                terms = tmor_compose(ctx, TMor(basis[i]), TMor(basis[j])).terms();
            } else {
                const Flavor fl = flavor_of(b);
                const StarMor ei(basis[i], fl), ej(basis[j], fl);
                terms = (fl == Flavor::round ? compose_round(ctx, ei, ej) : compose_curly(ctx, ei, ej)).terms();
            }
            row.push_back(entry_json(terms));
            run.line("e" + std::to_string(i) + " * e" + std::to_string(j) + " = " + entry_text(terms));
        }
        rows.push_back(std::move(row));
    }
    run.res_.doc["entries"] = std::move(rows);
}

void verify_cmd(Run& run) {
    const Request& req = run.req_;
    std::vector<std::string> names = req.suites;
    if (req.all) {
        if (!names.empty()) throw ParseError("verify takes either --all or --suite");
        names = suite_names();
    }
    if (names.empty()) throw ParseError("verify requires --all or --suite NAME");
    SuiteOptions opt;
    opt.max_size = req.max_size;
    opt.threads = req.threads;
    const auto reports = run_suites(names, opt);
    bool ok = true;
    Json suites = Json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        suites.push_back({{"name", r.name},
                          {"checks", r.checks},
                          {"failures", r.failures},
                          {"passed", r.passed()},
                          {"messages", r.messages}});
        run.line(r.name + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures, " +
                 (r.passed() ? "PASS" : "FAIL"));
        for (const auto& m : r.messages) run.line("  " + m);
    }
    run.res_.doc.erase("backend");
    run.res_.doc["max_size"] = req.max_size;
    run.res_.doc["suites"] = std::move(suites);
    run.res_.doc["passed"] = ok;
    run.res_.exit_code = ok ? 0 : kExitSuiteFailure;
}

}  // namespace

Response dispatch(const Request& req) {
    Run run(req);
    if (req.command == "homdim") {
        homdim(run);
    } else if (req.command == "compose") {
        compose(run);
    } else if (req.command == "tensor") {
        tensor(run);
    } else if (req.command == "convert") {
        convert(run);
    } else if (req.command == "omega") {
        omega_cmd(run);
    } else if (req.command == "mobius") {
        mobius_cmd(run);
    } else if (req.command == "decompose") {
        decompose(run);
    } else if (req.command == "table") {
        table(run);
    } else if (req.command == "verify") {
        verify_cmd(run);
    } else {
        throw ParseError("unknown command " + req.command);
    }
    run.set_text();
    return run.finish();
}

}  // namespace tenv::cli
