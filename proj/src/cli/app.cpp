#include "tenv/cli/app.hpp"

#include "request.hpp"

#include "tenv/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace tenv::cli {

namespace {

constexpr const char* kCommands[][2] = {
    {"homdim", "dimension of a hom space in a chosen basis"},
    {"compose", "product g o f of basis elements f: x -> y and g: y -> z"},
    {"tensor", "tensor product of f in R(x,y) and g in R(x2,y2) as a block map"},
    {"convert", "rewrite a basis element of Hom([x]*,[y]*) in the other basis"},
    {"omega", "omega of a surjection x ->> y given by its table"},
    {"mobius", "Möbius value mu(f,g) on O(x), or the lattice O(x) itself"},
    {"decompose", "projector decomposition of [x], [x]*(x)[y]* or a multiple product"},
    {"table", "multiplication table of End([x]*) (or End([x]) in the relation basis)"},
    {"verify", "run invariant suites"},
};

void emit(const Request& req, const Response& res, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (req.out) {
        file.open(*req.out, std::ios::binary | std::ios::trunc);
        if (!file) throw PreconditionError("cannot open output file " + *req.out);
        sink = &file;
    }
    if (req.format == "text") {
        *sink << res.text;
        if (!res.text.empty() && res.text.back() != '\n') *sink << '\n';
    } else {
        *sink << res.doc.dump(2) << '\n';
    }
}

int report_error(const Request& req, const Error& e, std::ostream& out, std::ostream& err) {
    const int code = static_cast<int>(e.code());
    if (req.format == "json") {
        Json doc;
        doc["schema"] = kSchema;
        doc["command"] = req.command;
        doc["error"] = {{"kind", e.kind()}, {"code", code}, {"message", e.what()}};
        out << doc.dump(2) << '\n';
    }
    err << "error (" << e.kind() << "): " << e.what() << '\n';
    return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in the tensor envelopes T(A, delta) of finite sets and their opposite"};
    app.name("tenv");
    app.require_subcommand(1, 1);

    std::string backend = "opset", degree, basis, format = "json", eval_at;
    std::string f, g, to, method, factors, out_path;
    std::uint32_t x = 0, y = 0, z = 0, x2 = 0, y2 = 0, max_size = 3;
    unsigned threads = 1;
    bool all = false, with_mobius = false;
    std::vector<std::string> suites;

    app.add_option("--backend", backend, "finset or opset")->check(CLI::IsMember({"finset", "opset"}));
    auto* o_degree = app.add_option("--degree", degree, "one, zero-noniso or t-power (default t-power on opset, one on finset)");
    auto* o_basis = app.add_option("--basis", basis, "rel, round, curly or gluing");
    auto* o_x = app.add_option("--x", x, "carrier size of x");
    auto* o_y = app.add_option("--y", y, "carrier size of y");
    auto* o_z = app.add_option("--z", z, "carrier size of z");
    auto* o_x2 = app.add_option("--x2", x2, "carrier size of x2");
    auto* o_y2 = app.add_option("--y2", y2, "carrier size of y2");
    auto* o_f = app.add_option("--f", f, "first argument in canonical text form");
    auto* o_g = app.add_option("--g", g, "second argument in canonical text form");
    auto* o_to = app.add_option("--to", to, "target basis for convert");
    auto* o_method = app.add_option("--method", method, "formula (default), oracle or as-round");
    auto* o_factors = app.add_option("--factors", factors, "comma separated carrier sizes for decompose");
    auto* o_eval = app.add_option("--eval-at", eval_at, "also evaluate every polynomial at this rational");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* o_out = app.add_option("--out", out_path, "write the output document to FILE");
    app.add_option("--max-size", max_size, "carrier bound for verify")->check(CLI::Range(1u, 6u));
    app.add_option("--threads", threads, "worker threads for verify")->check(CLI::Range(1u, 64u));
    app.add_flag("--all", all, "verify: run every suite");
    app.add_option("--suite", suites, "verify: suite to run (repeatable)");
    app.add_flag("--with-mobius", with_mobius, "mobius: include the full Möbius table in the lattice dump");

    for (const auto& [name, desc] : kCommands) app.add_subcommand(name, desc)->fallthrough();

    Request req;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        req.format = format == "text" ? "text" : "json";
        if (!app.get_subcommands().empty()) req.command = app.get_subcommands().front()->get_name();
        return report_error(req, ParseError(e.what()), out, err);
    }

    req.command = app.get_subcommands().front()->get_name();
    req.format = format;
    try {
        req.backend = parse_backend(backend);
        req.degree = o_degree->count() ? parse_degree(degree) : (req.backend == Backend::opset ? Degree::t_power : Degree::one);
        if (o_basis->count()) req.basis = basis;
        if (o_x->count()) req.x = x;
        if (o_y->count()) req.y = y;
        if (o_z->count()) req.z = z;
        if (o_x2->count()) req.x2 = x2;
        if (o_y2->count()) req.y2 = y2;
        if (o_f->count()) req.f = f;
        if (o_g->count()) req.g = g;
        if (o_to->count()) req.to = to;
        if (o_method->count()) req.method = method;
        if (o_factors->count()) req.factors = factors;
        if (o_eval->count()) req.eval_at = parse_rational(eval_at);
        if (o_out->count()) req.out = out_path;
        req.max_size = max_size;
        req.threads = threads;
        req.all = all;
        req.with_mobius = with_mobius;
        req.suites = suites;

        const Response res = dispatch(req);
        emit(req, res, out);
        return res.exit_code;
    } catch (const Error& e) {
        return report_error(req, e, out, err);
    } catch (const std::exception& e) {
        return report_error(req, InternalError(e.what()), out, err);
    }
}

}  // namespace tenv::cli
