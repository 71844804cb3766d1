#include "tenv/io/json.hpp"

#include "tenv/io/text.hpp"

#include <algorithm>
#include <limits>

namespace tenv {

namespace {

Json coefficient_json(const mpz_class& c) {
    if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

Json sub_code_json(const Sub& u) {
    if (u.ambient.backend == Backend::finset) return Json(u.code);
    std::vector<std::vector<std::uint32_t>> blocks(u.size);
    for (std::uint32_t i = 0; i < u.code.size(); ++i) blocks[u.code[i]].push_back(i);
    return Json(blocks);
}

const char* sub_code_key(const Sub& u) { return u.ambient.backend == Backend::finset ? "indices" : "blocks"; }

Json term_json(const Rel& r, const Poly& c, const JsonOptions& opt) {
    Json t;
    t["rel"] = rel_json(r);
    t["poly"] = poly_json(c);
    t["text"] = c.to_string();
    if (opt.eval_at) t["value"] = rational_json(poly_eval(c, *opt.eval_at));
    return t;
}

Json terms_json(const std::map<Rel, Poly>& terms, const JsonOptions& opt) {
    Json out = Json::array();
    for (const auto& [r, c] : terms) out.push_back(term_json(r, c, opt));
    return out;
}

}  // namespace

Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(coefficient_json(c));
    return out;
}

Json rational_json(const mpq_class& q) { return rational_to_string(q); }

Json obj_json(const Obj& x) {
    Json j;
    j["backend"] = backend_name(x.backend);
    j["size"] = x.size;
    return j;
}

Json mor_json(const Mor& f) {
    Json j;
    j["backend"] = backend_name(f.dom.backend);
    j["dom"] = f.dom.size;
    j["cod"] = f.cod.size;
    j["table"] = f.table;
    return j;
}

Json sub_json(const Sub& u) {
    Json j;
    j["backend"] = backend_name(u.ambient.backend);
    j["size"] = u.ambient.size;
    j[sub_code_key(u)] = sub_code_json(u);
    return j;
}

Json rel_json(const Rel& r) {
    Json j;
    j["x"] = r.x.size;
    j["y"] = r.y.size;
    j[sub_code_key(r.sub)] = sub_code_json(r.sub);
    return j;
}

Json corel_json(const CoRel& u) {
    Json j;
    j["x"] = u.x.size;
    j["y"] = u.y.size;
    std::vector<std::uint32_t> xs, ys;
    Json bij = Json::array();
    for (const auto& [a, b] : u.pairs) {
        xs.push_back(a);
        ys.push_back(b);
        bij.push_back({a, b});
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    j["x0"] = xs;
    j["y0"] = ys;
    j["bij"] = bij;
    j["text"] = gluing_text(u);
    return j;
}

Json tmor_json(const TMor& phi, const JsonOptions& opt) {
    Json j;
    j["dom"] = obj_json(phi.dom());
    j["cod"] = obj_json(phi.cod());
    j["terms"] = terms_json(phi.terms(), opt);
    return j;
}

Json star_json(const StarMor& phi, const JsonOptions& opt) {
    Json j;
    j["x"] = obj_json(phi.x());
    j["y"] = obj_json(phi.y());
    j["flavor"] = flavor_name(phi.flavor());
    j["terms"] = terms_json(phi.terms(), opt);
    return j;
}

Json block_map_json(const BlockMap& m, const JsonOptions& opt) {
    Json j;
    j["summands_src"] = Json::array();
    for (const auto& r : m.src) j["summands_src"].push_back(rel_json(r));
    j["summands_dst"] = Json::array();
    for (const auto& r : m.dst) j["summands_dst"].push_back(rel_json(r));
    Json blocks = Json::array();
    for (const auto& [key, b] : m.blocks) {
        Json e;
        e["dst"] = key.first;
        e["src"] = key.second;
        e["conjugated"] = m.flagged.contains(key);
        e["morphism"] = star_json(b, opt);
        blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

Json lattice_json(const SubLattice& lattice, bool with_mobius) {
    Json j;
    j["object"] = obj_json(lattice.object());
    Json elements = Json::array();
    for (const auto& u : lattice.elements()) elements.push_back(sub_text(u));
    j["elements"] = std::move(elements);
    Json covers = Json::array();
    for (const auto& [a, b] : lattice.poset().covers()) covers.push_back({a, b});
    j["covers"] = std::move(covers);
    if (with_mobius) {
        const std::size_t n = lattice.size();
        Json table = Json::array();
        for (std::size_t a = 0; a < n; ++a) {
            Json row = Json::array();
            const auto& mu = lattice.poset().mobius_row(a);
            for (std::size_t b = 0; b < n; ++b) {
                if (lattice.poset().leq(a, b)) {
                    row.push_back(mu[b]);
                } else {
                    row.push_back(nullptr);
                }
            }
            table.push_back(std::move(row));
        }
        j["mobius"] = std::move(table);
    }
    return j;
}

}  // namespace tenv
