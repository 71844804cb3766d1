#include "tenv/io/text.hpp"

#include "tenv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <regex>

namespace tenv {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
}

std::uint32_t to_index(const json& v, std::string_view what) {
    if (!v.is_number_unsigned()) {
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint32_t>(v.get<std::int64_t>());
        throw ParseError(std::string(what) + ": expected a non-negative integer, got " + v.dump());
    }
    const auto n = v.get<std::uint64_t>();
    if (n > std::numeric_limits<std::uint32_t>::max()) throw ParseError(std::string(what) + ": index too large");
    return static_cast<std::uint32_t>(n);
}

std::vector<std::uint32_t> to_list(const json& v, std::string_view what) {
    if (!v.is_array()) throw ParseError(std::string(what) + ": expected a list, got " + v.dump());
    std::vector<std::uint32_t> out;
    for (const auto& e : v) out.push_back(to_index(e, what));
    return out;
}

std::vector<std::vector<std::uint32_t>> to_blocks(const json& v, std::string_view what) {
    if (!v.is_array()) throw ParseError(std::string(what) + ": expected a list of lists");
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& b : v) out.push_back(to_list(b, what));
    return out;
}

Sub partition_sub(const Category& cat, const Obj& ambient, const std::vector<std::vector<std::uint32_t>>& blocks) {
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(ambient.size, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw ParseError("partition: empty block");
        for (std::uint32_t i : blocks[b]) {
            if (i >= ambient.size) {
                throw ParseError("partition: element " + std::to_string(i) + " outside a carrier of size " +
                                 std::to_string(ambient.size));
            }
            if (label[i] != unset) throw ParseError("partition: element " + std::to_string(i) + " appears twice");
            label[i] = static_cast<std::uint32_t>(b);
        }
    }
    if (std::find(label.begin(), label.end(), unset) != label.end()) {
        throw ParseError("partition: blocks do not cover the carrier");
    }
    // Relabel blocks by first appearance.
    std::vector<std::uint32_t> relabel(blocks.size(), unset);
    std::uint32_t next = 0;
    for (auto& l : label) {
        if (relabel[l] == unset) relabel[l] = next++;
        l = relabel[l];
    }
    Sub u{ambient, std::move(label), next};
    cat.validate(u);
    return u;
}

Sub subset_sub(const Category& cat, const Obj& ambient, std::vector<std::uint32_t> idx) {
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw ParseError("subset: repeated element");
    for (std::uint32_t i : idx) {
        if (i >= ambient.size) {
            throw ParseError("subset: element " + std::to_string(i) + " outside a carrier of size " +
                             std::to_string(ambient.size));
        }
    }
    const auto n = static_cast<std::uint32_t>(idx.size());
    Sub u{ambient, std::move(idx), n};
    cat.validate(u);
    return u;
}

std::string list_text(const std::vector<std::uint32_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

Sub parse_sub(const Category& cat, const Obj& ambient, std::string_view text) {
    const json v = parse_json(text, "subobject");
    if (cat.backend() == Backend::opset) return partition_sub(cat, ambient, to_blocks(v, "partition"));
    return subset_sub(cat, ambient, to_list(v, "subset"));
}

Rel parse_rel(const Category& cat, const Obj& x, const Obj& y, std::string_view text) {
    const Product p = cat.product(x, y);
    return make_rel(cat, x, y, parse_sub(cat, p.object, text));
}

Mor parse_table(const Category& cat, const Obj& dom, const Obj& cod, std::string_view text) {
    Mor f{dom, cod, to_list(parse_json(text, "table"), "table")};
    cat.validate(f);
    return f;
}

CoRel parse_gluing(const Category& cat, const Obj& x, const Obj& y, std::string_view text) {
    // The documented form leaves keys unquoted.
    static const std::regex key(R"(([A-Za-z_][A-Za-z0-9_]*)\s*:)");
    const std::string quoted = std::regex_replace(std::string(text), key, "\"$1\":");
    const json v = parse_json(quoted, "gluing");
    if (!v.is_object() || !v.contains("bij")) throw ParseError("gluing: expected {x0:[...],y0:[...],bij:[[i,j],...]}");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& p : to_blocks(v["bij"], "gluing bij")) {
        if (p.size() != 2) throw ParseError("gluing: each bij entry must be a pair [i,j]");
        pairs.emplace_back(p[0], p[1]);
    }
    CoRel u = make_corel(cat, x, y, std::move(pairs));
    std::vector<std::uint32_t> xs, ys;
    for (const auto& [i, j] : u.pairs) {
        xs.push_back(i);
        ys.push_back(j);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    auto check = [&](const char* name, const std::vector<std::uint32_t>& expect) {
        if (!v.contains(name)) return;
        auto got = to_list(v[name], "gluing");
        std::sort(got.begin(), got.end());
        if (got != expect) throw ParseError(std::string("gluing: ") + name + " disagrees with bij");
    };
    check("x0", xs);
    check("y0", ys);
    return u;
}

std::string sub_text(const Sub& u) {
    if (u.ambient.backend == Backend::finset) return list_text(u.code);
    std::vector<std::vector<std::uint32_t>> blocks(u.size);
    for (std::uint32_t i = 0; i < u.code.size(); ++i) blocks[u.code[i]].push_back(i);
    std::string s = "[";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += ',';
        s += list_text(blocks[b]);
    }
    return s + "]";
}

std::string rel_text(const Rel& r) { return sub_text(r.sub); }

std::string table_text(const Mor& f) { return list_text(f.table); }

std::string gluing_text(const CoRel& u) {
    std::vector<std::uint32_t> xs, ys;
    for (const auto& [i, j] : u.pairs) {
        xs.push_back(i);
        ys.push_back(j);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::string bij = "[";
    for (std::size_t k = 0; k < u.pairs.size(); ++k) {
        if (k) bij += ',';
        bij += list_text({u.pairs[k].first, u.pairs[k].second});
    }
    return "{x0:" + list_text(xs) + ",y0:" + list_text(ys) + ",bij:" + bij + "]}";
}

std::string coefficient_text(const Poly& c, const std::optional<mpq_class>& eval_at) {
    if (eval_at) return rational_to_string(poly_eval(c, *eval_at));
    return c.to_string();
}

std::string combination_text(const std::map<Rel, Poly>& terms, std::string_view brackets,
                             const std::optional<mpq_class>& eval_at) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [r, c] : terms) {
        if (!s.empty()) s += " + ";
        const std::string coeff = coefficient_text(c, eval_at);
        if (coeff != "1") s += "(" + coeff + ")*";
        s += brackets[0] + rel_text(r) + brackets[1];
    }
    return s;
}

std::string tmor_text(const TMor& phi, const std::optional<mpq_class>& eval_at) {
    return combination_text(phi.terms(), "<>", eval_at);
}

std::string star_text(const StarMor& phi, const std::optional<mpq_class>& eval_at) {
    return combination_text(phi.terms(), phi.flavor() == Flavor::round ? "()" : "{}", eval_at);
}

}  // namespace tenv
