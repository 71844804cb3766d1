#include "tenv/backends/category.hpp"

#include "tenv/backends/finset.hpp"
#include "tenv/backends/opset.hpp"
#include "tenv/errors.hpp"

#include <limits>
#include <string>

namespace tenv {

std::string_view backend_name(Backend b) { return b == Backend::finset ? "finset" : "opset"; }

Backend parse_backend(std::string_view name) {
    if (name == "finset") return Backend::finset;
    if (name == "opset") return Backend::opset;
    throw ParseError("unknown backend: " + std::string(name));
}

std::size_t hash_words(const std::vector<std::uint32_t>& v, std::size_t seed) {
    std::size_t h = seed ^ (v.size() * 0x9e3779b97f4a7c15ULL);
    for (std::uint32_t x : v) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Sub Category::top(const Obj& x) const { return image(identity(x)).image; }

Sub Category::canonical(const Mor& mono) const {
    if (!is_injective(mono)) throw PreconditionError("canonical(): morphism is not injective");
    return image(mono).image;
}

Sub Category::sub_image(const Mor& f, const Sub& u) const {
    if (!(u.ambient == f.dom)) throw PreconditionError("sub_image: subobject is not a subobject of dom(f)");
    return image(compose(f, inclusion(u))).image;
}

std::optional<Sub> Category::preimage(const Mor& f, const Sub& z) const {
    if (!(z.ambient == f.cod)) throw PreconditionError("preimage: subobject is not a subobject of cod(f)");
    auto pb = pullback(f, inclusion(z));
    if (!pb) return std::nullopt;
    return image(pb->to_first).image;
}

std::optional<Sub> Category::meet(const Sub& u, const Sub& v) const {
    if (!(u.ambient == v.ambient)) throw PreconditionError("meet: subobjects of different objects");
    const Mor iu = inclusion(u);
    auto pb = pullback(iu, inclusion(v));
    if (!pb) return std::nullopt;
    return image(compose(iu, pb->to_first)).image;
}

Mor Category::product_map(const Mor& f, const Mor& g, const Product& source, const Product& target) const {
    return pair(compose(f, source.first), compose(g, source.second), target);
}

Mor Category::product_map(const Mor& f, const Mor& g) const {
    return product_map(f, g, product(f.dom, g.dom), product(f.cod, g.cod));
}

std::vector<Sub> Category::subobjects(const Obj& x, const Limits& limits) const {
    if (x.size > enumeration_limit(limits)) {
        throw SizeGuardError("subobject enumeration refused: carrier " + std::to_string(x.size) + " exceeds " +
                             std::to_string(enumeration_limit(limits)) + " for " + std::string(name()));
    }
    std::vector<Sub> out;
    for_each_subobject(x, [&](const Sub& s) { out.push_back(s); });
    return out;
}

std::uint64_t Category::morphism_count(const Obj& x, const Obj& y) const {
    const std::uint32_t len = table_length(x, y);
    const std::uint64_t range = table_range(x, y);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < len; ++i) {
        if (range == 0) return 0;
        if (count > std::numeric_limits<std::uint64_t>::max() / range) return std::numeric_limits<std::uint64_t>::max();
        count *= range;
    }
    return count;
}

std::vector<Mor> Category::morphisms(const Obj& x, const Obj& y, const Limits& limits) const {
    const std::uint64_t count = morphism_count(x, y);
    if (count > limits.morphism_tables) {
        throw SizeGuardError("morphism sweep refused: " + std::to_string(count) + " tables exceed " +
                             std::to_string(limits.morphism_tables));
    }
    const std::uint32_t len = table_length(x, y);
    const std::uint32_t range = table_range(x, y);
    std::vector<Mor> out;
    out.reserve(count);
    if (count == 0) return out;
    std::vector<std::uint32_t> table(len, 0);
    while (true) {
        out.push_back(Mor{x, y, table});
        std::size_t i = len;
        while (i > 0) {
            --i;
            if (++table[i] < range) break;
            table[i] = 0;
            if (i == 0) return out;
        }
        if (len == 0) return out;
    }
}

const Category& category(Backend b) {
    static const FinSet finset;
    static const OpSet opset;
    if (b == Backend::finset) return finset;
    return opset;
}

}  // namespace tenv
