#include "tenv/backends/finset.hpp"

#include "tenv/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tenv {

namespace {

void require_finset(const Obj& x) {
    if (x.backend != Backend::finset) throw PreconditionError("object is not a finset object");
    if (x.size == 0) throw PreconditionError("finset objects must be nonempty");
}

}  // namespace

Obj FinSet::object(std::uint32_t size) const {
    if (size == 0) throw PreconditionError("finset objects must be nonempty");
    return Obj{Backend::finset, size, nullptr};
}

Obj FinSet::terminal() const { return object(1); }

Mor FinSet::identity(const Obj& x) const {
    require_finset(x);
    Mor m{x, x, std::vector<std::uint32_t>(x.size)};
    for (std::uint32_t i = 0; i < x.size; ++i) m.table[i] = i;
    return m;
}

Mor FinSet::to_terminal(const Obj& x) const {
    require_finset(x);
    return Mor{x, terminal(), std::vector<std::uint32_t>(x.size, 0)};
}

Mor FinSet::compose(const Mor& f, const Mor& g) const {
    if (!(g.cod == f.dom)) throw PreconditionError("compose: cod(g) != dom(f)");
    Mor m{g.dom, f.cod, std::vector<std::uint32_t>(g.table.size())};
    for (std::size_t i = 0; i < g.table.size(); ++i) m.table[i] = f.table[g.table[i]];
    return m;
}

Product FinSet::product(const Obj& x, const Obj& y) const {
    require_finset(x);
    require_finset(y);
    Obj p{Backend::finset, x.size * y.size, std::make_shared<ProductFactors>(ProductFactors{x, y})};
    Mor first{p, x, std::vector<std::uint32_t>(p.size)};
    Mor second{p, y, std::vector<std::uint32_t>(p.size)};
    for (std::uint32_t i = 0; i < x.size; ++i) {
        for (std::uint32_t j = 0; j < y.size; ++j) {
            first.table[i * y.size + j] = i;
            second.table[i * y.size + j] = j;
        }
    }
    return Product{p, std::move(first), std::move(second)};
}

Mor FinSet::pair(const Mor& f, const Mor& g, const Product& target) const {
    if (!(f.dom == g.dom)) throw PreconditionError("pair: components have different domains");
    if (!(f.cod == target.first.cod) || !(g.cod == target.second.cod)) {
        throw PreconditionError("pair: components do not match the product factors");
    }
    const std::uint32_t ny = g.cod.size;
    Mor m{f.dom, target.object, std::vector<std::uint32_t>(f.table.size())};
    for (std::size_t i = 0; i < f.table.size(); ++i) m.table[i] = f.table[i] * ny + g.table[i];
    return m;
}

Factorization FinSet::image(const Mor& f) const {
    std::vector<std::uint32_t> code(f.table);
    std::sort(code.begin(), code.end());
    code.erase(std::unique(code.begin(), code.end()), code.end());
    std::vector<std::uint32_t> position(f.cod.size, 0);
    for (std::size_t k = 0; k < code.size(); ++k) position[code[k]] = static_cast<std::uint32_t>(k);
    const auto n = static_cast<std::uint32_t>(code.size());
    Sub m{f.cod, std::move(code), n};
    Mor e{f.dom, m.source(), std::vector<std::uint32_t>(f.table.size())};
    for (std::size_t i = 0; i < f.table.size(); ++i) e.table[i] = position[f.table[i]];
    return Factorization{std::move(e), std::move(m)};
}

std::optional<Span> FinSet::pullback(const Mor& f, const Mor& g) const {
    if (!(f.cod == g.cod)) throw PreconditionError("pullback: morphisms have different codomains");
    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    for (std::uint32_t a = 0; a < f.dom.size; ++a) {
        for (std::uint32_t b = 0; b < g.dom.size; ++b) {
            if (f.table[a] == g.table[b]) {
                left.push_back(a);
                right.push_back(b);
            }
        }
    }
    if (left.empty()) return std::nullopt;
    Obj apex{Backend::finset, static_cast<std::uint32_t>(left.size()), nullptr};
    return Span{apex, Mor{apex, f.dom, std::move(left)}, Mor{apex, g.dom, std::move(right)}};
}

bool FinSet::is_injective(const Mor& f) const {
    std::vector<bool> hit(f.cod.size, false);
    for (std::uint32_t v : f.table) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool FinSet::is_surjective(const Mor& f) const {
    std::vector<bool> hit(f.cod.size, false);
    std::uint32_t count = 0;
    for (std::uint32_t v : f.table) {
        if (!hit[v]) {
            hit[v] = true;
            ++count;
        }
    }
    return count == f.cod.size;
}

Mor FinSet::inclusion(const Sub& u) const { return Mor{u.source(), u.ambient, u.code}; }

bool FinSet::sub_leq(const Sub& u, const Sub& v) const {
    return std::includes(v.code.begin(), v.code.end(), u.code.begin(), u.code.end());
}

void FinSet::for_each_subobject(const Obj& x, const std::function<void(const Sub&)>& f) const {
    require_finset(x);
    std::vector<std::uint32_t> code;
    // Depth-first extension visits index lists in lexicographic order.
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t next) {
        for (std::uint32_t i = next; i < x.size; ++i) {
            code.push_back(i);
            f(Sub{x, code, static_cast<std::uint32_t>(code.size())});
            extend(i + 1);
            code.pop_back();
        }
    };
    extend(0);
}

std::uint64_t FinSet::subobject_count(const Obj& x) const {
    if (x.size >= 64) return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{1} << x.size) - 1;
}

void FinSet::validate(const Mor& f) const {
    require_finset(f.dom);
    require_finset(f.cod);
    if (f.table.size() != f.dom.size) throw PreconditionError("finset table length must equal |dom|");
    for (std::uint32_t v : f.table) {
        if (v >= f.cod.size) throw PreconditionError("finset table value " + std::to_string(v) + " outside codomain");
    }
}

void FinSet::validate(const Sub& u) const {
    require_finset(u.ambient);
    if (u.code.empty()) throw PreconditionError("finset subobjects must be nonempty");
    for (std::size_t i = 0; i < u.code.size(); ++i) {
        if (u.code[i] >= u.ambient.size) throw PreconditionError("subset index outside the carrier");
        if (i > 0 && u.code[i - 1] >= u.code[i]) throw PreconditionError("subset indices must be strictly increasing");
    }
    if (u.size != u.code.size()) throw PreconditionError("subset size does not match its index list");
}

}  // namespace tenv
