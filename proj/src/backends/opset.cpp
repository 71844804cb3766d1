#include "tenv/backends/opset.hpp"

#include "tenv/errors.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace tenv {

namespace {

void require_opset(const Obj& x) {
    if (x.backend != Backend::opset) throw PreconditionError("object is not an opset object");
}

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

std::vector<std::uint32_t> fiber_code(const std::vector<std::uint32_t>& labels) {
    std::vector<std::uint32_t> code(labels.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;  // label -> block
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::uint32_t block = kUnset;
        for (const auto& [label, b] : seen) {
            if (label == labels[i]) {
                block = b;
                break;
            }
        }
        if (block == kUnset) {
            block = static_cast<std::uint32_t>(seen.size());
            seen.emplace_back(labels[i], block);
        }
        code[i] = block;
    }
    return code;
}

Obj OpSet::object(std::uint32_t size) const { return Obj{Backend::opset, size, nullptr}; }

Obj OpSet::terminal() const { return object(0); }

Mor OpSet::identity(const Obj& x) const {
    require_opset(x);
    Mor m{x, x, std::vector<std::uint32_t>(x.size)};
    std::iota(m.table.begin(), m.table.end(), 0u);
    return m;
}

Mor OpSet::to_terminal(const Obj& x) const {
    require_opset(x);
    return Mor{x, terminal(), {}};
}

Mor OpSet::compose(const Mor& f, const Mor& g) const {
    if (!(g.cod == f.dom)) throw PreconditionError("compose: cod(g) != dom(f)");
    Mor m{g.dom, f.cod, std::vector<std::uint32_t>(f.table.size())};
    for (std::size_t i = 0; i < f.table.size(); ++i) m.table[i] = g.table[f.table[i]];
    return m;
}

Product OpSet::product(const Obj& x, const Obj& y) const {
    require_opset(x);
    require_opset(y);
    Obj p{Backend::opset, x.size + y.size, std::make_shared<ProductFactors>(ProductFactors{x, y})};
    Mor first{p, x, std::vector<std::uint32_t>(x.size)};
    Mor second{p, y, std::vector<std::uint32_t>(y.size)};
    std::iota(first.table.begin(), first.table.end(), 0u);
    std::iota(second.table.begin(), second.table.end(), x.size);
    return Product{p, std::move(first), std::move(second)};
}

Mor OpSet::pair(const Mor& f, const Mor& g, const Product& target) const {
    if (!(f.dom == g.dom)) throw PreconditionError("pair: components have different domains");
    if (!(f.cod == target.first.cod) || !(g.cod == target.second.cod)) {
        throw PreconditionError("pair: components do not match the product factors");
    }
    Mor m{f.dom, target.object, f.table};
    m.table.insert(m.table.end(), g.table.begin(), g.table.end());
    return m;
}

Factorization OpSet::image(const Mor& f) const {
    // Set map Y -> X factors as Y ->> F(Y) >-> X; the surjection is the mono
    // of A (a partition of Y), the injection the epi of A.
    std::vector<std::uint32_t> code = fiber_code(f.table);
    std::uint32_t blocks = 0;
    for (std::uint32_t c : code) blocks = std::max(blocks, c + 1);
    std::vector<std::uint32_t> values(blocks, 0);
    for (std::size_t i = 0; i < code.size(); ++i) values[code[i]] = f.table[i];
    Sub m{f.cod, std::move(code), blocks};
    return Factorization{Mor{f.dom, m.source(), std::move(values)}, std::move(m)};
}

std::optional<Span> OpSet::pullback(const Mor& f, const Mor& g) const {
    if (!(f.cod == g.cod)) throw PreconditionError("pullback: morphisms have different codomains");
    const std::uint32_t nx = f.dom.size;
    const std::uint32_t ny = g.dom.size;
    std::vector<std::uint32_t> parent(nx + ny);
    std::iota(parent.begin(), parent.end(), 0u);
    for (std::size_t k = 0; k < f.table.size(); ++k) {
        const std::uint32_t a = find_root(parent, f.table[k]);
        const std::uint32_t b = find_root(parent, nx + g.table[k]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::uint32_t> roots(nx + ny);
    for (std::uint32_t i = 0; i < nx + ny; ++i) roots[i] = find_root(parent, i);
    const std::vector<std::uint32_t> cls = fiber_code(roots);
    std::uint32_t classes = 0;
    for (std::uint32_t c : cls) classes = std::max(classes, c + 1);
    Obj apex{Backend::opset, classes, nullptr};
    Mor left{apex, f.dom, std::vector<std::uint32_t>(cls.begin(), cls.begin() + nx)};
    Mor right{apex, g.dom, std::vector<std::uint32_t>(cls.begin() + nx, cls.end())};
    return Span{apex, std::move(left), std::move(right)};
}

bool OpSet::is_injective(const Mor& f) const {
    std::vector<bool> hit(f.dom.size, false);
    std::uint32_t count = 0;
    for (std::uint32_t v : f.table) {
        if (!hit[v]) {
            hit[v] = true;
            ++count;
        }
    }
    return count == f.dom.size;
}

bool OpSet::is_surjective(const Mor& f) const {
    std::vector<bool> hit(f.dom.size, false);
    for (std::uint32_t v : f.table) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

Mor OpSet::inclusion(const Sub& u) const { return Mor{u.source(), u.ambient, u.code}; }

bool OpSet::sub_leq(const Sub& u, const Sub& v) const {
    if (u.code.size() != v.code.size()) return false;
    // Each block of v must sit inside a block of u.
    std::vector<std::uint32_t> target(v.size, kUnset);
    for (std::size_t i = 0; i < v.code.size(); ++i) {
        std::uint32_t& t = target[v.code[i]];
        if (t == kUnset) {
            t = u.code[i];
        } else if (t != u.code[i]) {
            return false;
        }
    }
    return true;
}

void OpSet::for_each_subobject(const Obj& x, const std::function<void(const Sub&)>& f) const {
    require_opset(x);
    std::vector<std::uint32_t> code(x.size, 0);
    if (x.size == 0) {
        f(Sub{x, {}, 0});
        return;
    }
    // Restricted growth strings in lexicographic order.
    std::function<void(std::uint32_t, std::uint32_t)> extend = [&](std::uint32_t i, std::uint32_t blocks) {
        if (i == x.size) {
            f(Sub{x, code, blocks});
            return;
        }
        for (std::uint32_t b = 0; b <= blocks; ++b) {
            code[i] = b;
            extend(i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    code[0] = 0;
    extend(1, 1);
}

std::uint64_t OpSet::subobject_count(const Obj& x) const {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::uint32_t n = 0; n < x.size; ++n) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) {
            const std::uint64_t prev = next.back();
            if (prev > std::numeric_limits<std::uint64_t>::max() - v) return std::numeric_limits<std::uint64_t>::max();
            next.push_back(prev + v);
        }
        row = std::move(next);
    }
    return row.front();
}

void OpSet::validate(const Mor& f) const {
    require_opset(f.dom);
    require_opset(f.cod);
    if (f.table.size() != f.cod.size) throw PreconditionError("opset table length must equal |cod|");
    for (std::uint32_t v : f.table) {
        if (v >= f.dom.size) throw PreconditionError("opset table value " + std::to_string(v) + " outside domain carrier");
    }
}

void OpSet::validate(const Sub& u) const {
    require_opset(u.ambient);
    if (u.code.size() != u.ambient.size) throw PreconditionError("partition does not cover the carrier");
    std::uint32_t blocks = 0;
    for (std::uint32_t c : u.code) {
        if (c > blocks) throw PreconditionError("partition code is not a restricted growth string");
        if (c == blocks) ++blocks;
    }
    if (u.size != blocks) throw PreconditionError("partition size does not match its block count");
}

}  // namespace tenv
