#include "tenv/relcat/structural.hpp"

#include "tenv/errors.hpp"

namespace tenv {

Mor swap_iso(const Category& cat, const Obj& x, const Obj& y) {
    const Product p = cat.product(x, y);
    return cat.pair(p.second, p.first, cat.product(y, x));
}

Mor assoc_iso(const Category& cat, const Obj& x, const Obj& y, const Obj& z) {
    const Product xy = cat.product(x, y);
    const Product src = cat.product(xy.object, z);
    const Product yz = cat.product(y, z);
    const Product dst = cat.product(x, yz.object);
    const Mor px = cat.compose(xy.first, src.first);
    const Mor py = cat.compose(xy.second, src.first);
    return cat.pair(px, cat.pair(py, src.second, yz), dst);
}

Mor assoc_inverse(const Category& cat, const Obj& x, const Obj& y, const Obj& z) {
    const Product yz = cat.product(y, z);
    const Product src = cat.product(x, yz.object);
    const Product xy = cat.product(x, y);
    const Product dst = cat.product(xy.object, z);
    const Mor py = cat.compose(yz.first, src.second);
    const Mor pz = cat.compose(yz.second, src.second);
    return cat.pair(cat.pair(src.first, py, xy), pz, dst);
}

Mor left_unitor(const Category& cat, const Obj& x) { return cat.product(cat.terminal(), x).second; }

Mor right_unitor(const Category& cat, const Obj& x) { return cat.product(x, cat.terminal()).first; }

Mor middle_swap(const Category& cat, const Obj& a, const Obj& b, const Obj& c, const Obj& d) {
    const Product ab = cat.product(a, b);
    const Product cd = cat.product(c, d);
    const Product src = cat.product(ab.object, cd.object);
    const Product ac = cat.product(a, c);
    const Product bd = cat.product(b, d);
    const Product dst = cat.product(ac.object, bd.object);
    const Mor pa = cat.compose(ab.first, src.first);
    const Mor pb = cat.compose(ab.second, src.first);
    const Mor pc = cat.compose(cd.first, src.second);
    const Mor pd = cat.compose(cd.second, src.second);
    return cat.pair(cat.pair(pa, pc, ac), cat.pair(pb, pd, bd), dst);
}

Mor inverse_iso(const Category& cat, const Mor& f) {
    if (!cat.is_iso(f)) throw PreconditionError("inverse_iso: morphism is not an isomorphism");
    // Both backends store isomorphisms as bijective tables of equal size.
    Mor g{f.cod, f.dom, std::vector<std::uint32_t>(f.table.size())};
    for (std::size_t i = 0; i < f.table.size(); ++i) g.table[f.table[i]] = static_cast<std::uint32_t>(i);
    return g;
}

}  // namespace tenv
