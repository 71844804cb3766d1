#include "tenv/backends/degree.hpp"

#include "tenv/errors.hpp"

#include <string>

namespace tenv {

std::string_view degree_name(Degree d) {
    switch (d) {
    case Degree::one: return "one";
    case Degree::zero_noniso: return "zero-noniso";
    case Degree::t_power: return "t-power";
    }
    return "one";
}

Degree parse_degree(std::string_view name) {
    if (name == "one") return Degree::one;
    if (name == "zero-noniso" || name == "zero_noniso") return Degree::zero_noniso;
    if (name == "t-power" || name == "t_power") return Degree::t_power;
    throw ParseError("unknown degree function: " + std::string(name));
}

void require_degree(const Category& cat, Degree d) {
    if (d == Degree::t_power && cat.backend() != Backend::opset) {
        throw CapabilityError("the t-power degree function is only defined on opset");
    }
}

Poly delta(const Category& cat, Degree d, const Mor& f) {
    require_degree(cat, d);
    switch (d) {
    case Degree::one: return Poly(1);
    case Degree::zero_noniso: return cat.is_injective(f) ? Poly(1) : Poly();
    case Degree::t_power: {
        const Factorization fac = cat.image(f);
        return Poly::monomial(1, f.dom.size - fac.image.size);
    }
    }
    return Poly(1);
}

}  // namespace tenv
