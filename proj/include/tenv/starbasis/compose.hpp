#pragma once

#include "tenv/starbasis/star.hpp"

namespace tenv {

/// sigma o rho in the round basis by the omega-weighted sum over
/// subobjects of the fibre product r x_y s. Both inputs may be in either
/// basis; they are converted to round first.
StarMor compose_round(const Context& ctx, const StarMor& sigma, const StarMor& rho);
/// sigma o rho in the curly basis by the Möbius sum over y' <= y.
StarMor compose_curly(const Context& ctx, const StarMor& sigma, const StarMor& rho);
/// {s}{r} written directly in the round basis.
StarMor compose_curly_as_round(const Context& ctx, const StarMor& sigma, const StarMor& rho);

/// Reference composition: embed both into T^0, compose there, project back.
StarMor compose_oracle(const Context& ctx, const StarMor& sigma, const StarMor& rho, Flavor flavor);

/// Single basis products.
StarMor round_product(const Context& ctx, const Rel& s, const Rel& r);
StarMor curly_product(const Context& ctx, const Rel& s, const Rel& r);
StarMor curly_product_as_round(const Context& ctx, const Rel& s, const Rel& r);

}  // namespace tenv
