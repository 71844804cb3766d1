#pragma once

#include "tenv/backends/category.hpp"
#include "tenv/scalars/poly.hpp"

#include <string_view>

namespace tenv {

enum class Degree : std::uint8_t { one, zero_noniso, t_power };

std::string_view degree_name(Degree d);
/// Accepts "one", "zero-noniso" and "t-power" (underscores also accepted).
Degree parse_degree(std::string_view name);

/// Throws CapabilityError when the degree function is not defined on the backend.
void require_degree(const Category& cat, Degree d);

/// delta of an arbitrary morphism, taken on the epi part of its image factorization.
Poly delta(const Category& cat, Degree d, const Mor& f);

}  // namespace tenv
