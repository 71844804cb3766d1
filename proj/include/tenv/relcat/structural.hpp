#pragma once

// Structural isomorphisms of the cartesian product, as explicit morphisms
// of A. Relations are moved between product layouts only through these.

#include "tenv/backends/category.hpp"

namespace tenv {

/// x*y -> y*x
Mor swap_iso(const Category& cat, const Obj& x, const Obj& y);
/// (x*y)*z -> x*(y*z)
Mor assoc_iso(const Category& cat, const Obj& x, const Obj& y, const Obj& z);
/// (x*y)*z <- x*(y*z)
Mor assoc_inverse(const Category& cat, const Obj& x, const Obj& y, const Obj& z);
/// 1*x -> x
Mor left_unitor(const Category& cat, const Obj& x);
/// x*1 -> x
Mor right_unitor(const Category& cat, const Obj& x);
/// (a*b)*(c*d) -> (a*c)*(b*d)
Mor middle_swap(const Category& cat, const Obj& a, const Obj& b, const Obj& c, const Obj& d);
/// Inverse of an isomorphism of A.
Mor inverse_iso(const Category& cat, const Mor& f);

}  // namespace tenv
