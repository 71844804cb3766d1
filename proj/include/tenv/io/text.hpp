#pragma once

// Canonical text forms used on the command line:
//   partitions "[[0,1],[2]]"   (opset subobjects and relations)
//   subsets    "[0,2]"         (finset subobjects and relations)
//   tables     "[1,0,2]"       (morphisms, in the backend's table convention)
//   gluings    "{x0:[0],y0:[1],bij:[[0,1]]}"

#include "tenv/maltsev/gluing.hpp"
#include "tenv/relcat/rel.hpp"
#include "tenv/starbasis/star.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace tenv {

/// A subobject of `ambient`: a partition of its carrier (opset) or a nonempty subset (finset).
Sub parse_sub(const Category& cat, const Obj& ambient, std::string_view text);
/// A relation between x and y, written as a subobject of x*y.
Rel parse_rel(const Category& cat, const Obj& x, const Obj& y, std::string_view text);
Mor parse_table(const Category& cat, const Obj& dom, const Obj& cod, std::string_view text);
CoRel parse_gluing(const Category& cat, const Obj& x, const Obj& y, std::string_view text);

std::string sub_text(const Sub& u);
std::string rel_text(const Rel& r);
std::string table_text(const Mor& f);
std::string gluing_text(const CoRel& u);

/// The polynomial, or its value when eval_at is set.
std::string coefficient_text(const Poly& c, const std::optional<mpq_class>& eval_at);
/// "(c1)*<r1> + (c2)*<r2>" with <r> written [r] in the relation basis, (r) round and {r} curly; "0" when empty.
std::string combination_text(const std::map<Rel, Poly>& terms, std::string_view brackets,
                             const std::optional<mpq_class>& eval_at);
std::string tmor_text(const TMor& phi, const std::optional<mpq_class>& eval_at = std::nullopt);
std::string star_text(const StarMor& phi, const std::optional<mpq_class>& eval_at = std::nullopt);

}  // namespace tenv
