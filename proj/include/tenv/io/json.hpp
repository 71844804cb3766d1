#pragma once

#include "tenv/lattice/sub_lattice.hpp"
#include "tenv/maltsev/gluing.hpp"
#include "tenv/starbasis/tensor.hpp"

#include <json.hpp>

#include <optional>

namespace tenv {

using Json = nlohmann::ordered_json;

/// Options shared by every serializer. With eval_at set, each polynomial
/// also carries its value; the set of terms never changes.
struct JsonOptions {
    std::optional<mpq_class> eval_at;
};

/// Coefficients lowest degree first; entries outside int64 become decimal strings.
Json poly_json(const Poly& p);
Json rational_json(const mpq_class& q);

Json obj_json(const Obj& x);
Json mor_json(const Mor& f);
Json sub_json(const Sub& u);
Json rel_json(const Rel& r);
Json corel_json(const CoRel& u);

Json tmor_json(const TMor& phi, const JsonOptions& opt = {});
Json star_json(const StarMor& phi, const JsonOptions& opt = {});
Json block_map_json(const BlockMap& m, const JsonOptions& opt = {});

/// Elements, cover relations and, optionally, the full Möbius table (rows u, columns w; null when u is not <= w).
Json lattice_json(const SubLattice& lattice, bool with_mobius);

}  // namespace tenv
