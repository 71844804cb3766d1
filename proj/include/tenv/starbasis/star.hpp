#pragma once

// Morphisms [x]^* -> [y]^* in the (r) ("round") and {r} ("curly") bases
// indexed by R(x,y), and their translation to and from T^0.

#include "tenv/backends/context.hpp"
#include "tenv/relcat/rel.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace tenv {

enum class Flavor : std::uint8_t { round, curly };

std::string_view flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);

class StarMor {
public:
    StarMor() = default;
    StarMor(Obj x, Obj y, Flavor flavor) : x_(std::move(x)), y_(std::move(y)), flavor_(flavor) {}
    /// A single basis element.
    StarMor(const Rel& r, Flavor flavor, const Poly& c = Poly(1));

    const Obj& x() const { return x_; }
    const Obj& y() const { return y_; }
    Flavor flavor() const { return flavor_; }
    const std::map<Rel, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const Rel& r) const;

    /// The caller guarantees r lies in R(x,y).
    void add(const Rel& r, const Poly& c);
    StarMor& operator+=(const StarMor& other);
    StarMor& operator-=(const StarMor& other);
    StarMor& operator*=(const Poly& c);
    friend StarMor operator+(StarMor a, const StarMor& b) { return a += b; }
    friend StarMor operator-(StarMor a, const StarMor& b) { return a -= b; }
    friend StarMor operator*(const Poly& c, StarMor a) { return a *= c; }

    friend bool operator==(const StarMor& a, const StarMor& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const StarMor& other) const;

    Obj x_;
    Obj y_;
    Flavor flavor_ = Flavor::curly;
    std::map<Rel, Poly> terms_;
};

/// Both legs of r are surjective.
bool in_r_set(const Category& cat, const Rel& r);
/// R(x,y) in canonical order. Memoized; guarded by the enumeration limit on x*y.
const std::vector<Rel>& r_set(const Context& ctx, const Obj& x, const Obj& y);
std::size_t star_hom_dim(const Context& ctx, const Obj& x, const Obj& y);

/// All s in R(x,y) with s <= r, in canonical order (r itself last).
std::vector<Rel> r_below(const Context& ctx, const Rel& r);

StarMor basis_convert(const Context& ctx, const StarMor& phi, Flavor target);

/// (r) = p_y^*[b] p_r^* [a]^v p_x^* and {r} = p_y^* <r> p_x^*, extended linearly.
TMor embed(const Context& ctx, const StarMor& phi);
const TMor& embed_basis(const Context& ctx, const Rel& r, Flavor flavor);

/// p_y^* psi p_x^* written in the curly basis (and converted to `flavor`).
/// With `check`, the result is embedded again and compared with the
/// conjugated input; a mismatch throws InternalError.
StarMor project(const Context& ctx, const TMor& psi, Flavor flavor = Flavor::curly, bool check = false);
/// Reads the curly coefficients of a morphism already conjugated by p_y^*, p_x^*.
StarMor read_curly(const Context& ctx, const TMor& conjugated);

/// Equality of morphisms given in possibly different bases.
bool same_morphism(const Context& ctx, const StarMor& a, const StarMor& b);

}  // namespace tenv
