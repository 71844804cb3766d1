#pragma once

#include "tenv/backends/context.hpp"
#include "tenv/scalars/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tenv {

/// A relation between x and y: a canonical subobject of x*y.
struct Rel {
    Obj x;
    Obj y;
    Sub sub;

    friend bool operator==(const Rel& a, const Rel& b) { return a.x == b.x && a.y == b.y && a.sub == b.sub; }
    friend std::strong_ordering operator<=>(const Rel& a, const Rel& b) {
        if (auto c = a.x.size <=> b.x.size; c != 0) return c;
        if (auto c = a.y.size <=> b.y.size; c != 0) return c;
        return a.sub <=> b.sub;
    }
};

/// The two legs r -> x and r -> y.
struct RelLegs {
    Mor a;
    Mor b;
};

/// Validates `sub` against the product x*y.
Rel make_rel(const Category& cat, const Obj& x, const Obj& y, const Sub& sub);
/// The relation r >-> x*y given by the image of <f, g>.
Rel rel_from_span(const Category& cat, const Mor& f, const Mor& g);
RelLegs rel_legs(const Category& cat, const Rel& r);
/// Diagonal relation of x.
Rel diagonal(const Category& cat, const Obj& x);
/// Graph of f: x -> y as a relation between x and y.
Rel graph_rel(const Category& cat, const Mor& f);
Rel transpose(const Category& cat, const Rel& r);

/// s o r together with its degree factor, or nullopt when r x_y s does not exist.
std::optional<std::pair<Rel, Poly>> rel_compose(const Context& ctx, const Rel& r, const Rel& s);

/// A morphism [dom] -> [cod] of T^0: a finite linear combination of relations.
/// Zero coefficients are never stored.
class TMor {
public:
    TMor() = default;
    TMor(Obj dom, Obj cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}
    TMor(const Rel& r, const Poly& c = Poly(1));

    const Obj& dom() const { return dom_; }
    const Obj& cod() const { return cod_; }
    const std::map<Rel, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const Rel& r) const;

    void add(const Rel& r, const Poly& c);
    TMor& operator+=(const TMor& other);
    TMor& operator-=(const TMor& other);
    TMor& operator*=(const Poly& c);
    friend TMor operator+(TMor a, const TMor& b) { return a += b; }
    friend TMor operator-(TMor a, const TMor& b) { return a -= b; }
    friend TMor operator*(const Poly& c, TMor a) { return a *= c; }

    friend bool operator==(const TMor& a, const TMor& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.terms_ == b.terms_;
    }

private:
    void require_same_ends(const TMor& other) const;

    Obj dom_;
    Obj cod_;
    std::map<Rel, Poly> terms_;
};

TMor tmor_identity(const Context& ctx, const Obj& x);
/// psi o phi.
TMor tmor_compose(const Context& ctx, const TMor& psi, const TMor& phi);
/// Left-to-right product of a chain: chain[0] o chain[1] o ... .
TMor tmor_chain(const Context& ctx, const std::vector<TMor>& chain);
TMor adjoint(const Context& ctx, const TMor& phi);
/// [f] and [f]^v.
TMor graph(const Context& ctx, const Mor& f);
TMor cograph(const Context& ctx, const Mor& f);

/// r (x) s : x*y -> x'*y' for r: x -> x', s: y -> y'.
Rel tensor_rel(const Category& cat, const Rel& r, const Rel& s);
TMor tmor_tensor(const Context& ctx, const TMor& phi, const TMor& psi);

/// ev: [x*x] -> 1 and coev: 1 -> [x*x].
TMor ev(const Context& ctx, const Obj& x);
TMor coev(const Context& ctx, const Obj& x);
/// (ev (x) id) o assoc^-1 o (id (x) coev), conjugated by the unitors; equals id.
TMor snake_left(const Context& ctx, const Obj& x);
/// (id (x) ev) o assoc o (coev (x) id), conjugated by the unitors; equals id.
TMor snake_right(const Context& ctx, const Obj& x);

/// A generator [f] or [f]^v.
struct Letter {
    Mor f;
    bool dual = false;
};

struct NormalForm {
    Poly coefficient;
    std::optional<Rel> rel;  ///< nullopt for the zero morphism

    TMor to_tmor(const Obj& dom, const Obj& cod) const;
};

/// Letters compose as word[0] o word[1] o ... ; the word must be nonempty.
/// Rewrites into coefficient * <r> by fusing, pulling back and factoring.
NormalForm word_normalize(const Context& ctx, const std::vector<Letter>& word);
/// Direct product of the letters in T^0, for comparison with the normal form.
TMor word_tmor(const Context& ctx, const std::vector<Letter>& word);
Obj letter_source(const Letter& l);
Obj letter_target(const Letter& l);

}  // namespace tenv
