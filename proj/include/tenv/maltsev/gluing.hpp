#pragma once

// Co-relations x ->> u <<- y of an exact Mal'tsev backend. Only opset has
// that capability; there a co-relation is a gluing: a partial bijection
// between the carriers of x and y, u being the set of glued pairs.

#include "tenv/lattice/poset.hpp"
#include "tenv/starbasis/star.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace tenv {

struct CoRel {
    Obj x;
    Obj y;
    /// Glued pairs (i in X, j in Y), sorted; firsts and seconds are each distinct.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

    Obj apex() const { return Obj{x.backend, static_cast<std::uint32_t>(pairs.size()), nullptr}; }

    friend bool operator==(const CoRel& a, const CoRel& b) {
        return a.x == b.x && a.y == b.y && a.pairs == b.pairs;
    }
    friend auto operator<=>(const CoRel& a, const CoRel& b) { return a.pairs <=> b.pairs; }
};

/// Throws CapabilityError unless the backend is exact Mal'tsev.
void require_maltsev(const Category& cat);

/// Validates and sorts the pairs.
CoRel make_corel(const Category& cat, const Obj& x, const Obj& y,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);
/// The surjections x ->> u and y ->> u.
Mor corel_left(const Category& cat, const CoRel& u);
Mor corel_right(const Category& cat, const CoRel& u);

/// All co-relations of (x, y) in canonical order.
std::vector<CoRel> corel_set(const Context& ctx, const Obj& x, const Obj& y);

/// x x_u y as an element of R(x,y).
Rel push_pull(const Context& ctx, const CoRel& u);
/// The push-out of x <- r -> y; r must lie in R(x,y).
CoRel pull_push(const Context& ctx, const Rel& r);

/// R_q(x,y) ordered by t <= t' when x,y ->> t' factors through t.
class QuotLattice {
public:
    QuotLattice(const Context& ctx, const Obj& x, const Obj& y);

    const std::vector<CoRel>& elements() const { return elements_; }
    std::size_t index_of(const CoRel& t) const;
    bool leq(const CoRel& a, const CoRel& b) const { return poset_.leq(index_of(a), index_of(b)); }
    const CoRel& top() const { return elements_.at(*poset_.top()); }
    std::int64_t mobius(const CoRel& a, const CoRel& b) const { return poset_.mobius(index_of(a), index_of(b)); }

private:
    std::vector<CoRel> elements_;
    FinitePoset poset_;
};

std::shared_ptr<const QuotLattice> quot_lattice(const Context& ctx, const Obj& x, const Obj& y);

/// {u}' as the curly basis element {x x_u y}.
StarMor curly_prime(const Context& ctx, const CoRel& u);
/// p_y^* [b]^v [a] p_x^* evaluated in T^0 and projected to the curly basis.
StarMor curly_prime_word(const Context& ctx, const CoRel& u);

/// The cospan x ->> u ->> t <<- v <<- z for t a co-relation of (u, v).
CoRel corel_through(const CoRel& t, const CoRel& u, const CoRel& v);

/// {v}'{u}' by the Möbius sum over the quotient lattice of (u, v).
StarMor malcev_compose(const Context& ctx, const CoRel& v, const CoRel& u);

struct WitnessReport {
    std::size_t checked = 0;
    std::size_t failures = 0;
};

/// Every relation on x containing the diagonal is an equivalence relation.
WitnessReport maltsev_witness(const Context& ctx, const Obj& x);
/// Every equivalence relation on x is the kernel pair of a computed quotient.
WitnessReport exactness_witness(const Context& ctx, const Obj& x);

}  // namespace tenv
