#pragma once

// Value types shared by every backend: objects, morphisms and canonical
// subobjects of a finite regular category.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

namespace tenv {

enum class Backend : std::uint8_t { finset, opset };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

struct Obj;

struct ProductFactors;

/// An object of A: a carrier {0, ..., size-1}. Products remember their
/// factors; equality only looks at the backend and the carrier size.
struct Obj {
    Backend backend = Backend::opset;
    std::uint32_t size = 0;
    std::shared_ptr<const ProductFactors> factors;

    friend bool operator==(const Obj& a, const Obj& b) { return a.backend == b.backend && a.size == b.size; }
};

struct ProductFactors {
    Obj left;
    Obj right;
};

/// A morphism dom -> cod of A, stored as the underlying set map.
/// FinSet: table[i] in cod for i in dom. OpSet: table[j] in dom for j in cod
/// (the set map runs backwards).
struct Mor {
    Obj dom;
    Obj cod;
    std::vector<std::uint32_t> table;

    friend bool operator==(const Mor& a, const Mor& b) {
        return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
    }
};

/// Canonical representative of a subobject of `ambient`.
/// FinSet: `code` is the strictly increasing index list of the subset.
/// OpSet: `code` is the restricted growth string of the partition of the
/// carrier (block numbers in order of first appearance), so blocks are
/// ordered by their minimum element.
/// `size` is the carrier size of the subobject itself.
struct Sub {
    Obj ambient;
    std::vector<std::uint32_t> code;
    std::uint32_t size = 0;

    /// The object u of the mono u -> ambient.
    Obj source() const { return Obj{ambient.backend, size, nullptr}; }

    friend bool operator==(const Sub& a, const Sub& b) {
        return a.ambient == b.ambient && a.size == b.size && a.code == b.code;
    }
    /// Lexicographic on the canonical code.
    friend std::strong_ordering operator<=>(const Sub& a, const Sub& b) {
        if (auto c = a.ambient.backend <=> b.ambient.backend; c != 0) return c;
        if (auto c = a.ambient.size <=> b.ambient.size; c != 0) return c;
        return a.code <=> b.code;
    }
};

struct Product {
    Obj object;
    Mor first;
    Mor second;
};

/// Apex of a pullback square together with its two legs.
struct Span {
    Obj apex;
    Mor to_first;
    Mor to_second;
};

/// f = inclusion(image) o epi.
struct Factorization {
    Mor epi;
    Sub image;
};

std::size_t hash_words(const std::vector<std::uint32_t>& v, std::size_t seed = 0);

}  // namespace tenv

template <>
struct std::hash<tenv::Sub> {
    std::size_t operator()(const tenv::Sub& s) const noexcept {
        return tenv::hash_words(s.code, (static_cast<std::size_t>(s.ambient.size) << 8) ^
                                            static_cast<std::size_t>(s.ambient.backend));
    }
};
