#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/linalg.hpp"

namespace ringlab {

inline constexpr std::size_t kDefaultRingSizeCap = 4096;
inline constexpr unsigned kMaxAlgebraPrime = 7;
inline constexpr unsigned kMaxAlgebraDim = 16;

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

enum class Representation { Table, PrimeAlgebra };

/// Structure constants of an associative unital algebra over Z/p.
struct PrimeAlgebraData {
    unsigned p = 2;
    unsigned dim = 0;
    std::vector<std::string> labels;
    /// constants[(i * dim + j) * dim + k]: coordinate k of basis_i * basis_j.
    std::vector<std::uint8_t> constants;
    ModpVector unit;

    std::uint8_t constant(unsigned i, unsigned j, unsigned k) const { return constants[(i * dim + j) * dim + k]; }
};

/// Z/p coordinates of a ring of prime characteristic.
///
/// Every element is `from_index[i]` for exactly one base-p integer i < p^dim;
/// digit t of i is the coefficient of `basis[t]`.
struct LinearStructure {
    unsigned p = 2;
    unsigned dim = 0;
    std::vector<Elem> basis;
    std::vector<Elem> from_index;
    std::vector<std::uint32_t> to_index;

    ModpVector coords(Elem e) const {
        ModpVector v(dim);
        auto idx = to_index[e];
        for (unsigned t = 0; t < dim; ++t) {
            v[t] = static_cast<std::uint8_t>(idx % p);
            idx /= p;
        }
        return v;
    }

    Elem element(const ModpVector& v) const {
        std::uint32_t idx = 0;
        for (unsigned t = dim; t-- > 0;) idx = idx * p + v[t];
        return from_index[idx];
    }
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

enum class Construction {
    Custom, Zn, Matrix, UpperTriangular, SkewTriangular, Ex22, Algebra, Product, Corner, Quotient, Opposite
};

/// How a ring was built; constructors and claims use it to find distinguished elements.
struct Origin {
    Construction kind = Construction::Custom;
    int param = 0;
    RingPtr base;
    RingPtr second;
    /// Corner rings: handle in the corner -> handle in the parent ring.
    std::vector<Elem> embedding;
};

/// A finite associative ring with identity, stored as full operation tables.
///
/// Handles are dense indices 0..size-1 with 0 the zero element. The constructor
/// does not check the ring axioms; see validate_ring.
class FiniteRing {
public:
    FiniteRing(std::string id, std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
               std::vector<std::string> names, Origin origin = {});

    /// Algebra over Z/p whose handles are base-p coordinate indices.
    FiniteRing(std::string id, PrimeAlgebraData algebra, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
               std::vector<std::string> names, Origin origin = {});

    const std::string& id() const noexcept { return id_; }
    std::size_t size() const noexcept { return size_; }
    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[static_cast<std::size_t>(a) * size_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    /// Product taken in the orientation of `side`: right means a*b, left means b*a.
    Elem mul(Side side, Elem a, Elem b) const noexcept { return side == Side::Right ? mul(a, b) : mul(b, a); }

    Elem pow(Elem a, unsigned k) const noexcept;
    /// n-fold sum of a.
    Elem times(Elem a, unsigned n) const noexcept;

    Representation representation() const noexcept {
        return algebra_ ? Representation::PrimeAlgebra : Representation::Table;
    }
    const std::optional<PrimeAlgebraData>& algebra() const noexcept { return algebra_; }
    /// Z/p coordinates when the characteristic is prime.
    const std::optional<LinearStructure>& linear() const noexcept { return linear_; }
    unsigned characteristic() const noexcept { return characteristic_; }

    const std::string& name(Elem e) const { return names_[e]; }
    const Origin& origin() const noexcept { return origin_; }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    ElementSet empty_set() const { return ElementSet(size_); }
    ElementSet all() const { return ElementSet::full(size_); }

private:
    void finish_setup();

    std::string id_;
    std::size_t size_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem one_;
    std::vector<std::string> names_;
    Origin origin_;
    unsigned characteristic_ = 0;
    std::optional<PrimeAlgebraData> algebra_;
    std::optional<LinearStructure> linear_;
};

}  // namespace ringlab
