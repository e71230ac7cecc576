#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Outcome of an exhaustive axiom check.
struct AxiomReport {
    bool ok = true;
    std::string law;               ///< empty when ok
    std::array<Elem, 3> triple{};  ///< first failing instance
};

/// Exhaustive check of the ring axioms. Algebras are checked on basis triples.
/// Throws CapacityError when the ring is larger than `cap`.
AxiomReport validate_ring(const FiniteRing& ring, std::size_t cap = kDefaultRingSizeCap);

/// Throws ContractError naming the failing law when validate_ring fails.
void require_valid(const FiniteRing& ring, std::size_t cap = kDefaultRingSizeCap);

/// A two-sided ideal. Only produced by operations that guarantee closure.
class TwoSidedIdeal {
public:
    const ElementSet& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.count(); }
    bool contains(Elem e) const noexcept { return members_.contains(e); }
    bool is_zero() const noexcept { return members_.is_trivial(); }

    friend bool operator==(const TwoSidedIdeal&, const TwoSidedIdeal&) = default;

private:
    friend TwoSidedIdeal make_ideal_unchecked(ElementSet members);
    explicit TwoSidedIdeal(ElementSet members) : members_(std::move(members)) {}
    ElementSet members_;
};

/// Wraps a set already known to be a two-sided ideal.
TwoSidedIdeal make_ideal_unchecked(ElementSet members);

/// Right side: {c : x c = 0 for all x in X}; left side: {c : c x = 0 for all x in X}. Computed by scan.
ElementSet annihilator(const FiniteRing& ring, Side side, const ElementSet& xs);
ElementSet annihilator(const FiniteRing& ring, Side side, Elem x);

/// Same set as annihilator(), computed as the kernel of stacked multiplication
/// operators over Z/p. Requires a ring of prime characteristic.
ElementSet annihilator_by_kernel(const FiniteRing& ring, Side side, const ElementSet& xs);

/// Distinct positive powers a, a^2, ... up to the first repetition.
std::vector<Elem> power_orbit(const FiniteRing& ring, Elem a);

/// Least m with a^m = 0, or 0 when a is not nilpotent.
unsigned nilpotency_index(const FiniteRing& ring, Elem a);

ElementSet nil_set(const FiniteRing& ring);
ElementSet units(const FiniteRing& ring);
ElementSet idempotents(const FiniteRing& ring);
ElementSet center(const FiniteRing& ring);

/// Two-sided inverse of u, if any.
std::optional<Elem> inverse(const FiniteRing& ring, Elem u);

/// {x : 1 - r x is a unit for every r}.
TwoSidedIdeal jacobson_radical(const FiniteRing& ring);

/// Additive subgroup generated by the given elements.
ElementSet additive_closure(const FiniteRing& ring, const ElementSet& xs);

/// Least two-sided ideal containing X.
TwoSidedIdeal ideal_closure(const FiniteRing& ring, const ElementSet& xs);

/// Right side: aR; left side: Ra.
ElementSet cyclic_ideal(const FiniteRing& ring, Side side, Elem a);

/// Right side: X closed under addition and right multiplication; left symmetric.
bool is_one_sided_ideal(const FiniteRing& ring, Side side, const ElementSet& xs);
bool is_two_sided_ideal(const FiniteRing& ring, const ElementSet& xs);

/// Largest two-sided ideal inside a one-sided ideal I, {x in I : R x subset I} for a
/// right ideal. Throws ContractError when I is not a one-sided ideal of the given side.
TwoSidedIdeal bound_of_ideal(const FiniteRing& ring, Side side, const ElementSet& ideal);
inline TwoSidedIdeal bound_of_right_ideal(const FiniteRing& ring, const ElementSet& ideal) {
    return bound_of_ideal(ring, Side::Right, ideal);
}

/// Precomputed cyclic one-sided ideals aR (or Ra) of every element.
class CyclicIdeals {
public:
    CyclicIdeals(const FiniteRing& ring, Side side);
    const ElementSet& of(Elem a) const { return ideals_[a]; }
    Side side() const noexcept { return side_; }

private:
    Side side_;
    std::vector<ElementSet> ideals_;
};

/// I meets every nonzero cyclic ideal of the given side nontrivially.
bool is_essential(const FiniteRing& ring, Side side, const ElementSet& ideal);
bool is_essential(const CyclicIdeals& cyclic, const ElementSet& ideal);

/// {a : annihilator(side, a) is essential as a side-ideal}.
ElementSet singular_set(const FiniteRing& ring, Side side);

/// Distinct annihilators of arbitrary subsets: the intersection closure of the
/// single-element annihilators together with R itself. Sorted by handle order.
std::vector<ElementSet> annihilator_lattice(const FiniteRing& ring, Side side);

/// A nontrivial central idempotent, if one exists (lowest handle).
std::optional<Elem> central_idempotent(const FiniteRing& ring);

/// Human-readable rendering of an element set, e.g. "{0, x, x^2}".
std::string describe(const FiniteRing& ring, const ElementSet& xs);

}  // namespace ringlab
