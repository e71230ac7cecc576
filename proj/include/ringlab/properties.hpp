#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

/// Evidence that re-establishes a verdict by direct multiplication.
///
/// `elements` holds the named elements in the order given by `roles`, `exponents`
/// the (a, m) pairs of a weak-reversibility certificate, `polynomials` the f's
/// followed by g for McCoy violations.
struct Witness {
    std::vector<std::string> roles;
    std::vector<Elem> elements;
    std::vector<std::pair<Elem, unsigned>> exponents;
    std::vector<Polynomial> polynomials;
    std::optional<Side> side;
    std::string note;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
    std::string ring_id;
    std::string property;
    bool verdict = false;
    /// Set for McCoy checks: a true verdict only means no violation up to max_degree.
    bool bounded = false;
    int max_degree = 0;
    std::optional<Witness> witness;
    double elapsed_ms = 0;

    friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// Property ids accepted by check_property, in registry order.
const std::vector<std::string>& property_ids();
bool is_property_id(std::string_view id);

struct CheckOptions {
    int max_degree = 3;
    std::uint64_t enumeration_budget = 50'000'000;
};

/// Throws ContractError for an unknown id.
PropertyReport check_property(const RingPtr& ring, std::string_view property, const CheckOptions& options = {});

/// l(a) = r(a).
bool is_reversible_element(const FiniteRing& ring, Elem a);

/// Witness maps every nonzero a to the least m with a^m a nonzero reversible element,
/// or names the failing a together with a separating b for each of its nonzero powers.
PropertyReport is_weakly_reversible(const FiniteRing& ring);

struct McCoyViolation {
    Polynomial f;
    Polynomial g;
};

/// Nonzero f, g of degree <= dmax with f g = 0 (g f = 0 on the left) and no nonzero
/// constant c with f c = 0 (c f = 0). Exhaustive up to dmax.
std::optional<McCoyViolation> mccoy_falsify(const RingPtr& ring, Side side, int dmax,
                                            std::uint64_t enumeration_budget = 50'000'000);

/// Checks a witness against the report's verdict using only ring arithmetic and the
/// kernel's set queries. Returns false when the witness does not establish the verdict.
bool replay_witness(const FiniteRing& ring, const PropertyReport& report);

}  // namespace ringlab
