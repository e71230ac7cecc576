#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/kernel.hpp"

namespace ringlab {

inline constexpr int kDefaultDegreeCap = 4;

/// Element of R[x] as coefficient handles a_0..a_m, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Elem c) { return Polynomial(std::vector<Elem>{c}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Elem> coeffs_;
};

Polynomial poly_add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g);

/// Convolution product f*g. Throws DegreeOverflow when deg f + deg g exceeds the cap.
Polynomial poly_mul(const FiniteRing& ring, const Polynomial& f, const Polynomial& g,
                    int degree_cap = kDefaultDegreeCap);

/// Coefficient set c_f (just {0} for the zero polynomial).
ElementSet content(const FiniteRing& ring, const Polynomial& f);
/// Union of the coefficient sets, c_X.
ElementSet content(const FiniteRing& ring, const std::vector<Polynomial>& fs);

/// Renders f as e.g. "x + (yx)*x^2"; coefficients use element names.
std::string to_string(const FiniteRing& ring, const Polynomial& f);

enum class SolveMethod { Auto, Kernel, Enumeration };

/// Solutions g of degree <= d to f*g = 0 (right side) or g*f = 0 (left side).
struct PolyAnnihilator {
    bool everything = false;         ///< f = 0: every g qualifies
    bool nonzero_exists = false;
    std::optional<Polynomial> witness;
    std::uint64_t solution_count = 0;  ///< includes g = 0
    SolveMethod method = SolveMethod::Auto;
};

/// Kernel path needs prime characteristic; enumeration prunes from g's leading
/// coefficient, which must lie in the annihilator of f's leading coefficient.
PolyAnnihilator poly_annihilator(const FiniteRing& ring, Side side, const Polynomial& f, int d,
                                 int degree_cap = kDefaultDegreeCap, SolveMethod method = SolveMethod::Auto);

inline PolyAnnihilator right_poly_annihilator(const FiniteRing& ring, const Polynomial& f, int d,
                                              int degree_cap = kDefaultDegreeCap,
                                              SolveMethod method = SolveMethod::Auto) {
    return poly_annihilator(ring, Side::Right, f, d, degree_cap, method);
}

/// Basis (over Z/p) of {g : deg g <= d, f*g = 0} (right) or g*f = 0 (left).
std::vector<Polynomial> poly_annihilator_basis(const FiniteRing& ring, Side side, const Polynomial& f, int d);

/// Right: {c : f(x) c = 0 for all f in X}; left: {c : c f(x) = 0}.
ElementSet constant_annihilator(const FiniteRing& ring, const std::vector<Polynomial>& xs, Side side);

/// What the coefficient set C of the searched polynomials must satisfy.
enum class ContentCondition {
    ZeroAnnihilator,        ///< right case: no nonzero c with C c = 0
    ZeroBoundedAnnihilator  ///< right case: no nonzero c with C R c = 0
};

struct CofactorQuery {
    Side side = Side::Right;
    int f_degree = 1;
    int g_degree = 1;
    ContentCondition condition = ContentCondition::ZeroAnnihilator;
    int family_size = 1;  ///< 1 or 2 polynomials sharing the annihilator g
    std::uint64_t enumeration_budget = 50'000'000;
};

struct CofactorWitness {
    std::vector<Polynomial> fs;
    Polynomial g;
};

/// Searches polynomials f_1..f_s (deg <= f_degree) and a nonzero g (deg <= g_degree)
/// with f_i g = 0 (g f_i = 0 on the left side) whose joint content meets the
/// condition. Exhaustive up to the degree bounds: returns nullopt only when no
/// such family exists.
///
/// Reductions used, all exact: a ring with a nontrivial central idempotent is
/// split into its two corners; g is shifted so b_0 != 0 and multiplied by
/// radical elements until its coefficients annihilate the Jacobson radical,
/// since f g = 0 implies f (g r) = 0. Throws CapacityError when the search
/// budget is exceeded.
std::optional<CofactorWitness> find_annihilated_family(const RingPtr& ring, const CofactorQuery& query);

}  // namespace ringlab
