#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/properties.hpp"

using namespace ringlab;
using support::named;

namespace {

Polynomial P(std::vector<Elem> c) { return Polynomial(std::move(c)); }

// Right case: no nonzero c with C c = 0 (bounded: C R c = 0); left case mirrored.
bool content_condition(const FiniteRing& R, Side side, const std::vector<std::vector<Elem>>& fs, bool bounded) {
    for (std::size_t c = 1; c < R.size(); ++c) {
        bool kills = true;
        for (const auto& f : fs)
            for (Elem a : f)
                for (std::size_t r = 0; r < (bounded ? R.size() : 1) && kills; ++r) {
                    const Elem ar = bounded ? R.mul(side, a, static_cast<Elem>(r)) : a;
                    if (R.mul(side, ar, static_cast<Elem>(c)) != 0) kills = false;
                }
        if (kills) return false;
    }
    return true;
}

bool is_zero_product(const FiniteRing& R, Side side, const std::vector<Elem>& f, const std::vector<Elem>& g) {
    return side == Side::Right ? oracle::poly_mul(R, f, g).empty() : oracle::poly_mul(R, g, f).empty();
}

// Brute force over families of `size` polynomials of degree <= d sharing one nonzero annihilator g.
bool family_exists(const FiniteRing& R, Side side, int d, int size, bool bounded) {
    std::vector<std::vector<Elem>> all;
    oracle::for_each_poly(R, d, [&](const std::vector<Elem>& f) { all.push_back(f); });
    for (std::size_t gi = 1; gi < all.size(); ++gi) {
        std::vector<std::size_t> killed;
        for (std::size_t fi = 1; fi < all.size(); ++fi)
            if (is_zero_product(R, side, all[fi], all[gi])) killed.push_back(fi);
        for (std::size_t i : killed) {
            if (size == 1) {
                if (content_condition(R, side, {all[i]}, bounded)) return true;
                continue;
            }
            for (std::size_t j : killed)
                if (content_condition(R, side, {all[i], all[j]}, bounded)) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("poly_mul matches naive convolution and respects the cap") {
    auto R = make_upper_triangular(make_zn(2), 2);
    oracle::for_each_poly(*R, 1, [&](const std::vector<Elem>& f) {
        for (Elem a = 0; a < R->size(); ++a)
            for (Elem b = 0; b < R->size(); b = static_cast<Elem>(b + 3)) {
                const std::vector<Elem> g{a, b};
                CHECK(poly_mul(*R, P(f), P(g)).coeffs() == oracle::poly_mul(*R, f, g));
            }
    });
    const auto f = P({1, 1, 1});
    CHECK(poly_mul(*R, f, Polynomial{}).is_zero());
    CHECK_THROWS_AS(poly_mul(*R, f, P({0, 0, 0, 1})), DegreeOverflow);
    CHECK_NOTHROW(poly_mul(*R, f, P({0, 0, 1})));
}

TEST_CASE("poly_mul is associative and distributive over Z2-coefficient polynomials") {
    auto R = make_matrix(make_zn(2), 2);
    const std::vector<Elem> pick{0, 1, matrix_unit(*R, 1, 2), matrix_unit(*R, 2, 1)};
    std::vector<Polynomial> ps;
    for (Elem a : pick)
        for (Elem b : pick) ps.push_back(P({a, b}));
    for (const auto& f : ps)
        for (const auto& g : ps)
            for (const auto& h : ps) {
                CHECK(poly_mul(*R, poly_mul(*R, f, g), h) == poly_mul(*R, f, poly_mul(*R, g, h)));
                CHECK(poly_mul(*R, f, poly_add(*R, g, h)) == poly_add(*R, poly_mul(*R, f, g), poly_mul(*R, f, h)));
            }
}

TEST_CASE("matrix examples") {
    auto R = make_matrix(make_zn(2), 2);
    const Elem e11 = matrix_unit(*R, 1, 1), e12 = matrix_unit(*R, 1, 2), e21 = matrix_unit(*R, 2, 1);
    const auto f = P({e11, e12});
    const auto g = P({e21, e11});
    CHECK(poly_mul(*R, f, g).is_zero());
    for (auto method : {SolveMethod::Kernel, SolveMethod::Enumeration}) {
        const auto ann = right_poly_annihilator(*R, f, 1, kDefaultDegreeCap, method);
        CHECK(ann.nonzero_exists);
        REQUIRE(ann.witness);
        CHECK(poly_mul(*R, f, *ann.witness).is_zero());
    }
    CHECK(constant_annihilator(*R, {f}, Side::Right).is_trivial());
}

TEST_CASE("poly_annihilator agrees with brute force for both methods") {
    std::vector<RingPtr> rings{make_zn(4), make_upper_triangular(make_zn(2), 2), make_skew_triangular(make_zn(2), 3)};
    for (const auto& R : rings) {
        CAPTURE(R->id());
        oracle::for_each_poly(*R, 1, [&](const std::vector<Elem>& f) {
            for (Side side : {Side::Left, Side::Right}) {
                std::uint64_t count = 0;
                oracle::for_each_poly(*R, 1, [&](const std::vector<Elem>& g) { count += is_zero_product(*R, side, f, g); });
                const auto fp = P(f);
                if (fp.is_zero()) {
                    CHECK(poly_annihilator(*R, side, fp, 1).everything);
                    continue;
                }
                for (auto method : {SolveMethod::Kernel, SolveMethod::Enumeration}) {
                    if (method == SolveMethod::Kernel && !R->linear()) continue;
                    const auto ann = poly_annihilator(*R, side, fp, 1, kDefaultDegreeCap, method);
                    CHECK(ann.solution_count == count);
                    CHECK(ann.nonzero_exists == (count > 1));
                    if (ann.witness) CHECK(is_zero_product(*R, side, f, ann.witness->coeffs()));
                }
            }
        });
    }
}

TEST_CASE("ex22 constant examples") {
    auto R = make_ex22(2);
    const Elem x = named(*R, "x"), x2 = named(*R, "x^2"), y = named(*R, "y");
    CHECK(poly_mul(*R, Polynomial::constant(x), Polynomial::constant(y)).is_zero());
    const auto ann = right_poly_annihilator(*R, Polynomial::constant(x), 0);
    CHECK(ann.solution_count == 16);
    CHECK(constant_annihilator(*R, {P({x, x2})}, Side::Right).contains(y));
    CHECK(constant_annihilator(*R, {Polynomial{}}, Side::Right) == R->all());
    CHECK(poly_annihilator_basis(*R, Side::Right, Polynomial::constant(x), 0).size() == 4);
}

TEST_CASE("mccoy_falsify agrees with brute force at degree 1") {
    std::vector<RingPtr> rings{make_zn(4), make_upper_triangular(make_zn(2), 2), make_skew_triangular(make_zn(2), 3)};
    for (const auto& R : rings)
        for (Side side : {Side::Left, Side::Right}) {
            CAPTURE(R->id());
            CAPTURE(side == Side::Right);
            const auto v = mccoy_falsify(R, side, 1);
            CHECK(v.has_value() == family_exists(*R, side, 1, 1, false));
            if (v) {
                CHECK(is_zero_product(*R, side, v->f.coeffs(), v->g.coeffs()));
                CHECK(constant_annihilator(*R, {v->f}, side).is_trivial());
            }
        }
}

TEST_CASE("bounded-annihilator families agree with brute force") {
    auto R = make_upper_triangular(make_zn(2), 2);
    for (Side side : {Side::Left, Side::Right})
        for (int size : {1, 2}) {
            CofactorQuery q;
            q.side = side;
            q.f_degree = q.g_degree = 1;
            q.family_size = size;
            q.condition = ContentCondition::ZeroBoundedAnnihilator;
            const auto w = find_annihilated_family(R, q);
            CHECK(w.has_value() == family_exists(*R, side, 1, size, true));
        }
}

TEST_CASE("T2(Z2) is not right McCoy") {
    auto R = make_upper_triangular(make_zn(2), 2);
    const Elem e11 = matrix_unit(*R, 1, 1), e12 = matrix_unit(*R, 1, 2), e22 = matrix_unit(*R, 2, 2);
    const auto f = P({e12, e11}), g = P({e12, e22});
    CHECK(poly_mul(*R, f, g).is_zero());
    CHECK(constant_annihilator(*R, {f}, Side::Right).is_trivial());
}
