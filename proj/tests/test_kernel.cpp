#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "support.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/kernel.hpp"

using namespace ringlab;

namespace {

using support::as_set;
using support::named;

std::vector<RingPtr> sample_rings() {
    auto z2 = make_zn(2), z4 = make_zn(4);
    return {make_zn(8), make_zn(6), make_matrix(z2, 2), make_upper_triangular(z2, 3), make_skew_triangular(z2, 3),
            make_skew_triangular(z4, 2), make_ex22(2), make_ex22(3), make_product(make_ex22(2), z2)};
}

}  // namespace

TEST_CASE("validate_ring accepts Z8 and ex22(2)") {
    CHECK(validate_ring(*make_zn(8)).ok);
    CHECK(validate_ring(*make_ex22(2)).ok);
}

TEST_CASE("validate_ring reports the corrupted Z8 cell") {
    auto z8 = make_zn(8);
    std::vector<Elem> add(z8->add_table().begin(), z8->add_table().end());
    std::vector<Elem> mul(z8->mul_table().begin(), z8->mul_table().end());
    mul[2 * 8 + 2] = 5;
    FiniteRing bad("Z8*", 8, add, mul, 1, z8->names());
    const auto rep = validate_ring(bad);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.law.empty());
    const bool involves_two = std::count(rep.triple.begin(), rep.triple.end(), Elem{2}) > 0 ||
                              std::count(rep.triple.begin(), rep.triple.end(), Elem{1}) > 0;
    CHECK(involves_two);
    CHECK_THROWS_AS(require_valid(bad), ContractError);
}

TEST_CASE("validate_ring refuses rings over the cap") {
    CHECK_THROWS_AS(validate_ring(*make_zn(8), 4), CapacityError);
}

TEST_CASE("annihilators agree with brute force on both sides") {
    for (const auto& R : sample_rings()) {
        CAPTURE(R->id());
        for (std::size_t i = 0; i < R->size(); ++i) {
            const auto a = static_cast<Elem>(i);
            CHECK(as_set(annihilator(*R, Side::Right, a)) == oracle::right_ann(*R, a));
            CHECK(as_set(annihilator(*R, Side::Left, a)) == oracle::left_ann(*R, a));
        }
    }
}

TEST_CASE("kernel annihilators agree with scanned annihilators") {
    for (const auto& R : sample_rings()) {
        if (!R->linear()) continue;
        CAPTURE(R->id());
        for (std::size_t i = 0; i < R->size(); i += 3) {
            auto xs = ElementSet::of(R->size(), {static_cast<Elem>(i), static_cast<Elem>((i * 7 + 1) % R->size())});
            for (Side s : {Side::Left, Side::Right})
                CHECK(annihilator_by_kernel(*R, s, xs) == annihilator(*R, s, xs));
        }
    }
}

TEST_CASE("annihilator examples") {
    auto R = make_ex22(2);
    CHECK(annihilator(*R, Side::Right, ElementSet::of(R->size(), {0})) == R->all());
    const Elem x = named(*R, "x"), x2 = named(*R, "x^2");
    CHECK(annihilator(*R, Side::Right, x).count() == 16);
    CHECK(annihilator(*R, Side::Left, x).count() == 8);
    CHECK(annihilator(*R, Side::Right, x2) == annihilator(*R, Side::Left, x2));
    CHECK(annihilator(*R, Side::Right, x2).count() == 32);
}

TEST_CASE("power_orbit") {
    auto z8 = make_zn(8);
    CHECK(power_orbit(*z8, 2) == std::vector<Elem>{2, 4, 0});
    CHECK(power_orbit(*z8, 1) == std::vector<Elem>{1});
    auto R = make_ex22(2);
    CHECK(power_orbit(*R, named(*R, "x")) == std::vector<Elem>{named(*R, "x"), named(*R, "x^2"), 0});
    CHECK(nilpotency_index(*z8, 2) == 3);
    CHECK(nilpotency_index(*z8, 3) == 0);
}

TEST_CASE("nil_set, units and jacobson_radical") {
    auto z8 = make_zn(8);
    CHECK(as_set(nil_set(*z8)) == std::set<Elem>{0, 2, 4, 6});
    CHECK(as_set(jacobson_radical(*z8).members()) == std::set<Elem>{0, 2, 4, 6});
    auto m2 = make_matrix(make_zn(2), 2);
    CHECK(nil_set(*m2).count() == 4);
    CHECK(jacobson_radical(*m2).is_zero());
    for (const auto& R : sample_rings()) {
        CAPTURE(R->id());
        CHECK(as_set(nil_set(*R)) == oracle::nil(*R));
        auto u = units(*R);
        for (std::size_t i = 0; i < R->size(); ++i) CHECK(u.contains(static_cast<Elem>(i)) == oracle::unit(*R, static_cast<Elem>(i)));
    }
    auto R = make_ex22(2);
    CHECK(jacobson_radical(*R).members() == nil_set(*R));
}

TEST_CASE("ideal_closure") {
    auto R = make_ex22(2);
    CHECK(ideal_closure(*R, ElementSet::of(R->size(), {0})).is_zero());
    CHECK(ideal_closure(*R, ElementSet::of(R->size(), {R->one()})).size() == R->size());
    const Elem yx = named(*R, "yx");
    CHECK(as_set(ideal_closure(*R, ElementSet::of(R->size(), {yx})).members()) == std::set<Elem>{0, yx});
    for (const auto& S : sample_rings())
        CHECK(is_two_sided_ideal(*S, ideal_closure(*S, ElementSet::of(S->size(), {Elem{1}, Elem{2}})).members()));
}

TEST_CASE("bound_of_right_ideal") {
    auto R = make_ex22(2);
    CHECK(bound_of_right_ideal(*R, R->all()).size() == R->size());
    CHECK(bound_of_right_ideal(*R, ElementSet::of(R->size(), {0})).is_zero());
    auto ann = annihilator(*R, Side::Right, named(*R, "x"));
    auto b = bound_of_right_ideal(*R, ann);
    CHECK_FALSE(b.is_zero());
    CHECK(b.members().subset_of(ann));
    CHECK(is_two_sided_ideal(*R, b.members()));
    CHECK_THROWS_AS(bound_of_right_ideal(*R, ElementSet::of(R->size(), {named(*R, "x")})), ContractError);
}

TEST_CASE("essentiality and singular sets") {
    auto z8 = make_zn(8);
    CHECK(is_essential(*z8, Side::Right, ElementSet::of(8, {0, 4})));
    auto z6 = make_zn(6);
    CHECK_FALSE(is_essential(*z6, Side::Right, ElementSet::of(6, {0, 3})));
    CHECK(as_set(singular_set(*z8, Side::Right)) == std::set<Elem>{0, 2, 4, 6});
    CHECK(singular_set(*z6, Side::Right).is_trivial());
}

TEST_CASE("annihilator_lattice contains R and every single annihilator") {
    auto R = make_matrix(make_zn(2), 2);
    for (Side s : {Side::Left, Side::Right}) {
        auto lat = annihilator_lattice(*R, s);
        CHECK(std::find(lat.begin(), lat.end(), R->all()) != lat.end());
        for (std::size_t i = 0; i < R->size(); ++i)
            CHECK(std::find(lat.begin(), lat.end(), annihilator(*R, s, static_cast<Elem>(i))) != lat.end());
    }
}

TEST_CASE("central idempotents") {
    CHECK_FALSE(central_idempotent(*make_zn(8)));
    CHECK(central_idempotent(*make_zn(6)));
    CHECK_FALSE(central_idempotent(*make_matrix(make_zn(2), 2)));
}
