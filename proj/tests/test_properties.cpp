#include <doctest.h>

#include <functional>
#include <map>

#include "oracle.hpp"
#include "support.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/kernel.hpp"
#include "ringlab/properties.hpp"

using namespace ringlab;
using support::named;

namespace {

using Pred = std::function<bool(const FiniteRing&)>;

bool all_pairs(const FiniteRing& R, const std::function<bool(Elem, Elem)>& p) {
    for (Elem a : oracle::all(R))
        for (Elem b : oracle::all(R))
            if (!p(a, b)) return false;
    return true;
}

bool central(const FiniteRing& R, Elem a) {
    for (Elem r : oracle::all(R))
        if (R.mul(a, r) != R.mul(r, a)) return false;
    return true;
}

bool in_left_multiples(const FiniteRing& R, Elem target, Elem a) {
    for (Elem s : oracle::all(R))
        if (R.mul(s, a) == target) return true;
    return false;
}

bool in_right_multiples(const FiniteRing& R, Elem target, Elem a) {
    for (Elem s : oracle::all(R))
        if (R.mul(a, s) == target) return true;
    return false;
}

bool pi_duo_side(const FiniteRing& R, bool right) {
    for (Elem a : oracle::all(R)) {
        if (a == 0) continue;
        bool found = false;
        std::set<Elem> seen;
        for (Elem p = a; p != 0 && !found && seen.insert(p).second; p = R.mul(p, a)) {
            bool ok = true;
            for (Elem r : oracle::all(R))
                if (right ? !in_left_multiples(R, R.mul(p, r), p) : !in_right_multiples(R, R.mul(r, p), p)) {
                    ok = false;
                    break;
                }
            found = ok;
        }
        if (!found) return false;
    }
    return true;
}

std::set<Elem> jacobson(const FiniteRing& R) {
    std::set<Elem> j;
    for (Elem x : oracle::all(R)) {
        bool in = true;
        for (Elem r : oracle::all(R))
            if (!oracle::unit(R, R.sub(R.one(), R.mul(r, x)))) in = false;
        if (in) j.insert(x);
    }
    return j;
}

const std::map<std::string, Pred>& oracles() {
    static const std::map<std::string, Pred> m{
        {"reversible", [](const FiniteRing& R) { return oracle::reversible_ring(R); }},
        {"weakly-reversible", [](const FiniteRing& R) { return oracle::weakly_reversible(R); }},
        {"abelian", [](const FiniteRing& R) { return oracle::abelian(R); }},
        {"reduced", [](const FiniteRing& R) { return oracle::nil(R).size() == 1; }},
        {"nil-reversible",
         [](const FiniteRing& R) {
             return all_pairs(R, [&](Elem a, Elem b) {
                 return !oracle::nilpotent(R, a) || R.mul(a, b) != 0 || R.mul(b, a) == 0;
             });
         }},
        {"semicommutative",
         [](const FiniteRing& R) {
             return all_pairs(R, [&](Elem a, Elem b) {
                 if (R.mul(a, b) != 0) return true;
                 for (Elem r : oracle::all(R))
                     if (R.mul(R.mul(a, r), b) != 0) return false;
                 return true;
             });
         }},
        {"cn",
         [](const FiniteRing& R) {
             for (Elem a : oracle::nil(R))
                 if (!central(R, a)) return false;
             return true;
         }},
        {"pi-cn",
         [](const FiniteRing& R) {
             for (Elem a : oracle::all(R))
                 if (R.mul(a, a) == 0 && !central(R, a)) return false;
             return true;
         }},
        {"duo-right",
         [](const FiniteRing& R) {
             return all_pairs(R, [&](Elem a, Elem r) { return in_right_multiples(R, R.mul(r, a), a); });
         }},
        {"duo-left",
         [](const FiniteRing& R) {
             return all_pairs(R, [&](Elem a, Elem r) { return in_left_multiples(R, R.mul(a, r), a); });
         }},
        {"pi-duo", [](const FiniteRing& R) { return pi_duo_side(R, true) && pi_duo_side(R, false); }},
        {"two-primal", [](const FiniteRing& R) { return jacobson(R) == oracle::nil(R); }},
    };
    return m;
}

std::vector<RingPtr> small_rings() {
    RingCache cache;
    std::vector<RingPtr> out;
    for (const char* e : {"Z4", "Z6", "Z8", "M2(Z2)", "T2(Z2)", "T2(Z3)", "S2(Z4)", "S3(Z2)", "ex22(2)", "Z2 x T2(Z2)",
                          "corner(M2(Z2),1)"})
        out.push_back(cache.evaluate(e));
    return out;
}

}  // namespace

TEST_CASE("property verdicts match brute-force definitions") {
    for (const auto& R : small_rings())
        for (const auto& [id, pred] : oracles()) {
            CAPTURE(R->id());
            CAPTURE(id);
            CHECK(check_property(R, id).verdict == pred(*R));
        }
}

TEST_CASE("every report's witness replays") {
    for (const auto& R : small_rings())
        for (const auto& id : property_ids()) {
            CAPTURE(R->id());
            CAPTURE(id);
            CheckOptions opts;
            opts.max_degree = 2;
            const auto rep = check_property(R, id, opts);
            if (!rep.verdict) CHECK(rep.witness.has_value());
            CHECK(replay_witness(*R, rep));
        }
}

TEST_CASE("tampered witnesses do not replay") {
    RingCache cache;
    auto m2 = cache.evaluate("M2(Z2)");
    auto rep = check_property(m2, "reversible");
    REQUIRE_FALSE(rep.verdict);
    REQUIRE(rep.witness);
    rep.witness->elements = {1, 1};
    CHECK_FALSE(replay_witness(*m2, rep));

    auto mc = check_property(m2, "mccoy-right", {1});
    REQUIRE_FALSE(mc.verdict);
    REQUIRE(mc.witness);
    REQUIRE(mc.witness->polynomials.size() == 2);
    mc.witness->polynomials[1] = Polynomial::constant(1);
    CHECK_FALSE(replay_witness(*m2, mc));

    auto wr = check_property(cache.evaluate("ex22(2)"), "weakly-reversible");
    REQUIRE(wr.verdict);
    REQUIRE(wr.witness);
    wr.witness->exponents.pop_back();
    CHECK_FALSE(replay_witness(*cache.evaluate("ex22(2)"), wr));
}

TEST_CASE("implications hold over the small rings") {
    for (const auto& R : small_rings()) {
        CAPTURE(R->id());
        auto v = [&](const char* id) { return check_property(R, id, {2}).verdict; };
        if (v("reduced")) CHECK(v("reversible"));
        if (v("reversible")) CHECK((v("weakly-reversible") && v("semicommutative") && v("nil-reversible")));
        if (v("semicommutative")) CHECK(v("abelian"));
        if (v("weakly-reversible")) {
            CHECK(v("abelian"));
            CHECK(v("reduced") == v("nonsingular-right"));
            CHECK(v("reduced") == v("nonsingular-left"));
            CHECK(v("two-primal"));
        }
        if (v("cn")) CHECK(v("pi-cn"));
        if (v("duo-right") && v("duo-left")) CHECK(v("pi-duo"));
    }
}

TEST_CASE("weak reversibility certificate") {
    auto R = make_ex22(2);
    const auto rep = is_weakly_reversible(*R);
    CHECK(rep.verdict);
    REQUIRE(rep.witness);
    CHECK(rep.witness->exponents.size() == 63);
    for (auto [a, m] : rep.witness->exponents) {
        CHECK(m <= 2);
        CHECK(R->pow(a, m) != 0);
        CHECK(oracle::reversible_element(*R, R->pow(a, m)));
    }
    CHECK_FALSE(is_reversible_element(*R, named(*R, "x")));
    CHECK(is_reversible_element(*R, named(*R, "x^2")));
}

TEST_CASE("M2(Z2) is neither abelian nor weakly reversible") {
    RingCache cache;
    auto R = cache.evaluate("M2(Z2)");
    const auto ab = check_property(R, "abelian");
    CHECK_FALSE(ab.verdict);
    REQUIRE(ab.witness);
    const Elem e = ab.witness->elements.at(0);
    CHECK(R->mul(e, e) == e);
    CHECK_FALSE(central(*R, e));
    CHECK_FALSE(check_property(R, "weakly-reversible").verdict);
}

TEST_CASE("McCoy reports are bounded") {
    RingCache cache;
    const auto rep = check_property(cache.evaluate("ex22(2)"), "mccoy-right", {2});
    CHECK(rep.bounded);
    CHECK(rep.max_degree == 2);
    CHECK(rep.verdict);
    CHECK_THROWS_AS(check_property(cache.evaluate("Z2"), "zip"), ContractError);
}
