#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "ringlab/claims.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"

using namespace ringlab;
using support::named;

namespace {

RingPtr corrupted_ex22(Elem a, Elem b, Elem value, bool keep_algebra) {
    auto R = make_ex22(2);
    std::vector<Elem> add(R->add_table().begin(), R->add_table().end());
    std::vector<Elem> mul(R->mul_table().begin(), R->mul_table().end());
    mul[a * R->size() + b] = value;
    if (keep_algebra)
        return std::make_shared<FiniteRing>("ex22(2)*", *R->algebra(), add, mul, R->one(), R->names(), R->origin());
    return std::make_shared<FiniteRing>("ex22(2)*", R->size(), add, mul, R->one(), R->names(), R->origin());
}

}  // namespace

TEST_CASE("registry") {
    const auto& reg = claim_registry();
    REQUIRE(reg.size() == 18);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == "C" + std::to_string(i + 1));
        CHECK_FALSE(reg[i].anchor.empty());
    }
    CHECK_THROWS_AS(run_claim("C19", make_zn(2)), ContractError);
}

TEST_CASE("claim examples") {
    RingCache cache;
    CHECK(run_claim("C2", cache.evaluate("Z4")).status == ClaimStatus::Pass);
    const auto c3 = run_claim("C3", cache.evaluate("S3(Z2)"));
    CHECK(c3.status == ClaimStatus::Pass);
    const auto c13 = run_claim("C13", cache.evaluate("ex22(2)"));
    CHECK(c13.status == ClaimStatus::Pass);
    CHECK(c13.note.find("32") != std::string::npos);
    CHECK(run_claim("C1", cache.evaluate("ex22(2)")).status == ClaimStatus::Pass);
    CHECK(run_claim("C1", cache.evaluate("ex22(3)")).status == ClaimStatus::Pass);
}

TEST_CASE("hypothesis gating on M2(Z2)") {
    RingCache cache;
    const auto rep = run_suite({cache.evaluate("M2(Z2)")});
    REQUIRE(rep.cells.size() == 18);
    for (const auto& cell : rep.cells) {
        CAPTURE(cell.claim);
        CHECK(cell.status != ClaimStatus::Fail);
        if (cell.claim == "C1" || cell.claim == "C3" || cell.claim == "C5" || cell.claim == "C17")
            CHECK(cell.status == ClaimStatus::HypothesisNotMet);
    }
    CHECK(rep.ok());
}

TEST_CASE("cap overflow is reported, never truncated") {
    RingCache cache;
    const auto r = run_claim("C2", cache.evaluate("ex22(3)"));
    CHECK(r.status == ClaimStatus::SkippedByCap);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("corrupted ex22 tables are caught") {
    struct Case {
        Elem a, b, value;
        bool algebra;
    };
    for (auto [a, b, value, algebra] : {Case{8, 2, 0, true}, Case{40, 33, 7, false}, Case{4, 4, 5, false}}) {
        CAPTURE(a);
        CAPTURE(b);
        auto bad = corrupted_ex22(a, b, value, algebra);
        CHECK_FALSE(validate_ring(*bad).ok);
        std::size_t replayed = 0;
        for (const auto& info : claim_registry()) {
            if (info.id == "C2") continue;
            const auto cell = run_claim(info.id, bad);
            if (cell.status == ClaimStatus::Fail && replay_failure(bad, cell)) ++replayed;
        }
        CHECK(replayed > 0);
    }
}

TEST_CASE("replay rejects passing cells and tampered traces") {
    auto bad = corrupted_ex22(40, 33, 7, false);
    auto cell = run_claim("C8", bad);
    REQUIRE(cell.status == ClaimStatus::Fail);
    REQUIRE(replay_failure(bad, cell));
    auto good = make_ex22(2);
    CHECK_FALSE(replay_failure(good, cell));
    cell.elements = {0, 0};
    CHECK_FALSE(replay_failure(bad, cell));
    CHECK_FALSE(replay_failure(good, run_claim("C8", good)));
}

TEST_CASE("exploration") {
    RingCache cache;
    std::vector<RingPtr> corpus{cache.evaluate("Z4"), cache.evaluate("Z6"), cache.evaluate("S2(Z2)"),
                                cache.evaluate("ex22(2)")};
    const auto rows = explore_problem(corpus);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(rows[i].weakly_reversible);
        CHECK(rows[i].pi_duo);
        CHECK(rows[i].reversible);
        CHECK_FALSE(rows[i].candidate());
    }
    CHECK(rows[3].weakly_reversible);
    CHECK_FALSE(rows[3].reversible);
    CHECK(rows[3].candidate() == rows[3].pi_duo);
    CHECK(rows[3].reversible == oracle::reversible_ring(*corpus[3]));
}

TEST_CASE("C18 is report-only") {
    RingCache cache;
    const auto r = run_claim("C18", cache.evaluate("ex22(2)"));
    CHECK(r.status == ClaimStatus::Pass);
    CHECK(r.note.starts_with("report-only"));
}
