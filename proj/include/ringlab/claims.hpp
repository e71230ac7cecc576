#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

enum class ClaimStatus { Pass, Fail, HypothesisNotMet, SkippedByCap };

/// "pass", "fail", "hypothesis-not-met", "skipped-by-cap".
std::string to_string(ClaimStatus status);

struct ClaimInfo {
    std::string id;      ///< "C1".."C18"
    std::string anchor;  ///< quoted statement the claim encodes
    std::string hypothesis;
};

const std::vector<ClaimInfo>& claim_registry();

struct SuiteCaps {
    int max_degree = 3;
    std::size_t ring_size_cap = kDefaultRingSizeCap;
    /// Largest number of f's enumerated by the polynomial lemmas; the degree of f is
    /// lowered (and reported) until the count fits.
    std::uint64_t polynomial_budget = 600'000;
    std::uint64_t enumeration_budget = 50'000'000;
};

struct ClaimResult {
    std::string claim;
    std::string ring;
    ClaimStatus status = ClaimStatus::Pass;
    /// Quantifier assignment of a failure, rendered for reading.
    std::vector<std::pair<std::string, std::string>> trace;
    /// The same assignment as handles / polynomials, for replay.
    std::vector<Elem> elements;
    std::vector<Polynomial> polynomials;
    std::string note;
    double elapsed_ms = 0;
};

/// Throws ContractError for an unknown claim id. Capacity problems become skipped-by-cap.
ClaimResult run_claim(const std::string& claim, const RingPtr& ring, const SuiteCaps& caps = {});

struct SuiteReport {
    std::vector<std::string> rings;
    std::vector<ClaimResult> cells;  ///< ordered by (claim, ring)
    std::size_t count(ClaimStatus s) const;
    bool ok() const { return count(ClaimStatus::Fail) == 0; }
};

SuiteReport run_suite(const std::vector<RingPtr>& corpus, const SuiteCaps& caps = {});

/// Ring expressions of the default corpus.
const std::vector<std::string>& default_corpus();

struct ExplorationRow {
    std::string ring;
    bool weakly_reversible = false;
    bool pi_duo = false;
    bool reversible = false;
    bool candidate() const { return weakly_reversible && pi_duo && !reversible; }
};

std::vector<ExplorationRow> explore_problem(const std::vector<RingPtr>& corpus);

/// Re-checks a failed cell's recorded assignment with ring arithmetic. Returns false when
/// the assignment does not exhibit a violation.
bool replay_failure(const RingPtr& ring, const ClaimResult& result, const SuiteCaps& caps = {});

}  // namespace ringlab
