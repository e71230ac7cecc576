#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/claims.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

inline constexpr const char* kToolVersion = "0.3.0";

struct ReportCaps {
    int max_degree = 3;
    std::size_t ring_size_cap = kDefaultRingSizeCap;
};

/// {tool-version, ring, property, verdict, witness?, elapsed-ms, caps}. Witness elements
/// carry both the handle and the element's printed name.
nlohmann::json property_json(const FiniteRing& ring, const PropertyReport& report, const ReportCaps& caps);

/// Inverse of property_json (names are dropped; handles are authoritative).
PropertyReport property_from_json(const nlohmann::json& j);

/// {tool-version, ring: [...], claims: [...], matrix: [...], summary, timestamp, elapsed-ms, caps}.
nlohmann::json suite_json(const SuiteReport& report, const ReportCaps& caps, double elapsed_ms);

nlohmann::json exploration_json(const std::vector<ExplorationRow>& rows, const ReportCaps& caps, double elapsed_ms);

/// Drops the fields that legitimately differ between identical runs.
nlohmann::json without_volatile_fields(nlohmann::json j);

std::string format_property(const FiniteRing& ring, const PropertyReport& report);
std::string format_suite(const SuiteReport& report);
std::string format_exploration(const std::vector<ExplorationRow>& rows);
std::string format_table(const FiniteRing& ring);
nlohmann::json table_json(const FiniteRing& ring);

}  // namespace ringlab
