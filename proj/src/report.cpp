#include "ringlab/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace ringlab {

using nlohmann::json;

namespace {

json element_json(const FiniteRing& ring, Elem e) { return {{"handle", e}, {"name", ring.name(e)}}; }

json polynomial_json(const FiniteRing& ring, const Polynomial& p) {
    return {{"coeffs", p.coeffs()}, {"text", to_string(ring, p)}};
}

const char* side_text(Side s) { return s == Side::Right ? "right" : "left"; }

json witness_json(const FiniteRing& ring, const Witness& w) {
    json j = json::object();
    if (!w.elements.empty()) {
        json elems = json::array();
        for (std::size_t i = 0; i < w.elements.size(); ++i) {
            json e = element_json(ring, w.elements[i]);
            e["role"] = i < w.roles.size() ? w.roles[i] : "";
            elems.push_back(e);
        }
        j["elements"] = elems;
    }
    if (!w.exponents.empty()) {
        json exps = json::array();
        for (auto [a, m] : w.exponents) exps.push_back({{"a", element_json(ring, a)}, {"m", m}});
        j["exponents"] = exps;
    }
    if (!w.polynomials.empty()) {
        json polys = json::array();
        for (std::size_t i = 0; i < w.polynomials.size(); ++i) {
            json p = polynomial_json(ring, w.polynomials[i]);
            p["role"] = i < w.roles.size() ? w.roles[i] : "";
            polys.push_back(p);
        }
        j["polynomials"] = polys;
    }
    if (w.side) j["side"] = side_text(*w.side);
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

Witness witness_from_json(const json& j) {
    Witness w;
    if (j.contains("elements"))
        for (const auto& e : j["elements"]) {
            w.elements.push_back(e["handle"].get<Elem>());
            w.roles.push_back(e["role"].get<std::string>());
        }
    if (j.contains("exponents"))
        for (const auto& e : j["exponents"]) w.exponents.emplace_back(e["a"]["handle"].get<Elem>(), e["m"].get<unsigned>());
    if (j.contains("polynomials"))
        for (const auto& p : j["polynomials"]) {
            w.polynomials.emplace_back(p["coeffs"].get<std::vector<Elem>>());
            w.roles.push_back(p["role"].get<std::string>());
        }
    if (j.contains("side")) w.side = j["side"] == "right" ? Side::Right : Side::Left;
    if (j.contains("note")) w.note = j["note"].get<std::string>();
    return w;
}

json caps_json(const ReportCaps& caps) { return {{"max-degree", caps.max_degree}, {"ring-size-cap", caps.ring_size_cap}}; }

std::string timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::string verdict_text(const PropertyReport& r) {
    if (r.bounded) return r.verdict ? "no violation up to degree " + std::to_string(r.max_degree) : "violated";
    return r.verdict ? "true" : "false";
}

}  // namespace

json property_json(const FiniteRing& ring, const PropertyReport& report, const ReportCaps& caps) {
    json j{{"tool-version", kToolVersion},
           {"ring", report.ring_id},
           {"property", report.property},
           {"verdict", report.verdict},
           {"verdict-text", verdict_text(report)},
           {"bounded", report.bounded},
           {"elapsed-ms", report.elapsed_ms},
           {"caps", caps_json(caps)}};
    if (report.bounded) j["max-degree"] = report.max_degree;
    if (report.witness) j["witness"] = witness_json(ring, *report.witness);
    return j;
}

PropertyReport property_from_json(const json& j) {
    PropertyReport r;
    r.ring_id = j.at("ring").get<std::string>();
    r.property = j.at("property").get<std::string>();
    r.verdict = j.at("verdict").get<bool>();
    r.bounded = j.value("bounded", false);
    r.max_degree = j.value("max-degree", 0);
    r.elapsed_ms = j.value("elapsed-ms", 0.0);
    if (j.contains("witness")) r.witness = witness_from_json(j["witness"]);
    return r;
}

json suite_json(const SuiteReport& report, const ReportCaps& caps, double elapsed_ms) {
    json claims = json::array();
    for (const auto& c : claim_registry())
        claims.push_back({{"id", c.id}, {"anchor", c.anchor}, {"hypothesis", c.hypothesis}});
    json matrix = json::array();
    for (const auto& cell : report.cells) {
        json m{{"claim", cell.claim}, {"ring", cell.ring}, {"status", to_string(cell.status)}};
        if (!cell.note.empty()) m["note"] = cell.note;
        if (!cell.trace.empty()) {
            json trace = json::array();
            for (const auto& [k, v] : cell.trace) trace.push_back({{"name", k}, {"value", v}});
            m["trace"] = trace;
        }
        if (!cell.elements.empty()) m["handles"] = cell.elements;
        matrix.push_back(m);
    }
    return {{"tool-version", kToolVersion},
            {"ring", report.rings},
            {"claims", claims},
            {"matrix", matrix},
            {"summary",
             {{"pass", report.count(ClaimStatus::Pass)},
              {"fail", report.count(ClaimStatus::Fail)},
              {"hypothesis-not-met", report.count(ClaimStatus::HypothesisNotMet)},
              {"skipped-by-cap", report.count(ClaimStatus::SkippedByCap)}}},
            {"timestamp", timestamp()},
            {"elapsed-ms", elapsed_ms},
            {"caps", caps_json(caps)}};
}

json exploration_json(const std::vector<ExplorationRow>& rows, const ReportCaps& caps, double elapsed_ms) {
    json ids = json::array(), table = json::array();
    for (const auto& r : rows) {
        ids.push_back(r.ring);
        table.push_back({{"ring", r.ring},
                         {"weakly-reversible", r.weakly_reversible},
                         {"pi-duo", r.pi_duo},
                         {"reversible", r.reversible},
                         {"counterexample-candidate", r.candidate()}});
    }
    return {{"tool-version", kToolVersion}, {"ring", ids},        {"exploration", table},
            {"timestamp", timestamp()},     {"elapsed-ms", elapsed_ms}, {"caps", caps_json(caps)}};
}

json without_volatile_fields(json j) {
    if (j.is_object()) {
        j.erase("timestamp");
        j.erase("elapsed-ms");
        for (auto& [k, v] : j.items()) v = without_volatile_fields(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = without_volatile_fields(v);
    }
    return j;
}

std::string format_property(const FiniteRing& ring, const PropertyReport& report) {
    std::ostringstream out;
    out << report.ring_id << "  " << report.property << ": " << verdict_text(report) << "\n";
    if (!report.witness) return out.str();
    const Witness& w = *report.witness;
    if (w.side) out << "  side: " << side_text(*w.side) << "\n";
    for (std::size_t i = 0; i < w.elements.size(); ++i)
        out << "  " << (i < w.roles.size() ? w.roles[i] : "?") << " = " << ring.name(w.elements[i]) << "  [#"
            << w.elements[i] << "]\n";
    for (std::size_t i = 0; i < w.polynomials.size(); ++i)
        out << "  " << (i < w.roles.size() ? w.roles[i] : "?") << "(x) = " << to_string(ring, w.polynomials[i]) << "\n";
    if (!w.exponents.empty()) {
        unsigned max_m = 0;
        for (auto [a, m] : w.exponents) max_m = std::max(max_m, m);
        out << "  exponent certificate for " << w.exponents.size() << " nonzero elements, largest m = " << max_m << "\n";
    }
    if (!w.note.empty()) out << "  " << w.note << "\n";
    return out.str();
}

std::string format_suite(const SuiteReport& report) {
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& r : report.rings) width = std::max(width, r.size());
    auto short_status = [](ClaimStatus s) {
        switch (s) {
            case ClaimStatus::Pass: return "pass";
            case ClaimStatus::Fail: return "FAIL";
            case ClaimStatus::HypothesisNotMet: return "n/a";
            case ClaimStatus::SkippedByCap: return "cap";
        }
        return "?";
    };
    const auto& claims = claim_registry();
    out << std::left << std::setw(static_cast<int>(width) + 2) << "ring";
    for (const auto& c : claims) out << std::setw(5) << c.id;
    out << "\n";
    for (std::size_t r = 0; r < report.rings.size(); ++r) {
        out << std::setw(static_cast<int>(width) + 2) << report.rings[r];
        for (std::size_t c = 0; c < claims.size(); ++c)
            out << std::setw(5) << short_status(report.cells[c * report.rings.size() + r].status);
        out << "\n";
    }
    for (const auto& cell : report.cells) {
        if (cell.status != ClaimStatus::Fail && cell.status != ClaimStatus::SkippedByCap) continue;
        out << cell.claim << " on " << cell.ring << ": " << to_string(cell.status);
        if (!cell.note.empty()) out << " (" << cell.note << ")";
        for (const auto& [k, v] : cell.trace) out << "  " << k << "=" << v;
        out << "\n";
    }
    out << "pass " << report.count(ClaimStatus::Pass) << ", fail " << report.count(ClaimStatus::Fail)
        << ", hypothesis-not-met " << report.count(ClaimStatus::HypothesisNotMet) << ", skipped-by-cap "
        << report.count(ClaimStatus::SkippedByCap) << "\n";
    return out.str();
}

std::string format_exploration(const std::vector<ExplorationRow>& rows) {
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& r : rows) width = std::max(width, r.ring.size());
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << std::left << std::setw(static_cast<int>(width) + 2) << "ring" << std::setw(19) << "weakly-reversible"
        << std::setw(8) << "pi-duo" << std::setw(12) << "reversible" << "\n";
    for (const auto& r : rows) {
        out << std::setw(static_cast<int>(width) + 2) << r.ring << std::setw(19) << yn(r.weakly_reversible) << std::setw(8)
            << yn(r.pi_duo) << std::setw(12) << yn(r.reversible);
        if (r.candidate()) out << "counterexample-candidate";
        out << "\n";
    }
    return out.str();
}

std::string format_table(const FiniteRing& ring) {
    std::ostringstream out;
    std::size_t width = 1;
    for (const auto& n : ring.names()) width = std::max(width, n.size());
    const int w = static_cast<int>(width) + 1;
    out << ring.id() << " (" << ring.size() << " elements)\n" << std::setw(w) << "*" << " |";
    for (std::size_t b = 0; b < ring.size(); ++b) out << std::setw(w) << ring.name(static_cast<Elem>(b));
    out << "\n";
    for (std::size_t a = 0; a < ring.size(); ++a) {
        out << std::setw(w) << ring.name(static_cast<Elem>(a)) << " |";
        for (std::size_t b = 0; b < ring.size(); ++b)
            out << std::setw(w) << ring.name(ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
        out << "\n";
    }
    return out.str();
}

json table_json(const FiniteRing& ring) {
    std::vector<Elem> mul(ring.mul_table().begin(), ring.mul_table().end());
    std::vector<Elem> add(ring.add_table().begin(), ring.add_table().end());
    return {{"tool-version", kToolVersion}, {"ring", ring.id()}, {"size", ring.size()},
            {"names", ring.names()},        {"add", add},        {"mul", mul}};
}

}  // namespace ringlab
