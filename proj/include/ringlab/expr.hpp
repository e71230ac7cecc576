#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Parsed ring expression:
///
///     expr := term { "x" term }
///     term := "Z" INT | ("M" | "T" | "S") INT "(" expr ")" | "ex22" "(" INT ")"
///           | "corner" "(" expr "," INT ")"
///
/// Names are case-insensitive, whitespace is ignored, products associate to the left.
struct RingExpr {
    enum class Kind { Zn, Matrix, UpperTriangular, SkewTriangular, Ex22, Product, Corner };

    Kind kind = Kind::Zn;
    unsigned n = 0;  ///< modulus, matrix size, prime, or corner idempotent handle
    std::vector<RingExpr> args;

    friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Throws ParseError carrying the offending character position.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical text; equals the id of the evaluated ring.
std::string to_string(const RingExpr& expr);

/// Builds rings, reusing earlier results keyed by canonical text.
class RingCache {
public:
    explicit RingCache(std::size_t cap = kDefaultRingSizeCap) : cap_(cap) {}

    RingPtr evaluate(const RingExpr& expr);
    RingPtr evaluate(std::string_view text) { return evaluate(parse_ring_expr(text)); }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
    std::map<std::string, RingPtr> built_;
};

}  // namespace ringlab
