#pragma once

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "ringlab/finite_ring.hpp"

namespace support {

inline std::set<ringlab::Elem> as_set(const ringlab::ElementSet& s) {
    auto v = s.elements();
    return {v.begin(), v.end()};
}

inline ringlab::Elem named(const ringlab::FiniteRing& R, const std::string& name) {
    const auto& n = R.names();
    auto it = std::find(n.begin(), n.end(), name);
    REQUIRE_MESSAGE(it != n.end(), "no element named " << name << " in " << R.id());
    return static_cast<ringlab::Elem>(it - n.begin());
}

}  // namespace support
