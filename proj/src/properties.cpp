#include "ringlab/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "ringlab/error.hpp"
#include "ringlab/kernel.hpp"

namespace ringlab {

namespace {

// r[a] = {b : ab = 0}, l[a] = {b : ba = 0}.
struct ZeroProducts {
    std::vector<ElementSet> r, l;

    explicit ZeroProducts(const FiniteRing& ring) {
        const std::size_t n = ring.size();
        r.assign(n, ElementSet(n));
        l.assign(n, ElementSet(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
                    r[a].insert(static_cast<Elem>(b));
                    l[b].insert(static_cast<Elem>(a));
                }
    }

    bool reversible(Elem a) const { return r[a] == l[a]; }

    // Some b with exactly one of ab, ba zero.
    Elem separator(Elem a) const {
        Elem b = (r[a] & l[a].complement()).first_nonzero();
        return b ? b : (l[a] & r[a].complement()).first_nonzero();
    }
};

std::optional<Elem> first_outside(const FiniteRing& ring, const ElementSet& inside, const std::function<Elem(Elem)>& f) {
    for (std::size_t r = 0; r < ring.size(); ++r) {
        Elem v = f(static_cast<Elem>(r));
        if (!inside.contains(v)) return static_cast<Elem>(r);
    }
    return std::nullopt;
}

Witness elements_witness(std::vector<std::string> roles, std::vector<Elem> elements) {
    Witness w;
    w.roles = std::move(roles);
    w.elements = std::move(elements);
    return w;
}

PropertyReport verdict(bool ok, std::optional<Witness> w = std::nullopt) {
    PropertyReport rep;
    rep.verdict = ok;
    if (!ok) rep.witness = std::move(w);
    return rep;
}

PropertyReport check_reversible(const FiniteRing& ring) {
    ZeroProducts z(ring);
    for (std::size_t i = 1; i < ring.size(); ++i) {
        const auto a = static_cast<Elem>(i);
        if (z.reversible(a)) continue;
        if (Elem b = (z.r[a] & z.l[a].complement()).first_nonzero())
            return verdict(false, elements_witness({"a", "b"}, {a, b}));
        Elem b = (z.l[a] & z.r[a].complement()).first_nonzero();
        return verdict(false, elements_witness({"a", "b"}, {b, a}));
    }
    return verdict(true);
}

PropertyReport check_nil_reversible(const FiniteRing& ring) {
    ZeroProducts z(ring);
    std::optional<Witness> w;
    nil_set(ring).for_each([&](Elem a) {
        if (w) return;
        if (Elem b = (z.r[a] & z.l[a].complement()).first_nonzero()) w = elements_witness({"a", "b"}, {a, b});
    });
    return verdict(!w, w);
}

PropertyReport check_semicommutative(const FiniteRing& ring) {
    const std::size_t n = ring.size();
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != 0) continue;
            for (std::size_t r = 0; r < n; ++r)
                if (ring.mul(ring.mul(static_cast<Elem>(a), static_cast<Elem>(r)), static_cast<Elem>(b)) != 0)
                    return verdict(false, elements_witness({"a", "b", "r"},
                                                           {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(r)}));
        }
    return verdict(true);
}

std::optional<Witness> noncentral_member(const FiniteRing& ring, const ElementSet& xs, const std::string& role) {
    std::optional<Witness> w;
    xs.for_each([&](Elem a) {
        if (w) return;
        for (std::size_t r = 0; r < ring.size(); ++r)
            if (ring.mul(a, static_cast<Elem>(r)) != ring.mul(static_cast<Elem>(r), a)) {
                w = elements_witness({role, "r"}, {a, static_cast<Elem>(r)});
                return;
            }
    });
    return w;
}

PropertyReport check_abelian(const FiniteRing& ring) {
    auto w = noncentral_member(ring, idempotents(ring), "e");
    return verdict(!w, w);
}

PropertyReport check_cn(const FiniteRing& ring, bool index_two_only) {
    ElementSet xs = nil_set(ring);
    if (index_two_only) {
        ElementSet sq(ring.size());
        xs.for_each([&](Elem a) {
            if (ring.mul(a, a) == 0) sq.insert(a);
        });
        xs = sq;
    }
    auto w = noncentral_member(ring, xs, "a");
    return verdict(!w, w);
}

PropertyReport check_two_primal(const FiniteRing& ring) {
    const ElementSet nil = nil_set(ring);
    const ElementSet rad = jacobson_radical(ring).members();
    if (nil == rad) return verdict(true);
    const ElementSet u = units(ring);
    Elem a = (nil & rad.complement()).first_nonzero();
    for (std::size_t r = 0; r < ring.size(); ++r) {
        Elem t = ring.sub(ring.one(), ring.mul(static_cast<Elem>(r), a));
        if (!u.contains(t)) {
            auto w = elements_witness({"a", "r"}, {a, static_cast<Elem>(r)});
            w.note = "a is nilpotent and 1 - r a is not a unit";
            return verdict(false, w);
        }
    }
    throw Error("nil element outside the radical without a witness");
}

// Right duo: Ra inside aR for every a.
PropertyReport check_duo(const FiniteRing& ring, Side side) {
    CyclicIdeals mine(ring, side);
    for (std::size_t i = 1; i < ring.size(); ++i) {
        const auto a = static_cast<Elem>(i);
        if (auto r = first_outside(ring, mine.of(a), [&](Elem r) { return ring.mul(opposite(side), a, r); })) {
            auto w = elements_witness({"a", "r"}, {a, *r});
            w.side = side;
            return verdict(false, w);
        }
    }
    return verdict(true);
}

// Left pi-duo: every nonzero a has a nonzero power c with cR inside Rc; right pi-duo dually.
std::optional<Witness> pi_duo_failure(const FiniteRing& ring, Side side) {
    CyclicIdeals theirs(ring, side);
    for (std::size_t i = 1; i < ring.size(); ++i) {
        const auto a = static_cast<Elem>(i);
        Witness w = elements_witness({"a"}, {a});
        w.side = side;
        bool good = false;
        for (Elem c : power_orbit(ring, a)) {
            if (c == 0) continue;
            auto r = first_outside(ring, theirs.of(c), [&](Elem r) { return ring.mul(opposite(side), c, r); });
            if (!r) {
                good = true;
                break;
            }
            w.roles.push_back("r for a^" + std::to_string(w.elements.size()));
            w.elements.push_back(*r);
        }
        if (!good) return w;
    }
    return std::nullopt;
}

PropertyReport check_pi_duo(const FiniteRing& ring) {
    for (Side side : {Side::Left, Side::Right})
        if (auto w = pi_duo_failure(ring, side)) return verdict(false, w);
    return verdict(true);
}

PropertyReport check_reduced(const FiniteRing& ring) {
    for (std::size_t i = 1; i < ring.size(); ++i)
        if (ring.mul(static_cast<Elem>(i), static_cast<Elem>(i)) == 0)
            return verdict(false, elements_witness({"a"}, {static_cast<Elem>(i)}));
    return verdict(true);
}

PropertyReport check_nonsingular(const FiniteRing& ring, Side side) {
    if (Elem a = singular_set(ring, side).first_nonzero()) {
        auto w = elements_witness({"a"}, {a});
        w.side = side;
        w.note = "annihilator of a is essential";
        return verdict(false, w);
    }
    return verdict(true);
}

PropertyReport check_strongly_bounded(const FiniteRing& ring) {
    for (Side side : {Side::Right, Side::Left}) {
        CyclicIdeals cyc(ring, side);
        for (std::size_t i = 1; i < ring.size(); ++i)
            if (bound_of_ideal(ring, side, cyc.of(static_cast<Elem>(i))).is_zero()) {
                auto w = elements_witness({"a"}, {static_cast<Elem>(i)});
                w.side = side;
                w.note = "the cyclic ideal of a contains no nonzero ideal";
                return verdict(false, w);
            }
    }
    return verdict(true);
}

PropertyReport check_ab(const FiniteRing& ring, Side side, bool essential_only) {
    std::optional<CyclicIdeals> cyc;
    if (essential_only) cyc.emplace(ring, side);
    for (const auto& ann : annihilator_lattice(ring, side)) {
        if (ann.is_trivial()) continue;
        if (essential_only && !is_essential(*cyc, ann)) continue;
        if (!bound_of_ideal(ring, side, ann).is_zero()) continue;
        // Generators of the annihilator: the opposite annihilator of it.
        const auto gens = annihilator(ring, opposite(side), ann);
        Witness w;
        w.elements = gens.elements();
        w.roles.assign(w.elements.size(), "x");
        w.side = side;
        w.note = "annihilator of the x's is nonzero and contains no nonzero ideal";
        return verdict(false, w);
    }
    return verdict(true);
}

PropertyReport check_mccoy(const RingPtr& ring, Side side, const CheckOptions& opt) {
    PropertyReport rep;
    rep.bounded = true;
    rep.max_degree = opt.max_degree;
    if (auto v = mccoy_falsify(ring, side, opt.max_degree, opt.enumeration_budget)) {
        Witness w;
        w.roles = {"f", "g"};
        w.polynomials = {v->f, v->g};
        w.side = side;
        rep.witness = w;
        return rep;
    }
    rep.verdict = true;
    return rep;
}

const std::vector<std::string> kPropertyIds{
    "reversible",      "weakly-reversible", "nil-reversible",    "semicommutative",  "abelian",
    "two-primal",      "cn",                "pi-cn",             "duo-right",        "duo-left",
    "pi-duo",          "reduced",           "nonsingular-right", "nonsingular-left", "strongly-bounded",
    "strongly-ab-right", "strongly-ab-left", "ab-right",         "ab-left",          "mccoy-right",
    "mccoy-left"};

bool annihilates_all(const FiniteRing& ring, Side side, const std::vector<Elem>& coeffs, Elem c) {
    return std::all_of(coeffs.begin(), coeffs.end(), [&](Elem a) { return ring.mul(side, a, c) == 0; });
}

bool reversible_by_scan(const FiniteRing& ring, Elem a) {
    for (std::size_t b = 0; b < ring.size(); ++b)
        if ((ring.mul(a, static_cast<Elem>(b)) == 0) != (ring.mul(static_cast<Elem>(b), a) == 0)) return false;
    return true;
}

std::vector<Elem> nonzero_powers(const FiniteRing& ring, Elem a) {
    std::vector<Elem> out;
    Elem c = a;
    std::vector<bool> seen(ring.size(), false);
    while (!seen[c]) {
        seen[c] = true;
        if (c != 0) out.push_back(c);
        c = ring.mul(c, a);
    }
    return out;
}

bool replay_negative(const FiniteRing& ring, const std::string& prop, const Witness& w) {
    const auto& e = w.elements;
    auto mul = [&](Elem a, Elem b) { return ring.mul(a, b); };
    auto need = [&](std::size_t k) { return e.size() >= k; };
    if (prop == "reversible" || prop == "nil-reversible") {
        if (!need(2) || mul(e[0], e[1]) != 0 || mul(e[1], e[0]) == 0) return false;
        return prop == "reversible" || nilpotency_index(ring, e[0]) > 0;
    }
    if (prop == "weakly-reversible") {
        if (!need(1) || e[0] == 0) return false;
        auto powers = nonzero_powers(ring, e[0]);
        if (e.size() != powers.size() + 1) return false;
        for (std::size_t i = 0; i < powers.size(); ++i)
            if ((mul(powers[i], e[i + 1]) == 0) == (mul(e[i + 1], powers[i]) == 0)) return false;
        return true;
    }
    if (prop == "semicommutative")
        return need(3) && mul(e[0], e[1]) == 0 && mul(mul(e[0], e[2]), e[1]) != 0;
    if (prop == "abelian")
        return need(2) && mul(e[0], e[0]) == e[0] && mul(e[0], e[1]) != mul(e[1], e[0]);
    if (prop == "cn" || prop == "pi-cn") {
        if (!need(2) || mul(e[0], e[1]) == mul(e[1], e[0])) return false;
        return prop == "cn" ? nilpotency_index(ring, e[0]) > 0 : mul(e[0], e[0]) == 0;
    }
    if (prop == "two-primal") {
        if (!need(2) || nilpotency_index(ring, e[0]) == 0) return false;
        Elem t = ring.sub(ring.one(), mul(e[1], e[0]));
        for (std::size_t u = 0; u < ring.size(); ++u)
            if (mul(t, static_cast<Elem>(u)) == ring.one() && mul(static_cast<Elem>(u), t) == ring.one()) return false;
        return true;
    }
    if (prop == "duo-right" || prop == "duo-left") {
        const Side side = prop == "duo-right" ? Side::Right : Side::Left;
        if (!need(2)) return false;
        Elem target = ring.mul(opposite(side), e[0], e[1]);
        for (std::size_t s = 0; s < ring.size(); ++s)
            if (ring.mul(side, e[0], static_cast<Elem>(s)) == target) return false;
        return true;
    }
    if (prop == "pi-duo") {
        if (!w.side || !need(1) || e[0] == 0) return false;
        const Side side = *w.side;
        auto powers = nonzero_powers(ring, e[0]);
        if (e.size() != powers.size() + 1) return false;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            Elem target = ring.mul(opposite(side), powers[i], e[i + 1]);
            for (std::size_t s = 0; s < ring.size(); ++s)
                if (ring.mul(side, powers[i], static_cast<Elem>(s)) == target) return false;
        }
        return true;
    }
    if (prop == "reduced") return need(1) && e[0] != 0 && mul(e[0], e[0]) == 0;
    if (prop == "nonsingular-right" || prop == "nonsingular-left") {
        const Side side = prop == "nonsingular-right" ? Side::Right : Side::Left;
        return need(1) && e[0] != 0 && is_essential(ring, side, annihilator(ring, side, e[0]));
    }
    if (prop == "strongly-bounded") {
        if (!w.side || !need(1) || e[0] == 0) return false;
        return bound_of_ideal(ring, *w.side, cyclic_ideal(ring, *w.side, e[0])).is_zero();
    }
    if (prop.starts_with("strongly-ab-") || prop.starts_with("ab-")) {
        const Side side = prop.ends_with("right") ? Side::Right : Side::Left;
        if (w.side != side) return false;
        ElementSet xs(ring.size());
        for (Elem x : e) xs.insert(x);
        if (xs.empty()) xs.insert(0);
        const auto ann = annihilator(ring, side, xs);
        if (ann.is_trivial() || !bound_of_ideal(ring, side, ann).is_zero()) return false;
        return prop.starts_with("strongly") || is_essential(ring, side, ann);
    }
    if (prop == "mccoy-right" || prop == "mccoy-left") {
        const Side side = prop == "mccoy-right" ? Side::Right : Side::Left;
        if (w.polynomials.size() != 2) return false;
        const auto& f = w.polynomials[0].coeffs();
        const auto& g = w.polynomials[1].coeffs();
        if (f.empty() || g.empty()) return false;
        for (std::size_t k = 0; k + 1 < f.size() + g.size(); ++k) {
            Elem c = 0;
            for (std::size_t i = 0; i <= k && i < f.size(); ++i)
                if (k - i < g.size()) c = ring.add(c, ring.mul(side, f[i], g[k - i]));
            if (c != 0) return false;
        }
        for (std::size_t c = 1; c < ring.size(); ++c)
            if (annihilates_all(ring, side, f, static_cast<Elem>(c))) return false;
        return true;
    }
    return false;
}

}  // namespace

const std::vector<std::string>& property_ids() { return kPropertyIds; }

bool is_property_id(std::string_view id) {
    return std::find(kPropertyIds.begin(), kPropertyIds.end(), id) != kPropertyIds.end();
}

bool is_reversible_element(const FiniteRing& ring, Elem a) {
    return annihilator(ring, Side::Left, a) == annihilator(ring, Side::Right, a);
}

PropertyReport is_weakly_reversible(const FiniteRing& ring) {
    ZeroProducts z(ring);
    PropertyReport rep;
    rep.ring_id = ring.id();
    rep.property = "weakly-reversible";
    Witness cert;
    for (std::size_t i = 1; i < ring.size(); ++i) {
        const auto a = static_cast<Elem>(i);
        const auto orbit = power_orbit(ring, a);
        bool found = false;
        for (std::size_t k = 0; k < orbit.size() && !found; ++k)
            if (orbit[k] != 0 && z.reversible(orbit[k])) {
                cert.exponents.emplace_back(a, static_cast<unsigned>(k + 1));
                found = true;
            }
        if (found) continue;
        Witness w = elements_witness({"a"}, {a});
        for (Elem c : orbit) {
            if (c == 0) continue;
            w.roles.push_back("b for a^" + std::to_string(w.elements.size()));
            w.elements.push_back(z.separator(c));
        }
        w.note = "no nonzero power of a is a reversible element";
        rep.witness = w;
        return rep;
    }
    rep.verdict = true;
    rep.witness = cert;
    return rep;
}

std::optional<McCoyViolation> mccoy_falsify(const RingPtr& ring, Side side, int dmax, std::uint64_t enumeration_budget) {
    if (dmax < 0) throw ContractError("max degree must be non-negative");
    CofactorQuery q;
    q.side = side;
    q.f_degree = dmax;
    q.g_degree = dmax;
    q.condition = ContentCondition::ZeroAnnihilator;
    q.enumeration_budget = enumeration_budget;
    auto w = find_annihilated_family(ring, q);
    if (!w) return std::nullopt;
    return McCoyViolation{w->fs.front(), w->g};
}

PropertyReport check_property(const RingPtr& ring_ptr, std::string_view property, const CheckOptions& options) {
    const FiniteRing& ring = *ring_ptr;
    const auto start = std::chrono::steady_clock::now();
    const std::string p(property);
    PropertyReport rep;
    if (p == "reversible") rep = check_reversible(ring);
    else if (p == "weakly-reversible") rep = is_weakly_reversible(ring);
    else if (p == "nil-reversible") rep = check_nil_reversible(ring);
    else if (p == "semicommutative") rep = check_semicommutative(ring);
    else if (p == "abelian") rep = check_abelian(ring);
    else if (p == "two-primal") rep = check_two_primal(ring);
    else if (p == "cn") rep = check_cn(ring, false);
    else if (p == "pi-cn") rep = check_cn(ring, true);
    else if (p == "duo-right") rep = check_duo(ring, Side::Right);
    else if (p == "duo-left") rep = check_duo(ring, Side::Left);
    else if (p == "pi-duo") rep = check_pi_duo(ring);
    else if (p == "reduced") rep = check_reduced(ring);
    else if (p == "nonsingular-right") rep = check_nonsingular(ring, Side::Right);
    else if (p == "nonsingular-left") rep = check_nonsingular(ring, Side::Left);
    else if (p == "strongly-bounded") rep = check_strongly_bounded(ring);
    else if (p == "strongly-ab-right") rep = check_ab(ring, Side::Right, false);
    else if (p == "strongly-ab-left") rep = check_ab(ring, Side::Left, false);
    else if (p == "ab-right") rep = check_ab(ring, Side::Right, true);
    else if (p == "ab-left") rep = check_ab(ring, Side::Left, true);
    else if (p == "mccoy-right") rep = check_mccoy(ring_ptr, Side::Right, options);
    else if (p == "mccoy-left") rep = check_mccoy(ring_ptr, Side::Left, options);
    else throw ContractError("unknown property '" + p + "'");
    rep.ring_id = ring.id();
    rep.property = p;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

bool replay_witness(const FiniteRing& ring, const PropertyReport& report) {
    if (!report.verdict) return report.witness && replay_negative(ring, report.property, *report.witness);
    if (report.property != "weakly-reversible") return true;
    if (!report.witness || report.witness->exponents.size() + 1 != ring.size()) return false;
    std::vector<bool> covered(ring.size(), false);
    for (auto [a, m] : report.witness->exponents) {
        if (a == 0 || covered[a]) return false;
        covered[a] = true;
        Elem c = ring.pow(a, m);
        if (c == 0 || !reversible_by_scan(ring, c)) return false;
    }
    return true;
}

}  // namespace ringlab
