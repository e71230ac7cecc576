#include "ringlab/kernel.hpp"

#include <algorithm>
#include <unordered_set>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

// Small generating set of the additive group, greedily chosen in handle order.
std::vector<Elem> additive_generators(const FiniteRing& ring) {
    std::vector<Elem> gens;
    ElementSet span = ElementSet::of(ring.size(), {0});
    for (std::size_t h = 1; h < ring.size(); ++h) {
        auto e = static_cast<Elem>(h);
        if (span.contains(e)) continue;
        gens.push_back(e);
        span = additive_closure(ring, span | ElementSet::of(ring.size(), {e}));
    }
    return gens;
}

AxiomReport failure(std::string law, Elem a, Elem b, Elem c) {
    return AxiomReport{false, std::move(law), {a, b, c}};
}

AxiomReport validate_algebra(const FiniteRing& ring) {
    const auto& alg = *ring.algebra();
    const unsigned d = alg.dim;
    const unsigned p = alg.p;
    auto product = [&](const ModpVector& u, const ModpVector& v) {
        ModpVector w(d, 0);
        for (unsigned i = 0; i < d; ++i) {
            if (!u[i]) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (!v[j]) continue;
                for (unsigned k = 0; k < d; ++k)
                    w[k] = static_cast<std::uint8_t>((w[k] + u[i] * v[j] * alg.constant(i, j, k)) % p);
            }
        }
        return w;
    };
    auto unit_vec = [&](unsigned i) {
        ModpVector v(d, 0);
        v[i] = 1;
        return v;
    };
    const auto& basis = ring.linear()->basis;
    for (unsigned i = 0; i < d; ++i) {
        auto e = unit_vec(i);
        if (product(alg.unit, e) != e) return failure("left identity", ring.one(), basis[i], basis[i]);
        if (product(e, alg.unit) != e) return failure("right identity", basis[i], ring.one(), basis[i]);
    }
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            for (unsigned k = 0; k < d; ++k) {
                auto ei = unit_vec(i), ej = unit_vec(j), ek = unit_vec(k);
                if (product(product(ei, ej), ek) != product(ei, product(ej, ek)))
                    return failure("multiplicative associativity", basis[i], basis[j], basis[k]);
            }
    return {};
}

}  // namespace

AxiomReport validate_ring(const FiniteRing& ring, std::size_t cap) {
    const std::size_t n = ring.size();
    if (n > cap) throw CapacityError("ring " + ring.id() + " has " + std::to_string(n) + " elements, cap is " +
                                     std::to_string(cap));
    if (ring.representation() == Representation::PrimeAlgebra) {
        if (auto report = validate_algebra(ring); !report.ok) return report;
        const auto& alg = *ring.algebra();
        const auto& ls = *ring.linear();
        for (unsigned i = 0; i < alg.dim; ++i)
            for (unsigned j = 0; j < alg.dim; ++j) {
                ModpVector v(alg.dim);
                for (unsigned k = 0; k < alg.dim; ++k) v[k] = alg.constant(i, j, k);
                if (ring.mul(ls.basis[i], ls.basis[j]) != ls.element(v))
                    return failure("structure constants", ls.basis[i], ls.basis[j], 0);
            }
    }

    for (auto v : ring.add_table())
        if (v >= n) return failure("addition closure", 0, 0, 0);
    for (auto v : ring.mul_table())
        if (v >= n) return failure("multiplication closure", 0, 0, 0);
    if (ring.one() >= n) return failure("identity handle", 0, 0, 0);

    auto el = [](std::size_t i) { return static_cast<Elem>(i); };
    for (std::size_t a = 0; a < n; ++a) {
        if (ring.add(0, el(a)) != a) return failure("additive identity", 0, el(a), 0);
        if (ring.add(el(a), ring.neg(el(a))) != 0) return failure("additive inverse", el(a), 0, 0);
        for (std::size_t b = 0; b < n; ++b)
            if (ring.add(el(a), el(b)) != ring.add(el(b), el(a)))
                return failure("additive commutativity", el(a), el(b), 0);
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (ring.mul(ring.one(), el(a)) != a) return failure("left identity", ring.one(), el(a), 0);
        if (ring.mul(el(a), ring.one()) != a) return failure("right identity", el(a), ring.one(), 0);
        if (ring.mul(el(a), 0) != 0 || ring.mul(0, el(a)) != 0) return failure("zero product", el(a), 0, 0);
    }
    // Every element is reached from 0 by right-adding generators, so each law below only
    // needs its last argument to range over a generating set.
    const auto gens = additive_generators(ring);
    const auto sum = ring.add_table();
    std::vector<Elem> shift(n);
    for (Elem g : gens) {
        for (std::size_t x = 0; x < n; ++x) shift[x] = ring.add(el(x), g);
        for (std::size_t a = 0; a < n; ++a) {
            const Elem* row = &sum[a * n];
            for (std::size_t b = 0; b < n; ++b)
                if (shift[row[b]] != row[shift[b]]) return failure("additive associativity", el(a), el(b), g);
        }
    }
    // Right distributivity makes x -> x b additive for every b, so left multiplication by a
    // sum of generators is a sum of additive maps and left distributivity is needed only for
    // generator a.
    std::vector<Elem> by_column(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) by_column[b * n + a] = ring.mul(el(a), el(b));
    for (Elem g : gens) {
        for (std::size_t x = 0; x < n; ++x) shift[x] = ring.add(el(x), g);
        for (std::size_t b = 0; b < n; ++b) {
            const Elem* col = &by_column[b * n];
            const Elem* plus_gb = &sum[col[g] * n];
            for (std::size_t a = 0; a < n; ++a)
                if (col[shift[a]] != plus_gb[col[a]]) return failure("right distributivity", el(a), g, el(b));
        }
    }
    for (Elem a : gens)
        for (std::size_t b = 0; b < n; ++b)
            for (Elem g : gens)
                if (ring.mul(a, ring.add(el(b), g)) != ring.add(ring.mul(a, el(b)), ring.mul(a, g)))
                    return failure("left distributivity", a, el(b), g);
    for (Elem a : gens)
        for (Elem b : gens)
            for (Elem c : gens)
                if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
                    return failure("multiplicative associativity", a, b, c);
    return {};
}

void require_valid(const FiniteRing& ring, std::size_t cap) {
    auto report = validate_ring(ring, cap);
    if (!report.ok)
        throw ContractError("ring " + ring.id() + " fails " + report.law + " at (" + ring.name(report.triple[0]) +
                            ", " + ring.name(report.triple[1]) + ", " + ring.name(report.triple[2]) + ")");
}

TwoSidedIdeal make_ideal_unchecked(ElementSet members) { return TwoSidedIdeal(std::move(members)); }

ElementSet annihilator(const FiniteRing& ring, Side side, const ElementSet& xs) {
    const auto elems = xs.elements();
    ElementSet out(ring.size());
    for (std::size_t c = 0; c < ring.size(); ++c) {
        auto e = static_cast<Elem>(c);
        bool kills = true;
        for (Elem x : elems)
            if (ring.mul(side, x, e) != 0) {
                kills = false;
                break;
            }
        if (kills) out.insert(e);
    }
    return out;
}

ElementSet annihilator(const FiniteRing& ring, Side side, Elem x) {
    return annihilator(ring, side, ElementSet::of(ring.size(), {x}));
}

ElementSet annihilator_by_kernel(const FiniteRing& ring, Side side, const ElementSet& xs) {
    if (!ring.linear()) throw ContractError("kernel annihilator needs prime characteristic: " + ring.id());
    const auto& ls = *ring.linear();
    ModpMatrix system(ls.p, 0, ls.dim);
    std::vector<ModpVector> columns(ls.dim);
    xs.for_each([&](Elem x) {
        for (unsigned t = 0; t < ls.dim; ++t) columns[t] = ls.coords(ring.mul(side, x, ls.basis[t]));
        for (unsigned row = 0; row < ls.dim; ++row) {
            ModpVector r(ls.dim);
            for (unsigned t = 0; t < ls.dim; ++t) r[t] = columns[t][row];
            system.append_row(r);
        }
    });
    ElementSet out = ElementSet::of(ring.size(), {0});
    for (const auto& v : system.nullspace())
        out = additive_closure(ring, out | ElementSet::of(ring.size(), {ls.element(v)}));
    return out;
}

std::vector<Elem> power_orbit(const FiniteRing& ring, Elem a) {
    std::vector<Elem> orbit;
    ElementSet seen(ring.size());
    Elem cur = a;
    while (!seen.contains(cur)) {
        seen.insert(cur);
        orbit.push_back(cur);
        cur = ring.mul(cur, a);
    }
    return orbit;
}

unsigned nilpotency_index(const FiniteRing& ring, Elem a) {
    const auto orbit = power_orbit(ring, a);
    for (std::size_t i = 0; i < orbit.size(); ++i)
        if (orbit[i] == 0) return static_cast<unsigned>(i + 1);
    return 0;
}

ElementSet nil_set(const FiniteRing& ring) {
    ElementSet out(ring.size());
    for (std::size_t a = 0; a < ring.size(); ++a)
        if (nilpotency_index(ring, static_cast<Elem>(a)) > 0) out.insert(static_cast<Elem>(a));
    return out;
}

std::optional<Elem> inverse(const FiniteRing& ring, Elem u) {
    for (std::size_t b = 0; b < ring.size(); ++b) {
        auto e = static_cast<Elem>(b);
        if (ring.mul(u, e) == ring.one() && ring.mul(e, u) == ring.one()) return e;
    }
    return std::nullopt;
}

ElementSet units(const FiniteRing& ring) {
    ElementSet out(ring.size());
    for (std::size_t a = 0; a < ring.size(); ++a)
        if (inverse(ring, static_cast<Elem>(a))) out.insert(static_cast<Elem>(a));
    return out;
}

ElementSet idempotents(const FiniteRing& ring) {
    ElementSet out(ring.size());
    for (std::size_t a = 0; a < ring.size(); ++a) {
        auto e = static_cast<Elem>(a);
        if (ring.mul(e, e) == e) out.insert(e);
    }
    return out;
}

ElementSet center(const FiniteRing& ring) {
    ElementSet out(ring.size());
    for (std::size_t a = 0; a < ring.size(); ++a) {
        auto e = static_cast<Elem>(a);
        bool central = true;
        for (std::size_t r = 0; r < ring.size() && central; ++r)
            central = ring.mul(e, static_cast<Elem>(r)) == ring.mul(static_cast<Elem>(r), e);
        if (central) out.insert(e);
    }
    return out;
}

TwoSidedIdeal jacobson_radical(const FiniteRing& ring) {
    const auto unit_set = units(ring);
    ElementSet out(ring.size());
    for (std::size_t x = 0; x < ring.size(); ++x) {
        bool in_radical = true;
        for (std::size_t r = 0; r < ring.size() && in_radical; ++r)
            in_radical = unit_set.contains(ring.sub(ring.one(), ring.mul(static_cast<Elem>(r), static_cast<Elem>(x))));
        if (in_radical) out.insert(static_cast<Elem>(x));
    }
    return make_ideal_unchecked(std::move(out));
}

ElementSet additive_closure(const FiniteRing& ring, const ElementSet& xs) {
    ElementSet span = ElementSet::of(ring.size(), {0});
    std::vector<Elem> members{0};
    xs.for_each([&](Elem g) {
        if (span.contains(g)) return;
        // span <- span + <g>, one coset per pass.
        std::vector<Elem> coset = members;
        while (true) {
            for (auto& c : coset) c = ring.add(c, g);
            if (span.contains(coset.front())) break;
            for (Elem c : coset) span.insert(c);
            members.insert(members.end(), coset.begin(), coset.end());
        }
    });
    return span;
}

TwoSidedIdeal ideal_closure(const FiniteRing& ring, const ElementSet& xs) {
    const std::size_t n = ring.size();
    ElementSet products = xs;
    products.insert(0);
    xs.for_each([&](Elem x) {
        ElementSet left(n);
        for (std::size_t r = 0; r < n; ++r) left.insert(ring.mul(static_cast<Elem>(r), x));
        left.for_each([&](Elem l) {
            for (std::size_t s = 0; s < n; ++s) products.insert(ring.mul(l, static_cast<Elem>(s)));
        });
    });
    return make_ideal_unchecked(additive_closure(ring, products));
}

ElementSet cyclic_ideal(const FiniteRing& ring, Side side, Elem a) {
    ElementSet out(ring.size());
    for (std::size_t r = 0; r < ring.size(); ++r) out.insert(ring.mul(side, a, static_cast<Elem>(r)));
    return out;
}

bool is_one_sided_ideal(const FiniteRing& ring, Side side, const ElementSet& xs) {
    if (!xs.contains(0)) return false;
    const auto elems = xs.elements();
    for (Elem a : elems) {
        for (Elem b : elems)
            if (!xs.contains(ring.add(a, b))) return false;
        for (std::size_t r = 0; r < ring.size(); ++r)
            if (!xs.contains(ring.mul(side, a, static_cast<Elem>(r)))) return false;
    }
    return true;
}

bool is_two_sided_ideal(const FiniteRing& ring, const ElementSet& xs) {
    return is_one_sided_ideal(ring, Side::Right, xs) && is_one_sided_ideal(ring, Side::Left, xs);
}

TwoSidedIdeal bound_of_ideal(const FiniteRing& ring, Side side, const ElementSet& ideal) {
    if (!is_one_sided_ideal(ring, side, ideal))
        throw ContractError(std::string("not a ") + (side == Side::Right ? "right" : "left") + " ideal of " + ring.id());
    ElementSet out(ring.size());
    ideal.for_each([&](Elem x) {
        for (std::size_t r = 0; r < ring.size(); ++r)
            if (!ideal.contains(ring.mul(opposite(side), x, static_cast<Elem>(r)))) return;
        out.insert(x);
    });
    return make_ideal_unchecked(std::move(out));
}

CyclicIdeals::CyclicIdeals(const FiniteRing& ring, Side side) : side_(side) {
    ideals_.reserve(ring.size());
    for (std::size_t a = 0; a < ring.size(); ++a) ideals_.push_back(cyclic_ideal(ring, side, static_cast<Elem>(a)));
}

bool is_essential(const CyclicIdeals& cyclic, const ElementSet& ideal) {
    for (std::size_t a = 1; a < ideal.universe(); ++a)
        if (!cyclic.of(static_cast<Elem>(a)).meets_nontrivially(ideal)) return false;
    return true;
}

bool is_essential(const FiniteRing& ring, Side side, const ElementSet& ideal) {
    return is_essential(CyclicIdeals(ring, side), ideal);
}

ElementSet singular_set(const FiniteRing& ring, Side side) {
    const CyclicIdeals cyclic(ring, side);
    ElementSet out(ring.size());
    for (std::size_t a = 0; a < ring.size(); ++a)
        if (is_essential(cyclic, annihilator(ring, side, static_cast<Elem>(a)))) out.insert(static_cast<Elem>(a));
    return out;
}

std::vector<ElementSet> annihilator_lattice(const FiniteRing& ring, Side side) {
    constexpr std::size_t kLatticeCap = 50000;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> members;
    auto add = [&](ElementSet s) {
        if (seen.insert(s).second) {
            members.push_back(std::move(s));
            if (members.size() > kLatticeCap) throw CapacityError("annihilator lattice of " + ring.id() + " too large");
        }
    };
    for (std::size_t a = 0; a < ring.size(); ++a) add(annihilator(ring, side, static_cast<Elem>(a)));
    const std::size_t singles = members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < std::min(i, singles); ++j) add(members[i] & members[j]);
    std::sort(members.begin(), members.end(), [](const ElementSet& x, const ElementSet& y) {
        if (x.count() != y.count()) return x.count() > y.count();
        return x.words() < y.words();
    });
    return members;
}

std::optional<Elem> central_idempotent(const FiniteRing& ring) {
    const auto z = center(ring);
    std::optional<Elem> found;
    idempotents(ring).for_each([&](Elem e) {
        if (!found && e != 0 && e != ring.one() && z.contains(e)) found = e;
    });
    return found;
}

std::string describe(const FiniteRing& ring, const ElementSet& xs) {
    std::string out = "{";
    bool first = true;
    xs.for_each([&](Elem e) {
        if (!first) out += ", ";
        out += ring.name(e);
        first = false;
    });
    return out + "}";
}

}  // namespace ringlab
