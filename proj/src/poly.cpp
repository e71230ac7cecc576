#include "ringlab/poly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

Polynomial poly_add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.add(f.coeff(i), g.coeff(i));
    return Polynomial(std::move(out));
}

Polynomial poly_mul(const FiniteRing& ring, const Polynomial& f, const Polynomial& g, int degree_cap) {
    if (f.is_zero() || g.is_zero()) return {};
    if (f.degree() + g.degree() > degree_cap)
        throw DegreeOverflow("product degree " + std::to_string(f.degree() + g.degree()) + " exceeds cap " +
                             std::to_string(degree_cap));
    std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] = ring.add(out[i + j], ring.mul(f.coeffs()[i], g.coeffs()[j]));
    return Polynomial(std::move(out));
}

ElementSet content(const FiniteRing& ring, const Polynomial& f) {
    ElementSet out = ElementSet::of(ring.size(), {0});
    if (f.is_zero()) return out;
    out.erase(0);
    for (Elem c : f.coeffs()) out.insert(c);
    return out;
}

ElementSet content(const FiniteRing& ring, const std::vector<Polynomial>& fs) {
    ElementSet out(ring.size());
    for (const auto& f : fs) out |= content(ring, f);
    return out;
}

std::string to_string(const FiniteRing& ring, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Elem c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string& name = ring.name(c);
        if (i == 0) {
            out += name;
            continue;
        }
        if (c != ring.one()) out += "(" + name + ")*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

namespace {

// Matrix of the Z/p-linear map u -> prod(u) in coordinates, stored as columns.
template <class Map>
std::vector<ModpVector> linear_map_columns(const LinearStructure& ls, Map prod) {
    std::vector<ModpVector> cols(ls.dim);
    for (unsigned t = 0; t < ls.dim; ++t) cols[t] = ls.coords(prod(ls.basis[t]));
    return cols;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = r > UINT64_MAX / base ? UINT64_MAX : r * base;
    return r;
}

PolyAnnihilator kernel_annihilator(const FiniteRing& ring, Side side, const Polynomial& f, int d) {
    const auto& ls = *ring.linear();
    const auto basis = poly_annihilator_basis(ring, side, f, d);
    PolyAnnihilator out;
    out.method = SolveMethod::Kernel;
    out.solution_count = saturating_pow(ls.p, static_cast<int>(basis.size()));
    out.nonzero_exists = !basis.empty();
    if (out.nonzero_exists) out.witness = basis.front();
    return out;
}

PolyAnnihilator enumeration_annihilator(const FiniteRing& ring, Side side, const Polynomial& f, int d) {
    PolyAnnihilator out;
    out.method = SolveMethod::Enumeration;
    out.solution_count = 1;
    const auto& a = f.coeffs();
    const int m = f.degree();
    const Elem lead = a.back();
    // Candidates for g's coefficients grouped by their product with the leading coefficient.
    std::vector<std::vector<Elem>> by_value(ring.size());
    for (std::size_t b = 0; b < ring.size(); ++b) by_value[ring.mul(side, lead, static_cast<Elem>(b))].push_back(static_cast<Elem>(b));

    for (int n = 0; n <= d; ++n) {
        std::vector<Elem> b(n + 1, 0);
        std::function<void(int)> assign = [&](int j) {
            if (j < 0) {
                for (int k = 0; k < m; ++k) {
                    Elem c = 0;
                    for (int i = 0; i <= k; ++i)
                        if (k - i <= n) c = ring.add(c, ring.mul(side, a[i], b[k - i]));
                    if (c != 0) return;
                }
                ++out.solution_count;
                if (!out.witness) out.witness = Polynomial(b);
                return;
            }
            // Coefficient m + j of the product: lead*b_j + sum_{i<m} a_i b_{m+j-i}.
            Elem rest = 0;
            for (int i = std::max(0, m + j - n); i < m; ++i) rest = ring.add(rest, ring.mul(side, a[i], b[m + j - i]));
            for (Elem cand : by_value[ring.neg(rest)]) {
                if (j == n && cand == 0) continue;
                b[j] = cand;
                assign(j - 1);
            }
            b[j] = 0;
        };
        assign(n);
    }
    out.nonzero_exists = out.witness.has_value();
    return out;
}

}  // namespace

std::vector<Polynomial> poly_annihilator_basis(const FiniteRing& ring, Side side, const Polynomial& f, int d) {
    if (!ring.linear()) throw ContractError("kernel path needs prime characteristic: " + ring.id());
    const auto& ls = *ring.linear();
    const int m = f.degree();
    const std::size_t dim = ls.dim;
    const std::size_t unknowns = static_cast<std::size_t>(d + 1) * dim;
    if (f.is_zero()) {
        std::vector<Polynomial> all;
        for (int j = 0; j <= d; ++j)
            for (Elem e : ls.basis) {
                std::vector<Elem> c(j + 1, 0);
                c[j] = e;
                all.emplace_back(std::move(c));
            }
        return all;
    }
    std::vector<std::vector<ModpVector>> maps;
    for (Elem ai : f.coeffs()) maps.push_back(linear_map_columns(ls, [&](Elem b) { return ring.mul(side, ai, b); }));
    ModpMatrix system(ls.p, static_cast<std::size_t>(m + d + 1) * dim, unknowns);
    for (int k = 0; k <= m + d; ++k)
        for (int i = std::max(0, k - d); i <= std::min(k, m); ++i) {
            const int j = k - i;
            for (std::size_t row = 0; row < dim; ++row)
                for (std::size_t t = 0; t < dim; ++t) {
                    auto& cell = system.at(static_cast<std::size_t>(k) * dim + row, static_cast<std::size_t>(j) * dim + t);
                    cell = static_cast<std::uint8_t>((cell + maps[i][t][row]) % ls.p);
                }
        }
    std::vector<Polynomial> out;
    for (const auto& v : system.nullspace()) {
        std::vector<Elem> coeffs(d + 1);
        for (int j = 0; j <= d; ++j)
            coeffs[j] = ls.element(ModpVector(v.begin() + static_cast<std::ptrdiff_t>(j * dim),
                                              v.begin() + static_cast<std::ptrdiff_t>((j + 1) * dim)));
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

PolyAnnihilator poly_annihilator(const FiniteRing& ring, Side side, const Polynomial& f, int d, int degree_cap,
                                 SolveMethod method) {
    if (d < 0) throw ContractError("annihilator degree must be non-negative");
    if (f.degree() + d > degree_cap)
        throw DegreeOverflow("deg f + d = " + std::to_string(f.degree() + d) + " exceeds cap " + std::to_string(degree_cap));
    if (f.is_zero()) {
        PolyAnnihilator out;
        out.everything = true;
        out.nonzero_exists = ring.size() > 1;
        out.solution_count = saturating_pow(ring.size(), d + 1);
        if (out.nonzero_exists) out.witness = Polynomial::constant(ring.one());
        return out;
    }
    if (method == SolveMethod::Auto) method = ring.linear() ? SolveMethod::Kernel : SolveMethod::Enumeration;
    return method == SolveMethod::Kernel ? kernel_annihilator(ring, side, f, d)
                                         : enumeration_annihilator(ring, side, f, d);
}

ElementSet constant_annihilator(const FiniteRing& ring, const std::vector<Polynomial>& xs, Side side) {
    return annihilator(ring, side, content(ring, xs));
}

namespace {

using Mask = std::uint32_t;
constexpr int kMaxTraps = 16;

// Left ideals L such that a content C fails the condition exactly when C lies inside some L.
std::vector<ElementSet> maximal_traps(const FiniteRing& ring, Side side, ContentCondition cond) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> all;
    for (std::size_t c = 1; c < ring.size(); ++c) {
        auto e = static_cast<Elem>(c);
        ElementSet trap = cond == ContentCondition::ZeroAnnihilator
                              ? annihilator(ring, opposite(side), e)
                              : annihilator(ring, opposite(side), cyclic_ideal(ring, opposite(side), e));
        if (seen.insert(trap).second) all.push_back(std::move(trap));
    }
    std::sort(all.begin(), all.end(), [](const ElementSet& x, const ElementSet& y) {
        if (x.count() != y.count()) return x.count() > y.count();
        return x.words() < y.words();
    });
    std::vector<ElementSet> maximal;
    for (auto& t : all) {
        bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const ElementSet& m) { return t.subset_of(m); });
        if (!dominated) maximal.push_back(std::move(t));
    }
    return maximal;
}

Mask trap_mask(const std::vector<ElementSet>& traps, const std::vector<Elem>& coeffs) {
    Mask mask = 0;
    for (std::size_t i = 0; i < traps.size(); ++i) {
        bool inside = std::all_of(coeffs.begin(), coeffs.end(), [&](Elem c) { return traps[i].contains(c); });
        if (inside) mask |= Mask{1} << i;
    }
    return mask;
}

// Which masks are realised by some f in the current candidate space.
struct MaskCensus {
    std::vector<bool> present;
    std::function<Polynomial(Mask)> example;
};

std::optional<std::vector<Mask>> choose_family(const std::vector<bool>& present, int family_size) {
    const Mask count = static_cast<Mask>(present.size());
    if (family_size == 1) {
        if (present[0]) return std::vector<Mask>{0};
        return std::nullopt;
    }
    for (Mask x = 0; x < count; ++x) {
        if (!present[x]) continue;
        for (Mask y = x; y < count; ++y)
            if (present[y] && (x & y) == 0) return std::vector<Mask>{x, y};
    }
    return std::nullopt;
}

class FamilySearch {
public:
    FamilySearch(const RingPtr& ring, const CofactorQuery& q) : ring_(*ring), q_(q) {
        traps_ = maximal_traps(ring_, q.side, q.condition);
        if (traps_.size() > kMaxTraps)
            throw CapacityError("too many annihilator traps (" + std::to_string(traps_.size()) + ") in " + ring_.id());
        const auto radical = jacobson_radical(ring_).members();
        socle_ = annihilator(ring_, opposite(q.side), radical).elements();
        if (ring_.linear()) prepare_linear();
    }

    std::optional<CofactorWitness> run() {
        std::uint64_t g_count = 0;
        for (int n = 0; n <= q_.g_degree; ++n) g_count += saturating_pow(socle_.size(), n + 1);
        if (g_count > q_.enumeration_budget)
            throw CapacityError("cofactor search over " + ring_.id() + " needs " + std::to_string(g_count) + " candidates");
        for (int n = 0; n <= q_.g_degree; ++n) {
            std::vector<Elem> g(n + 1, 0);
            if (auto w = enumerate_g(g, 0, n)) return w;
        }
        return std::nullopt;
    }

private:
    std::optional<CofactorWitness> enumerate_g(std::vector<Elem>& g, int pos, int n) {
        if (pos > n) return test_g(g);
        for (Elem b : socle_) {
            if ((pos == 0 || pos == n) && b == 0) continue;
            if (pos == 0 && !normalized(b)) continue;
            g[pos] = b;
            if (auto w = enumerate_g(g, pos + 1, n)) return w;
        }
        return std::nullopt;
    }

    // Scalar multiples of g have the same annihilating polynomials.
    bool normalized(Elem b) const {
        if (!ring_.linear()) return true;
        for (auto c : ring_.linear()->coords(b))
            if (c) return c == 1;
        return true;
    }

    std::optional<CofactorWitness> test_g(const std::vector<Elem>& g) {
        MaskCensus census = ring_.linear() ? linear_census(g) : table_census(g);
        auto chosen = choose_family(census.present, q_.family_size);
        if (!chosen) return std::nullopt;
        CofactorWitness w;
        for (Mask m : *chosen) w.fs.push_back(census.example(m));
        if (q_.family_size == 2 && w.fs.size() == 1) w.fs.push_back(w.fs.front());
        w.g = Polynomial(g);
        return w;
    }

    // ---- prime characteristic: masks from subspace dimensions -------------------------

    void prepare_linear() {
        const auto& ls = *ring_.linear();
        for (Elem b : socle_)
            right_maps_[b] = linear_map_columns(ls, [&](Elem a) { return ring_.mul(q_.side, a, b); });
        for (const auto& trap : traps_) {
            std::vector<ModpVector> vecs;
            trap.for_each([&](Elem e) { vecs.push_back(ls.coords(e)); });
            auto basis = span_basis(vecs, ls.p, ls.dim);
            ModpMatrix m(ls.p, 0, ls.dim);
            for (const auto& v : basis) m.append_row(v);
            trap_equations_.push_back(basis.empty() ? identity_rows(ls) : m.nullspace());
        }
    }

    static std::vector<ModpVector> identity_rows(const LinearStructure& ls) {
        std::vector<ModpVector> rows;
        for (unsigned t = 0; t < ls.dim; ++t) {
            ModpVector r(ls.dim, 0);
            r[t] = 1;
            rows.push_back(r);
        }
        return rows;
    }

    MaskCensus linear_census(const std::vector<Elem>& g) {
        const auto& ls = *ring_.linear();
        const std::size_t dim = ls.dim;
        const int df = q_.f_degree;
        const int n = static_cast<int>(g.size()) - 1;
        ModpMatrix system(ls.p, static_cast<std::size_t>(df + n + 1) * dim, static_cast<std::size_t>(df + 1) * dim);
        for (int i = 0; i <= df; ++i)
            for (int j = 0; j <= n; ++j) {
                const auto& cols = right_maps_.at(g[j]);
                for (std::size_t row = 0; row < dim; ++row)
                    for (std::size_t t = 0; t < dim; ++t) {
                        auto& cell = system.at(static_cast<std::size_t>(i + j) * dim + row, static_cast<std::size_t>(i) * dim + t);
                        cell = static_cast<std::uint8_t>((cell + cols[t][row]) % ls.p);
                    }
            }
        auto space = system.nullspace();
        const std::size_t traps = traps_.size();
        MaskCensus census;
        census.present.assign(std::size_t{1} << traps, false);
        if (space.empty()) return census;
        if (space.size() * std::bit_width(ls.p) > 120) throw CapacityError("annihilator space too large to count exactly");

        // Constraint rows of trap i restricted to the solution space, one row per (equation, coefficient).
        std::vector<std::vector<ModpVector>> restricted(traps);
        for (std::size_t i = 0; i < traps; ++i)
            for (const auto& h : trap_equations_[i])
                for (int blk = 0; blk <= df; ++blk) {
                    ModpVector row(space.size(), 0);
                    for (std::size_t s = 0; s < space.size(); ++s) {
                        unsigned acc = 0;
                        for (std::size_t t = 0; t < dim; ++t) acc += h[t] * space[s][blk * dim + t];
                        row[s] = static_cast<std::uint8_t>(acc % ls.p);
                    }
                    restricted[i].push_back(std::move(row));
                }
        // at_least[T]: number of f lying in every trap of T; exact counts by Moebius inversion.
        std::vector<__int128> count(std::size_t{1} << traps);
        for (Mask mask = 0; mask < count.size(); ++mask) {
            ModpMatrix stacked(ls.p, 0, space.size());
            for (std::size_t i = 0; i < traps; ++i)
                if (mask >> i & 1)
                    for (const auto& r : restricted[i]) stacked.append_row(r);
            const std::size_t free = space.size() - stacked.rank();
            __int128 c = 1;
            for (std::size_t k = 0; k < free; ++k) c *= ls.p;
            count[mask] = c;
        }
        for (std::size_t i = 0; i < traps; ++i)
            for (Mask mask = 0; mask < count.size(); ++mask)
                if (!(mask >> i & 1)) count[mask] -= count[mask | (Mask{1} << i)];
        for (Mask mask = 0; mask < count.size(); ++mask) census.present[mask] = count[mask] > 0;

        census.example = [this, space, df, &ls](Mask want) {
            ModpVector lambda(space.size(), 0);
            while (true) {
                std::size_t k = 0;
                while (k < lambda.size() && ++lambda[k] == ls.p) lambda[k++] = 0;
                if (k == lambda.size()) break;
                std::vector<Elem> coeffs(df + 1);
                for (int blk = 0; blk <= df; ++blk) {
                    ModpVector v(ls.dim, 0);
                    for (std::size_t s = 0; s < space.size(); ++s)
                        for (std::size_t t = 0; t < ls.dim; ++t)
                            v[t] = static_cast<std::uint8_t>((v[t] + lambda[s] * space[s][blk * ls.dim + t]) % ls.p);
                    coeffs[blk] = ls.element(v);
                }
                if (trap_mask(traps_, coeffs) == want) return Polynomial(coeffs);
            }
            throw Error("mask census promised a polynomial that enumeration did not find");
        };
        return census;
    }

    // ---- general rings: enumerate the annihilating f directly -------------------------

    MaskCensus table_census(const std::vector<Elem>& g) {
        const int df = q_.f_degree;
        const int n = static_cast<int>(g.size()) - 1;
        std::vector<std::vector<Elem>> by_value(ring_.size());
        for (std::size_t a = 0; a < ring_.size(); ++a)
            by_value[ring_.mul(q_.side, static_cast<Elem>(a), g[0])].push_back(static_cast<Elem>(a));

        MaskCensus census;
        census.present.assign(std::size_t{1} << traps_.size(), false);
        auto examples = std::make_shared<std::vector<std::optional<Polynomial>>>(census.present.size());
        std::vector<Elem> f(df + 1, 0);
        std::uint64_t nodes = 0;
        std::function<void(int)> assign = [&](int k) {
            if (++nodes > q_.enumeration_budget) throw CapacityError("cofactor enumeration budget exceeded on " + ring_.id());
            if (k > df) {
                for (int c = df + 1; c <= df + n; ++c) {
                    Elem acc = 0;
                    for (int i = std::max(0, c - n); i <= df; ++i) acc = ring_.add(acc, ring_.mul(q_.side, f[i], g[c - i]));
                    if (acc != 0) return;
                }
                Mask m = trap_mask(traps_, f);
                if (!census.present[m]) {
                    census.present[m] = true;
                    (*examples)[m] = Polynomial(f);
                }
                return;
            }
            // Coefficient k of the product: f_k g_0 + sum_{i<k} f_i g_{k-i} = 0.
            Elem rest = 0;
            for (int i = std::max(0, k - n); i < k; ++i) rest = ring_.add(rest, ring_.mul(q_.side, f[i], g[k - i]));
            for (Elem cand : by_value[ring_.neg(rest)]) {
                f[k] = cand;
                assign(k + 1);
            }
            f[k] = 0;
        };
        assign(0);
        census.example = [examples](Mask m) { return *(*examples)[m]; };
        return census;
    }

    const FiniteRing& ring_;
    CofactorQuery q_;
    std::vector<ElementSet> traps_;
    std::vector<Elem> socle_;
    std::unordered_map<Elem, std::vector<ModpVector>> right_maps_;
    std::vector<std::vector<ModpVector>> trap_equations_;
};

}  // namespace

std::optional<CofactorWitness> find_annihilated_family(const RingPtr& ring, const CofactorQuery& query) {
    if (query.family_size < 1 || query.family_size > 2) throw ContractError("family size must be 1 or 2");
    if (query.f_degree < 0 || query.g_degree < 0) throw ContractError("degrees must be non-negative");
    if (auto e = central_idempotent(*ring)) {
        for (Elem idem : {*e, ring->sub(ring->one(), *e)}) {
            auto corner = make_corner(ring, idem);
            auto sub = find_annihilated_family(corner, query);
            if (!sub) continue;
            const auto& emb = corner->origin().embedding;
            const Elem other = ring->sub(ring->one(), idem);
            auto lift = [&](const Polynomial& p, bool pad) {
                std::vector<Elem> c(std::max<std::size_t>(p.coeffs().size(), 1), 0);
                for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = emb[p.coeffs()[i]];
                if (pad) c[0] = ring->add(c[0], other);
                return Polynomial(std::move(c));
            };
            CofactorWitness w;
            for (const auto& f : sub->fs) w.fs.push_back(lift(f, true));
            w.g = lift(sub->g, false);
            return w;
        }
        return std::nullopt;
    }
    return FamilySearch(ring, query).run();
}

}  // namespace ringlab
