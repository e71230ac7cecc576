#include "ringlab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "ringlab/kernel.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::HypothesisNotMet: return "hypothesis-not-met";
        case ClaimStatus::SkippedByCap: return "skipped-by-cap";
    }
    return "?";
}

namespace {

const std::string kWR = "weakly reversible";

const std::vector<ClaimInfo> kRegistry{
    {"C1", "xy=0 and yx\\neq 0", "ring is ex22(p)"},
    {"C2", "S_2(R) is weakly reversible if, and only if", "none"},
    {"C3", "not weakly reversible for any $n\\geq 3$", "ring is S_n(R) with n >= 3"},
    {"C4", "reversible whenever $a^2=0$", kWR},
    {"C5", "Every weakly reversible ring is abelian", kWR},
    {"C6", "corner subring $eRe$ is too weakly reversible", kWR},
    {"C7", "non-singular if, and only if, it is reduced", kWR},
    {"C8", "$a^tRb =b Ra^t=\\{0\\}$", kWR},
    {"C9", "$aRb^k=b^kRa=\\{0\\}$", kWR},
    {"C10", "then $(aR)^m=0$", kWR},
    {"C11", "$(aR)^kb =\\{0\\}$", kWR},
    {"C12", "$a(Rb)^k =\\{0\\}$", kWR},
    {"C13", "Nil(R)$ is an ideal", kWR},
    {"C14", "(a_0R)^{k}g(x)=0", kWR},
    {"C15", "$a_ib_j\\in Nil(R)$", kWR},
    {"C16", "strongly right AB and strongly left AB", kWR},
    {"C17", "R is a McCoy ring", kWR},
    {"C18", "weakly reversible $\\pi$-duo rings are themselves reversible", "none (report-only)"},
};

const std::vector<std::string> kDefaultCorpus{
    "Z2",     "Z3",     "Z4",          "Z6",    "Z8",      "M2(Z2)",  "T2(Z2)",      "T3(Z2)",
    "S2(Z2)", "S2(Z4)", "S2(M2(Z2))", "S3(Z2)", "ex22(2)", "ex22(3)", "ex22(2) x Z4",
};

const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

// Everything the claims ask about one ring, computed on first use.
class Facts {
public:
    explicit Facts(RingPtr ring) : ptr(std::move(ring)), R(*ptr) {}

    bool weakly_reversible() {
        if (!wr_) wr_ = is_weakly_reversible(R).verdict;
        return *wr_;
    }
    const ElementSet& nil() {
        if (!nil_) nil_ = nil_set(R);
        return *nil_;
    }
    const CyclicIdeals& cyclic(Side s) {
        auto& slot = s == Side::Right ? right_ : left_;
        if (!slot) slot = std::make_unique<CyclicIdeals>(R, s);
        return *slot;
    }
    // zero_right(a) = {b : ab = 0}, zero_left(a) = {b : ba = 0}.
    const ElementSet& zero_right(Elem a) {
        build_zero();
        return zr_[a];
    }
    const ElementSet& zero_left(Elem a) {
        build_zero();
        return zl_[a];
    }
    // (aR)^1, (aR)^2, ... (right) or (Ra)^1, ... (left) as product sets, until the chain stabilises.
    const std::vector<ElementSet>& chain(Elem a, Side s) {
        auto key = std::make_pair(a, s);
        if (auto it = chains_.find(key); it != chains_.end()) return it->second;
        std::vector<ElementSet> out{cyclic(s).of(a)};
        while (true) {
            ElementSet next(R.size());
            out.back().for_each([&](Elem p) { next |= cyclic(s).of(R.mul(s, p, a)); });
            if (next == out.back()) break;
            if (std::find(out.begin(), out.end(), next) != out.end())
                throw Error("product sets of " + R.name(a) + " cycle; multiplication is not associative");
            out.push_back(std::move(next));
        }
        return chains_.emplace(key, std::move(out)).first->second;
    }
    // Product set for exponent k >= 1 (the chain is constant past its end).
    const ElementSet& chain_at(Elem a, Side s, std::size_t k) {
        const auto& c = chain(a, s);
        return c[std::min(k, c.size()) - 1];
    }

    RingPtr ptr;
    const FiniteRing& R;

private:
    void build_zero() {
        if (!zr_.empty()) return;
        const std::size_t n = R.size();
        zr_.assign(n, ElementSet(n));
        zl_.assign(n, ElementSet(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (R.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
                    zr_[a].insert(static_cast<Elem>(b));
                    zl_[b].insert(static_cast<Elem>(a));
                }
    }

    std::optional<bool> wr_;
    std::optional<ElementSet> nil_;
    std::unique_ptr<CyclicIdeals> right_, left_;
    std::vector<ElementSet> zr_, zl_;
    std::map<std::pair<Elem, Side>, std::vector<ElementSet>> chains_;
};

struct Cell {
    Facts& facts;
    const SuiteCaps& caps;
    ClaimResult& result;

    const FiniteRing& R() const { return facts.R; }
    std::string show(Elem e) const { return R().name(e); }

    void fail(std::vector<std::pair<std::string, std::string>> trace, std::vector<Elem> elems = {},
              std::vector<Polynomial> polys = {}) {
        result.status = ClaimStatus::Fail;
        result.trace = std::move(trace);
        result.elements = std::move(elems);
        result.polynomials = std::move(polys);
    }
    void fail_elems(const std::vector<std::string>& names, const std::vector<Elem>& elems) {
        std::vector<std::pair<std::string, std::string>> trace;
        for (std::size_t i = 0; i < names.size() && i < elems.size(); ++i) trace.emplace_back(names[i], show(elems[i]));
        fail(std::move(trace), elems);
    }
};

std::vector<Elem> nonzero_powers(const FiniteRing& R, Elem a) {
    std::vector<Elem> out;
    for (Elem c : power_orbit(R, a))
        if (c != 0) out.push_back(c);
    return out;
}

bool reversible_in(Facts& f, Elem a) { return f.zero_right(a) == f.zero_left(a); }

// ---- C1 ---------------------------------------------------------------------------------

Elem basis_handle(const FiniteRing& R, const std::string& label) {
    const auto& alg = *R.algebra();
    auto it = std::find(alg.labels.begin(), alg.labels.end(), label);
    if (it == alg.labels.end()) throw Error("basis element " + label + " missing from " + R.id());
    Elem h = 1;
    for (auto i = it - alg.labels.begin(); i > 0; --i) h = static_cast<Elem>(h * alg.p);
    return h;
}

void claim_ex22(Cell& c) {
    const auto& R = c.R();
    if (R.origin().kind != Construction::Ex22 || !R.algebra()) {
        c.result.status = ClaimStatus::HypothesisNotMet;
        return;
    }
    const unsigned p = R.algebra()->p;
    auto fact_fail = [&](const std::string& fact) { c.fail({{"fact", fact}}); };
    std::size_t p5 = 1;
    for (int i = 0; i < 5; ++i) p5 *= p;
    if (R.size() != p5 * p) return fact_fail("ring has p^6 elements");

    const Elem x = basis_handle(R, "x"), y = basis_handle(R, "y");
    ElementSet gens(R.size());
    for (const char* l : {"x", "x^2", "y", "y^2", "yx"}) gens.insert(basis_handle(R, l));
    const ElementSet span = additive_closure(R, gens);
    if (span.count() != p5 || !(c.facts.nil() == span)) return fact_fail("Nil(R) = Fyx+Fx+Fx^2+Fy+Fy^2");

    const unsigned one_digit = static_cast<unsigned>(
        std::find(R.algebra()->labels.begin(), R.algebra()->labels.end(), "1") - R.algebra()->labels.begin());
    std::size_t scale = 1;
    for (unsigned i = 0; i < one_digit; ++i) scale *= p;
    ElementSet nonzero_constant(R.size());
    for (std::size_t h = 0; h < R.size(); ++h)
        if ((h / scale) % p != 0) nonzero_constant.insert(static_cast<Elem>(h));
    const ElementSet u = units(R);
    if (u.count() != p5 * p - p5 || !(u == nonzero_constant)) return fact_fail("invertible precisely when s != 0");

    if (R.mul(x, y) != 0) return c.fail({{"fact", "xy = 0"}, {"x", c.show(x)}, {"y", c.show(y)}}, {x, y});
    if (R.mul(y, x) == 0) return c.fail({{"fact", "yx != 0"}, {"x", c.show(x)}, {"y", c.show(y)}}, {x, y});
    if (reversible_in(c.facts, x)) return fact_fail("x is not a reversible element");

    const auto wr = is_weakly_reversible(R);
    if (!wr.verdict) return fact_fail("R is weakly reversible");
    for (auto [a, m] : wr.witness->exponents)
        if (m > 2) return c.fail({{"fact", "every exponent m <= 2"}, {"a", c.show(a)}, {"m", std::to_string(m)}}, {a});
    c.result.note = "all exponents m <= 2";
}

// ---- C2, C3 -----------------------------------------------------------------------------

void claim_s2(Cell& c) {
    const auto& R = c.R();
    if (R.size() > c.caps.ring_size_cap / R.size()) {
        c.result.status = ClaimStatus::SkippedByCap;
        c.result.note = "S2(R) would have " + std::to_string(R.size()) + "^2 elements";
        return;
    }
    const auto s2 = make_skew_triangular(c.facts.ptr, 2, c.caps.ring_size_cap);
    const bool wr = is_weakly_reversible(*s2).verdict;
    const bool rev = check_property(c.facts.ptr, "reversible").verdict;
    c.result.note = std::string("S2(R) weakly reversible: ") + (wr ? "yes" : "no") + "; R reversible: " + (rev ? "yes" : "no");
    if (wr != rev) c.fail({{"S2(R) weakly reversible", wr ? "yes" : "no"}, {"R reversible", rev ? "yes" : "no"}});
}

void claim_sn(Cell& c) {
    const auto& R = c.R();
    if (R.origin().kind != Construction::SkewTriangular || R.origin().param < 3) {
        c.result.status = ClaimStatus::HypothesisNotMet;
        return;
    }
    const Elem A = matrix_unit(R, 1, 2), B = matrix_unit(R, 2, 3);
    const bool pair_ok = R.mul(A, A) == 0 && R.mul(B, B) == 0 && R.mul(B, A) == 0 && R.mul(A, B) != 0;
    if (!pair_ok) return c.fail_elems({"A", "B"}, {A, B});
    if (c.facts.weakly_reversible()) return c.fail({{"weakly reversible", "yes"}});
    c.result.elements = {A, B};
    c.result.note = "A = " + c.show(A) + ", B = " + c.show(B) + ": A^2 = B^2 = BA = 0 != AB";
}

// ---- C4 - C7 ----------------------------------------------------------------------------

void claim_square_zero_reversible(Cell& c) {
    const auto& R = c.R();
    for (std::size_t i = 1; i < R.size(); ++i) {
        const auto a = static_cast<Elem>(i);
        if (R.mul(a, a) != 0 || reversible_in(c.facts, a)) continue;
        Elem b = (c.facts.zero_right(a) & c.facts.zero_left(a).complement()).first_nonzero();
        if (!b) b = (c.facts.zero_left(a) & c.facts.zero_right(a).complement()).first_nonzero();
        return c.fail_elems({"a", "b"}, {a, b});
    }
}

void claim_abelian(Cell& c) {
    const auto& R = c.R();
    std::optional<std::pair<Elem, Elem>> bad;
    idempotents(R).for_each([&](Elem e) {
        for (std::size_t r = 0; r < R.size() && !bad; ++r)
            if (R.mul(e, static_cast<Elem>(r)) != R.mul(static_cast<Elem>(r), e)) bad.emplace(e, static_cast<Elem>(r));
    });
    if (bad) c.fail_elems({"e", "r"}, {bad->first, bad->second});
}

void claim_corners(Cell& c) {
    const auto& R = c.R();
    std::size_t checked = 0;
    bool failed = false;
    idempotents(R).for_each([&](Elem e) {
        if (failed || e == 0) return;
        auto corner = make_corner(c.facts.ptr, e);
        ++checked;
        auto rep = is_weakly_reversible(*corner);
        if (rep.verdict) return;
        const auto& emb = corner->origin().embedding;
        std::vector<Elem> elems{e};
        std::vector<std::string> names{"e"};
        for (std::size_t i = 0; i < rep.witness->elements.size(); ++i) {
            elems.push_back(emb[rep.witness->elements[i]]);
            names.push_back(i == 0 ? "a" : rep.witness->roles[i]);
        }
        c.fail_elems(names, elems);
        failed = true;
    });
    if (!failed) c.result.note = std::to_string(checked) + " nonzero idempotents";
}

void claim_nonsingular_reduced(Cell& c) {
    const auto& R = c.R();
    const auto reduced = check_property(c.facts.ptr, "reduced");
    for (Side s : {Side::Right, Side::Left}) {
        const Elem singular = singular_set(R, s).first_nonzero();
        const bool nonsingular = singular == 0;
        if (nonsingular == reduced.verdict) continue;
        Elem a = nonsingular ? reduced.witness->elements[0] : singular;
        c.fail({{"side", side_name(s)},
                {nonsingular ? "square-zero a" : "singular a", c.show(a)},
                {"reduced", reduced.verdict ? "yes" : "no"}},
               {a});
        return;
    }
}

// ---- C8 - C13 ---------------------------------------------------------------------------

template <class F>
void for_each_zero_pair(Cell& c, F&& f) {
    const auto& R = c.R();
    for (std::size_t i = 1; i < R.size(); ++i) {
        const auto a = static_cast<Elem>(i);
        bool stop = false;
        c.facts.zero_right(a).for_each([&](Elem b) {
            if (stop || b == 0) return;
            stop = !f(a, b);
        });
        if (stop) return;
    }
}

// a^t R b = 0 and b R a^t = 0 for some nonzero power a^t.
bool power_kills(Facts& f, Elem a, Elem b) {
    for (Elem c : nonzero_powers(f.R, a))
        if (f.cyclic(Side::Right).of(c).subset_of(f.zero_left(b)) && f.cyclic(Side::Right).of(b).subset_of(f.zero_left(c)))
            return true;
    return false;
}

void claim_power_left(Cell& c) {
    for_each_zero_pair(c, [&](Elem a, Elem b) {
        if (power_kills(c.facts, a, b)) return true;
        c.fail_elems({"a", "b"}, {a, b});
        return false;
    });
}

// a R b^k = 0 and b^k R a = 0 for some nonzero power b^k.
bool power_kills_right(Facts& f, Elem a, Elem b) {
    for (Elem c : nonzero_powers(f.R, b))
        if (f.cyclic(Side::Right).of(a).subset_of(f.zero_left(c)) && f.cyclic(Side::Right).of(c).subset_of(f.zero_left(a)))
            return true;
    return false;
}

void claim_power_right(Cell& c) {
    for_each_zero_pair(c, [&](Elem a, Elem b) {
        if (power_kills_right(c.facts, a, b)) return true;
        c.fail_elems({"a", "b"}, {a, b});
        return false;
    });
}

// Some r_1..r_m with a r_1 a r_2 ... a r_m != 0, searched depth-first over distinct partial products.
std::optional<std::vector<Elem>> nonzero_chain_product(const FiniteRing& R, Elem a, unsigned m) {
    std::vector<std::vector<bool>> seen(m + 1, std::vector<bool>(R.size(), false));
    std::vector<Elem> rs;
    std::function<bool(Elem, unsigned)> go = [&](Elem v, unsigned depth) {
        if (depth == m) return v != 0;
        if (seen[depth][v]) return false;
        seen[depth][v] = true;
        const Elem va = R.mul(v, a);
        for (std::size_t r = 0; r < R.size(); ++r) {
            rs.push_back(static_cast<Elem>(r));
            if (go(R.mul(va, static_cast<Elem>(r)), depth + 1)) return true;
            rs.pop_back();
        }
        return false;
    };
    if (go(R.one(), 0)) return rs;
    return std::nullopt;
}

void claim_nil_power(Cell& c) {
    const auto& R = c.R();
    std::size_t checked = 0;
    c.facts.nil().for_each([&](Elem a) {
        if (a == 0 || c.result.status == ClaimStatus::Fail) return;
        const unsigned m = nilpotency_index(R, a);
        ++checked;
        if (c.facts.chain_at(a, Side::Right, m).is_trivial()) return;
        auto found = nonzero_chain_product(R, a, m);
        if (!found) throw Error("product set of " + R.name(a) + " has no explicit nonzero product");
        const auto& rs = *found;
        std::vector<std::pair<std::string, std::string>> trace{{"a", c.show(a)}, {"m", std::to_string(m)}};
        std::vector<Elem> elems{a};
        for (std::size_t i = 0; i < rs.size(); ++i) {
            trace.emplace_back("r" + std::to_string(i + 1), c.show(rs[i]));
            elems.push_back(rs[i]);
        }
        c.fail(std::move(trace), std::move(elems));
    });
    if (c.result.status != ClaimStatus::Fail) c.result.note = std::to_string(checked) + " nonzero nilpotents";
}

// Exponent range for "exists k with x^k != 0": past the chains' end nothing changes, so the
// larger of the chain lengths (or the nilpotency index minus one) bounds the search exactly.
std::size_t exponent_limit(Facts& f, Elem x, std::size_t chain_len) {
    const unsigned m = nilpotency_index(f.R, x);
    return m ? m - 1 : std::max<std::size_t>(chain_len, 1);
}

void claim_chain_left(Cell& c) {
    for_each_zero_pair(c, [&](Elem a, Elem b) {
        auto& f = c.facts;
        const std::size_t len = std::max(f.chain(a, Side::Right).size(), f.chain(a, Side::Left).size());
        for (std::size_t k = 1; k <= exponent_limit(f, a, len); ++k)
            if (f.chain_at(a, Side::Right, k).subset_of(f.zero_left(b)) && f.chain_at(a, Side::Left, k).subset_of(f.zero_right(b)))
                return true;
        c.fail_elems({"a", "b"}, {a, b});
        return false;
    });
}

void claim_chain_right(Cell& c) {
    for_each_zero_pair(c, [&](Elem a, Elem b) {
        auto& f = c.facts;
        const std::size_t len = std::max(f.chain(b, Side::Right).size(), f.chain(b, Side::Left).size());
        for (std::size_t k = 1; k <= exponent_limit(f, b, len); ++k)
            if (f.chain_at(b, Side::Left, k).subset_of(f.zero_right(a)) && f.chain_at(b, Side::Right, k).subset_of(f.zero_left(a)))
                return true;
        c.fail_elems({"a", "b"}, {a, b});
        return false;
    });
}

void claim_nil_ideal(Cell& c) {
    const auto& R = c.R();
    const ElementSet& nil = c.facts.nil();
    const auto members = nil.elements();
    for (Elem a : members)
        for (Elem b : members)
            if (!nil.contains(R.add(a, b))) {
                c.fail({{"kind", "sum"}, {"a", c.show(a)}, {"b", c.show(b)}}, {a, b});
                return;
            }
    for (Elem a : members)
        for (std::size_t r = 0; r < R.size(); ++r) {
            const auto re = static_cast<Elem>(r);
            if (!nil.contains(R.mul(re, a))) return c.fail({{"kind", "left"}, {"a", c.show(a)}, {"r", c.show(re)}}, {a, re});
            if (!nil.contains(R.mul(a, re))) return c.fail({{"kind", "right"}, {"a", c.show(a)}, {"r", c.show(re)}}, {a, re});
        }
    c.result.note = "|Nil(R)| = " + std::to_string(members.size());
}

// ---- C14, C15 ---------------------------------------------------------------------------

// Every g of degree <= d with f g = 0, by backtracking from the lowest coefficient.
void for_each_annihilator(const FiniteRing& R, const Polynomial& f, int d, std::uint64_t& budget,
                          const std::function<void(const std::vector<Elem>&)>& visit) {
    const auto& a = f.coeffs();
    const int m = f.degree();
    std::vector<Elem> b(d + 1, 0);
    std::function<void(int)> go = [&](int j) {
        if (budget-- == 0) throw CapacityError("annihilator enumeration budget exhausted");
        if (j > d) {
            for (int k = d + 1; k <= m + d; ++k) {
                Elem s = 0;
                for (int i = std::max(0, k - d); i <= std::min(k, m); ++i) s = R.add(s, R.mul(a[i], b[k - i]));
                if (s != 0) return;
            }
            visit(b);
            return;
        }
        // Coefficient j of f g involves b_0..b_j only.
        for (std::size_t cand = 0; cand < R.size(); ++cand) {
            b[j] = static_cast<Elem>(cand);
            Elem s = 0;
            for (int i = 0; i <= std::min(j, m); ++i) s = R.add(s, R.mul(a[i], b[j - i]));
            if (s == 0) go(j + 1);
        }
        b[j] = 0;
    };
    if (f.is_zero()) {
        // Everything annihilates 0; only the zero g matters for the conclusions, which is trivial.
        visit(b);
        return;
    }
    go(0);
}

struct PolyLemma {
    bool chain_form;  // C14 when true, C15 otherwise
};

int affordable_degree(std::size_t n, std::uint64_t budget) {
    int d = -1;
    std::uint64_t count = n;
    for (int k = 0; k <= 2 && count <= budget; ++k) {
        d = k;
        count = count > budget / n ? budget + 1 : count * n;
    }
    return d;
}

// Returns a failing (f, g) with the offending index pair for C15.
struct PolyFailure {
    Polynomial f, g;
    int i = -1, j = -1;
};

std::optional<PolyFailure> check_poly_lemma(Facts& facts, const PolyLemma& lemma, int df, int dg, std::uint64_t& budget) {
    const FiniteRing& R = facts.R;
    const ElementSet& nil = facts.nil();
    const bool nil_additive = additive_closure(R, nil) == nil;
    std::vector<Elem> a(df + 1, 0);
    std::optional<PolyFailure> failure;

    auto test = [&](const Polynomial& f, const std::vector<Elem>& b) {
        if (failure) return;
        if (lemma.chain_form) {
            if (f.coeffs().empty()) return;
            const ElementSet& limit = facts.chain(f.coeff(0), Side::Right).back();
            for (Elem bj : b) {
                bool killed = true;
                limit.for_each([&](Elem p) { killed = killed && R.mul(p, bj) == 0; });
                if (!killed) {
                    failure = PolyFailure{f, Polynomial(b)};
                    return;
                }
            }
        } else {
            for (std::size_t i = 0; i < f.coeffs().size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (!nil.contains(R.mul(f.coeffs()[i], b[j]))) {
                        failure = PolyFailure{f, Polynomial(b), static_cast<int>(i), static_cast<int>(j)};
                        return;
                    }
        }
    };

    std::function<void(int)> choose = [&](int i) {
        if (failure) return;
        if (i > df) {
            Polynomial f(a);
            if (R.linear() && (lemma.chain_form || nil_additive)) {
                // Both conclusions are closed under sums of g's, so a basis suffices.
                for (const auto& g : poly_annihilator_basis(R, Side::Right, f, dg)) {
                    std::vector<Elem> b(dg + 1);
                    for (int j = 0; j <= dg; ++j) b[j] = g.coeff(j);
                    test(f, b);
                }
            } else {
                for_each_annihilator(R, f, dg, budget, [&](const std::vector<Elem>& b) { test(f, b); });
            }
            return;
        }
        for (std::size_t v = 0; v < R.size() && !failure; ++v) {
            a[i] = static_cast<Elem>(v);
            choose(i + 1);
        }
    };
    choose(0);
    return failure;
}

void claim_poly(Cell& c, bool chain_form) {
    // Split off central idempotents: R = eRe x (1-e)R(1-e) and both lemmas hold componentwise.
    std::vector<std::pair<RingPtr, std::vector<Elem>>> parts;  // component, embedding into R
    std::function<void(const RingPtr&, std::vector<Elem>)> split = [&](const RingPtr& ring, std::vector<Elem> emb) {
        if (auto e = central_idempotent(*ring)) {
            for (Elem idem : {*e, ring->sub(ring->one(), *e)}) {
                auto corner = make_corner(ring, idem);
                std::vector<Elem> sub(corner->size());
                for (std::size_t h = 0; h < corner->size(); ++h) sub[h] = emb[corner->origin().embedding[h]];
                split(corner, std::move(sub));
            }
            return;
        }
        parts.emplace_back(ring, std::move(emb));
    };
    std::vector<Elem> identity(c.R().size());
    for (std::size_t h = 0; h < identity.size(); ++h) identity[h] = static_cast<Elem>(h);
    split(c.facts.ptr, identity);

    std::vector<std::string> notes;
    std::uint64_t budget = c.caps.enumeration_budget;
    for (auto& [ring, emb] : parts) {
        const int df = affordable_degree(ring->size(), c.caps.polynomial_budget);
        if (df < 0) {
            c.result.status = ClaimStatus::SkippedByCap;
            c.result.note = "component " + ring->id() + " too large for the polynomial budget";
            return;
        }
        Facts local(ring);
        auto fail = check_poly_lemma(parts.size() == 1 ? c.facts : local, PolyLemma{chain_form}, df, 2, budget);
        if (fail) {
            auto lift = [&](const Polynomial& p) {
                std::vector<Elem> co;
                for (Elem x : p.coeffs()) co.push_back(emb[x]);
                return Polynomial(co);
            };
            Polynomial f = lift(fail->f), g = lift(fail->g);
            std::vector<std::pair<std::string, std::string>> trace{{"f", to_string(c.R(), f)}, {"g", to_string(c.R(), g)}};
            std::vector<Elem> idx;
            if (!chain_form) {
                trace.emplace_back("i", std::to_string(fail->i));
                trace.emplace_back("j", std::to_string(fail->j));
                idx = {static_cast<Elem>(fail->i), static_cast<Elem>(fail->j)};
            }
            c.fail(std::move(trace), idx, {f, g});
            return;
        }
        notes.push_back(ring->id() + ": deg f <= " + std::to_string(df) + ", deg g <= 2");
    }
    std::string note;
    for (const auto& n : notes) note += (note.empty() ? "" : "; ") + n;
    c.result.note = note;
}

// ---- C16, C17, C18 ----------------------------------------------------------------------

void claim_strongly_ab(Cell& c) {
    for (Side side : {Side::Right, Side::Left})
        for (int family : {1, 2}) {
            CofactorQuery q;
            q.side = side;
            q.f_degree = family == 1 ? 2 : 1;
            q.g_degree = c.caps.max_degree;
            q.condition = ContentCondition::ZeroBoundedAnnihilator;
            q.family_size = family;
            q.enumeration_budget = c.caps.enumeration_budget;
            auto w = find_annihilated_family(c.facts.ptr, q);
            if (!w) continue;
            std::vector<std::pair<std::string, std::string>> trace{{"side", side_name(side)}};
            std::vector<Polynomial> polys = w->fs;
            for (std::size_t i = 0; i < w->fs.size(); ++i) trace.emplace_back("f" + std::to_string(i + 1), to_string(c.R(), w->fs[i]));
            trace.emplace_back("g", to_string(c.R(), w->g));
            polys.push_back(w->g);
            c.fail(std::move(trace), {}, std::move(polys));
            return;
        }
    c.result.note = "no X (singletons deg <= 2, pairs deg <= 1) with a nonzero annihilator of deg <= " +
                    std::to_string(c.caps.max_degree) + " lacks a bounding constant, both sides";
}

void claim_mccoy(Cell& c) {
    for (Side side : {Side::Right, Side::Left})
        if (auto v = mccoy_falsify(c.facts.ptr, side, c.caps.max_degree, c.caps.enumeration_budget)) {
            c.fail({{"side", side_name(side)}, {"f", to_string(c.R(), v->f)}, {"g", to_string(c.R(), v->g)}}, {},
                   {v->f, v->g});
            return;
        }
    c.result.note = "no violation up to degree " + std::to_string(c.caps.max_degree) + " on either side";
}

void claim_problem(Cell& c) {
    const bool wr = c.facts.weakly_reversible();
    const bool pd = check_property(c.facts.ptr, "pi-duo").verdict;
    const bool rev = check_property(c.facts.ptr, "reversible").verdict;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    c.result.note = std::string("report-only: weakly-reversible=") + yn(wr) + ", pi-duo=" + yn(pd) + ", reversible=" + yn(rev);
    if (wr && pd && !rev) c.result.note += "; counterexample-candidate";
}

using ClaimFn = void (*)(Cell&);

struct ClaimImpl {
    ClaimFn fn;
    bool needs_wr;
};

const std::map<std::string, ClaimImpl>& implementations() {
    static const std::map<std::string, ClaimImpl> impls{
        {"C1", {claim_ex22, false}},
        {"C2", {claim_s2, false}},
        {"C3", {claim_sn, false}},
        {"C4", {claim_square_zero_reversible, true}},
        {"C5", {claim_abelian, true}},
        {"C6", {claim_corners, true}},
        {"C7", {claim_nonsingular_reduced, true}},
        {"C8", {claim_power_left, true}},
        {"C9", {claim_power_right, true}},
        {"C10", {claim_nil_power, true}},
        {"C11", {claim_chain_left, true}},
        {"C12", {claim_chain_right, true}},
        {"C13", {claim_nil_ideal, true}},
        {"C14", {[](Cell& c) { claim_poly(c, true); }, true}},
        {"C15", {[](Cell& c) { claim_poly(c, false); }, true}},
        {"C16", {claim_strongly_ab, true}},
        {"C17", {claim_mccoy, true}},
        {"C18", {claim_problem, false}},
    };
    return impls;
}

ClaimResult run_with(const std::string& claim, Facts& facts, const SuiteCaps& caps) {
    const auto& impls = implementations();
    auto it = impls.find(claim);
    if (it == impls.end()) throw ContractError("unknown claim '" + claim + "'");
    const auto start = std::chrono::steady_clock::now();
    ClaimResult result;
    result.claim = claim;
    result.ring = facts.R.id();
    Cell cell{facts, caps, result};
    try {
        if (it->second.needs_wr && !facts.weakly_reversible()) result.status = ClaimStatus::HypothesisNotMet;
        else it->second.fn(cell);
    } catch (const CapacityError& e) {
        result = ClaimResult{claim, facts.R.id(), ClaimStatus::SkippedByCap, {}, {}, {}, e.what(), 0};
    } catch (const Error& e) {
        result = ClaimResult{claim, facts.R.id(), ClaimStatus::Fail, {}, {}, {}, std::string("error: ") + e.what(), 0};
    }
    result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

// ---- replay -----------------------------------------------------------------------------

std::string trace_value(const ClaimResult& r, const std::string& key) {
    for (const auto& [k, v] : r.trace)
        if (k == key) return v;
    return {};
}

bool is_nilpotent(const FiniteRing& R, Elem a) {
    Elem c = a;
    for (std::size_t i = 0; i <= R.size(); ++i) {
        if (c == 0) return true;
        c = R.mul(c, a);
    }
    return false;
}

bool product_is_zero(const FiniteRing& R, Side side, const Polynomial& f, const Polynomial& g) {
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    for (std::size_t k = 0; k + 1 < a.size() + b.size(); ++k) {
        Elem s = 0;
        for (std::size_t i = 0; i < a.size() && i <= k; ++i)
            if (k - i < b.size()) s = R.add(s, R.mul(side, a[i], b[k - i]));
        if (s != 0) return false;
    }
    return true;
}

// Exactly one of cb, bc is zero.
bool separates(const FiniteRing& R, Elem c, Elem b) { return (R.mul(c, b) == 0) != (R.mul(b, c) == 0); }

// Some r with x r y != 0.
bool sandwich_nonzero(const FiniteRing& R, Elem x, Elem y) {
    for (std::size_t r = 0; r < R.size(); ++r)
        if (R.mul(R.mul(x, static_cast<Elem>(r)), y) != 0) return true;
    return false;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() { return kRegistry; }
const std::vector<std::string>& default_corpus() { return kDefaultCorpus; }

ClaimResult run_claim(const std::string& claim, const RingPtr& ring, const SuiteCaps& caps) {
    Facts facts(ring);
    return run_with(claim, facts, caps);
}

std::size_t SuiteReport::count(ClaimStatus s) const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const ClaimResult& c) { return c.status == s; }));
}

SuiteReport run_suite(const std::vector<RingPtr>& corpus, const SuiteCaps& caps) {
    SuiteReport report;
    std::vector<std::unique_ptr<Facts>> facts;
    for (const auto& r : corpus) {
        report.rings.push_back(r->id());
        facts.push_back(std::make_unique<Facts>(r));
    }
    for (const auto& info : kRegistry)
        for (auto& f : facts) report.cells.push_back(run_with(info.id, *f, caps));
    return report;
}

std::vector<ExplorationRow> explore_problem(const std::vector<RingPtr>& corpus) {
    std::vector<ExplorationRow> rows;
    for (const auto& r : corpus) {
        ExplorationRow row;
        row.ring = r->id();
        row.weakly_reversible = is_weakly_reversible(*r).verdict;
        row.pi_duo = check_property(r, "pi-duo").verdict;
        row.reversible = check_property(r, "reversible").verdict;
        rows.push_back(row);
    }
    return rows;
}

bool replay_failure(const RingPtr& ring, const ClaimResult& res, const SuiteCaps& caps) {
    if (res.status != ClaimStatus::Fail || res.note.starts_with("error: ")) return false;
    const FiniteRing& R = *ring;
    const auto& e = res.elements;
    const auto& id = res.claim;
    auto need = [&](std::size_t k) { return e.size() >= k; };

    if (id == "C4")
        return need(2) && e[0] != 0 && R.mul(e[0], e[0]) == 0 && separates(R, e[0], e[1]);
    if (id == "C5")
        return need(2) && R.mul(e[0], e[0]) == e[0] && R.mul(e[0], e[1]) != R.mul(e[1], e[0]);
    if (id == "C6") {
        if (!need(2) || R.mul(e[0], e[0]) != e[0]) return false;
        const Elem a = e[1];
        if (a == 0 || R.mul(R.mul(e[0], a), e[0]) != a) return false;
        auto powers = nonzero_powers(R, a);
        if (e.size() != powers.size() + 2) return false;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            const Elem b = e[i + 2];
            if (R.mul(R.mul(e[0], b), e[0]) != b || !separates(R, powers[i], b)) return false;
        }
        return true;
    }
    if (id == "C8" || id == "C9") {
        if (!need(2) || e[0] == 0 || e[1] == 0 || R.mul(e[0], e[1]) != 0) return false;
        const Elem a = e[0], b = e[1];
        for (Elem c : nonzero_powers(R, id == "C8" ? a : b)) {
            const bool violated = id == "C8" ? sandwich_nonzero(R, c, b) || sandwich_nonzero(R, b, c)
                                             : sandwich_nonzero(R, a, c) || sandwich_nonzero(R, c, a);
            if (!violated) return false;
        }
        return true;
    }
    if (id == "C10") {
        if (!need(1)) return false;
        const Elem a = e[0];
        const unsigned m = nilpotency_index(R, a);
        if (m == 0 || e.size() != m + 1) return false;
        Elem v = R.one();
        for (unsigned i = 1; i <= m; ++i) v = R.mul(R.mul(v, a), e[i]);
        return v != 0;
    }
    if (id == "C11" || id == "C12") {
        if (!need(2) || e[0] == 0 || e[1] == 0 || R.mul(e[0], e[1]) != 0) return false;
        Facts f(ring);
        const Elem a = e[0], b = e[1];
        const Elem x = id == "C11" ? a : b;
        const std::size_t len = std::max(f.chain(x, Side::Right).size(), f.chain(x, Side::Left).size());
        for (std::size_t k = 1; k <= exponent_limit(f, x, len); ++k) {
            const auto& right = f.chain_at(x, Side::Right, k);
            const auto& left = f.chain_at(x, Side::Left, k);
            bool killed = true;
            if (id == "C11") {
                right.for_each([&](Elem p) { killed = killed && R.mul(p, b) == 0; });
                left.for_each([&](Elem q) { killed = killed && R.mul(b, q) == 0; });
            } else {
                left.for_each([&](Elem q) { killed = killed && R.mul(a, q) == 0; });
                right.for_each([&](Elem p) { killed = killed && R.mul(p, a) == 0; });
            }
            if (killed) return false;
        }
        return true;
    }
    if (id == "C13") {
        if (!need(2)) return false;
        const std::string kind = trace_value(res, "kind");
        if (!is_nilpotent(R, e[0])) return false;
        if (kind == "sum") return is_nilpotent(R, e[1]) && !is_nilpotent(R, R.add(e[0], e[1]));
        if (kind == "left") return !is_nilpotent(R, R.mul(e[1], e[0]));
        if (kind == "right") return !is_nilpotent(R, R.mul(e[0], e[1]));
        return false;
    }
    if (id == "C14" || id == "C15") {
        if (res.polynomials.size() != 2) return false;
        const auto& f = res.polynomials[0];
        const auto& g = res.polynomials[1];
        if (!product_is_zero(R, Side::Right, f, g)) return false;
        if (id == "C15") return need(2) && !is_nilpotent(R, R.mul(f.coeff(e[0]), g.coeff(e[1])));
        Facts facts(ring);
        const ElementSet& limit = facts.chain(f.coeff(0), Side::Right).back();
        bool violated = false;
        limit.for_each([&](Elem p) {
            for (Elem b : g.coeffs()) violated = violated || R.mul(p, b) != 0;
        });
        return violated;
    }
    if (id == "C16" || id == "C17") {
        const Side side = trace_value(res, "side") == "left" ? Side::Left : Side::Right;
        if (res.polynomials.size() < 2) return false;
        const Polynomial& g = res.polynomials.back();
        if (g.is_zero()) return false;
        std::vector<Elem> content;
        for (std::size_t i = 0; i + 1 < res.polynomials.size(); ++i) {
            if (!product_is_zero(R, side, res.polynomials[i], g)) return false;
            for (Elem a : res.polynomials[i].coeffs()) content.push_back(a);
        }
        for (std::size_t ci = 1; ci < R.size(); ++ci) {
            const auto c = static_cast<Elem>(ci);
            bool kills = true;
            for (Elem a : content) {
                if (id == "C17") {
                    kills = kills && R.mul(side, a, c) == 0;
                } else {
                    for (std::size_t r = 0; r < R.size() && kills; ++r)
                        kills = R.mul(side, R.mul(side, a, static_cast<Elem>(r)), c) == 0;
                }
                if (!kills) break;
            }
            if (kills) return false;
        }
        return true;
    }
    // Whole-ring statements: recompute.
    return run_claim(id, ring, caps).status == ClaimStatus::Fail;
}

}  // namespace ringlab
