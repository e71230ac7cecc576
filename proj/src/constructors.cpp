#include "ringlab/constructors.hpp"

#include <algorithm>
#include <limits>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > cap / std::max<std::size_t>(base, 1))
            throw CapacityError(what + " would exceed the ring size cap of " + std::to_string(cap));
        result *= base;
    }
    if (result > cap) throw CapacityError(what + " would exceed the ring size cap of " + std::to_string(cap));
    return result;
}

// Entry positions of each matrix pattern. For the skew pattern slot 0 stands for the whole diagonal.
std::vector<std::pair<unsigned, unsigned>> pattern_slots(Construction kind, unsigned k) {
    std::vector<std::pair<unsigned, unsigned>> slots;
    if (kind == Construction::SkewTriangular) slots.emplace_back(0, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            bool used = kind == Construction::Matrix || (kind == Construction::UpperTriangular && i <= j) ||
                        (kind == Construction::SkewTriangular && i < j);
            if (used) slots.emplace_back(i, j);
        }
    return slots;
}

std::vector<Elem> decode_matrix(Construction kind, unsigned k, std::size_t base_size, std::size_t handle) {
    std::vector<Elem> entries(k * k, 0);
    for (auto [i, j] : pattern_slots(kind, k)) {
        auto digit = static_cast<Elem>(handle % base_size);
        handle /= base_size;
        if (kind == Construction::SkewTriangular && i == 0 && j == 0) {
            for (unsigned d = 0; d < k; ++d) entries[d * k + d] = digit;
        } else {
            entries[i * k + j] = digit;
        }
    }
    return entries;
}

std::size_t encode_matrix(const std::vector<std::pair<unsigned, unsigned>>& slots, unsigned k, std::size_t base_size,
                          const std::vector<Elem>& entries) {
    std::size_t handle = 0;
    for (std::size_t s = slots.size(); s-- > 0;) {
        auto [i, j] = slots[s];
        handle = handle * base_size + entries[i * k + j];
    }
    return handle;
}

bool fits_pattern(Construction kind, unsigned k, const std::vector<Elem>& entries) {
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            Elem v = entries[i * k + j];
            if (kind == Construction::UpperTriangular && i > j && v != 0) return false;
            if (kind == Construction::SkewTriangular) {
                if (i > j && v != 0) return false;
                if (i == j && v != entries[0]) return false;
            }
        }
    return true;
}

const char* pattern_prefix(Construction kind) {
    switch (kind) {
        case Construction::Matrix: return "M";
        case Construction::UpperTriangular: return "T";
        default: return "S";
    }
}

RingPtr make_matrix_family(const RingPtr& base, unsigned k, Construction kind, std::size_t cap) {
    if (k < 1) throw ContractError("matrix size must be at least 1");
    const std::size_t b = base->size();
    const std::size_t n =
        checked_power(b, pattern_slots(kind, k).size(), cap, std::string(pattern_prefix(kind)) + std::to_string(k));
    const auto slots = pattern_slots(kind, k);
    std::vector<std::vector<Elem>> elems(n);
    for (std::size_t h = 0; h < n; ++h) elems[h] = decode_matrix(kind, k, b, h);

    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<Elem> tmp(k * k);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto& A = elems[x];
            const auto& B = elems[y];
            for (unsigned i = 0; i < k * k; ++i) tmp[i] = base->add(A[i], B[i]);
            add[x * n + y] = static_cast<Elem>(encode_matrix(slots, k, b, tmp));
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) {
                    Elem acc = 0;
                    for (unsigned l = 0; l < k; ++l) acc = base->add(acc, base->mul(A[i * k + l], B[l * k + j]));
                    tmp[i * k + j] = acc;
                }
            mul[x * n + y] = static_cast<Elem>(encode_matrix(slots, k, b, tmp));
        }

    std::vector<Elem> identity(k * k, 0);
    for (unsigned d = 0; d < k; ++d) identity[d * k + d] = base->one();

    std::vector<std::string> names(n);
    for (std::size_t h = 0; h < n; ++h) {
        std::string s = "[";
        for (unsigned i = 0; i < k; ++i) {
            s += i ? ",[" : "[";
            for (unsigned j = 0; j < k; ++j) s += (j ? "," : "") + base->name(elems[h][i * k + j]);
            s += "]";
        }
        names[h] = s + "]";
    }
    Origin origin{kind, static_cast<int>(k), base, nullptr, {}};
    auto ring = std::make_shared<FiniteRing>(pattern_prefix(kind) + std::to_string(k) + "(" + base->id() + ")", n,
                                             std::move(add), std::move(mul),
                                             static_cast<Elem>(encode_matrix(slots, k, b, identity)), std::move(names),
                                             std::move(origin));
    require_valid(*ring, cap);
    return ring;
}

std::string coordinate_name(const PrimeAlgebraData& alg, const ModpVector& v) {
    std::string out;
    for (unsigned t = 0; t < alg.dim; ++t) {
        if (!v[t]) continue;
        if (!out.empty()) out += "+";
        const auto& label = alg.labels[t];
        if (v[t] == 1)
            out += label;
        else
            out += std::to_string(v[t]) + (label == "1" ? "" : label);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

RingPtr make_zn(unsigned n, std::size_t cap) {
    if (n < 2) throw ContractError("Z_n needs n >= 2");
    if (n > cap) throw CapacityError("Z" + std::to_string(n) + " exceeds the ring size cap of " + std::to_string(cap));
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (unsigned a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (unsigned b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    }
    Origin origin{Construction::Zn, static_cast<int>(n), nullptr, nullptr, {}};
    return std::make_shared<FiniteRing>("Z" + std::to_string(n), n, std::move(add), std::move(mul), Elem{1},
                                        std::move(names), std::move(origin));
}

RingPtr make_matrix(const RingPtr& base, unsigned k, std::size_t cap) {
    return make_matrix_family(base, k, Construction::Matrix, cap);
}

RingPtr make_upper_triangular(const RingPtr& base, unsigned k, std::size_t cap) {
    return make_matrix_family(base, k, Construction::UpperTriangular, cap);
}

RingPtr make_skew_triangular(const RingPtr& base, unsigned k, std::size_t cap) {
    return make_matrix_family(base, k, Construction::SkewTriangular, cap);
}

Elem matrix_element(const FiniteRing& ring, const std::vector<Elem>& entries) {
    const auto& o = ring.origin();
    if (o.kind != Construction::Matrix && o.kind != Construction::UpperTriangular &&
        o.kind != Construction::SkewTriangular)
        throw ContractError(ring.id() + " is not a matrix ring");
    const auto k = static_cast<unsigned>(o.param);
    if (entries.size() != k * k) throw ContractError("matrix entry count mismatch");
    if (!fits_pattern(o.kind, k, entries)) throw ContractError("entries do not fit the pattern of " + ring.id());
    return static_cast<Elem>(encode_matrix(pattern_slots(o.kind, k), k, o.base->size(), entries));
}

Elem matrix_unit(const FiniteRing& ring, unsigned row, unsigned col) {
    const auto k = static_cast<unsigned>(ring.origin().param);
    if (row < 1 || col < 1 || row > k || col > k) throw ContractError("matrix position out of range");
    std::vector<Elem> entries(k * k, 0);
    entries[(row - 1) * k + (col - 1)] = ring.origin().base ? ring.origin().base->one() : Elem{0};
    return matrix_element(ring, entries);
}

RingPtr make_prime_algebra(std::string id, PrimeAlgebraData data, std::size_t cap, Origin origin) {
    if (!is_prime(data.p) || data.p > kMaxAlgebraPrime)
        throw ContractError("algebra characteristic must be a prime <= " + std::to_string(kMaxAlgebraPrime));
    if (data.dim == 0 || data.dim > kMaxAlgebraDim)
        throw ContractError("algebra dimension must be in 1.." + std::to_string(kMaxAlgebraDim));
    if (data.constants.size() != std::size_t{data.dim} * data.dim * data.dim || data.unit.size() != data.dim ||
        data.labels.size() != data.dim)
        throw ContractError("structure constant shape mismatch for " + id);
    const unsigned p = data.p, d = data.dim;
    const std::size_t n = checked_power(p, d, cap, id);

    auto digits = [&](std::size_t idx) {
        ModpVector v(d);
        for (unsigned t = 0; t < d; ++t, idx /= p) v[t] = static_cast<std::uint8_t>(idx % p);
        return v;
    };
    auto index = [&](const ModpVector& v) {
        std::size_t idx = 0;
        for (unsigned t = d; t-- > 0;) idx = idx * p + v[t];
        return static_cast<Elem>(idx);
    };
    std::vector<ModpVector> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = digits(i);

    std::vector<Elem> add(n * n), mul(n * n);
    ModpVector tmp(d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (unsigned t = 0; t < d; ++t) tmp[t] = static_cast<std::uint8_t>((coords[a][t] + coords[b][t]) % p);
            add[a * n + b] = index(tmp);
        }
    // a * (c e_t) for every a, basis slot t and scalar c, then fill by linearity in the right factor.
    std::vector<Elem> scaled(n * d * p, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (unsigned t = 0; t < d; ++t) {
            ModpVector prod(d, 0);
            for (unsigned i = 0; i < d; ++i) {
                if (!coords[a][i]) continue;
                for (unsigned k = 0; k < d; ++k)
                    prod[k] = static_cast<std::uint8_t>((prod[k] + coords[a][i] * data.constant(i, t, k)) % p);
            }
            ModpVector acc(d, 0);
            for (unsigned c = 0; c < p; ++c) {
                scaled[(a * d + t) * p + c] = index(acc);
                for (unsigned k = 0; k < d; ++k) acc[k] = static_cast<std::uint8_t>((acc[k] + prod[k]) % p);
            }
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            unsigned top = d - 1;
            while (coords[b][top] == 0) --top;
            std::size_t stride = 1;
            for (unsigned t = 0; t < top; ++t) stride *= p;
            const std::size_t low = b - coords[b][top] * stride;
            mul[a * n + b] = add[mul[a * n + low] * n + scaled[(a * d + top) * p + coords[b][top]]];
        }

    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = coordinate_name(data, coords[i]);
    if (origin.kind == Construction::Custom) origin.kind = Construction::Algebra;
    const Elem one = index(data.unit);
    auto ring = std::make_shared<FiniteRing>(std::move(id), std::move(data), std::move(add), std::move(mul), one,
                                             std::move(names), std::move(origin));
    require_valid(*ring, cap);
    return ring;
}

std::optional<std::string> ex22_reduce_word(const std::string& word) {
    static const std::array<std::string, 5> relations{"xy", "yyx", "yxx", "xxx", "yyy"};
    for (const auto& rel : relations)
        if (word.find(rel) != std::string::npos) return std::nullopt;
    return word;
}

std::array<std::array<int, 6>, 6> ex22_rewrite_table() {
    std::array<std::array<int, 6>, 6> table{};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            auto reduced = ex22_reduce_word(kEx22Basis[i] + kEx22Basis[j]);
            if (!reduced) {
                table[i][j] = -1;
                continue;
            }
            auto it = std::find(kEx22Basis.begin(), kEx22Basis.end(), *reduced);
            if (it == kEx22Basis.end()) throw ContractError("normal form " + *reduced + " is not a basis word");
            table[i][j] = static_cast<int>(it - kEx22Basis.begin());
        }
    return table;
}

PrimeAlgebraData ex22_structure(unsigned p) {
    enum : unsigned { One, X, X2, Y, Y2, YX };
    PrimeAlgebraData data;
    data.p = p;
    data.dim = 6;
    data.labels = {"1", "x", "x^2", "y", "y^2", "yx"};
    data.constants.assign(6 * 6 * 6, 0);
    auto set = [&](unsigned i, unsigned j, unsigned k) { data.constants[(i * 6 + j) * 6 + k] = 1; };
    for (unsigned b = 0; b < 6; ++b) {
        set(One, b, b);
        if (b != One) set(b, One, b);
    }
    set(X, X, X2);
    set(Y, Y, Y2);
    set(Y, X, YX);
    data.unit = {1, 0, 0, 0, 0, 0};
    return data;
}

RingPtr make_ex22(unsigned p, std::size_t cap) {
    if (!is_prime(p)) throw ContractError("ex22 needs a prime field, got " + std::to_string(p));
    auto data = ex22_structure(p);
    const auto oracle = ex22_rewrite_table();
    for (unsigned i = 0; i < 6; ++i)
        for (unsigned j = 0; j < 6; ++j)
            for (unsigned k = 0; k < 6; ++k) {
                const std::uint8_t expected = oracle[i][j] == static_cast<int>(k) ? 1 : 0;
                if (data.constant(i, j, k) != expected)
                    throw ContractError("ex22 structure constants disagree with monomial rewriting at (" +
                                        data.labels[i] + ", " + data.labels[j] + ")");
            }
    Origin origin{Construction::Ex22, static_cast<int>(p), nullptr, nullptr, {}};
    return make_prime_algebra("ex22(" + std::to_string(p) + ")", std::move(data), cap, std::move(origin));
}

RingPtr make_product(const RingPtr& first, const RingPtr& second, std::size_t cap) {
    const std::size_t n1 = first->size(), n2 = second->size();
    if (n1 > cap / n2) throw CapacityError("product exceeds the ring size cap of " + std::to_string(cap));
    const std::size_t n = n1 * n2;
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto a1 = static_cast<Elem>(a / n2), a2 = static_cast<Elem>(a % n2);
            auto b1 = static_cast<Elem>(b / n2), b2 = static_cast<Elem>(b % n2);
            add[a * n + b] = static_cast<Elem>(first->add(a1, b1) * n2 + second->add(a2, b2));
            mul[a * n + b] = static_cast<Elem>(first->mul(a1, b1) * n2 + second->mul(a2, b2));
        }
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a)
        names[a] = "(" + first->name(static_cast<Elem>(a / n2)) + "," + second->name(static_cast<Elem>(a % n2)) + ")";
    Origin origin{Construction::Product, 0, first, second, {}};
    auto ring = std::make_shared<FiniteRing>(first->id() + " x " + second->id(), n, std::move(add), std::move(mul),
                                             static_cast<Elem>(first->one() * n2 + second->one()), std::move(names),
                                             std::move(origin));
    require_valid(*ring, cap);
    return ring;
}

RingPtr make_corner(const RingPtr& ring, Elem e) {
    if (e >= ring->size() || ring->mul(e, e) != e)
        throw ContractError("corner needs an idempotent, got " + std::to_string(e) + " in " + ring->id());
    ElementSet members(ring->size());
    for (std::size_t a = 0; a < ring->size(); ++a) members.insert(ring->mul(ring->mul(e, static_cast<Elem>(a)), e));
    std::vector<Elem> embedding = members.elements();
    std::vector<Elem> local(ring->size(), 0);
    for (std::size_t i = 0; i < embedding.size(); ++i) local[embedding[i]] = static_cast<Elem>(i);
    const std::size_t n = embedding.size();
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        names[a] = ring->name(embedding[a]);
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = local[ring->add(embedding[a], embedding[b])];
            mul[a * n + b] = local[ring->mul(embedding[a], embedding[b])];
        }
    }
    Origin origin{Construction::Corner, static_cast<int>(e), ring, nullptr, embedding};
    auto corner = std::make_shared<FiniteRing>("corner(" + ring->id() + "," + std::to_string(e) + ")", n,
                                               std::move(add), std::move(mul), local[e], std::move(names),
                                               std::move(origin));
    require_valid(*corner);
    return corner;
}

RingPtr make_quotient(const RingPtr& ring, const ElementSet& gens) {
    const auto ideal = ideal_closure(*ring, gens);
    const auto ideal_elems = ideal.members().elements();
    std::vector<Elem> rep(ring->size());
    for (std::size_t a = 0; a < ring->size(); ++a) {
        Elem best = std::numeric_limits<Elem>::max();
        for (Elem i : ideal_elems) best = std::min(best, ring->add(static_cast<Elem>(a), i));
        rep[a] = best;
    }
    std::vector<Elem> reps = rep;
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::vector<Elem> local(ring->size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) local[reps[i]] = static_cast<Elem>(i);
    const std::size_t n = reps.size();
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        names[a] = "[" + ring->name(reps[a]) + "]";
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = local[rep[ring->add(reps[a], reps[b])]];
            mul[a * n + b] = local[rep[ring->mul(reps[a], reps[b])]];
        }
    }
    Origin origin{Construction::Quotient, static_cast<int>(ideal.size()), ring, nullptr, reps};
    auto quotient = std::make_shared<FiniteRing>(ring->id() + "/I" + std::to_string(ideal.size()), n, std::move(add),
                                                 std::move(mul), local[rep[ring->one()]], std::move(names),
                                                 std::move(origin));
    require_valid(*quotient);
    return quotient;
}

RingPtr make_opposite(const RingPtr& ring) {
    const std::size_t n = ring->size();
    std::vector<Elem> add(ring->add_table().begin(), ring->add_table().end());
    std::vector<Elem> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = ring->mul(static_cast<Elem>(b), static_cast<Elem>(a));
    Origin origin{Construction::Opposite, 0, ring, nullptr, {}};
    if (ring->algebra()) {
        auto data = *ring->algebra();
        const unsigned d = data.dim;
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                for (unsigned k = 0; k < d; ++k)
                    data.constants[(i * d + j) * d + k] = ring->algebra()->constant(j, i, k);
        return std::make_shared<FiniteRing>(ring->id() + "^op", std::move(data), std::move(add), std::move(mul),
                                            ring->one(), ring->names(), std::move(origin));
    }
    return std::make_shared<FiniteRing>(ring->id() + "^op", n, std::move(add), std::move(mul), ring->one(),
                                        ring->names(), std::move(origin));
}

}  // namespace ringlab
