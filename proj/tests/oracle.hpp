#pragma once

// Brute-force reference computations. Everything here goes through FiniteRing::add/mul
// only and never calls the kernel, so it can serve as an oracle for it.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/poly.hpp"

namespace oracle {

using ringlab::Elem;
using ringlab::FiniteRing;

inline std::set<Elem> all(const FiniteRing& R) {
    std::set<Elem> s;
    for (std::size_t i = 0; i < R.size(); ++i) s.insert(static_cast<Elem>(i));
    return s;
}

inline std::set<Elem> right_ann(const FiniteRing& R, Elem a) {
    std::set<Elem> s;
    for (Elem c : all(R))
        if (R.mul(a, c) == 0) s.insert(c);
    return s;
}

inline std::set<Elem> left_ann(const FiniteRing& R, Elem a) {
    std::set<Elem> s;
    for (Elem c : all(R))
        if (R.mul(c, a) == 0) s.insert(c);
    return s;
}

inline bool nilpotent(const FiniteRing& R, Elem a) {
    Elem p = a;
    for (std::size_t i = 0; i <= R.size(); ++i) {
        if (p == 0) return true;
        p = R.mul(p, a);
    }
    return false;
}

inline std::set<Elem> nil(const FiniteRing& R) {
    std::set<Elem> s;
    for (Elem a : all(R))
        if (nilpotent(R, a)) s.insert(a);
    return s;
}

inline bool unit(const FiniteRing& R, Elem a) {
    for (Elem b : all(R))
        if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) return true;
    return false;
}

inline bool reversible_ring(const FiniteRing& R) {
    for (Elem a : all(R))
        for (Elem b : all(R))
            if (R.mul(a, b) == 0 && R.mul(b, a) != 0) return false;
    return true;
}

inline bool reversible_element(const FiniteRing& R, Elem a) { return left_ann(R, a) == right_ann(R, a); }

/// Every nonzero a has some a^m != 0 that is a reversible element.
inline bool weakly_reversible(const FiniteRing& R) {
    for (Elem a : all(R)) {
        if (a == 0) continue;
        bool found = false;
        Elem p = a;
        for (std::size_t m = 1; m <= R.size() && p != 0 && !found; ++m, p = R.mul(p, a))
            found = reversible_element(R, p);
        if (!found) return false;
    }
    return true;
}

inline bool abelian(const FiniteRing& R) {
    for (Elem e : all(R)) {
        if (R.mul(e, e) != e) continue;
        for (Elem r : all(R))
            if (R.mul(e, r) != R.mul(r, e)) return false;
    }
    return true;
}

/// Naive convolution with no degree cap.
inline std::vector<Elem> poly_mul(const FiniteRing& R, const std::vector<Elem>& f, const std::vector<Elem>& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<Elem> h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = R.add(h[i + j], R.mul(f[i], g[j]));
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

/// Calls fn on every coefficient vector of length d+1 (trailing zeros included).
template <class F>
void for_each_poly(const FiniteRing& R, int d, F&& fn) {
    std::vector<Elem> c(static_cast<std::size_t>(d + 1), 0);
    while (true) {
        fn(c);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == R.size()) c[i++] = 0;
        if (i == c.size()) return;
    }
}

// Word algebra F<x,y>/(xy, y^2 x, y x^2, x^3, y^3) over Z/p, written independently of
// the library's rewriting: a word is zero exactly when it contains a forbidden factor.
inline bool word_vanishes(const std::string& w) {
    for (const char* bad : {"xy", "yyx", "yxx", "xxx", "yyy"})
        if (w.find(bad) != std::string::npos) return true;
    return false;
}

inline const std::array<std::string, 6>& ex22_words() {
    static const std::array<std::string, 6> words{"", "x", "xx", "y", "yy", "yx"};
    return words;
}

/// Product of basis words i and j as a basis index, or -1 for zero.
inline int ex22_product(int i, int j) {
    const std::string w = ex22_words()[i] + ex22_words()[j];
    if (word_vanishes(w)) return -1;
    for (int k = 0; k < 6; ++k)
        if (ex22_words()[k] == w) return k;
    return -2;  // surviving word outside the basis
}

}  // namespace oracle
