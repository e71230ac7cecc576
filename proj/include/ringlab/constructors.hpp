#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"
#include "ringlab/kernel.hpp"

namespace ringlab {

/// Z/n as a table ring.
RingPtr make_zn(unsigned n, std::size_t cap = kDefaultRingSizeCap);

/// Full k x k matrices over base.
RingPtr make_matrix(const RingPtr& base, unsigned k, std::size_t cap = kDefaultRingSizeCap);

/// Upper-triangular k x k matrices over base.
RingPtr make_upper_triangular(const RingPtr& base, unsigned k, std::size_t cap = kDefaultRingSizeCap);

/// Upper-triangular k x k matrices over base whose diagonal entries are all equal.
RingPtr make_skew_triangular(const RingPtr& base, unsigned k, std::size_t cap = kDefaultRingSizeCap);

/// Handle of the matrix with the identity of the base at (row, col) and zeros elsewhere.
/// Rows and columns are 1-based. Requires a ring built by one of the matrix constructors
/// and a position that the ring's pattern allows.
Elem matrix_unit(const FiniteRing& ring, unsigned row, unsigned col);

/// Handle of the matrix with the given entries (row-major, k*k base handles).
Elem matrix_element(const FiniteRing& ring, const std::vector<Elem>& entries);

/// Algebra over Z/p given by structure constants, checked for associativity and
/// unitality on basis triples. Throws CapacityError when p^dim exceeds the cap.
RingPtr make_prime_algebra(std::string id, PrimeAlgebraData data, std::size_t cap = kDefaultRingSizeCap,
                           Origin origin = {});

/// Basis words of the algebra F<x,y> / (xy, y^2 x, y x^2, x^3, y^3): 1, x, x^2, y, y^2, yx.
inline const std::array<std::string, 6> kEx22Basis{"", "x", "xx", "y", "yy", "yx"};

/// Product table of the basis words, computed by monomial rewriting of the
/// concatenated words: table[i][j] is the index of the basis word or -1 for zero.
std::array<std::array<int, 6>, 6> ex22_rewrite_table();

/// Reduces a word over {x, y}: returns the word itself when no relation occurs
/// in it, or std::nullopt when it rewrites to zero.
std::optional<std::string> ex22_reduce_word(const std::string& word);

/// Structure constants for F<x,y>/I over Z/p in the basis 1, x, x^2, y, y^2, yx.
PrimeAlgebraData ex22_structure(unsigned p);

/// The six-dimensional algebra over Z/p. Cross-checks the structure constants
/// against the rewriting table before building. Throws ContractError when p is not prime.
RingPtr make_ex22(unsigned p, std::size_t cap = kDefaultRingSizeCap);

RingPtr make_product(const RingPtr& first, const RingPtr& second, std::size_t cap = kDefaultRingSizeCap);

/// The ring eRe with identity e. Throws ContractError when e is not idempotent.
RingPtr make_corner(const RingPtr& ring, Elem e);

/// R / I where I is the two-sided ideal generated by gens.
RingPtr make_quotient(const RingPtr& ring, const ElementSet& gens);

/// Same elements, multiplication reversed.
RingPtr make_opposite(const RingPtr& ring);

}  // namespace ringlab
