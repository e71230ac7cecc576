#include "ringlab/linalg.hpp"

#include <utility>

#include "ringlab/error.hpp"

namespace ringlab {

unsigned inverse_mod(unsigned a, unsigned p) {
    a %= p;
    if (a == 0) throw ContractError("zero has no inverse modulo " + std::to_string(p));
    for (unsigned x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw ContractError("modulus is not prime: " + std::to_string(p));
}

void ModpMatrix::append_row(const ModpVector& row) {
    if (row.size() != cols_) throw ContractError("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> ModpMatrix::eliminate() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(at(sel, k), at(r, k));
        unsigned inv = inverse_mod(at(r, c), p_);
        for (std::size_t k = c; k < cols_; ++k) at(r, k) = static_cast<std::uint8_t>((at(r, k) * inv) % p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            unsigned factor = p_ - at(i, c);
            for (std::size_t k = c; k < cols_; ++k)
                at(i, k) = static_cast<std::uint8_t>((at(i, k) + factor * at(r, k)) % p_);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t ModpMatrix::rank() const {
    ModpMatrix copy = *this;
    return copy.eliminate().size();
}

std::vector<ModpVector> ModpMatrix::nullspace() const {
    ModpMatrix m = *this;
    auto pivots = m.eliminate();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<ModpVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        ModpVector v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = static_cast<std::uint8_t>((p_ - m.at(r, free)) % p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ModpVector> span_basis(const std::vector<ModpVector>& vectors, unsigned p, std::size_t dim) {
    ModpMatrix m(p, 0, dim);
    for (const auto& v : vectors) m.append_row(v);
    auto pivots = m.eliminate();
    std::vector<ModpVector> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.row(r));
    return basis;
}

}  // namespace ringlab
