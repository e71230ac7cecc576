#pragma once

#include <cstdint>
#include <vector>

namespace ringlab {

/// Vector over Z/p with small p, one coordinate per byte.
using ModpVector = std::vector<std::uint8_t>;

/// Dense row-major matrix over Z/p, p prime and at most 251.
class ModpMatrix {
public:
    ModpMatrix(unsigned p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    unsigned modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Appends a row; its length must equal cols().
    void append_row(const ModpVector& row);

    /// Rank of the matrix (row echelon form computed on a copy).
    std::size_t rank() const;

    /// Basis of {v : M v = 0}.
    std::vector<ModpVector> nullspace() const;

    /// Reduced row echelon form in place; returns pivot column per pivot row.
    std::vector<std::size_t> eliminate();

    ModpVector row(std::size_t r) const {
        return ModpVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

private:
    unsigned p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> data_;
};

/// Multiplicative inverse of a nonzero residue modulo prime p.
unsigned inverse_mod(unsigned a, unsigned p);

/// Row-reduced basis of the span of the given vectors.
std::vector<ModpVector> span_basis(const std::vector<ModpVector>& vectors, unsigned p, std::size_t dim);

}  // namespace ringlab
