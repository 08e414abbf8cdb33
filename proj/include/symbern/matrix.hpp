#pragma once

#include "symbern/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace symbern {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

    static RationalMatrix identity(std::size_t n);
    /// Integer literal rows, mostly for tests and fixed matrices.
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    RationalVector column(std::size_t c) const;

    RationalVector operator*(std::span<const Rational> v) const;
    RationalMatrix select_columns(std::span<const std::size_t> columns) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;  ///< 0-based pivot columns, increasing
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/**
 * Basis of {v : m v = 0} read off the RREF: one vector per free column,
 * with that free variable set to 1 and the other free variables to 0.
 * Empty when the nullspace is trivial.
 */
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

/// True when v lies in the span of `basis` (exact).
bool in_span(const std::vector<RationalVector>& basis, std::span<const Rational> v);

bool is_zero(std::span<const Rational> v);

}  // namespace symbern
