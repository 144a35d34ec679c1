#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Dense matrix over Q with value semantics. Row-major storage.
class MatrixQ {
public:
    MatrixQ() : rows_(0), cols_(0) {}
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatrixQ identity(std::size_t n);
    static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> col(std::size_t c) const;

    MatrixQ transpose() const;
    MatrixQ multiply(const MatrixQ& other) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const MatrixQ& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Result of Gauss–Jordan elimination: the reduced row echelon form, its
/// rank, and the pivot column indices in increasing order.
struct RrefResult {
    MatrixQ rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with exact arithmetic (pivots are 1, pivot
/// columns are elementary). Deterministic: the pivot for each column is the
/// first row with a nonzero entry.
RrefResult rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// Canonical basis of the right kernel {v : Mv = 0}. One vector per free
/// column f, with entry 1 at f, the negated rref entries at the pivot
/// columns, and 0 elsewhere. Ordered by increasing free column index.
std::vector<std::vector<Rational>> kernel_basis(const MatrixQ& m);

/// Inverse of a square matrix; throws std::invalid_argument when singular
/// or non-square.
MatrixQ inverse(const MatrixQ& m);

/// One solution of Mx = b (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve(const MatrixQ& m, const std::vector<Rational>& b);

}  // namespace waring
