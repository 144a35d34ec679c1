#include "waring/matrix.hpp"

#include <stdexcept>

namespace waring {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    MatrixQ m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> MatrixQ::row(std::size_t r) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

std::vector<Rational> MatrixQ::col(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixQ MatrixQ::multiply(const MatrixQ& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in multiply");
    MatrixQ out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

std::vector<Rational> MatrixQ::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

RrefResult rref(const MatrixQ& m) {
    RrefResult res;
    res.rref = m;
    MatrixQ& a = res.rref;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t j = col; j < cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
        const Rational inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < cols; ++j)
            if (!a.at(row, j).is_zero()) a.at(row, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            const Rational f = a.at(r, col);
            for (std::size_t j = col; j < cols; ++j) {
                if (a.at(row, j).is_zero()) continue;
                a.at(r, j) -= f * a.at(row, j);
            }
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

std::vector<std::vector<Rational>> kernel_basis(const MatrixQ& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.rref.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

MatrixQ inverse(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const RrefResult r = rref(aug);
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1)
        throw std::invalid_argument("matrix is singular");
    MatrixQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.rref.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rational>> solve(const MatrixQ& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    MatrixQ aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    for (std::size_t p : r.pivot_cols)
        if (p == m.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    std::vector<Rational> x(m.cols());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        x[r.pivot_cols[i]] = r.rref.at(i, m.cols());
    return x;
}

}  // namespace waring
