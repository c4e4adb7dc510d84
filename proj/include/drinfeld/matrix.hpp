#pragma once

#include "drinfeld/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace drinfeld {

using Vector = std::vector<Scalar>;

inline bool is_zero(std::span<const Scalar> v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

inline Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

inline Vector operator+(Vector a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Vector operator-(Vector a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline Vector operator*(const Scalar& c, Vector a)
{
    for (auto& x : a)
        x *= c;
    return a;
}

inline Vector operator-(Vector a)
{
    for (auto& x : a)
        x = -x;
    return a;
}

/// Largest absolute entry; zero for an empty vector.
inline Scalar max_abs(std::span<const Scalar> v)
{
    Scalar m = 0;
    for (const auto& x : v)
        if (abs(x) > m)
            m = abs(x);
    return m;
}

/// Dense row-major matrix over the rationals. Dimensions are fixed at construction.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw InputError("matrix row has wrong length");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows)
    {
        return from_rows(columns, rows).transposed();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const
    {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Vector column(std::size_t j) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const { return drinfeld::is_zero(data_); }
    std::span<const Scalar> entries() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const Scalar& c, Matrix a)
    {
        for (auto& x : a.data_)
            x *= c;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw InputError("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector operator*(const Matrix& a, std::span<const Scalar> v)
    {
        if (a.cols_ != v.size())
            throw InputError("matrix-vector product: dimension mismatch");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (v[j] != 0 && a(i, j) != 0)
                    out[i] += a(i, j) * v[j];
        return out;
    }

    friend Vector operator*(const Matrix& a, const Vector& v)
    {
        return a * std::span<const Scalar>(v);
    }

    Scalar trace() const
    {
        Scalar t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

private:
    void require_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw InputError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots; // pivot column of each non-zero row, ascending
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivots are the
/// leftmost non-zero entry scanning rows top-down; no scaling heuristics.
inline RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col) == 0)
            ++r;
        if (r == m.rows())
            continue;
        if (r != pivot_row)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m(r, j), m(pivot_row, j));
        Scalar inv = 1 / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col) == 0)
                continue;
            Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(pivot_row, j) != 0)
                    m(i, j) -= factor * m(pivot_row, j);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m)
{
    return row_reduce(m).pivots.size();
}

/// Null-space basis from the free columns of the RREF, in free-column order.
/// Each vector has a 1 at its free column and 0 at the other free columns.
inline std::vector<Vector> kernel_basis(const Matrix& m)
{
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m·x = rhs. Free variables are set to zero; returns nullopt when
/// the system is inconsistent.
inline std::optional<Vector> solve_linear(const Matrix& m, std::span<const Scalar> rhs)
{
    if (rhs.size() != m.rows())
        throw InputError("solve_linear: rhs has " + std::to_string(rhs.size()) + " entries, matrix has "
                         + std::to_string(m.rows()) + " rows");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
        x[ech.pivots[r]] = ech.reduced(r, m.cols());
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Matrix();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto ech = row_reduce(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

/// Canonical basis (non-zero RREF rows) of the span of `vectors` in F^dim.
inline std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim)
{
    if (vectors.empty())
        return {};
    auto ech = row_reduce(Matrix::from_rows(vectors, dim));
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
        basis.push_back(ech.reduced.row(r));
    return basis;
}

/// True when v lies in the span of `vectors` (which need not be independent).
inline bool in_span(const std::vector<Vector>& vectors, const Vector& v)
{
    if (is_zero(v))
        return true;
    if (vectors.empty())
        return false;
    auto rows = vectors;
    rows.push_back(v);
    return rank(Matrix::from_rows(rows, v.size())) == rank(Matrix::from_rows(vectors, v.size()));
}

} // namespace drinfeld
