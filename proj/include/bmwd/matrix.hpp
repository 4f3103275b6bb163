#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmwd {

// Dense matrix over an exact field type (Rational or ScalarFraction).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T& at(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at");
        return (*this)(r, c);
    }
    const T& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at");
        return (*this)(r, c);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b, "operator+");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b, "operator-");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& av = a(i, k);
                if (av == T()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += av * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T())) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_);
    }

private:
    void check_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + what);
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
struct LinAlgReport {
    std::size_t rank = 0;
    bool has_det = false;
    T det = T();
    std::vector<std::vector<T>> nullspace; // basis of the right kernel
};

// Rank, determinant (square input) and right-kernel basis via exact Gaussian
// elimination.
template <typename T>
LinAlgReport<T> mat_rank_det_nullspace(const Matrix<T>& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Matrix<T> a = m;
    LinAlgReport<T> rep;
    rep.has_det = (nr == nc);
    T det_acc = T(1);
    bool det_zero = false;

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a(piv, col) == T()) ++piv;
        if (piv == nr) { det_zero = true; continue; }
        if (piv != row) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(piv, j), a(row, j));
            det_acc = T() - det_acc;
        }
        T p = a(row, col);
        det_acc = det_acc * p;
        for (std::size_t j = col; j < nc; ++j) a(row, j) = a(row, j) / p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row) continue;
            T f = a(i, col);
            if (f == T()) continue;
            for (std::size_t j = col; j < nc; ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    rep.rank = row;
    if (rep.has_det) rep.det = (det_zero || rep.rank < nr) ? T() : det_acc;

    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col_of_row) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(nc, T());
        v[free_col] = T(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = T() - a(r, free_col);
        rep.nullspace.push_back(std::move(v));
    }
    return rep;
}

// Exact Gauss-Jordan inverse; nullopt when the matrix is singular.
template <typename T>
std::optional<Matrix<T>> mat_inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: square matrix required");
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == T()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            T f = a(r, col);
            if (f == T()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

// Incremental row space with reduced pivots; used for span-closure arguments.
template <typename T>
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current basis; inserts the remainder when nonzero.
    // Returns true when the vector enlarged the space.
    bool insert(std::vector<T> v) {
        if (v.size() != dim_) throw std::invalid_argument("RowSpace: wrong dimension");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const T& c = v[pivots_[k]];
            if (c == T()) continue;
            T f = c;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] - f * rows_[k][j];
        }
        std::size_t p = 0;
        while (p < dim_ && v[p] == T()) ++p;
        if (p == dim_) return false;
        T inv = T(1) / v[p];
        for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] * inv;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            T f = rows_[k][p];
            if (f == T()) continue;
            for (std::size_t j = 0; j < dim_; ++j) rows_[k][j] = rows_[k][j] - f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace bmwd
