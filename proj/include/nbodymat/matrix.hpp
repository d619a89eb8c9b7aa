#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nbodymat/errors.hpp"

namespace nbodymat {

/// Dense row-major matrix over any scalar satisfying the ScalarTraits
/// contract. Rows and columns may carry labels (point indices or pairs).
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix square(std::size_t n, const T& fill = T(0)) { return Matrix(n, n, fill); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionError("ragged row " + std::to_string(i) + " in matrix literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != rows_)
            throw DimensionError("label count does not match matrix size");
        labels_ = std::move(labels);
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entrywise conversion, e.g. polynomial -> rational by evaluation.
    template <typename F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        out.set_labels(labels_);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = -a.data_[k];
        out.labels_ = a.labels_;
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = s * a.data_[k];
        out.labels_ = a.labels_;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
    std::vector<std::string> labels_;
};

/// An arbitrary n x n table of scalars s(i, j): no symmetry and no zero
/// diagonal are assumed.
template <typename T>
class EntryTable {
public:
    EntryTable() = default;
    explicit EntryTable(int n, const T& fill = T(0)) : n_(n), m_(Matrix<T>::square(static_cast<std::size_t>(n), fill)) {
        if (n < 1) throw DomainError("entry table needs n >= 1");
    }
    explicit EntryTable(Matrix<T> m) : n_(static_cast<int>(m.rows())), m_(std::move(m)) {
        if (!m_.is_square()) throw DimensionError("entry table must be square");
        if (n_ < 1) throw DomainError("entry table needs n >= 1");
    }

    int n() const { return n_; }
    T& operator()(int i, int j) { return m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
    const T& operator()(int i, int j) const { return m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
    const Matrix<T>& matrix() const { return m_; }

    /// diag(values)
    static EntryTable diagonal(const std::vector<T>& values) {
        EntryTable t(static_cast<int>(values.size()));
        for (std::size_t i = 0; i < values.size(); ++i) t.m_(i, i) = values[i];
        return t;
    }

private:
    int n_ = 0;
    Matrix<T> m_;
};

}  // namespace nbodymat
