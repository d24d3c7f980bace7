#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfa {

using Complex = std::complex<double>;

/// Raised when operand dimensions do not fit together.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_finite(double x) noexcept { return std::isfinite(x); }
inline bool is_finite(const Complex& z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense column vector. Used with Complex amplitudes for quantum machines and
/// with double for probabilistic ones.
template <typename T>
class DenseVector {
public:
    DenseVector() = default;
    explicit DenseVector(std::size_t dim) : entries_(dim, T{}) {}
    DenseVector(std::initializer_list<T> values) : entries_(values) {}
    explicit DenseVector(std::vector<T> values) : entries_(std::move(values)) {}

    std::size_t dim() const noexcept { return entries_.size(); }

    T& operator[](std::size_t i) { return entries_[i]; }
    const T& operator[](std::size_t i) const { return entries_[i]; }

    std::span<const T> entries() const noexcept { return entries_; }
    std::span<T> entries() noexcept { return entries_; }

    bool operator==(const DenseVector&) const = default;

private:
    std::vector<T> entries_;
};

/// Dense row-major matrix.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T{}) {}

    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw ShapeError("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static DenseMatrix from_row_major(std::size_t rows, std::size_t cols, std::vector<T> entries) {
        if (entries.size() != rows * cols)
            throw ShapeError("row-major data has " + std::to_string(entries.size()) + " entries, expected " +
                             std::to_string(rows * cols));
        DenseMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.entries_ = std::move(entries);
        return m;
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const T> entries() const noexcept { return entries_; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using Vector = DenseVector<Complex>;
using Matrix = DenseMatrix<Complex>;
using RealVector = DenseVector<double>;
using RealMatrix = DenseMatrix<double>;

template <typename T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    DenseMatrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <typename T>
DenseVector<T> apply(const DenseMatrix<T>& m, const DenseVector<T>& v) {
    if (m.cols() != v.dim())
        throw ShapeError("apply: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix on vector of dim " + std::to_string(v.dim()));
    DenseVector<T> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        T acc{};
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

/// Conjugate transpose.
Matrix dagger(const Matrix& m);

/// Squared Euclidean norm, sum of |v_i|^2.
double norm_sq(const Vector& v);

/// Largest entry magnitude of M^dagger M - I. Throws ShapeError for non-square input.
double unitarity_deviation(const Matrix& m);

bool is_unitary(const Matrix& m, double tol);

/// Block-diagonal matrix with the given square blocks along the diagonal.
Matrix block_diag(std::span<const Matrix> blocks);

}  // namespace qfa
