#include "qfa/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qfa {

Matrix dagger(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

double norm_sq(const Vector& v) {
    double acc = 0.0;
    for (const auto& z : v.entries()) acc += std::norm(z);
    return acc;
}

double unitarity_deviation(const Matrix& m) {
    if (!m.is_square())
        throw ShapeError("unitarity check on non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    double worst = 0.0;
    // (M^dagger M)_{ij} = sum_k conj(M_ki) M_kj
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(m(k, i)) * m(k, j);
            if (i == j) acc -= 1.0;
            const double dev = std::abs(acc);
            if (std::isnan(dev)) return dev;
            worst = std::max(worst, dev);
        }
    return worst;
}

bool is_unitary(const Matrix& m, double tol) {
    const double dev = unitarity_deviation(m);
    return dev <= tol;
}

Matrix block_diag(std::span<const Matrix> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw ShapeError("block_diag expects square blocks");
        n += b.rows();
    }
    Matrix out(n, n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
        offset += b.rows();
    }
    return out;
}

}  // namespace qfa
