#pragma once

// Random machine generators for property tests. Test-only.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qfa/automata.hpp"
#include "qfa/semantics.hpp"

namespace qfa::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

/// Q factor of a complex Gaussian matrix by modified Gram-Schmidt. Each column
/// is normalized to a positive real pivot, which is the usual phase fix that
/// makes the distribution Haar.
inline Matrix random_unitary(std::size_t n, Rng& rng) {
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (auto& c : cols)
        for (auto& z : c) z = gaussian_complex(rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex dot{};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(cols[k][i]) * cols[j][i];
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot * cols[k][i];
        }
        double norm = 0.0;
        for (const auto& z : cols[j]) norm += std::norm(z);
        norm = std::sqrt(norm);
        for (auto& z : cols[j]) z /= norm;
    }
    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = cols[j][i];
    return q;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian_complex(rng);
    return m;
}

inline Vector random_vector(std::size_t n, Rng& rng) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = gaussian_complex(rng);
    return v;
}

inline Vector random_unit_vector(std::size_t n, Rng& rng) {
    Vector v = random_vector(n, rng);
    const double norm = std::sqrt(norm_sq(v));
    for (std::size_t i = 0; i < n; ++i) v[i] /= norm;
    return v;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Alphabet letters(std::size_t k) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < k; ++i) tokens.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(tokens));
}

inline StateSet random_subset(std::size_t n, Rng& rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    StateSet s;
    for (std::size_t q = 0; q < n; ++q)
        if (coin(rng)) s.push_back(q);
    return s;
}

inline Moqfa random_moqfa(Rng& rng, std::size_t max_dim = 5, std::size_t max_letters = 3) {
    Moqfa m;
    m.alphabet = letters(uniform(1, max_letters, rng));
    m.dim = uniform(1, max_dim, rng);
    m.initial = random_unit_vector(m.dim, rng);
    for (std::size_t i = 0; i < m.alphabet.size(); ++i) m.unitaries.push_back(random_unitary(m.dim, rng));
    m.accepting = random_subset(m.dim, rng);
    return m;
}

inline Mmqfa random_mmqfa(Rng& rng, std::size_t max_dim = 9, std::size_t max_letters = 3) {
    Mmqfa m;
    m.alphabet = letters(uniform(1, max_letters, rng));
    m.dim = uniform(1, max_dim, rng);
    m.initial = random_unit_vector(m.dim, rng);
    for (std::size_t i = 0; i < m.alphabet.size(); ++i) m.unitaries.push_back(random_unitary(m.dim, rng));
    m.left_marker = random_unitary(m.dim, rng);
    m.right_marker = random_unitary(m.dim, rng);
    // Each state independently accepting, rejecting, or go.
    for (std::size_t q = 0; q < m.dim; ++q) {
        switch (uniform(0, 2, rng)) {
        case 0: m.accepting.push_back(q); break;
        case 1: m.rejecting.push_back(q); break;
        default: break;
        }
    }
    return m;
}

inline RealMatrix random_stochastic(std::size_t n, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += (m(i, j) = e(rng));
        for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
    }
    return m;
}

inline Pfa random_pfa(Rng& rng, std::size_t max_dim = 6, std::size_t max_letters = 3) {
    Pfa m;
    m.alphabet = letters(uniform(1, max_letters, rng));
    m.dim = uniform(1, max_dim, rng);
    std::exponential_distribution<double> e(1.0);
    m.initial = RealVector(m.dim);
    double sum = 0.0;
    for (std::size_t i = 0; i < m.dim; ++i) sum += (m.initial[i] = e(rng));
    for (std::size_t i = 0; i < m.dim; ++i) m.initial[i] /= sum;
    for (std::size_t i = 0; i < m.alphabet.size(); ++i) m.transitions.push_back(random_stochastic(m.dim, rng));
    for (std::size_t q = 0; q < m.dim; ++q) m.final.push_back(static_cast<int>(uniform(0, 1, rng)));
    return m;
}

inline Word random_word(const Alphabet& a, std::size_t max_len, Rng& rng) {
    Word w(uniform(0, max_len, rng));
    for (auto& t : w) t = a[uniform(0, a.size() - 1, rng)];
    return w;
}

}  // namespace qfa::testing
