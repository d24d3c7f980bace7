#include "qfa/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qfa {

std::string_view to_string(CutpointMode mode) { return mode == CutpointMode::Strict ? "strict" : "nonstrict"; }

namespace {

void check_lambda(const Rational& lambda) {
    if (lambda <= Rational(0) || lambda > Rational(1))
        throw ParameterError("lambda must satisfy 0 < lambda <= 1, got " + lambda.str());
}

void check_lambda_c(const Rational& lambda, const Rational& c) {
    check_lambda(lambda);
    if (c <= Rational(0) || c >= lambda)
        throw ParameterError("c must satisfy 0 < c < lambda, got c = " + c.str() + ", lambda = " + lambda.str());
}

/// [[0, I, 0], [I, 0, 0], [0, 0, I]] with n x n blocks.
Matrix block_swap(std::size_t n) {
    Matrix out(3 * n, 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, n + i) = 1.0;
        out(n + i, i) = 1.0;
        out(2 * n + i, 2 * n + i) = 1.0;
    }
    return out;
}

}  // namespace

Mmqfa embed_moqfa_to_mmqfa(const Moqfa& m) {
    require_valid(m);
    const std::size_t n = m.dim;

    Mmqfa out;
    out.alphabet = m.alphabet;
    out.dim = 3 * n;
    out.initial = Vector(3 * n);
    for (std::size_t i = 0; i < n; ++i) out.initial[i] = m.initial[i];

    const Matrix id = Matrix::identity(n);
    out.unitaries.reserve(m.unitaries.size());
    for (const auto& u : m.unitaries) {
        const std::array<Matrix, 3> blocks{id, u, id};
        out.unitaries.push_back(block_diag(blocks));
    }
    out.left_marker = block_swap(n);
    out.right_marker = out.left_marker;

    out.accepting = m.accepting;
    for (std::size_t q = 0; q < n; ++q)
        if (!std::binary_search(m.accepting.begin(), m.accepting.end(), q)) out.rejecting.push_back(q);
    for (std::size_t q = 2 * n; q < 3 * n; ++q) out.rejecting.push_back(q);
    return out;
}

Moqfa constant_moqfa(const Alphabet& alphabet, const Rational& lambda) {
    check_lambda(lambda);
    const double l = lambda.to_double();
    Moqfa m;
    m.alphabet = alphabet;
    m.dim = 2;
    m.initial = Vector{std::sqrt(l), std::sqrt(1.0 - l)};
    m.unitaries.assign(alphabet.size(), Matrix::identity(2));
    m.accepting = {0};
    return m;
}

Moqfa below_cutpoint_moqfa(const Alphabet& alphabet, const Rational& lambda, const Rational& c) {
    check_lambda_c(lambda, c);
    const double accept_mass = (lambda - c).to_double();
    Moqfa m;
    m.alphabet = alphabet;
    m.dim = 3;
    m.initial = Vector{std::sqrt(accept_mass), std::sqrt(1.0 - accept_mass), 0.0};
    m.unitaries.assign(alphabet.size(), Matrix::identity(3));
    m.accepting = {0};
    return m;
}

Mmqfa empty_strict_mmqfa(const Alphabet& alphabet, const Rational& lambda, const Rational& c) {
    return embed_moqfa_to_mmqfa(below_cutpoint_moqfa(alphabet, lambda, c));
}

Mmqfa full_nonstrict_mmqfa(const Alphabet& alphabet, const Rational& lambda) {
    return embed_moqfa_to_mmqfa(constant_moqfa(alphabet, lambda));
}

ReductionPair nonstrict_equivalence_reduction(const Mmqfa& a, const Rational& lambda) {
    check_lambda(lambda);
    require_valid(a);
    ReductionPair pair{a, full_nonstrict_mmqfa(a.alphabet, lambda), lambda, CutpointMode::Nonstrict, {}};
    pair.claim = "L>=" + lambda.str() + "(left) = L>=" + lambda.str() +
                 "(right) iff L>=" + lambda.str() +
                 "(left) is universal, since the right machine accepts every word with probability exactly " +
                 lambda.str() + "; deciding nonstrict equivalence would decide nonstrict universality";
    return pair;
}

ReductionPair strict_equivalence_reduction(const Mmqfa& m, const Rational& lambda, const Rational& c) {
    check_lambda_c(lambda, c);
    require_valid(m);
    ReductionPair pair{m, empty_strict_mmqfa(m.alphabet, lambda, c), lambda, CutpointMode::Strict, {}};
    pair.claim = "L>" + lambda.str() + "(left) = L>" + lambda.str() + "(right) iff L>" + lambda.str() +
                 "(left) is empty, since the right machine accepts every word with probability " +
                 (lambda - c).str() + " < " + lambda.str() +
                 "; deciding strict equivalence would decide strict emptiness";
    return pair;
}

}  // namespace qfa
