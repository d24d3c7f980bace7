#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfa/linalg.hpp"

namespace qfa {

/// Reserved transition keys for the MMQFA end-markers.
inline constexpr std::string_view kLeftMarker = "#left";
inline constexpr std::string_view kRightMarker = "#right";

inline constexpr double kDefaultTolerance = 1e-9;

class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered set of input tokens. Tokens are non-empty, distinct, and never start
/// with '#', which is reserved for end-markers.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);
    Alphabet(std::initializer_list<std::string> tokens) : Alphabet(std::vector<std::string>(tokens)) {}

    std::size_t size() const noexcept { return tokens_.size(); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    const std::string& operator[](std::size_t i) const { return tokens_[i]; }

    std::optional<std::size_t> index_of(std::string_view token) const;
    /// Throws AlphabetError for tokens outside the alphabet.
    std::size_t require(std::string_view token) const;

    bool single_character() const noexcept;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> tokens_;
};

/// Sorted list of basis-state indices.
using StateSet = std::vector<std::size_t>;

/// Probabilistic automaton (x, {M_a}, y). Acceptance of a_1..a_r is
/// x^T M_{a_r} ... M_{a_1} y; see pfa_accept_prob.
struct Pfa {
    Alphabet alphabet;
    std::size_t dim = 0;
    RealVector initial;                  // x, a probability distribution
    std::vector<RealMatrix> transitions; // indexed like alphabet; row-stochastic
    std::vector<int> final;              // y, 0/1 indicator

    bool operator==(const Pfa&) const = default;
};

/// Measure-once QFA: unitary evolution, one measurement with the accepting
/// projector at the end.
struct Moqfa {
    Alphabet alphabet;
    std::size_t dim = 0;
    Vector initial;
    std::vector<Matrix> unitaries; // indexed like alphabet
    StateSet accepting;

    bool operator==(const Moqfa&) const = default;
};

/// Measure-many QFA with both end-markers. The initial state may be any unit
/// vector, not only a basis state.
struct Mmqfa {
    Alphabet alphabet;
    std::size_t dim = 0;
    Vector initial;
    std::vector<Matrix> unitaries; // indexed like alphabet
    Matrix left_marker;
    Matrix right_marker;
    StateSet accepting;
    StateSet rejecting;

    bool operator==(const Mmqfa&) const = default;
};

using Machine = std::variant<Pfa, Moqfa, Mmqfa>;

const Alphabet& alphabet_of(const Machine& m);
std::string_view kind_name(const Machine& m);

struct Violation {
    std::string field;   // e.g. "transitions", "initial"
    std::string index;   // token, state index, or row; empty when not applicable
    double deviation = 0.0;
    std::string message;
};

std::string to_string(const Violation& v);

std::vector<Violation> validate(const Pfa& m, double tol = kDefaultTolerance);
std::vector<Violation> validate(const Moqfa& m, double tol = kDefaultTolerance);
std::vector<Violation> validate(const Mmqfa& m, double tol = kDefaultTolerance);
std::vector<Violation> validate(const Machine& m, double tol = kDefaultTolerance);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Throws ValidationError when validate() reports anything.
template <typename M>
const M& require_valid(const M& m, double tol = kDefaultTolerance) {
    if (auto v = validate(m, tol); !v.empty()) throw ValidationError(std::move(v));
    return m;
}

struct Projectors {
    Matrix accept;
    Matrix go;
    Matrix reject;
};

/// Diagonal 0/1 projectors for the accepting, non-halting and rejecting
/// subspaces. accept + go + reject is exactly the identity.
Projectors projectors_of(const Mmqfa& m);

/// Indices in [0, dim) that are neither accepting nor rejecting.
StateSet go_states(const Mmqfa& m);

}  // namespace qfa
