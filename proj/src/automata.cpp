#include "qfa/automata.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qfa {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw AlphabetError("alphabet must not be empty");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const auto& t = tokens_[i];
        if (t.empty()) throw AlphabetError("alphabet token " + std::to_string(i) + " is empty");
        if (t.front() == '#') throw AlphabetError("alphabet token '" + t + "' uses the reserved '#' prefix");
        if (t.find(',') != std::string::npos) throw AlphabetError("alphabet token '" + t + "' contains ','");
        for (std::size_t j = 0; j < i; ++j)
            if (tokens_[j] == t) throw AlphabetError("duplicate alphabet token '" + t + "'");
    }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
        if (tokens_[i] == token) return i;
    return std::nullopt;
}

std::size_t Alphabet::require(std::string_view token) const {
    if (auto i = index_of(token)) return *i;
    throw AlphabetError("token '" + std::string(token) + "' is not in the alphabet");
}

bool Alphabet::single_character() const noexcept {
    return std::all_of(tokens_.begin(), tokens_.end(), [](const std::string& t) { return t.size() == 1; });
}

const Alphabet& alphabet_of(const Machine& m) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet; }, m);
}

std::string_view kind_name(const Machine& m) {
    switch (m.index()) {
    case 0: return "pfa";
    case 1: return "moqfa";
    default: return "mmqfa";
    }
}

std::string to_string(const Violation& v) {
    std::ostringstream os;
    os << v.field;
    if (!v.index.empty()) os << "[" << v.index << "]";
    os << ": " << v.message;
    if (v.deviation != 0.0) os << " (deviation " << v.deviation << ")";
    return os.str();
}

namespace {

std::string summarize(const std::vector<Violation>& vs) {
    std::string out = "machine failed validation:";
    for (const auto& v : vs) out += "\n  " + to_string(v);
    return out;
}

class Checker {
public:
    explicit Checker(double tol) : tol_(tol) {}

    void fail(std::string field, std::string index, double deviation, std::string message) {
        out_.push_back({std::move(field), std::move(index), deviation, std::move(message)});
    }

    bool check_dim(std::size_t dim, const Alphabet& alphabet, std::size_t transitions) {
        bool ok = true;
        if (dim == 0) {
            fail("dimension", "", 0.0, "dimension must be positive");
            ok = false;
        }
        if (alphabet.size() == 0) {
            fail("alphabet", "", 0.0, "alphabet must not be empty");
            ok = false;
        }
        if (transitions != alphabet.size()) {
            fail("transitions", "", 0.0,
                 "expected " + std::to_string(alphabet.size()) + " transition matrices, found " +
                     std::to_string(transitions));
            ok = false;
        }
        return ok;
    }

    template <typename T>
    bool check_vector_shape(const DenseVector<T>& v, std::size_t dim, const std::string& field) {
        if (v.dim() != dim) {
            fail(field, "", 0.0, "has length " + std::to_string(v.dim()) + ", expected " + std::to_string(dim));
            return false;
        }
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (!is_finite(v[i])) {
                fail(field, std::to_string(i), 0.0, "non-finite entry");
                return false;
            }
        return true;
    }

    template <typename T>
    bool check_matrix_shape(const DenseMatrix<T>& m, std::size_t dim, const std::string& field,
                            const std::string& index) {
        if (m.rows() != dim || m.cols() != dim) {
            fail(field, index, 0.0,
                 "is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(dim) + "x" + std::to_string(dim));
            return false;
        }
        for (const auto& e : m.entries())
            if (!is_finite(e)) {
                fail(field, index, 0.0, "non-finite entry");
                return false;
            }
        return true;
    }

    void check_unitary(const Matrix& m, std::size_t dim, const std::string& index) {
        if (!check_matrix_shape(m, dim, "transitions", index)) return;
        const double dev = unitarity_deviation(m);
        if (!(dev <= tol_)) fail("transitions", index, dev, "non-unitary transition");
    }

    void check_unit(const Vector& v, std::size_t dim) {
        if (!check_vector_shape(v, dim, "initial")) return;
        const double dev = std::abs(norm_sq(v) - 1.0);
        if (!(dev <= tol_)) fail("initial", "", dev, "initial vector is not unit norm");
    }

    void check_states(const StateSet& s, std::size_t dim, const std::string& field) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= dim) fail(field, std::to_string(s[i]), 0.0, "state index out of range");
            if (i > 0 && s[i] <= s[i - 1]) fail(field, std::to_string(s[i]), 0.0, "state list not strictly increasing");
        }
    }

    double tol() const noexcept { return tol_; }
    std::vector<Violation> take() { return std::move(out_); }

private:
    double tol_;
    std::vector<Violation> out_;
};

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const Pfa& m, double tol) {
    Checker c(tol);
    if (!c.check_dim(m.dim, m.alphabet, m.transitions.size())) return c.take();

    if (c.check_vector_shape(m.initial, m.dim, "initial")) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.dim; ++i) {
            const double x = m.initial[i];
            sum += x;
            if (x < -tol || x > 1.0 + tol)
                c.fail("initial", std::to_string(i), x < 0 ? -x : x - 1.0, "entry outside [0,1]");
        }
        if (!(std::abs(sum - 1.0) <= tol)) c.fail("initial", "", std::abs(sum - 1.0), "initial distribution does not sum to 1");
    }

    for (std::size_t t = 0; t < m.transitions.size(); ++t) {
        const auto& mat = m.transitions[t];
        const auto& token = m.alphabet[t];
        if (!c.check_matrix_shape(mat, m.dim, "transitions", token)) continue;
        double worst_entry = 0.0;
        double worst_row = 0.0;
        for (std::size_t i = 0; i < m.dim; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < m.dim; ++j) {
                const double p = mat(i, j);
                row += p;
                worst_entry = std::max({worst_entry, -p, p - 1.0});
            }
            worst_row = std::max(worst_row, std::abs(row - 1.0));
        }
        if (worst_entry > tol) c.fail("transitions", token, worst_entry, "entry outside [0,1]");
        if (worst_row > tol) c.fail("transitions", token, worst_row, "not row-stochastic");
    }

    if (m.final.size() != m.dim) {
        c.fail("final", "", 0.0, "has length " + std::to_string(m.final.size()) + ", expected " + std::to_string(m.dim));
    } else {
        for (std::size_t i = 0; i < m.dim; ++i)
            if (m.final[i] != 0 && m.final[i] != 1) c.fail("final", std::to_string(i), 0.0, "entry is not 0 or 1");
    }
    return c.take();
}

std::vector<Violation> validate(const Moqfa& m, double tol) {
    Checker c(tol);
    if (!c.check_dim(m.dim, m.alphabet, m.unitaries.size())) return c.take();
    c.check_unit(m.initial, m.dim);
    for (std::size_t t = 0; t < m.unitaries.size(); ++t) c.check_unitary(m.unitaries[t], m.dim, m.alphabet[t]);
    c.check_states(m.accepting, m.dim, "accepting");
    return c.take();
}

std::vector<Violation> validate(const Mmqfa& m, double tol) {
    Checker c(tol);
    if (!c.check_dim(m.dim, m.alphabet, m.unitaries.size())) return c.take();
    c.check_unit(m.initial, m.dim);
    for (std::size_t t = 0; t < m.unitaries.size(); ++t) c.check_unitary(m.unitaries[t], m.dim, m.alphabet[t]);
    c.check_unitary(m.left_marker, m.dim, std::string(kLeftMarker));
    c.check_unitary(m.right_marker, m.dim, std::string(kRightMarker));
    c.check_states(m.accepting, m.dim, "accepting");
    c.check_states(m.rejecting, m.dim, "rejecting");
    for (auto q : m.accepting)
        if (std::binary_search(m.rejecting.begin(), m.rejecting.end(), q))
            c.fail("rejecting", std::to_string(q), 0.0, "overlapping halting sets");
    return c.take();
}

std::vector<Violation> validate(const Machine& m, double tol) {
    return std::visit([tol](const auto& x) { return validate(x, tol); }, m);
}

StateSet go_states(const Mmqfa& m) {
    StateSet out;
    for (std::size_t q = 0; q < m.dim; ++q) {
        const bool halting = std::binary_search(m.accepting.begin(), m.accepting.end(), q) ||
                             std::binary_search(m.rejecting.begin(), m.rejecting.end(), q);
        if (!halting) out.push_back(q);
    }
    return out;
}

Projectors projectors_of(const Mmqfa& m) {
    Projectors p{Matrix(m.dim, m.dim), Matrix(m.dim, m.dim), Matrix(m.dim, m.dim)};
    for (auto q : m.accepting) p.accept(q, q) = 1.0;
    for (auto q : m.rejecting) p.reject(q, q) = 1.0;
    for (auto q : go_states(m)) p.go(q, q) = 1.0;
    return p;
}

}  // namespace qfa
