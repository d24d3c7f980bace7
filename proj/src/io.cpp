#include "qfa/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qfa {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------------------
// Writing

std::string number(double x) {
    if (x == 0.0) return std::signbit(x) ? "-0.0" : "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string complex_entry(const Complex& z) { return "[" + number(z.real()) + ", " + number(z.imag()) + "]"; }

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

template <typename T, typename Fmt>
std::string vector_text(std::span<const T> xs, Fmt&& fmt) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ", ";
        out += fmt(xs[i]);
    }
    return out + "]";
}

template <typename T, typename Fmt>
std::string matrix_text(const DenseMatrix<T>& m, Fmt&& fmt) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "      [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ", ";
            out += fmt(m(i, j));
        }
        out += i + 1 < m.rows() ? "],\n" : "]\n";
    }
    return out + "    ]";
}

std::string states_text(const StateSet& s) {
    return vector_text<std::size_t>(s, [](std::size_t q) { return std::to_string(q); });
}

class Writer {
public:
    void field(std::string_view key, const std::string& value) {
        out_ += first_ ? "{\n" : ",\n";
        first_ = false;
        out_ += "  " + json_string(key) + ": " + value;
    }
    std::string finish() { return out_ + "\n}\n"; }

private:
    std::string out_;
    bool first_ = true;
};

template <typename T, typename Fmt>
std::string transitions_text(const Alphabet& alphabet, const std::vector<DenseMatrix<T>>& mats,
                             const std::vector<std::pair<std::string_view, const DenseMatrix<T>*>>& extra, Fmt fmt) {
    std::string out = "{";
    bool first = true;
    auto add = [&](std::string_view key, const DenseMatrix<T>& m) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    " + json_string(key) + ": " + matrix_text(m, fmt);
    };
    for (std::size_t i = 0; i < mats.size(); ++i) add(alphabet[i], mats[i]);
    for (const auto& [key, m] : extra) add(key, *m);
    return out + "\n  }";
}

std::string alphabet_text(const Alphabet& a) {
    return vector_text<std::string>(a.tokens(), [](const std::string& t) { return json_string(t); });
}

std::string write(const Pfa& m) {
    Writer w;
    w.field("kind", json_string("pfa"));
    w.field("alphabet", alphabet_text(m.alphabet));
    w.field("dimension", std::to_string(m.dim));
    w.field("initial", vector_text<double>(m.initial.entries(), number));
    w.field("transitions", transitions_text<double>(m.alphabet, m.transitions, {}, number));
    w.field("final", vector_text<int>(m.final, [](int b) { return std::to_string(b); }));
    return w.finish();
}

std::string write(const Moqfa& m) {
    Writer w;
    w.field("kind", json_string("moqfa"));
    w.field("alphabet", alphabet_text(m.alphabet));
    w.field("dimension", std::to_string(m.dim));
    w.field("initial", vector_text<Complex>(m.initial.entries(), complex_entry));
    w.field("transitions", transitions_text<Complex>(m.alphabet, m.unitaries, {}, complex_entry));
    w.field("accepting", states_text(m.accepting));
    return w.finish();
}

std::string write(const Mmqfa& m) {
    Writer w;
    w.field("kind", json_string("mmqfa"));
    w.field("alphabet", alphabet_text(m.alphabet));
    w.field("dimension", std::to_string(m.dim));
    w.field("initial", vector_text<Complex>(m.initial.entries(), complex_entry));
    w.field("transitions",
            transitions_text<Complex>(m.alphabet, m.unitaries,
                                      {{kLeftMarker, &m.left_marker}, {kRightMarker, &m.right_marker}},
                                      complex_entry));
    w.field("accepting", states_text(m.accepting));
    w.field("rejecting", states_text(m.rejecting));
    return w.finish();
}

// ---------------------------------------------------------------------------
// Reading

[[noreturn]] void fail_at(const std::string& path, const std::string& what) { throw ParseError("at " + path + ": " + what); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double read_real(const json& j, const std::string& path) {
    if (!j.is_number()) fail_at(path, "expected a number");
    return j.get<double>();
}

Complex read_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail_at(path, "expected a [re, im] pair");
    return {read_real(j[0], path + "[0]"), read_real(j[1], path + "[1]")};
}

std::size_t read_index(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail_at(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t len, const std::string& path) {
    if (!j.is_array()) fail_at(path, "expected an array");
    if (j.size() != len)
        fail_at(path, "has " + std::to_string(j.size()) + " entries but dimension is " + std::to_string(len));
    return j;
}

template <typename T, typename ReadEntry>
DenseMatrix<T> read_matrix(const json& j, std::size_t dim, const std::string& path, ReadEntry&& read_entry) {
    array_of(j, dim, path);
    std::vector<T> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        array_of(j[i], dim, row_path);
        for (std::size_t k = 0; k < dim; ++k) entries.push_back(read_entry(j[i][k], row_path + "[" + std::to_string(k) + "]"));
    }
    return DenseMatrix<T>::from_row_major(dim, dim, std::move(entries));
}

StateSet read_states(const json& j, const std::string& path) {
    if (!j.is_array()) fail_at(path, "expected an array of state indices");
    StateSet out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_index(j[i], path + "[" + std::to_string(i) + "]"));
    std::sort(out.begin(), out.end());
    return out;
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

void check_keys(const json& doc, const std::set<std::string>& allowed) {
    for (const auto& [key, _] : doc.items())
        if (!allowed.contains(key)) throw ParseError("unknown key \"" + key + "\"");
}

Alphabet read_alphabet(const json& j) {
    if (!j.is_array()) fail_at("alphabet", "expected an array of strings");
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) fail_at("alphabet[" + std::to_string(i) + "]", "expected a string");
        tokens.push_back(j[i].get<std::string>());
    }
    try {
        return Alphabet(std::move(tokens));
    } catch (const AlphabetError& e) {
        fail_at("alphabet", e.what());
    }
}

/// Checks transition keys against the alphabet plus `markers`, with markers
/// required.
void check_transition_keys(const json& t, const Alphabet& alphabet, std::span<const std::string_view> markers) {
    if (!t.is_object()) fail_at("transitions", "expected an object");
    for (const auto& [key, _] : t.items()) {
        const bool is_marker = std::find(markers.begin(), markers.end(), key) != markers.end();
        if (!is_marker && !alphabet.index_of(key)) {
            if (!key.empty() && key.front() == '#') fail_at("transitions", "unexpected end-marker \"" + key + "\"");
            fail_at("transitions", "token \"" + key + "\" is not in the alphabet");
        }
    }
    for (const auto& token : alphabet.tokens())
        if (!t.contains(token)) fail_at("transitions", "missing transition for token \"" + token + "\"");
    for (auto marker : markers)
        if (!t.contains(std::string(marker)))
            fail_at("transitions", "missing end-marker \"" + std::string(marker) + "\"");
}

Pfa read_pfa(const json& doc, const Alphabet& alphabet, std::size_t dim) {
    check_keys(doc, {"kind", "alphabet", "dimension", "initial", "transitions", "final"});
    Pfa m;
    m.alphabet = alphabet;
    m.dim = dim;
    const json& init = array_of(require(doc, "initial"), dim, "initial");
    m.initial = RealVector(dim);
    for (std::size_t i = 0; i < dim; ++i) m.initial[i] = read_real(init[i], "initial[" + std::to_string(i) + "]");

    const json& t = require(doc, "transitions");
    check_transition_keys(t, alphabet, {});
    for (const auto& token : alphabet.tokens())
        m.transitions.push_back(read_matrix<double>(t[token], dim, "transitions." + token, read_real));

    const json& fin = array_of(require(doc, "final"), dim, "final");
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string path = "final[" + std::to_string(i) + "]";
        if (!fin[i].is_number_integer()) fail_at(path, "expected 0 or 1");
        m.final.push_back(fin[i].get<int>());
    }
    return m;
}

Vector read_complex_vector(const json& j, std::size_t dim, const std::string& path) {
    array_of(j, dim, path);
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = read_complex(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Moqfa read_moqfa(const json& doc, const Alphabet& alphabet, std::size_t dim) {
    check_keys(doc, {"kind", "alphabet", "dimension", "initial", "transitions", "accepting"});
    Moqfa m;
    m.alphabet = alphabet;
    m.dim = dim;
    m.initial = read_complex_vector(require(doc, "initial"), dim, "initial");
    const json& t = require(doc, "transitions");
    check_transition_keys(t, alphabet, {});
    for (const auto& token : alphabet.tokens())
        m.unitaries.push_back(read_matrix<Complex>(t[token], dim, "transitions." + token, read_complex));
    m.accepting = read_states(require(doc, "accepting"), "accepting");
    return m;
}

Mmqfa read_mmqfa(const json& doc, const Alphabet& alphabet, std::size_t dim) {
    check_keys(doc, {"kind", "alphabet", "dimension", "initial", "transitions", "accepting", "rejecting"});
    Mmqfa m;
    m.alphabet = alphabet;
    m.dim = dim;
    m.initial = read_complex_vector(require(doc, "initial"), dim, "initial");
    const json& t = require(doc, "transitions");
    const std::string_view markers[] = {kLeftMarker, kRightMarker};
    check_transition_keys(t, alphabet, markers);
    for (const auto& token : alphabet.tokens())
        m.unitaries.push_back(read_matrix<Complex>(t[token], dim, "transitions." + token, read_complex));
    m.left_marker = read_matrix<Complex>(t[std::string(kLeftMarker)], dim, "transitions.#left", read_complex);
    m.right_marker = read_matrix<Complex>(t[std::string(kRightMarker)], dim, "transitions.#right", read_complex);
    m.accepting = read_states(require(doc, "accepting"), "accepting");
    m.rejecting = read_states(require(doc, "rejecting"), "rejecting");
    return m;
}

}  // namespace

Machine parse_automaton(std::string_view text, double tol) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
        throw ParseError(what, line, col);
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");

    const json& kind_j = require(doc, "kind");
    if (!kind_j.is_string()) fail_at("kind", "expected a string");
    const auto kind = kind_j.get<std::string>();
    if (kind != "pfa" && kind != "moqfa" && kind != "mmqfa") fail_at("kind", "unknown machine kind \"" + kind + "\"");

    const Alphabet alphabet = read_alphabet(require(doc, "alphabet"));
    const std::size_t dim = read_index(require(doc, "dimension"), "dimension");
    if (dim == 0) fail_at("dimension", "must be positive");

    Machine m = kind == "pfa"     ? Machine(read_pfa(doc, alphabet, dim))
                : kind == "moqfa" ? Machine(read_moqfa(doc, alphabet, dim))
                                  : Machine(read_mmqfa(doc, alphabet, dim));
    if (auto violations = validate(m, tol); !violations.empty()) throw ValidationError(std::move(violations));
    return m;
}

std::string serialize_automaton(const Machine& m) {
    return std::visit([](const auto& x) { return write(x); }, m);
}

Machine load_automaton(const std::string& path, double tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str(), tol);
}

void save_automaton(const std::string& path, const Machine& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_automaton(m);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace qfa
