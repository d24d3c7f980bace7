#include "qfa/semantics.hpp"

#include <algorithm>

namespace qfa {

namespace {

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

void require_in_range(const Alphabet& alphabet, const IndexedWord& w) {
    for (auto i : w)
        if (i >= alphabet.size())
            throw AlphabetError("symbol index " + std::to_string(i) + " outside alphabet of size " +
                                std::to_string(alphabet.size()));
}

double mass_on(const Vector& v, const StateSet& states) {
    double acc = 0.0;
    for (auto q : states) acc += std::norm(v[q]);
    return acc;
}

}  // namespace

IndexedWord resolve(const Alphabet& alphabet, const Word& word) {
    IndexedWord out;
    out.reserve(word.size());
    for (const auto& t : word) out.push_back(alphabet.require(t));
    return out;
}

Word spell(const Alphabet& alphabet, const IndexedWord& word) {
    Word out;
    out.reserve(word.size());
    for (auto i : word) out.push_back(alphabet[i]);
    return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    Word out;
    if (text.empty()) return out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (piece.empty()) throw AlphabetError("empty token in word '" + std::string(text) + "'");
            out.emplace_back(piece);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (alphabet.single_character()) {
        for (char ch : text) out.emplace_back(1, ch);
    } else {
        out.emplace_back(text);
    }
    for (const auto& t : out) alphabet.require(t);
    return out;
}

std::string format_word(const Word& word, const Alphabet& alphabet) {
    std::string out;
    const bool bare = alphabet.single_character();
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !bare) out += ',';
        out += word[i];
    }
    return out;
}

double pfa_accept_prob(const Pfa& m, const IndexedWord& w) {
    require_in_range(m.alphabet, w);
    RealVector v(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) v[i] = m.final[i];
    for (auto a : w) v = qfa::apply(m.transitions[a], v);
    double p = 0.0;
    for (std::size_t i = 0; i < m.dim; ++i) p += m.initial[i] * v[i];
    return clamp01(p);
}

double pfa_accept_prob(const Pfa& m, const Word& w) { return pfa_accept_prob(m, resolve(m.alphabet, w)); }

double moqfa_accept_prob(const Moqfa& m, const IndexedWord& w) {
    require_in_range(m.alphabet, w);
    Vector v = m.initial;
    for (auto a : w) v = qfa::apply(m.unitaries[a], v);
    return clamp01(mass_on(v, m.accepting));
}

double moqfa_accept_prob(const Moqfa& m, const Word& w) { return moqfa_accept_prob(m, resolve(m.alphabet, w)); }

RunTrace mmqfa_run(const Mmqfa& m, const IndexedWord& w) {
    require_in_range(m.alphabet, w);
    const StateSet go = go_states(m);

    RunTrace trace;
    trace.steps.reserve(w.size() + 2);
    Vector v = m.initial;

    auto step = [&](const Matrix& u_sym, std::string symbol) {
        Vector u = qfa::apply(u_sym, v);
        RunStep s;
        s.symbol = std::move(symbol);
        s.accept_increment = mass_on(u, m.accepting);
        s.reject_increment = mass_on(u, m.rejecting);
        Vector next(m.dim);
        for (auto q : go) next[q] = u[q];
        v = std::move(next);
        s.go_norm_sq = norm_sq(v);
        trace.total_accept += s.accept_increment;
        trace.total_reject += s.reject_increment;
        trace.steps.push_back(std::move(s));
    };

    step(m.left_marker, std::string(kLeftMarker));
    for (auto a : w) step(m.unitaries[a], m.alphabet[a]);
    step(m.right_marker, std::string(kRightMarker));
    trace.residual_go = trace.steps.back().go_norm_sq;
    return trace;
}

RunTrace mmqfa_run(const Mmqfa& m, const Word& w) { return mmqfa_run(m, resolve(m.alphabet, w)); }

double mmqfa_accept_prob(const Mmqfa& m, const IndexedWord& w) { return clamp01(mmqfa_run(m, w).total_accept); }

double mmqfa_accept_prob(const Mmqfa& m, const Word& w) { return mmqfa_accept_prob(m, resolve(m.alphabet, w)); }

double accept_prob(const Machine& m, const IndexedWord& w) {
    struct Visitor {
        const IndexedWord& w;
        double operator()(const Pfa& x) const { return pfa_accept_prob(x, w); }
        double operator()(const Moqfa& x) const { return moqfa_accept_prob(x, w); }
        double operator()(const Mmqfa& x) const { return mmqfa_accept_prob(x, w); }
    };
    return std::visit(Visitor{w}, m);
}

double accept_prob(const Machine& m, const Word& w) { return accept_prob(m, resolve(alphabet_of(m), w)); }

}  // namespace qfa
