#include "qfa/language.hpp"

#include <limits>

namespace qfa {

void CutpointQuery::check() const {
    if (lambda <= Rational(0) || lambda > Rational(1))
        throw ParameterError("cutpoint must satisfy 0 < lambda <= 1, got " + lambda.str());
    if (!(epsilon > 0.0)) throw ParameterError("comparison tolerance must be positive");
}

std::string_view to_string(VerdictClass c) {
    switch (c) {
    case VerdictClass::Above: return "above";
    case VerdictClass::Below: return "below";
    default: return "boundary";
    }
}

MembershipVerdict membership(double p, const CutpointQuery& q) {
    MembershipVerdict v;
    v.probability = p;
    v.margin = p - q.lambda.to_double();
    if (v.margin > q.epsilon)
        v.verdict = VerdictClass::Above;
    else if (v.margin < -q.epsilon)
        v.verdict = VerdictClass::Below;
    else
        v.verdict = VerdictClass::Boundary;
    return v;
}

std::uint64_t words_up_to(std::size_t alphabet_size, std::size_t max_len) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t k = 0; k <= max_len; ++k) {
        if (total > kMax - layer) throw InputError("word count overflows at max_len " + std::to_string(max_len));
        total += layer;
        if (k < max_len) {
            if (alphabet_size != 0 && layer > kMax / alphabet_size)
                throw InputError("word count overflows at max_len " + std::to_string(max_len));
            layer *= alphabet_size;
        }
    }
    return total;
}

namespace {

void require_same_alphabet(const Machine& a, const Machine& b) {
    if (alphabet_of(a) != alphabet_of(b)) throw InputError("machines have different alphabets");
}

/// Shared driver: stop at the first word for which `is_witness` holds.
template <typename Classify, typename IsWitness>
SearchReport search(const Alphabet& alphabet, std::size_t max_len, Classify&& classify, IsWitness&& is_witness) {
    SearchReport report;
    report.max_len = max_len;
    words_up_to(alphabet.size(), max_len);
    enumerate_words(alphabet.size(), max_len, [&](const IndexedWord& w) {
        ++report.words_checked;
        const auto [first, second] = classify(w);
        const bool boundary = first.verdict == VerdictClass::Boundary ||
                              (second && second->verdict == VerdictClass::Boundary);
        if (boundary) report.boundary_words.push_back(spell(alphabet, w));
        if (is_witness(first, second, w, report)) {
            report.witness = Witness{spell(alphabet, w), first, second};
            return false;
        }
        return true;
    });
    return report;
}

using Pair = std::pair<MembershipVerdict, std::optional<MembershipVerdict>>;

}  // namespace

SearchReport bounded_witness_search(const Machine& m, const CutpointQuery& q, std::size_t max_len) {
    q.check();
    return search(
        alphabet_of(m), max_len, [&](const IndexedWord& w) { return Pair{membership(accept_prob(m, w), q), {}}; },
        [&](const MembershipVerdict& v, const auto&, const IndexedWord&, SearchReport&) { return v.member(q.mode); });
}

SearchReport bounded_universality(const Machine& m, const CutpointQuery& q, std::size_t max_len) {
    q.check();
    return search(
        alphabet_of(m), max_len, [&](const IndexedWord& w) { return Pair{membership(accept_prob(m, w), q), {}}; },
        [&](const MembershipVerdict& v, const auto&, const IndexedWord&, SearchReport&) { return !v.member(q.mode); });
}

SearchReport bounded_equivalence(const Machine& a, const Machine& b, const CutpointQuery& q, std::size_t max_len) {
    q.check();
    require_same_alphabet(a, b);
    return search(
        alphabet_of(a), max_len,
        [&](const IndexedWord& w) { return Pair{membership(accept_prob(a, w), q), membership(accept_prob(b, w), q)}; },
        [&](const MembershipVerdict& va, const std::optional<MembershipVerdict>& vb, const IndexedWord&,
            SearchReport&) { return va.member(q.mode) != vb->member(q.mode); });
}

SearchReport bounded_containment(const Machine& a, const Machine& b, const CutpointQuery& q, std::size_t max_len) {
    q.check();
    require_same_alphabet(a, b);
    const Alphabet& alphabet = alphabet_of(a);
    return search(
        alphabet, max_len,
        [&](const IndexedWord& w) { return Pair{membership(accept_prob(a, w), q), membership(accept_prob(b, w), q)}; },
        [&](const MembershipVerdict& va, const std::optional<MembershipVerdict>& vb, const IndexedWord& w,
            SearchReport& report) {
            const bool in_a = va.member(q.mode);
            const bool in_b = vb->member(q.mode);
            if (in_b && !in_a && !report.proper_witness_found) {
                report.proper_witness_found = true;
                report.proper_witness = spell(alphabet, w);
            }
            return in_a && !in_b;
        });
}

}  // namespace qfa
