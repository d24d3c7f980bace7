#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qfa/automata.hpp"
#include "qfa/constructions.hpp"
#include "qfa/rational.hpp"
#include "qfa/semantics.hpp"

namespace qfa {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CutpointQuery {
    Rational lambda;
    CutpointMode mode = CutpointMode::Nonstrict;
    double epsilon = 1e-9;

    /// Throws ParameterError unless 0 < lambda <= 1 and epsilon > 0.
    void check() const;
};

enum class VerdictClass { Above, Below, Boundary };

std::string_view to_string(VerdictClass c);

/// Three-valued comparison of a probability against the cutpoint. Probabilities
/// within epsilon of lambda are Boundary: members in nonstrict mode, non-members
/// in strict mode.
struct MembershipVerdict {
    VerdictClass verdict = VerdictClass::Below;
    double probability = 0.0;
    double margin = 0.0; // probability - lambda

    bool strict_member() const noexcept { return verdict == VerdictClass::Above; }
    bool nonstrict_member() const noexcept { return verdict != VerdictClass::Below; }
    bool member(CutpointMode mode) const noexcept {
        return mode == CutpointMode::Strict ? strict_member() : nonstrict_member();
    }
};

MembershipVerdict membership(double p, const CutpointQuery& q);

struct Witness {
    Word word;
    MembershipVerdict verdict;                // first (or only) machine
    std::optional<MembershipVerdict> other;   // second machine, for two-machine searches
};

/// Outcome of a bounded search over all words of length <= max_len. An
/// exhausted search says nothing about longer words: the underlying problems
/// are undecidable and these tools are only semi-procedures.
struct SearchReport {
    std::optional<Witness> witness;
    std::size_t max_len = 0;
    std::uint64_t words_checked = 0;
    std::vector<Word> boundary_words;
    /// Containment only: a word in L(b) \ L(a) was seen among the checked words.
    bool proper_witness_found = false;
    std::optional<Word> proper_witness;

    bool exhausted() const noexcept { return !witness.has_value(); }
};

/// sum_{k=0}^{max_len} |alphabet|^k; throws InputError on overflow.
std::uint64_t words_up_to(std::size_t alphabet_size, std::size_t max_len);

/// Calls visit(word) for every word of length <= max_len in length-lexicographic
/// order (epsilon first, letters in declared order) until visit returns false.
template <typename Visit>
void enumerate_words(std::size_t alphabet_size, std::size_t max_len, Visit&& visit) {
    IndexedWord w;
    for (std::size_t len = 0; len <= max_len; ++len) {
        w.assign(len, 0);
        while (true) {
            if (!visit(static_cast<const IndexedWord&>(w))) return;
            std::size_t pos = len;
            while (pos > 0 && w[pos - 1] + 1 == alphabet_size) w[--pos] = 0;
            if (pos == 0) break;
            ++w[pos - 1];
        }
        if (alphabet_size == 0) return;
    }
}

/// First member of the cutpoint language, if any word up to max_len is one.
SearchReport bounded_witness_search(const Machine& m, const CutpointQuery& q, std::size_t max_len);

/// First non-member, if any word up to max_len is one.
SearchReport bounded_universality(const Machine& m, const CutpointQuery& q, std::size_t max_len);

/// First word whose membership differs between a and b.
SearchReport bounded_equivalence(const Machine& a, const Machine& b, const CutpointQuery& q, std::size_t max_len);

/// First word in L(a) \ L(b). proper_witness_found reports whether some checked
/// word lies in L(b) \ L(a), which is what proper containment needs on top.
SearchReport bounded_containment(const Machine& a, const Machine& b, const CutpointQuery& q, std::size_t max_len);

}  // namespace qfa
