#pragma once

#include <string>

#include "qfa/automata.hpp"
#include "qfa/rational.hpp"

namespace qfa {

enum class CutpointMode { Strict, Nonstrict };

std::string_view to_string(CutpointMode mode);

/// Two machines whose bounded cutpoint-language equivalence stands in for an
/// emptiness or universality question about `left`.
struct ReductionPair {
    Mmqfa left;
    Mmqfa right;
    Rational cutpoint;
    CutpointMode mode = CutpointMode::Nonstrict;
    std::string claim;
};

/// Embeds an n-state MOQFA into a 3n-state MMQFA with the same word function.
///
/// Letters act as blockdiag(I, U_sigma, I); both end-markers swap blocks 1 and
/// 2. The left marker moves the initial (pi, 0, 0) into the middle block, where
/// it evolves without being measured, and the right marker moves it back into
/// block 1 where the accepting states sit. So every accept increment before the
/// right marker is zero and the last one equals the MOQFA probability.
///
/// Accepting states are the MOQFA accepting states in block 1. Rejecting states
/// are the rest of block 1 and all of block 3.
Mmqfa embed_moqfa_to_mmqfa(const Moqfa& m);

/// Two-state MOQFA with identity letters and initial (sqrt(lambda),
/// sqrt(1 - lambda)); accepts every word with probability lambda.
Moqfa constant_moqfa(const Alphabet& alphabet, const Rational& lambda);

/// Three-state MOQFA accepting every word with probability lambda - c, so its
/// strict cutpoint-lambda language is empty. Requires 0 < c < lambda <= 1.
Moqfa below_cutpoint_moqfa(const Alphabet& alphabet, const Rational& lambda, const Rational& c);

/// Embedded below_cutpoint_moqfa: an MMQFA with empty strict language at lambda.
Mmqfa empty_strict_mmqfa(const Alphabet& alphabet, const Rational& lambda, const Rational& c);

/// Embedded constant_moqfa: an MMQFA whose nonstrict language at lambda is
/// every word.
Mmqfa full_nonstrict_mmqfa(const Alphabet& alphabet, const Rational& lambda);

/// Pairs `a` with full_nonstrict_mmqfa at lambda: their nonstrict languages
/// agree exactly when a's nonstrict language is universal.
ReductionPair nonstrict_equivalence_reduction(const Mmqfa& a, const Rational& lambda);

/// Pairs `m` with empty_strict_mmqfa(lambda, c): their strict languages agree
/// exactly when m's strict language is empty.
ReductionPair strict_equivalence_reduction(const Mmqfa& m, const Rational& lambda, const Rational& c);

}  // namespace qfa
