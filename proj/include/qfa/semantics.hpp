#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qfa/automata.hpp"

namespace qfa {

/// A word is a sequence of alphabet tokens; the empty sequence is epsilon.
using Word = std::vector<std::string>;
/// A word resolved to alphabet indices.
using IndexedWord = std::vector<std::size_t>;

/// Resolves every token; throws AlphabetError on the first unknown one.
IndexedWord resolve(const Alphabet& alphabet, const Word& word);
Word spell(const Alphabet& alphabet, const IndexedWord& word);

/// Parses "a,b,a" as comma-separated tokens. Without commas, a bare string is
/// split into characters when every alphabet token is one character, otherwise
/// it is a single token. The empty string is epsilon.
Word parse_word(std::string_view text, const Alphabet& alphabet);
/// Inverse of parse_word; epsilon renders as the empty string.
std::string format_word(const Word& word, const Alphabet& alphabet);

/// Acceptance probability x^T M_{a_r} ... M_{a_1} y of a PFA on a_1..a_r.
///
/// The product is taken literally: starting from v = y, each symbol read left to
/// right updates v <- M_{a_i} v, and the result is x^T v. This is the usual
/// row-vector convention applied to the reversed word. Results are clamped to
/// [0, 1].
double pfa_accept_prob(const Pfa& m, const Word& w);
double pfa_accept_prob(const Pfa& m, const IndexedWord& w);

/// ||P_a U_{x_n} ... U_{x_1} |pi>||^2.
double moqfa_accept_prob(const Moqfa& m, const Word& w);
double moqfa_accept_prob(const Moqfa& m, const IndexedWord& w);

struct RunStep {
    std::string symbol; // token, or one of the end-marker keys
    double accept_increment = 0.0;
    double reject_increment = 0.0;
    double go_norm_sq = 0.0;
};

/// Step-by-step record of an MMQFA run over #left w #right. Totals are the raw
/// (unclamped) sums.
struct RunTrace {
    std::vector<RunStep> steps;
    double total_accept = 0.0;
    double total_reject = 0.0;
    double residual_go = 0.0;
};

/// Runs the measure-many semantics with a single streamed state vector: for each
/// symbol x_k, u = U_{x_k} v, then the accepting and rejecting masses of u are
/// recorded and v <- P_g u. The accept increments sum to the usual
/// sum_k ||P_a U_{x_k} prod_{i<k} (P_g U_{x_i}) |q_0>||^2. Rejection accounting
/// is extra bookkeeping that makes the probability budget checkable.
RunTrace mmqfa_run(const Mmqfa& m, const Word& w);
RunTrace mmqfa_run(const Mmqfa& m, const IndexedWord& w);

/// total_accept of mmqfa_run, clamped to [0, 1].
double mmqfa_accept_prob(const Mmqfa& m, const Word& w);
double mmqfa_accept_prob(const Mmqfa& m, const IndexedWord& w);

/// Dispatches on the machine kind.
double accept_prob(const Machine& m, const Word& w);
double accept_prob(const Machine& m, const IndexedWord& w);

}  // namespace qfa
