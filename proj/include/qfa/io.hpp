#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qfa/automata.hpp"

namespace qfa {

/// Malformed document. The message carries a line/column for syntax errors and
/// a JSON path (e.g. "transitions.a[1]") for structural ones.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses a JSON automaton document and validates it at `tol`.
///
/// Layout (keys in this order when serialized):
///   kind         "pfa" | "moqfa" | "mmqfa"
///   alphabet     list of tokens
///   dimension    number of states
///   initial      reals (pfa) or [re, im] pairs
///   transitions  token -> row-major nested array; mmqfa adds "#left"/"#right"
///   accepting    state indices (moqfa, mmqfa)
///   rejecting    state indices (mmqfa)
///   final        0/1 list (pfa)
///
/// Unknown keys are rejected. Throws ParseError or ValidationError.
Machine parse_automaton(std::string_view text, double tol = kDefaultTolerance);

/// Canonical text: fixed key order, alphabet order, 17 significant digits.
std::string serialize_automaton(const Machine& m);

Machine load_automaton(const std::string& path, double tol = kDefaultTolerance);
void save_automaton(const std::string& path, const Machine& m);

}  // namespace qfa
