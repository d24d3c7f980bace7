#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfa/constructions.hpp"
#include "qfa/io.hpp"
#include "qfa/language.hpp"
#include "qfa/semantics.hpp"

namespace qfa::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kBoundedNote =
    "bounded search: exhausting all words up to max_len proves nothing about longer words";

struct Options {
    double tolerance = kDefaultTolerance;
    std::string format = "text";

    std::string file;
    std::string file2;
    std::string output;
    std::string word;
    bool trace = false;

    std::string gadget;
    std::string alphabet;
    std::string lambda;
    std::string c;

    std::string cutpoint;
    std::string mode = "nonstrict";
    std::size_t max_len = 0;
};

std::string display(const Word& w, const Alphabet& a) {
    return w.empty() ? "ε" : "'" + format_word(w, a) + "'";
}

ordered_json word_json(const Word& w) { return ordered_json(w); }

ordered_json verdict_json(const MembershipVerdict& v) {
    return {{"class", to_string(v.verdict)}, {"probability", v.probability}, {"margin", v.margin}};
}

std::string verdict_text(const MembershipVerdict& v) {
    std::ostringstream os;
    os << std::setprecision(17) << "P = " << v.probability << " (" << to_string(v.verdict) << ", margin "
       << std::setprecision(3) << v.margin << ")";
    return os.str();
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

void write_machine(const Options& o, const Machine& m, std::ostream& out) {
    if (o.output.empty() || o.output == "-") {
        out << serialize_automaton(m);
    } else {
        save_automaton(o.output, m);
    }
}

CutpointQuery query_of(const Options& o) {
    CutpointQuery q;
    q.lambda = Rational::parse(o.cutpoint);
    q.mode = o.mode == "strict" ? CutpointMode::Strict : CutpointMode::Nonstrict;
    q.epsilon = o.tolerance;
    q.check();
    return q;
}

int cmd_validate(const Options& o, std::ostream& out) {
    try {
        const Machine m = load_automaton(o.file, o.tolerance);
        if (o.format == "json") {
            emit(out, {{"valid", true}, {"kind", kind_name(m)}, {"alphabet", alphabet_of(m).tokens()}, {"violations", ordered_json::array()}});
        } else {
            const auto& tokens = alphabet_of(m).tokens();
            out << "valid " << kind_name(m) << " over {";
            for (std::size_t i = 0; i < tokens.size(); ++i) out << (i ? "," : "") << tokens[i];
            out << "}\n";
        }
        return 0;
    } catch (const ValidationError& e) {
        if (o.format == "json") {
            ordered_json vs = ordered_json::array();
            for (const auto& v : e.violations())
                vs.push_back({{"field", v.field}, {"index", v.index}, {"deviation", v.deviation}, {"message", v.message}});
            emit(out, {{"valid", false}, {"violations", vs}});
        } else {
            out << "invalid:\n";
            for (const auto& v : e.violations()) out << "  " << to_string(v) << "\n";
        }
        return 2;
    }
}

int cmd_run(const Options& o, std::ostream& out) {
    const Machine m = load_automaton(o.file, o.tolerance);
    const Alphabet& alphabet = alphabet_of(m);
    const Word w = parse_word(o.word, alphabet);

    if (o.trace) {
        const auto* mm = std::get_if<Mmqfa>(&m);
        if (!mm) throw InputError("--trace is only available for mmqfa machines");
        const RunTrace t = mmqfa_run(*mm, w);
        if (o.format == "json") {
            ordered_json steps = ordered_json::array();
            for (const auto& s : t.steps)
                steps.push_back({{"symbol", s.symbol},
                                 {"accept_increment", s.accept_increment},
                                 {"reject_increment", s.reject_increment},
                                 {"go_norm_sq", s.go_norm_sq}});
            emit(out, {{"kind", "mmqfa"},
                       {"word", word_json(w)},
                       {"probability", mmqfa_accept_prob(*mm, w)},
                       {"trace",
                        {{"steps", steps},
                         {"total_accept", t.total_accept},
                         {"total_reject", t.total_reject},
                         {"residual_go", t.residual_go}}}});
        } else {
            out << std::setprecision(17);
            out << "step  symbol  accept  reject  go\n";
            for (std::size_t k = 0; k < t.steps.size(); ++k) {
                const auto& s = t.steps[k];
                out << k << "  " << s.symbol << "  " << s.accept_increment << "  " << s.reject_increment << "  "
                    << s.go_norm_sq << "\n";
            }
            out << "total_accept " << t.total_accept << "\ntotal_reject " << t.total_reject << "\nresidual_go "
                << t.residual_go << "\n";
        }
        return 0;
    }

    const double p = accept_prob(m, w);
    if (o.format == "json") {
        emit(out, {{"kind", kind_name(m)}, {"word", word_json(w)}, {"probability", p}});
    } else {
        out << std::setprecision(17) << p << "\n";
    }
    return 0;
}

int cmd_embed(const Options& o, std::ostream& out) {
    const Machine m = load_automaton(o.file, o.tolerance);
    const auto* mo = std::get_if<Moqfa>(&m);
    if (!mo) throw InputError("embed expects an moqfa, got " + std::string(kind_name(m)));
    write_machine(o, embed_moqfa_to_mmqfa(*mo), out);
    return 0;
}

int cmd_gadget(const Options& o, std::ostream& out) {
    std::vector<std::string> tokens;
    std::stringstream ss(o.alphabet);
    for (std::string t; std::getline(ss, t, ',');) tokens.push_back(t);
    const Alphabet alphabet(std::move(tokens));
    const Rational lambda = Rational::parse(o.lambda);
    const bool needs_c = o.gadget == "below" || o.gadget == "empty-strict";
    if (needs_c && o.c.empty()) throw ParameterError("gadget '" + o.gadget + "' requires --c");
    if (!needs_c && !o.c.empty()) throw ParameterError("gadget '" + o.gadget + "' does not take --c");

    Machine m;
    if (o.gadget == "constant")
        m = constant_moqfa(alphabet, lambda);
    else if (o.gadget == "below")
        m = below_cutpoint_moqfa(alphabet, lambda, Rational::parse(o.c));
    else if (o.gadget == "empty-strict")
        m = empty_strict_mmqfa(alphabet, lambda, Rational::parse(o.c));
    else
        m = full_nonstrict_mmqfa(alphabet, lambda);
    write_machine(o, m, out);
    return 0;
}

void report(std::ostream& out, const Options& o, std::string_view command, const CutpointQuery& q,
            const Alphabet& alphabet, const SearchReport& r, std::string_view witness_label) {
    if (o.format == "json") {
        ordered_json j;
        j["command"] = command;
        j["cutpoint"] = q.lambda.str();
        j["mode"] = to_string(q.mode);
        j["bounded"] = true;
        j["outcome"] = r.witness ? "witness" : "exhausted";
        if (r.witness) {
            ordered_json w{{"word", word_json(r.witness->word)}, {"verdict", verdict_json(r.witness->verdict)}};
            if (r.witness->other) w["other_verdict"] = verdict_json(*r.witness->other);
            j["witness"] = w;
        }
        j["max_len"] = r.max_len;
        j["words_checked"] = r.words_checked;
        ordered_json boundary = ordered_json::array();
        for (const auto& w : r.boundary_words) boundary.push_back(word_json(w));
        j["boundary_words"] = boundary;
        if (command == "contain") {
            j["proper_witness_found"] = r.proper_witness_found;
            j["proper_witness"] = r.proper_witness ? word_json(*r.proper_witness) : ordered_json(nullptr);
        }
        j["note"] = kBoundedNote;
        emit(out, j);
        return;
    }

    out << command << " (" << to_string(q.mode) << ", cutpoint " << q.lambda.str() << ", max length " << r.max_len
        << ")\n";
    if (r.witness) {
        out << witness_label << ": " << display(r.witness->word, alphabet) << "  " << verdict_text(r.witness->verdict);
        if (r.witness->other) out << " vs " << verdict_text(*r.witness->other);
        out << "\n";
    } else {
        out << "exhausted: none among " << r.words_checked << " words\n";
    }
    out << "words checked: " << r.words_checked << "\n";
    out << "boundary words: " << r.boundary_words.size();
    if (!r.boundary_words.empty()) {
        out << " (first " << display(r.boundary_words.front(), alphabet) << ")";
    }
    out << "\n";
    if (command == "contain") {
        out << "proper containment witness (in second, not first): ";
        out << (r.proper_witness ? display(*r.proper_witness, alphabet) : std::string("none found")) << "\n";
    }
    out << "note: " << kBoundedNote << "\n";
}

int cmd_single_search(const Options& o, std::ostream& out, std::string_view command) {
    const Machine m = load_automaton(o.file, o.tolerance);
    const CutpointQuery q = query_of(o);
    if (command == "empty")
        report(out, o, command, q, alphabet_of(m), bounded_witness_search(m, q, o.max_len), "member");
    else
        report(out, o, command, q, alphabet_of(m), bounded_universality(m, q, o.max_len), "non-member");
    return 0;
}

int cmd_pair_search(const Options& o, std::ostream& out, std::string_view command) {
    const Machine a = load_automaton(o.file, o.tolerance);
    const Machine b = load_automaton(o.file2, o.tolerance);
    const CutpointQuery q = query_of(o);
    if (command == "equiv")
        report(out, o, command, q, alphabet_of(a), bounded_equivalence(a, b, q, o.max_len), "separating word");
    else
        report(out, o, command, q, alphabet_of(a), bounded_containment(a, b, q, o.max_len),
               "in first, not second");
    return 0;
}

void add_search_options(CLI::App* sub, Options& o) {
    sub->add_option("--cutpoint", o.cutpoint, "Cutpoint lambda, e.g. 3/4 or 0.75")->required();
    sub->add_option("--mode", o.mode, "strict (P > lambda) or nonstrict (P >= lambda)")
        ->check(CLI::IsMember({"strict", "nonstrict"}));
    sub->add_option("--max-len", o.max_len, "Longest word length to enumerate")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulate and explore probabilistic and quantum finite automata"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--tolerance", o.tolerance, "Validation and comparison tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* validate_cmd = app.add_subcommand("validate", "Check a machine file against its type invariants");
    validate_cmd->add_option("FILE", o.file)->required();

    auto* run_cmd = app.add_subcommand("run", "Acceptance probability of one word");
    run_cmd->add_option("FILE", o.file)->required();
    run_cmd->add_option("--word", o.word, "Comma-separated tokens, or a bare string of one-character tokens")
        ->required();
    run_cmd->add_flag("--trace", o.trace, "Per-step accept/reject/go record (mmqfa only)");

    auto* embed_cmd = app.add_subcommand("embed", "Embed an MOQFA into an equivalent MMQFA");
    embed_cmd->add_option("FILE", o.file)->required();
    embed_cmd->add_option("-o,--output", o.output, "Output file (stdout when omitted)");

    auto* gadget_cmd = app.add_subcommand("gadget", "Build a constant-probability gadget machine");
    gadget_cmd->add_option("KIND", o.gadget)
        ->required()
        ->check(CLI::IsMember({"constant", "below", "empty-strict", "full-nonstrict"}));
    gadget_cmd->add_option("--alphabet", o.alphabet, "Comma-separated tokens")->required();
    gadget_cmd->add_option("--lambda", o.lambda)->required();
    gadget_cmd->add_option("--c", o.c, "Gap below lambda (below, empty-strict)");
    gadget_cmd->add_option("-o,--output", o.output, "Output file (stdout when omitted)");

    auto* empty_cmd = app.add_subcommand("empty", "Bounded search for a member of the cutpoint language");
    empty_cmd->add_option("FILE", o.file)->required();
    add_search_options(empty_cmd, o);

    auto* universal_cmd = app.add_subcommand("universal", "Bounded search for a non-member");
    universal_cmd->add_option("FILE", o.file)->required();
    add_search_options(universal_cmd, o);

    auto* equiv_cmd = app.add_subcommand("equiv", "Bounded search for a word separating two cutpoint languages");
    equiv_cmd->add_option("FILE1", o.file)->required();
    equiv_cmd->add_option("FILE2", o.file2)->required();
    add_search_options(equiv_cmd, o);

    auto* contain_cmd = app.add_subcommand("contain", "Bounded search for a word in L(FILE1) but not L(FILE2)");
    contain_cmd->add_option("FILE1", o.file)->required();
    contain_cmd->add_option("FILE2", o.file2)->required();
    add_search_options(contain_cmd, o);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(o, out);
        if (run_cmd->parsed()) return cmd_run(o, out);
        if (embed_cmd->parsed()) return cmd_embed(o, out);
        if (gadget_cmd->parsed()) return cmd_gadget(o, out);
        if (empty_cmd->parsed()) return cmd_single_search(o, out, "empty");
        if (universal_cmd->parsed()) return cmd_single_search(o, out, "universal");
        if (equiv_cmd->parsed()) return cmd_pair_search(o, out, "equiv");
        if (contain_cmd->parsed()) return cmd_pair_search(o, out, "contain");
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace qfa::cli
