// Fixed textual layouts for entities and traces. These blocks are normative
// output of the toolkit and are golden-tested; do not adjust spacing.

#ifndef LFLAT_SHOW_HPP
#define LFLAT_SHOW_HPP

#include <string>
#include <vector>

#include "lflat/mechanisms.hpp"

namespace lflat {

inline std::string list_text(const std::vector<std::string>& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ",";
        s += items[i];
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Regex pretty-printer: `+` alternation, `*` concatenation (binds tighter),
// postfix `^*` tightest; parentheses only where required.

namespace detail {

enum class RegexPrec { union_ = 0, concat = 1, postfix = 2 };

inline std::string regex_text_prec(const RegexPtr& e, RegexPrec required) {
    std::string text;
    RegexPrec mine = RegexPrec::postfix;
    switch (e->kind) {
        case RegexNode::Kind::symbol:
            return e->sym;
        case RegexNode::Kind::empty_word:
            return kEpsilonToken;
        case RegexNode::Kind::union_:
            mine = RegexPrec::union_;
            text = regex_text_prec(e->left, RegexPrec::union_) + " + " +
                   regex_text_prec(e->right, RegexPrec::concat);
            break;
        case RegexNode::Kind::concat:
            mine = RegexPrec::concat;
            text = regex_text_prec(e->left, RegexPrec::concat) + " * " +
                   regex_text_prec(e->right, RegexPrec::postfix);
            break;
        case RegexNode::Kind::star:
            text = regex_text_prec(e->left, RegexPrec::postfix) + "^*";
            break;
    }
    if (mine < required) return "(" + text + ")";
    return text;
}

}  // namespace detail

inline std::string regex_text(const RegexPtr& e) {
    return detail::regex_text_prec(e, detail::RegexPrec::union_);
}

// ---------------------------------------------------------------------------
// Term renderings (compact compound terms)

inline std::string fa_transition_term(const FaTransition& t) {
    return t.from + "/" + t.symbol + "/" + t.to;
}

inline std::string fa_term(const FiniteAutomaton& fa) {
    std::vector<std::string> parts;
    for (const auto& t : fa.transitions) parts.push_back(fa_transition_term(t));
    return "fa(" + fa.initial + ", " + list_text(parts) + ", " + list_text(fa.finals) + ")";
}

inline std::string cfg_rule_term(const CfgRule& r) {
    return r.head + " -> " + list_text(r.body);
}

inline std::string cfg_term(const ContextFreeGrammar& g) {
    std::vector<std::string> parts;
    for (const auto& r : g.rules) parts.push_back(cfg_rule_term(r));
    return "cfg(" + g.start + ", " + list_text(parts) + ")";
}

inline std::string pda_transition_term(const PdaTransition& t) {
    return t.from + "/" + t.pop + "/" + t.input + "/" + t.to + "/" + list_text(t.push);
}

inline std::string pda_term(const PushdownAutomaton& pda) {
    std::vector<std::string> parts;
    for (const auto& t : pda.transitions) parts.push_back(pda_transition_term(t));
    return "pda(" + pda.initial + ", " + pda.initial_stack_symbol + ", " + list_text(parts) +
           ", " + list_text(pda.finals) + ")";
}

inline std::string tm_transition_term(const TmTransition& t) {
    return t.state + "/" + t.read + "/" + t.write + "/" +
           (t.move == TapeMove::left ? "L" : "R") + "/" + t.to;
}

inline std::string tm_term(const TuringMachine& tm) {
    std::vector<std::string> parts;
    for (const auto& t : tm.transitions) parts.push_back(tm_transition_term(t));
    return "tm(" + tm.initial + ", " + list_text(parts) + ", " + list_text(tm.finals) + ")";
}

// ---------------------------------------------------------------------------
// show blocks

inline std::string show(const FiniteAutomaton& fa) {
    std::string out = "FINITE AUTOMATON:\n";
    out += "  " + fa_term(fa) + "\n";
    out += "  Initial state: " + fa.initial + "\n";
    out += "  Transitions:\n";
    for (const auto& t : fa.transitions)
        out += "\t" + t.from + " - " + t.symbol + " -> " + t.to + "\n";
    out += "  Final states: " + list_text(fa.finals) + "\n";
    out += std::string("  Deterministic: ") + (is_deterministic(fa) ? "yes" : "no") + "\n";
    return out;
}

inline std::string show(const ContextFreeGrammar& g) {
    std::string out = "CONTEXT-FREE GRAMMAR:\n";
    out += "  " + cfg_term(g) + "\n";
    out += "  Start symbol: " + g.start + "\n";
    out += "  Rules:\n";
    for (const auto& r : g.rules) out += "\t" + r.head + " -> " + word_text_spaced(r.body) + "\n";
    return out;
}

inline std::string show(const PushdownAutomaton& pda) {
    std::string out = "PUSHDOWN AUTOMATON:\n";
    out += "  " + pda_term(pda) + "\n";
    out += "  Initial state: " + pda.initial + "\n";
    out += "  Initial stack symbol: " + pda.initial_stack_symbol + "\n";
    out += "  Transitions:\n";
    for (const auto& t : pda.transitions) out += "\t" + pda_transition_term(t) + "\n";
    out += "  Final states: " + list_text(pda.finals) + "\n";
    return out;
}

inline std::string show(const TuringMachine& tm) {
    std::string out = "TURING MACHINE:\n";
    out += "  " + tm_term(tm) + "\n";
    out += "  Initial state: " + tm.initial + "\n";
    out += "  Transitions:\n";
    for (const auto& t : tm.transitions) out += "\t" + tm_transition_term(t) + "\n";
    out += "  Final states: " + list_text(tm.finals) + "\n";
    return out;
}

inline std::string show(const Regex& r) {
    std::string out = "REGULAR EXPRESSION:\n";
    out += "  Name: " + r.name + "\n";
    out += "  Expression: " + regex_text(r.expression) + "\n";
    return out;
}

inline std::string show(const PredicateMechanism& p) {
    std::string out = "PREDICATE:\n";
    out += "  Name: " + p.name + "\n";
    out += "  Alphabet: " + list_text(p.alphabet) + "\n";
    std::string acceptor = p.acceptor;
    if (!p.acceptor_args.empty()) acceptor += "(" + [&] {
        std::string s;
        for (std::size_t i = 0; i < p.acceptor_args.size(); ++i) {
            if (i) s += ",";
            s += p.acceptor_args[i];
        }
        return s;
    }() + ")";
    out += "  Acceptor: " + acceptor + "\n";
    return out;
}

inline std::string show(const Language& l) {
    std::string out = "LANGUAGE:\n";
    out += "  Name: " + l.name + "\n";
    out += "  Alphabet: " + list_text(l.alphabet) + "\n";
    out += "  Positive tests:\n";
    for (const auto& w : l.positives) out += "\t" + word_text(w) + "\n";
    out += "  Negative tests:\n";
    for (const auto& w : l.negatives) out += "\t" + word_text(w) + "\n";
    return out;
}

inline std::string show(const Alphabet& a) {
    std::string out = "ALPHABET:\n";
    out += "  Name: " + a.name + "\n";
    out += "  Symbols: " + list_text(a.symbols) + "\n";
    return out;
}

inline std::string show(const Order& o) {
    std::string out = "ORDER:\n";
    out += "  Name: " + o.name + "\n";
    out += "  Alphabet: " + o.alphabet + "\n";
    out += "  Sequence: " + list_text(o.sequence) + "\n";
    return out;
}

inline std::string show(const Entity& e) {
    return std::visit([](const auto& x) { return show(x); }, e);
}

// ---------------------------------------------------------------------------
// Trace blocks

namespace detail {

inline const char* trace_header(const Mechanism& m) {
    struct Visitor {
        const char* operator()(const PredicateMechanism&) { return "TRACING PREDICATE:"; }
        const char* operator()(const Regex&) { return "TRACING REGULAR EXPRESSION:"; }
        const char* operator()(const FiniteAutomaton&) { return "TRACING FINITE AUTOMATON:"; }
        const char* operator()(const ContextFreeGrammar&) {
            return "TRACING CONTEXT-FREE GRAMMAR:";
        }
        const char* operator()(const PushdownAutomaton&) {
            return "TRACING PUSHDOWN AUTOMATON:";
        }
        const char* operator()(const TuringMachine&) { return "TRACING TURING MACHINE:"; }
    };
    return std::visit(Visitor{}, m);
}

}  // namespace detail

inline std::string format_trace(const Mechanism& m, const Trace& t) {
    std::string out = detail::trace_header(m);
    out += "\n  Name: " + t.mechanism_name + "\n";
    out += "  Traced word: " + word_text_spaced(t.word) + "\n";
    switch (t.outcome) {
        case Outcome::accept:
            out += "  At least one execution path stops at an\n";
            out += "  acceptance state.\n";
            out += "  Word accepted.\n";
            break;
        case Outcome::reject:
            out += "  No execution path stops at an\n";
            out += "  acceptance state.\n";
            out += "  Word rejected.\n";
            break;
        case Outcome::unknown:
            out += "  The search budget was exhausted before\n";
            out += "  reaching a verdict.\n";
            out += "  Word neither accepted nor rejected.\n";
            break;
    }
    out += "  Traced steps:\n";
    for (const auto& step : t.steps) out += "    " + step + "\n";
    return out;
}

}  // namespace lflat

#endif  // LFLAT_SHOW_HPP
