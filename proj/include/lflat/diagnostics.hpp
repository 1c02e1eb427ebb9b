// Entity diagnostics: well-formedness warnings and errors with stable,
// golden-testable messages. Diagnostics never throw.

#ifndef LFLAT_DIAGNOSTICS_HPP
#define LFLAT_DIAGNOSTICS_HPP

#include <set>
#include <string>
#include <vector>

#include "lflat/mechanisms.hpp"

namespace lflat {

namespace detail {

// forward reachability over a state graph given as (from, to) edges
inline std::set<StateName> reach_from(const std::vector<StateName>& seeds,
                                      const std::vector<std::pair<StateName, StateName>>& edges,
                                      bool reversed) {
    std::set<StateName> seen(seeds.begin(), seeds.end());
    std::vector<StateName> todo(seeds.begin(), seeds.end());
    while (!todo.empty()) {
        StateName s = todo.back();
        todo.pop_back();
        for (const auto& [from, to] : edges) {
            const StateName& src = reversed ? to : from;
            const StateName& dst = reversed ? from : to;
            if (src == s && seen.insert(dst).second) todo.push_back(dst);
        }
    }
    return seen;
}

inline std::vector<Diagnostic> state_graph_diagnostics(
    const std::string& entity, const StateName& initial,
    const std::vector<StateName>& states, const std::vector<StateName>& finals,
    const std::vector<std::pair<StateName, StateName>>& edges) {
    std::vector<Diagnostic> out;
    std::set<StateName> reachable = reach_from({initial}, edges, false);
    std::set<StateName> live = reach_from(finals, edges, true);
    for (const auto& s : states)
        if (!reachable.count(s))
            out.push_back({Severity::warning, entity, "unreachable state " + s});
    for (const auto& s : states)
        if (!live.count(s))
            out.push_back({Severity::warning, entity,
                           "no final state reachable from state " + s});
    return out;
}

}  // namespace detail

inline std::vector<Diagnostic> diagnostics(const Alphabet& a) {
    std::vector<Diagnostic> out;
    if (a.symbols.empty())
        out.push_back({Severity::error, a.name, "alphabet is empty"});
    std::set<Symbol> seen;
    for (const auto& s : a.symbols)
        if (!seen.insert(s).second)
            out.push_back({Severity::error, a.name, "duplicate symbol " + s});
    return out;
}

inline std::vector<Diagnostic> diagnostics(const Order& o) {
    std::vector<Diagnostic> out;
    std::set<Symbol> seen;
    for (const auto& s : o.sequence)
        if (!seen.insert(s).second)
            out.push_back({Severity::error, o.name,
                           "sequence is not a permutation of alphabet " + o.alphabet +
                               ": duplicate symbol " + s});
    return out;
}

/// Order checked against its alphabet: the sequence must be a permutation.
inline std::vector<Diagnostic> diagnostics(const Order& o, const Alphabet& a) {
    std::vector<Diagnostic> out = diagnostics(o);
    std::multiset<Symbol> want(a.symbols.begin(), a.symbols.end());
    std::multiset<Symbol> have(o.sequence.begin(), o.sequence.end());
    if (want != have)
        out.push_back({Severity::error, o.name,
                       "sequence is not a permutation of alphabet " + a.name});
    return out;
}

inline std::vector<Diagnostic> diagnostics(const Language& l) {
    std::vector<Diagnostic> out;
    auto check_words = [&](const std::vector<Word>& words, const char* kind) {
        for (const Word& w : words)
            if (!word_over_symbols(w, l.alphabet))
                out.push_back({Severity::error, l.name,
                               std::string(kind) + " test word " + word_text(w) +
                                   " is not over the alphabet"});
    };
    check_words(l.positives, "positive");
    check_words(l.negatives, "negative");
    for (const Word& w : l.positives)
        if (std::find(l.negatives.begin(), l.negatives.end(), w) != l.negatives.end())
            out.push_back({Severity::error, l.name,
                           "word " + word_text(w) + " is both a positive and a negative test"});
    return out;
}

inline std::vector<Diagnostic> diagnostics(const FiniteAutomaton& fa) {
    std::vector<std::pair<StateName, StateName>> edges;
    for (const auto& t : fa.transitions) edges.emplace_back(t.from, t.to);
    return detail::state_graph_diagnostics(fa.name, fa.initial, fa.states(), fa.finals, edges);
}

inline std::vector<Diagnostic> diagnostics(const PushdownAutomaton& pda) {
    std::vector<std::pair<StateName, StateName>> edges;
    for (const auto& t : pda.transitions) edges.emplace_back(t.from, t.to);
    return detail::state_graph_diagnostics(pda.name, pda.initial, pda.states(), pda.finals,
                                           edges);
}

/// One warning per (state, input symbol) pair without a transition, where the
/// input symbols are the non-blank symbols occurring in transitions. Blank
/// gaps are deliberate halting and are not reported.
inline std::vector<Diagnostic> diagnostics(const TuringMachine& tm) {
    std::vector<Diagnostic> out;
    std::vector<Symbol> symbols = tm.input_symbols();
    for (const auto& state : tm.states())
        for (const auto& sym : symbols) {
            bool defined = std::any_of(tm.transitions.begin(), tm.transitions.end(),
                                       [&](const TmTransition& t) {
                                           return t.state == state && t.read == sym;
                                       });
            if (!defined)
                out.push_back({Severity::warning, tm.name,
                               "undefined transition for state/symbol " + state + "/" + sym});
        }
    return out;
}

inline std::vector<Diagnostic> diagnostics(const ContextFreeGrammar& g) {
    std::vector<Diagnostic> out;
    bool start_defined = std::any_of(g.rules.begin(), g.rules.end(),
                                     [&](const CfgRule& r) { return r.head == g.start; });
    if (!start_defined)
        out.push_back({Severity::warning, g.name,
                       "start symbol " + g.start + " has no rules"});

    // reachable: nonterminals derivable from the start
    std::set<std::string> reachable{g.start};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (!reachable.count(r.head)) continue;
            for (const auto& s : r.body)
                if (is_nonterminal(s) && reachable.insert(s).second) changed = true;
        }
    }
    // productive: nonterminals deriving some terminal word
    std::set<std::string> productive;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (productive.count(r.head)) continue;
            bool all = std::all_of(r.body.begin(), r.body.end(), [&](const std::string& s) {
                return !is_nonterminal(s) || productive.count(s);
            });
            if (all) {
                productive.insert(r.head);
                changed = true;
            }
        }
    }
    for (const auto& nt : g.nonterminals()) {
        if (!reachable.count(nt))
            out.push_back({Severity::warning, g.name, "unreachable nonterminal " + nt});
        if (!productive.count(nt))
            out.push_back({Severity::warning, g.name, "non-productive nonterminal " + nt});
    }
    return out;
}

inline std::vector<Diagnostic> diagnostics(const Regex&) { return {}; }

inline std::vector<Diagnostic> diagnostics(const PredicateMechanism& p,
                                           const AcceptorRegistry& acceptors) {
    std::vector<Diagnostic> out;
    if (!acceptors.has(p.acceptor))
        out.push_back({Severity::error, p.name, "unknown acceptor " + p.acceptor});
    return out;
}

inline std::vector<Diagnostic> diagnostics(const PredicateMechanism& p) {
    return diagnostics(p, builtin_acceptors());
}

inline std::vector<Diagnostic> diagnostics(const Entity& e) {
    return std::visit([](const auto& x) { return diagnostics(x); }, e);
}

/// "Warning in <entity>:" / indented message, per diagnostic.
inline std::string diagnostic_text(const Diagnostic& d) {
    std::string head = d.severity == Severity::warning ? "Warning in " : "Error in ";
    return head + d.entity + ":\n  " + d.message + "\n";
}

}  // namespace lflat

#endif  // LFLAT_DIAGNOSTICS_HPP
