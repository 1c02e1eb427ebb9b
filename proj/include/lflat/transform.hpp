// Mechanism conversions: regex -> epsilon-NFA (Thompson), determinization by
// subset construction, Moore-refinement minimization, canonical renaming, and
// CFG normalization to quasi-lambda-free and chain-free form.

#ifndef LFLAT_TRANSFORM_HPP
#define LFLAT_TRANSFORM_HPP

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lflat/mechanisms.hpp"

namespace lflat {

// ---------------------------------------------------------------------------
// Regex -> finite automaton

namespace detail {

struct ThompsonBuilder {
    FiniteAutomaton fa;
    int counter = 0;

    StateName fresh() { return "t" + std::to_string(++counter); }

    void edge(const StateName& from, const Symbol& sym, const StateName& to) {
        fa.transitions.push_back({from, sym, to});
    }

    // Builds the fragment for e between fresh start/end states and returns them.
    std::pair<StateName, StateName> build(const RegexPtr& e) {
        switch (e->kind) {
            case RegexNode::Kind::empty_word: {
                StateName s = fresh(), f = fresh();
                edge(s, kEpsilonToken, f);
                return {s, f};
            }
            case RegexNode::Kind::symbol: {
                StateName s = fresh(), f = fresh();
                edge(s, e->sym, f);
                return {s, f};
            }
            case RegexNode::Kind::union_: {
                StateName s = fresh(), f = fresh();
                auto [ls, lf] = build(e->left);
                auto [rs, rf] = build(e->right);
                edge(s, kEpsilonToken, ls);
                edge(s, kEpsilonToken, rs);
                edge(lf, kEpsilonToken, f);
                edge(rf, kEpsilonToken, f);
                return {s, f};
            }
            case RegexNode::Kind::concat: {
                auto [ls, lf] = build(e->left);
                auto [rs, rf] = build(e->right);
                edge(lf, kEpsilonToken, rs);
                return {ls, rf};
            }
            case RegexNode::Kind::star: {
                StateName s = fresh(), f = fresh();
                auto [inner_start, inner_final] = build(e->left);
                edge(s, kEpsilonToken, inner_start);
                edge(s, kEpsilonToken, f);
                edge(inner_final, kEpsilonToken, inner_start);
                edge(inner_final, kEpsilonToken, f);
                return {s, f};
            }
        }
        return {fresh(), fresh()};
    }
};

}  // namespace detail

/// Thompson construction: an epsilon-NFA with exactly one final state, no
/// transitions into the initial state and none out of the final state.
inline FiniteAutomaton regex_to_fa(const Regex& r) {
    detail::ThompsonBuilder builder;
    auto [start, finish] = builder.build(r.expression);
    builder.fa.name = r.name;
    builder.fa.initial = start;
    builder.fa.finals = {finish};
    return builder.fa;
}

/// Least superset of states closed under epsilon transitions.
inline std::set<StateName> epsilon_closure(const FiniteAutomaton& fa,
                                           const std::set<StateName>& states) {
    std::set<StateName> closure = states;
    std::deque<StateName> todo(states.begin(), states.end());
    while (!todo.empty()) {
        StateName s = todo.front();
        todo.pop_front();
        for (const auto& t : fa.transitions)
            if (t.from == s && t.symbol == kEpsilonToken && closure.insert(t.to).second)
                todo.push_back(t.to);
    }
    return closure;
}

namespace detail {

inline StateName subset_name(const std::set<StateName>& states) {
    std::string name = "{";
    for (const auto& s : states) {
        if (name.size() > 1) name += ",";
        name += s;
    }
    return name + "}";
}

}  // namespace detail

/// Subset construction over epsilon closures. Only reachable subset states
/// are emitted; names render the subsets and are expected to be renamed later.
inline FiniteAutomaton determinize(const FiniteAutomaton& fa) {
    std::vector<Symbol> symbols = fa.symbols();
    FiniteAutomaton dfa;
    dfa.name = fa.name;

    std::set<StateName> start = epsilon_closure(fa, {fa.initial});
    dfa.initial = detail::subset_name(start);

    std::map<std::set<StateName>, StateName> known{{start, dfa.initial}};
    std::deque<std::set<StateName>> todo{start};
    while (!todo.empty()) {
        std::set<StateName> current = todo.front();
        todo.pop_front();
        StateName from = known.at(current);
        if (std::any_of(current.begin(), current.end(),
                        [&](const StateName& s) { return fa.is_final(s); }))
            dfa.finals.push_back(from);
        for (const Symbol& sym : symbols) {
            std::set<StateName> next;
            for (const auto& t : fa.transitions)
                if (t.symbol == sym && current.count(t.from)) next.insert(t.to);
            if (next.empty()) continue;
            next = epsilon_closure(fa, next);
            auto [it, inserted] = known.emplace(next, detail::subset_name(next));
            if (inserted) todo.push_back(next);
            dfa.transitions.push_back({from, sym, it->second});
        }
    }
    return dfa;
}

namespace detail {

inline std::vector<StateName> reachable_states(const FiniteAutomaton& fa) {
    std::vector<StateName> out{fa.initial};
    std::set<StateName> seen{fa.initial};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& t : fa.transitions)
            if (t.from == out[i] && seen.insert(t.to).second) out.push_back(t.to);
    return out;
}

}  // namespace detail

/// Moore partition refinement. Completes the automaton with an implicit trap
/// state, refines from the final/non-final seed until stable, merges blocks,
/// and drops the trap block again, yielding the minimal partial DFA.
inline FiniteAutomaton minimize(const FiniteAutomaton& dfa) {
    if (!is_deterministic(dfa))
        throw Error("NotDeterministic", "minimize requires a deterministic automaton");

    std::vector<Symbol> symbols = dfa.symbols();
    std::vector<StateName> states = detail::reachable_states(dfa);

    const StateName trap = "__trap";
    std::map<std::pair<StateName, Symbol>, StateName> delta;
    for (const auto& t : dfa.transitions)
        if (std::find(states.begin(), states.end(), t.from) != states.end())
            delta[{t.from, t.symbol}] = t.to;
    // always complete via the trap so dead states merge into its block
    states.push_back(trap);
    for (const auto& s : states)
        for (const auto& sym : symbols)
            if (!delta.count({s, sym})) delta[{s, sym}] = trap;

    // block id per state, seeded by finality
    std::map<StateName, int> block;
    for (const auto& s : states) block[s] = dfa.is_final(s) ? 1 : 0;

    for (;;) {
        std::map<std::vector<int>, int> signatures;
        std::map<StateName, int> next;
        for (const auto& s : states) {
            std::vector<int> sig{block[s]};
            for (const auto& sym : symbols) sig.push_back(block[delta.at({s, sym})]);
            auto [it, inserted] = signatures.emplace(sig, static_cast<int>(signatures.size()));
            next[s] = it->second;
        }
        if (next == block) break;
        block = next;
    }

    // representative per block: first state in reachability order
    std::map<int, StateName> representative;
    for (const auto& s : states)
        representative.emplace(block[s], s);

    int trap_block = block[trap];
    auto rep_name = [&](int b) { return detail::subset_name({representative.at(b)}); };

    FiniteAutomaton out;
    out.name = dfa.name;
    if (block[dfa.initial] == trap_block) {
        // empty language: a single dead initial state
        out.initial = rep_name(block[dfa.initial]);
        return out;
    }
    out.initial = rep_name(block[dfa.initial]);
    std::set<int> emitted;
    for (const auto& s : states) {
        int b = block[s];
        if (b == trap_block || !emitted.insert(b).second) continue;
        for (const auto& sym : symbols) {
            int target = block.at(delta.at({s, sym}));
            if (target == trap_block) continue;
            out.transitions.push_back({rep_name(b), sym, rep_name(target)});
        }
        if (dfa.is_final(s)) out.finals.push_back(rep_name(b));
    }
    return out;
}

/// Breadth-first relabeling to s1, s2, ... in discovery order, exploring
/// symbols in sorted token order; transitions re-emitted sorted by
/// (source index, symbol, target index). Idempotent.
inline FiniteAutomaton rename_canonical(const FiniteAutomaton& fa) {
    std::vector<Symbol> symbols = fa.symbols();
    std::sort(symbols.begin(), symbols.end());
    bool has_epsilon = std::any_of(fa.transitions.begin(), fa.transitions.end(),
                                   [](const FaTransition& t) { return t.symbol == kEpsilonToken; });
    if (has_epsilon) symbols.insert(symbols.begin(), kEpsilonToken);

    std::vector<StateName> discovered{fa.initial};
    std::map<StateName, std::size_t> index{{fa.initial, 0}};
    for (std::size_t i = 0; i < discovered.size(); ++i)
        for (const Symbol& sym : symbols)
            for (const auto& t : fa.transitions)
                if (t.from == discovered[i] && t.symbol == sym && !index.count(t.to)) {
                    index.emplace(t.to, discovered.size());
                    discovered.push_back(t.to);
                }

    auto renamed = [&](const StateName& s) { return "s" + std::to_string(index.at(s) + 1); };

    FiniteAutomaton out;
    out.name = fa.name;
    out.initial = renamed(fa.initial);
    for (std::size_t i = 0; i < discovered.size(); ++i)
        for (const Symbol& sym : symbols)
            for (std::size_t j = 0; j < discovered.size(); ++j)
                for (const auto& t : fa.transitions)
                    if (t.from == discovered[i] && t.symbol == sym && t.to == discovered[j])
                        out.transitions.push_back({renamed(t.from), sym, renamed(t.to)});
    for (const auto& s : discovered)
        if (fa.is_final(s)) out.finals.push_back(renamed(s));
    return out;
}

// ---------------------------------------------------------------------------
// CFG normalization

namespace detail {

inline std::set<std::string> nullable_nonterminals(const ContextFreeGrammar& g) {
    std::set<std::string> nullable;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (nullable.count(r.head)) continue;
            bool all = std::all_of(r.body.begin(), r.body.end(), [&](const std::string& s) {
                return is_nonterminal(s) && nullable.count(s);
            });
            if (all) {
                nullable.insert(r.head);
                changed = true;
            }
        }
    }
    return nullable;
}

inline bool appears_on_rhs(const ContextFreeGrammar& g, const std::string& nt) {
    for (const auto& r : g.rules)
        for (const auto& s : r.body)
            if (s == nt) return true;
    return false;
}

inline bool quasi_lambda_free(const ContextFreeGrammar& g) {
    for (const auto& r : g.rules)
        if (r.body.empty() && (r.head != g.start || appears_on_rhs(g, g.start)))
            return false;
    return true;
}

inline void add_rule(std::vector<CfgRule>& rules, CfgRule rule) {
    if (rule.body.size() == 1 && rule.body[0] == rule.head) return;  // useless A -> A
    if (std::find(rules.begin(), rules.end(), rule) == rules.end())
        rules.push_back(std::move(rule));
}

}  // namespace detail

/// Quasi-lambda-free form: rewrites rules with every combination of
/// nullable-occurrence erasures; when the language contains the empty word a
/// fresh start symbol carries the only empty rule and appears on no
/// right-hand side. Grammars already in that form are returned unchanged.
inline ContextFreeGrammar cfg_remove_lambda(const ContextFreeGrammar& g) {
    if (detail::quasi_lambda_free(g)) return g;

    std::set<std::string> nullable = detail::nullable_nonterminals(g);

    ContextFreeGrammar out;
    out.name = g.name;
    out.start = g.start;
    for (const auto& r : g.rules) {
        // every subset of nullable occurrences erased
        std::vector<std::size_t> nullable_positions;
        for (std::size_t i = 0; i < r.body.size(); ++i)
            if (is_nonterminal(r.body[i]) && nullable.count(r.body[i]))
                nullable_positions.push_back(i);
        std::size_t combos = std::size_t{1} << nullable_positions.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            CfgRule rule{r.head, {}};
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                auto it = std::find(nullable_positions.begin(), nullable_positions.end(), i);
                if (it != nullable_positions.end() &&
                    (mask >> (it - nullable_positions.begin())) & 1)
                    continue;
                rule.body.push_back(r.body[i]);
            }
            if (rule.body.empty()) continue;
            detail::add_rule(out.rules, std::move(rule));
        }
    }

    if (nullable.count(g.start)) {
        if (detail::appears_on_rhs(out, g.start)) {
            std::string fresh = g.start + "0";
            auto taken = [&](const std::string& n) {
                for (const auto& nt : g.nonterminals())
                    if (nt == n) return true;
                return false;
            };
            while (taken(fresh)) fresh += "0";
            std::vector<CfgRule> rules{{fresh, {g.start}}, {fresh, {}}};
            rules.insert(rules.end(), out.rules.begin(), out.rules.end());
            out.rules = std::move(rules);
            out.start = fresh;
        } else {
            out.rules.insert(out.rules.begin(), CfgRule{g.start, {}});
        }
    }
    return out;
}

/// Chain-free form: each nonterminal inherits the non-unit rules of every
/// nonterminal reachable through unit rules alone; unit rules are deleted.
/// Unit cycles are handled by the closure.
inline ContextFreeGrammar cfg_remove_chains(const ContextFreeGrammar& g) {
    ContextFreeGrammar out;
    out.name = g.name;
    out.start = g.start;
    for (const auto& nt : g.nonterminals()) {
        // chain set of nt under unit rules
        std::vector<std::string> chain{nt};
        std::set<std::string> seen{nt};
        for (std::size_t i = 0; i < chain.size(); ++i)
            for (const auto& r : g.rules)
                if (r.head == chain[i] && r.body.size() == 1 && is_nonterminal(r.body[0]) &&
                    seen.insert(r.body[0]).second)
                    chain.push_back(r.body[0]);
        for (const auto& member : chain)
            for (const auto& r : g.rules) {
                if (r.head != member) continue;
                if (r.body.size() == 1 && is_nonterminal(r.body[0])) continue;
                detail::add_rule(out.rules, CfgRule{nt, r.body});
            }
    }
    return out;
}

/// Quasi-lambda-free and chain-free form; drives terminating CFG recognition
/// and generation.
inline ContextFreeGrammar cfg_normalize(const ContextFreeGrammar& g) {
    return cfg_remove_chains(cfg_remove_lambda(g));
}

}  // namespace lflat

#endif  // LFLAT_TRANSFORM_HPP
