// Recognition, generation, tracing and the unit-test harness over the six
// mechanism kinds. FA, PDA and TM delegate to the breadth-first engine;
// regular expressions go through their automaton and context-free grammars
// through the normalized form, both of which always terminate.

#ifndef LFLAT_RECOGNIZE_HPP
#define LFLAT_RECOGNIZE_HPP

#include <deque>
#include <set>
#include <string>
#include <vector>

#include "lflat/engine.hpp"
#include "lflat/transform.hpp"

namespace lflat {

namespace detail {

// Budget large enough that an FA search can never run out: the visited set
// caps distinct configurations at #states * (len + 1).
inline SearchBudget fa_budget(const FiniteAutomaton& fa, const Word& w, SearchBudget budget) {
    std::size_t cap = fa.states().size() * (w.size() + 1) + 1;
    if (budget.max_configurations < cap) budget.max_configurations = cap;
    return budget;
}

// ---------------------------------------------------------------------------
// CFG recognition: breadth-first leftmost derivation over the normalized
// grammar, pruned by sentential-form length and terminal-prefix mismatch.

using SententialForm = std::vector<std::string>;

struct CfgSearchResult {
    Outcome outcome = Outcome::reject;
    std::vector<SententialForm> path;  // derivation when accepted, else longest
};

inline CfgSearchResult cfg_bfs(const ContextFreeGrammar& normalized, const Word& w) {
    struct Node {
        SententialForm form;
        std::ptrdiff_t parent;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::set<SententialForm> visited;
    std::deque<std::size_t> frontier;

    auto path_to = [&nodes](std::ptrdiff_t index) {
        std::vector<SententialForm> path;
        for (std::ptrdiff_t i = index; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
            path.push_back(nodes[static_cast<std::size_t>(i)].form);
        std::reverse(path.begin(), path.end());
        return path;
    };

    // viable: length fits and terminals up to the first nonterminal match w
    auto viable = [&w](const SententialForm& form) {
        if (form.size() > w.size()) return false;
        for (std::size_t i = 0; i < form.size(); ++i) {
            if (is_nonterminal(form[i])) return true;
            if (form[i] != w[i]) return false;
        }
        return true;
    };

    auto matches = [&w](const SententialForm& form) {
        if (form.size() != w.size()) return false;
        for (std::size_t i = 0; i < form.size(); ++i)
            if (is_nonterminal(form[i]) || form[i] != w[i]) return false;
        return true;
    };

    CfgSearchResult result;
    SententialForm start{normalized.start};
    if (w.empty()) {
        // only the start's empty rule can derive the empty word
        for (const auto& r : normalized.rules)
            if (r.head == normalized.start && r.body.empty()) {
                result.outcome = Outcome::accept;
                result.path = {start, {}};
                return result;
            }
        result.path = {start};
        return result;
    }

    nodes.push_back({start, -1, 0});
    visited.insert(start);
    frontier.push_back(0);
    std::size_t deepest = 0;

    while (!frontier.empty()) {
        std::size_t index = frontier.front();
        frontier.pop_front();
        const SententialForm form = nodes[index].form;
        if (nodes[index].depth > nodes[deepest].depth) deepest = index;
        if (matches(form)) {
            result.outcome = Outcome::accept;
            result.path = path_to(static_cast<std::ptrdiff_t>(index));
            return result;
        }
        auto leftmost = std::find_if(form.begin(), form.end(),
                                     [](const std::string& s) { return is_nonterminal(s); });
        if (leftmost == form.end()) continue;
        std::size_t at = static_cast<std::size_t>(leftmost - form.begin());
        for (const auto& r : normalized.rules) {
            if (r.head != form[at]) continue;
            SententialForm next(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(at));
            next.insert(next.end(), r.body.begin(), r.body.end());
            next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                        form.end());
            if (!viable(next) || !visited.insert(next).second) continue;
            nodes.push_back({std::move(next), static_cast<std::ptrdiff_t>(index),
                             nodes[index].depth + 1});
            frontier.push_back(nodes.size() - 1);
        }
    }
    result.outcome = Outcome::reject;
    result.path = path_to(static_cast<std::ptrdiff_t>(deepest));
    return result;
}

/// All terminal words of length <= max_len derivable in the normalized
/// grammar, discovered in breadth-first (length-monotone after sorting) order.
inline std::vector<Word> cfg_derive_words(const ContextFreeGrammar& normalized,
                                          std::size_t max_len) {
    std::set<SententialForm> visited;
    std::deque<SententialForm> frontier;
    std::vector<Word> words;
    std::set<Word> emitted;

    for (const auto& r : normalized.rules)
        if (r.head == normalized.start && r.body.empty() && emitted.insert(Word{}).second)
            words.push_back({});

    SententialForm start{normalized.start};
    visited.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        SententialForm form = frontier.front();
        frontier.pop_front();
        auto leftmost = std::find_if(form.begin(), form.end(),
                                     [](const std::string& s) { return is_nonterminal(s); });
        if (leftmost == form.end()) {
            if (emitted.insert(form).second) words.push_back(form);
            continue;
        }
        std::size_t at = static_cast<std::size_t>(leftmost - form.begin());
        for (const auto& r : normalized.rules) {
            if (r.head != form[at]) continue;
            SententialForm next(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(at));
            next.insert(next.end(), r.body.begin(), r.body.end());
            next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                        form.end());
            if (next.size() > max_len || next.empty()) continue;
            if (!visited.insert(next).second) continue;
            frontier.push_back(std::move(next));
        }
    }
    std::stable_sort(words.begin(), words.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return words;
}

/// All words of length <= max_len accepted by a DFA, by breadth-first path
/// enumeration (length-monotone).
inline std::vector<Word> dfa_enumerate_words(const FiniteAutomaton& dfa, std::size_t max_len) {
    std::vector<Symbol> symbols = dfa.symbols();
    std::vector<Word> out;
    std::deque<std::pair<StateName, Word>> frontier{{dfa.initial, {}}};
    while (!frontier.empty()) {
        auto [state, word] = frontier.front();
        frontier.pop_front();
        if (dfa.is_final(state)) out.push_back(word);
        if (word.size() == max_len) continue;
        for (const Symbol& sym : symbols)
            for (const auto& t : dfa.transitions)
                if (t.from == state && t.symbol == sym) {
                    Word next = word;
                    next.push_back(sym);
                    frontier.emplace_back(t.to, std::move(next));
                }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// accepts

inline Outcome accepts(const PredicateMechanism& p, const Word& w, SearchBudget = {},
                       const AcceptorRegistry& acceptors = builtin_acceptors()) {
    AcceptorFn fn = acceptors.resolve(p.acceptor, p.acceptor_args);
    if (!word_over_symbols(w, p.alphabet)) return Outcome::reject;
    return fn(w) ? Outcome::accept : Outcome::reject;
}

inline Outcome accepts(const FiniteAutomaton& fa, const Word& w, SearchBudget budget = {},
                       const AcceptorRegistry& = builtin_acceptors()) {
    return bfs_accept(fa, w, detail::fa_budget(fa, w, budget)).outcome;
}

inline Outcome accepts(const Regex& r, const Word& w, SearchBudget budget = {},
                       const AcceptorRegistry& = builtin_acceptors()) {
    FiniteAutomaton nfa = regex_to_fa(r);
    return bfs_accept(nfa, w, detail::fa_budget(nfa, w, budget)).outcome;
}

inline Outcome accepts(const ContextFreeGrammar& g, const Word& w, SearchBudget = {},
                       const AcceptorRegistry& = builtin_acceptors()) {
    return detail::cfg_bfs(cfg_normalize(g), w).outcome;
}

inline Outcome accepts(const PushdownAutomaton& pda, const Word& w, SearchBudget budget = {},
                       const AcceptorRegistry& = builtin_acceptors()) {
    return bfs_accept(pda, w, budget).outcome;
}

inline Outcome accepts(const TuringMachine& tm, const Word& w, SearchBudget budget = {},
                       const AcceptorRegistry& = builtin_acceptors()) {
    return bfs_accept(tm, w, budget).outcome;
}

inline Outcome accepts(const Mechanism& m, const Word& w, SearchBudget budget = {},
                       const AcceptorRegistry& acceptors = builtin_acceptors()) {
    return std::visit([&](const auto& x) { return accepts(x, w, budget, acceptors); }, m);
}

// ---------------------------------------------------------------------------
// generate

inline GenerationResult generate(const PredicateMechanism& p, std::size_t max_len,
                                 SearchBudget = {},
                                 const AcceptorRegistry& acceptors = builtin_acceptors()) {
    AcceptorFn fn = acceptors.resolve(p.acceptor, p.acceptor_args);
    GenerationResult result;
    if (p.alphabet.empty()) {
        if (fn(Word{})) result.words.push_back({});
        return result;
    }
    WordEnumerator words(Order{"", "", p.alphabet});
    for (;;) {
        const Word& w = words.next();
        if (w.size() > max_len) break;
        if (fn(w)) result.words.push_back(w);
    }
    return result;
}

inline GenerationResult generate(const Regex& r, std::size_t max_len, SearchBudget = {},
                                 const AcceptorRegistry& = builtin_acceptors()) {
    GenerationResult result;
    result.words = detail::dfa_enumerate_words(determinize(regex_to_fa(r)), max_len);
    return result;
}

inline GenerationResult generate(const ContextFreeGrammar& g, std::size_t max_len,
                                 SearchBudget = {},
                                 const AcceptorRegistry& = builtin_acceptors()) {
    GenerationResult result;
    result.words = detail::cfg_derive_words(cfg_normalize(g), max_len);
    return result;
}

inline GenerationResult generate(const FiniteAutomaton& fa, std::size_t max_len,
                                 SearchBudget budget = {},
                                 const AcceptorRegistry& = builtin_acceptors()) {
    return bfs_generate(fa, max_len, budget);
}

inline GenerationResult generate(const PushdownAutomaton& pda, std::size_t max_len,
                                 SearchBudget budget = {},
                                 const AcceptorRegistry& = builtin_acceptors()) {
    return bfs_generate(pda, max_len, budget);
}

inline GenerationResult generate(const TuringMachine& tm, std::size_t max_len,
                                 SearchBudget budget = {},
                                 const AcceptorRegistry& = builtin_acceptors()) {
    return bfs_generate(tm, max_len, budget);
}

inline GenerationResult generate(const Mechanism& m, std::size_t max_len,
                                 SearchBudget budget = {},
                                 const AcceptorRegistry& acceptors = builtin_acceptors()) {
    return std::visit([&](const auto& x) { return generate(x, max_len, budget, acceptors); },
                      m);
}

// ---------------------------------------------------------------------------
// trace

namespace detail {

inline std::string fa_step_line(const FaConfig& c, const Word& w) {
    Word remaining(w.begin() + static_cast<std::ptrdiff_t>(c.pos), w.end());
    return c.state + "\t" + word_text_spaced(remaining);
}

inline std::string pda_step_line(const PdaConfig& c, const Word& w) {
    Word remaining(w.begin() + static_cast<std::ptrdiff_t>(c.pos), w.end());
    return c.state + "\t" + word_text_spaced(remaining) + "\t" + word_text_spaced(c.stack);
}

/// Tape segment from cell 0 through one blank past the rightmost written
/// cell (or the head, whichever is further); `>` marks the scanned cell and
/// the state follows after a tab.
inline std::string tm_step_line(const TmConfig& c) {
    std::int64_t last = c.head;
    if (!c.tape.empty()) last = std::max(last, c.tape.rbegin()->first + 1);
    std::string line;
    for (std::int64_t i = 0; i <= last; ++i) {
        line += i == c.head ? '>' : ' ';
        line += c.read(i);
    }
    return line + "\t" + c.state;
}

}  // namespace detail

inline Trace trace(const FiniteAutomaton& fa, const Word& w, SearchBudget budget = {},
                   const AcceptorRegistry& = builtin_acceptors()) {
    auto r = bfs_accept(fa, w, detail::fa_budget(fa, w, budget));
    Trace t{fa.name, w, r.outcome, {}};
    for (const auto& c : r.witness_path) t.steps.push_back(detail::fa_step_line(c, w));
    return t;
}

inline Trace trace(const Regex& r, const Word& w, SearchBudget budget = {},
                   const AcceptorRegistry& = builtin_acceptors()) {
    FiniteAutomaton nfa = regex_to_fa(r);
    auto result = bfs_accept(nfa, w, detail::fa_budget(nfa, w, budget));
    Trace t{r.name, w, result.outcome, {}};
    for (const auto& c : result.witness_path) t.steps.push_back(detail::fa_step_line(c, w));
    return t;
}

inline Trace trace(const ContextFreeGrammar& g, const Word& w, SearchBudget = {},
                   const AcceptorRegistry& = builtin_acceptors()) {
    auto r = detail::cfg_bfs(cfg_normalize(g), w);
    Trace t{g.name, w, r.outcome, {}};
    for (const auto& form : r.path) t.steps.push_back(word_text_spaced(form));
    return t;
}

inline Trace trace(const PushdownAutomaton& pda, const Word& w, SearchBudget budget = {},
                   const AcceptorRegistry& = builtin_acceptors()) {
    auto r = bfs_accept(pda, w, budget);
    Trace t{pda.name, w, r.outcome, {}};
    for (const auto& c : r.witness_path) t.steps.push_back(detail::pda_step_line(c, w));
    return t;
}

inline Trace trace(const TuringMachine& tm, const Word& w, SearchBudget budget = {},
                   const AcceptorRegistry& = builtin_acceptors()) {
    auto r = bfs_accept(tm, w, budget);
    Trace t{tm.name, w, r.outcome, {}};
    for (const auto& c : r.witness_path) t.steps.push_back(detail::tm_step_line(c));
    return t;
}

inline Trace trace(const PredicateMechanism& p, const Word& w, SearchBudget budget = {},
                   const AcceptorRegistry& acceptors = builtin_acceptors()) {
    Trace t{p.name, w, accepts(p, w, budget, acceptors), {}};
    t.steps.push_back(word_text_spaced(w));
    return t;
}

inline Trace trace(const Mechanism& m, const Word& w, SearchBudget budget = {},
                   const AcceptorRegistry& acceptors = builtin_acceptors()) {
    return std::visit([&](const auto& x) { return trace(x, w, budget, acceptors); }, m);
}

// ---------------------------------------------------------------------------
// Unit-test harness

inline TestReport test_mechanism(const Language& language, const Mechanism& m,
                                 SearchBudget budget = {},
                                 const AcceptorRegistry& acceptors = builtin_acceptors()) {
    TestReport report;
    for (const Word& w : language.positives) {
        Outcome o = accepts(m, w, budget, acceptors);
        (o == Outcome::accept ? report.passed_positives : report.failed_positives)
            .push_back({w, o});
    }
    for (const Word& w : language.negatives) {
        Outcome o = accepts(m, w, budget, acceptors);
        (o == Outcome::reject ? report.passed_negatives : report.failed_negatives)
            .push_back({w, o});
    }
    return report;
}

}  // namespace lflat

#endif  // LFLAT_RECOGNIZE_HPP
