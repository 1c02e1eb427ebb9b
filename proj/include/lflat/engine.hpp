// Generic breadth-first configuration search with loop detection and a
// configuration budget, shared by FA, PDA and TM recognition, tracing and
// generation.

#ifndef LFLAT_ENGINE_HPP
#define LFLAT_ENGINE_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "lflat/mechanisms.hpp"

namespace lflat {

// ---------------------------------------------------------------------------
// Configurations

struct FaConfig {
    StateName state;
    std::size_t pos = 0;

    friend auto operator<=>(const FaConfig&, const FaConfig&) = default;
};

struct PdaConfig {
    StateName state;
    std::size_t pos = 0;
    std::vector<Symbol> stack;  // top first

    friend auto operator<=>(const PdaConfig&, const PdaConfig&) = default;
};

/// TM configuration; the tape map stores no explicit blanks.
struct TmConfig {
    StateName state;
    std::int64_t head = 0;
    std::map<std::int64_t, Symbol> tape;

    Symbol read(std::int64_t cell) const {
        auto it = tape.find(cell);
        return it == tape.end() ? Symbol(kBlankToken) : it->second;
    }

    friend auto operator<=>(const TmConfig&, const TmConfig&) = default;
};

// ---------------------------------------------------------------------------
// Initial configurations and transition relations

inline FaConfig initial_config(const FiniteAutomaton& fa, const Word&) {
    return FaConfig{fa.initial, 0};
}

inline PdaConfig initial_config(const PushdownAutomaton& pda, const Word&) {
    return PdaConfig{pda.initial, 0, {pda.initial_stack_symbol}};
}

/// Tape layout: cell 0 blank, word at cells 1..n, head at cell 0.
inline TmConfig initial_config(const TuringMachine& tm, const Word& w) {
    TmConfig c{tm.initial, 0, {}};
    for (std::size_t i = 0; i < w.size(); ++i)
        c.tape[static_cast<std::int64_t>(i) + 1] = w[i];
    return c;
}

/// Successor order follows the transition definition order.
inline std::vector<FaConfig> successors(const FiniteAutomaton& fa, const FaConfig& c,
                                        const Word& w) {
    std::vector<FaConfig> out;
    for (const auto& t : fa.transitions) {
        if (t.from != c.state) continue;
        if (t.symbol == kEpsilonToken)
            out.push_back({t.to, c.pos});
        else if (c.pos < w.size() && w[c.pos] == t.symbol)
            out.push_back({t.to, c.pos + 1});
    }
    return out;
}

inline std::vector<PdaConfig> successors(const PushdownAutomaton& pda, const PdaConfig& c,
                                         const Word& w) {
    std::vector<PdaConfig> out;
    if (c.stack.empty()) return out;
    for (const auto& t : pda.transitions) {
        if (t.from != c.state || t.pop != c.stack.front()) continue;
        std::size_t pos = c.pos;
        if (t.input == kEpsilonToken) {
            // not advancing
        } else if (c.pos < w.size() && w[c.pos] == t.input) {
            pos = c.pos + 1;
        } else {
            continue;
        }
        PdaConfig n{t.to, pos, {}};
        n.stack = t.push;
        n.stack.insert(n.stack.end(), c.stack.begin() + 1, c.stack.end());
        out.push_back(std::move(n));
    }
    return out;
}

/// A left move at cell 0 kills that execution path.
inline std::vector<TmConfig> successors(const TuringMachine& tm, const TmConfig& c,
                                        const Word&) {
    std::vector<TmConfig> out;
    Symbol scanned = c.read(c.head);
    for (const auto& t : tm.transitions) {
        if (t.state != c.state || t.read != scanned) continue;
        if (t.move == TapeMove::left && c.head == 0) continue;
        TmConfig n{t.to, c.head, c.tape};
        if (t.write == kBlankToken)
            n.tape.erase(c.head);
        else
            n.tape[c.head] = t.write;
        n.head += t.move == TapeMove::left ? -1 : 1;
        out.push_back(std::move(n));
    }
    return out;
}

inline bool accepting(const FiniteAutomaton& fa, const FaConfig& c, const Word& w) {
    return c.pos == w.size() && fa.is_final(c.state);
}

/// Final state after consuming all input; stack contents are irrelevant.
inline bool accepting(const PushdownAutomaton& pda, const PdaConfig& c, const Word& w) {
    return c.pos == w.size() && pda.is_final(c.state);
}

/// Final state; the input lives on the tape, no consumption condition.
inline bool accepting(const TuringMachine& tm, const TmConfig& c, const Word&) {
    return tm.is_final(c.state);
}

// ---------------------------------------------------------------------------
// Breadth-first search

template <typename Config>
struct SearchResult {
    Outcome outcome = Outcome::unknown;
    std::vector<Config> witness_path;  // accepting path, else longest explored
    std::size_t expanded = 0;          // dequeued configurations
};

/// Level-order exploration with a global visited set. Accepts on the first
/// accepting configuration dequeued; rejects when the frontier empties;
/// returns Unknown when the budget is spent with the frontier non-empty.
template <typename M, typename Config>
SearchResult<Config> bfs_search(const M& machine, Config initial, const Word& w,
                                SearchBudget budget) {
    struct Node {
        Config config;
        std::ptrdiff_t parent;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::set<Config> visited;
    std::deque<std::size_t> frontier;

    auto path_to = [&nodes](std::ptrdiff_t index) {
        std::vector<Config> path;
        for (std::ptrdiff_t i = index; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
            path.push_back(nodes[static_cast<std::size_t>(i)].config);
        std::reverse(path.begin(), path.end());
        return path;
    };

    nodes.push_back({std::move(initial), -1, 0});
    visited.insert(nodes[0].config);
    frontier.push_back(0);

    SearchResult<Config> result;
    std::size_t deepest = 0;

    while (!frontier.empty()) {
        if (result.expanded == budget.max_configurations) {
            result.outcome = Outcome::unknown;
            result.witness_path = path_to(static_cast<std::ptrdiff_t>(deepest));
            return result;
        }
        std::size_t index = frontier.front();
        frontier.pop_front();
        ++result.expanded;
        const Node& node = nodes[index];
        if (node.depth > nodes[deepest].depth) deepest = index;
        if (accepting(machine, node.config, w)) {
            result.outcome = Outcome::accept;
            result.witness_path = path_to(static_cast<std::ptrdiff_t>(index));
            return result;
        }
        for (Config& next : successors(machine, node.config, w)) {
            if (!visited.insert(next).second) continue;
            nodes.push_back({std::move(next), static_cast<std::ptrdiff_t>(index),
                             nodes[index].depth + 1});
            frontier.push_back(nodes.size() - 1);
        }
    }
    result.outcome = Outcome::reject;
    result.witness_path = path_to(static_cast<std::ptrdiff_t>(deepest));
    return result;
}

inline SearchResult<FaConfig> bfs_accept(const FiniteAutomaton& fa, const Word& w,
                                         SearchBudget budget) {
    return bfs_search(fa, initial_config(fa, w), w, budget);
}

inline SearchResult<PdaConfig> bfs_accept(const PushdownAutomaton& pda, const Word& w,
                                          SearchBudget budget) {
    return bfs_search(pda, initial_config(pda, w), w, budget);
}

inline SearchResult<TmConfig> bfs_accept(const TuringMachine& tm, const Word& w,
                                         SearchBudget budget) {
    return bfs_search(tm, initial_config(tm, w), w, budget);
}

// ---------------------------------------------------------------------------
// Generation

struct GenerationResult {
    std::vector<Word> words;
    bool budget_exhausted = false;  // some candidate searches returned Unknown
};

inline std::vector<Symbol> symbol_universe(const FiniteAutomaton& fa) { return fa.symbols(); }
inline std::vector<Symbol> symbol_universe(const PushdownAutomaton& pda) {
    return pda.input_symbols();
}
inline std::vector<Symbol> symbol_universe(const TuringMachine& tm) {
    return tm.input_symbols();
}

/// Enumerates candidate words in shortlex order over the machine's symbol
/// universe and filters them through bfs_accept. Words whose search exhausts
/// the budget are skipped.
template <typename M>
GenerationResult bfs_generate(const M& machine, std::size_t max_len, SearchBudget budget) {
    GenerationResult result;
    std::vector<Symbol> universe = symbol_universe(machine);
    if (universe.empty()) {
        auto r = bfs_accept(machine, {}, budget);
        if (r.outcome == Outcome::accept) result.words.push_back({});
        if (r.outcome == Outcome::unknown) result.budget_exhausted = true;
        return result;
    }
    Order order{"", "", universe};
    WordEnumerator words(order);
    for (;;) {
        const Word& w = words.next();
        if (w.size() > max_len) break;
        auto r = bfs_accept(machine, w, budget);
        if (r.outcome == Outcome::accept) result.words.push_back(w);
        if (r.outcome == Outcome::unknown) result.budget_exhausted = true;
    }
    return result;
}

}  // namespace lflat

#endif  // LFLAT_ENGINE_HPP
