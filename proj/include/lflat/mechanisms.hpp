// The six mechanism kinds, the Language entity with unit tests, and the
// shared recognition/diagnostic value types.

#ifndef LFLAT_MECHANISMS_HPP
#define LFLAT_MECHANISMS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lflat/core.hpp"

namespace lflat {

using StateName = std::string;

// ---------------------------------------------------------------------------
// Language

/// Partial language definition: alphabet plus positive and negative unit tests.
struct Language {
    std::string name;
    std::vector<Symbol> alphabet;
    std::vector<Word> positives;
    std::vector<Word> negatives;
};

// ---------------------------------------------------------------------------
// Regular expressions

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

/// Regex AST. `^+` is expanded to e * e^* at construction, so downstream
/// algorithms only see symbols, the empty word, union, concatenation and star.
struct RegexNode {
    enum class Kind { symbol, empty_word, union_, concat, star };

    Kind kind;
    Symbol sym;
    RegexPtr left, right;

    static RegexPtr symbol(Symbol s) {
        auto n = std::make_shared<RegexNode>();
        n->kind = Kind::symbol;
        n->sym = std::move(s);
        return n;
    }
    static RegexPtr empty_word() {
        auto n = std::make_shared<RegexNode>();
        n->kind = Kind::empty_word;
        return n;
    }
    static RegexPtr alt(RegexPtr l, RegexPtr r) {
        auto n = std::make_shared<RegexNode>();
        n->kind = Kind::union_;
        n->left = std::move(l);
        n->right = std::move(r);
        return n;
    }
    static RegexPtr seq(RegexPtr l, RegexPtr r) {
        auto n = std::make_shared<RegexNode>();
        n->kind = Kind::concat;
        n->left = std::move(l);
        n->right = std::move(r);
        return n;
    }
    static RegexPtr star(RegexPtr e) {
        auto n = std::make_shared<RegexNode>();
        n->kind = Kind::star;
        n->left = std::move(e);
        return n;
    }
    static RegexPtr plus(RegexPtr e) { return seq(e, star(e)); }
};

inline bool regex_equal(const RegexPtr& a, const RegexPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->sym != b->sym) return false;
    return regex_equal(a->left, b->left) && regex_equal(a->right, b->right);
}

struct Regex {
    std::string name;
    RegexPtr expression;
};

/// Symbols of a regex in first-occurrence (left-to-right) order.
inline void collect_regex_symbols(const RegexPtr& e, std::vector<Symbol>& out) {
    if (!e) return;
    if (e->kind == RegexNode::Kind::symbol) {
        if (std::find(out.begin(), out.end(), e->sym) == out.end()) out.push_back(e->sym);
        return;
    }
    collect_regex_symbols(e->left, out);
    collect_regex_symbols(e->right, out);
}

// ---------------------------------------------------------------------------
// Finite automata

/// FA transition; symbol `lambda` marks an epsilon move.
struct FaTransition {
    StateName from;
    Symbol symbol;
    StateName to;

    friend bool operator==(const FaTransition&, const FaTransition&) = default;
};

struct FiniteAutomaton {
    std::string name;
    StateName initial;
    std::vector<FaTransition> transitions;
    std::vector<StateName> finals;

    /// States in first-occurrence order: initial, then transition mentions,
    /// then finals.
    std::vector<StateName> states() const {
        std::vector<StateName> out{initial};
        auto add = [&](const StateName& s) {
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        };
        for (const auto& t : transitions) {
            add(t.from);
            add(t.to);
        }
        for (const auto& f : finals) add(f);
        return out;
    }

    /// Non-epsilon transition symbols in first-occurrence order.
    std::vector<Symbol> symbols() const {
        std::vector<Symbol> out;
        for (const auto& t : transitions)
            if (t.symbol != kEpsilonToken &&
                std::find(out.begin(), out.end(), t.symbol) == out.end())
                out.push_back(t.symbol);
        return out;
    }

    bool is_final(const StateName& s) const {
        return std::find(finals.begin(), finals.end(), s) != finals.end();
    }
};

/// True iff fa has no epsilon transitions and at most one transition per
/// (state, symbol).
inline bool is_deterministic(const FiniteAutomaton& fa) {
    std::set<std::pair<StateName, Symbol>> seen;
    for (const auto& t : fa.transitions) {
        if (t.symbol == kEpsilonToken) return false;
        if (!seen.insert({t.from, t.symbol}).second) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Context-free grammars

/// Nonterminals are uppercase-initial tokens; terminals are all others.
inline bool is_nonterminal(const std::string& token) {
    return !token.empty() && token[0] >= 'A' && token[0] <= 'Z';
}

struct CfgRule {
    std::string head;
    std::vector<std::string> body;  // terminals and nonterminals; empty = lambda

    friend bool operator==(const CfgRule&, const CfgRule&) = default;
    friend auto operator<=>(const CfgRule&, const CfgRule&) = default;
};

struct ContextFreeGrammar {
    std::string name;
    std::string start;
    std::vector<CfgRule> rules;

    std::vector<std::string> nonterminals() const {
        std::vector<std::string> out;
        auto add = [&](const std::string& s) {
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        };
        add(start);
        for (const auto& r : rules) {
            add(r.head);
            for (const auto& s : r.body)
                if (is_nonterminal(s)) add(s);
        }
        return out;
    }

    /// Terminal symbols in first-occurrence order across rule bodies.
    std::vector<Symbol> terminals() const {
        std::vector<Symbol> out;
        for (const auto& r : rules)
            for (const auto& s : r.body)
                if (!is_nonterminal(s) &&
                    std::find(out.begin(), out.end(), s) == out.end())
                    out.push_back(s);
        return out;
    }
};

// ---------------------------------------------------------------------------
// Pushdown automata

/// PDA transition: pop exactly one stack symbol, read one input symbol or
/// `lambda`, push a (possibly empty) list whose first element becomes the
/// new stack top.
struct PdaTransition {
    StateName from;
    Symbol pop;
    Symbol input;  // kEpsilonToken for epsilon moves
    StateName to;
    std::vector<Symbol> push;

    friend bool operator==(const PdaTransition&, const PdaTransition&) = default;
};

struct PushdownAutomaton {
    std::string name;
    StateName initial;
    Symbol initial_stack_symbol;
    std::vector<PdaTransition> transitions;
    std::vector<StateName> finals;

    std::vector<StateName> states() const {
        std::vector<StateName> out{initial};
        auto add = [&](const StateName& s) {
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        };
        for (const auto& t : transitions) {
            add(t.from);
            add(t.to);
        }
        for (const auto& f : finals) add(f);
        return out;
    }

    /// Non-epsilon input symbols in first-occurrence order.
    std::vector<Symbol> input_symbols() const {
        std::vector<Symbol> out;
        for (const auto& t : transitions)
            if (t.input != kEpsilonToken &&
                std::find(out.begin(), out.end(), t.input) == out.end())
                out.push_back(t.input);
        return out;
    }

    bool is_final(const StateName& s) const {
        return std::find(finals.begin(), finals.end(), s) != finals.end();
    }
};

// ---------------------------------------------------------------------------
// Turing machines

enum class TapeMove { left, right };

struct TmTransition {
    StateName state;
    Symbol read;
    Symbol write;
    TapeMove move;
    StateName to;

    friend bool operator==(const TmTransition&, const TmTransition&) = default;
};

/// Nondeterministic single-tape TM; tape is semi-infinite to the left and
/// the blank symbol is the reserved `B`.
struct TuringMachine {
    std::string name;
    StateName initial;
    std::vector<TmTransition> transitions;
    std::vector<StateName> finals;

    std::vector<StateName> states() const {
        std::vector<StateName> out{initial};
        auto add = [&](const StateName& s) {
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        };
        for (const auto& t : transitions) {
            add(t.state);
            add(t.to);
        }
        for (const auto& f : finals) add(f);
        return out;
    }

    /// Non-blank symbols occurring in transitions, first-occurrence order.
    std::vector<Symbol> input_symbols() const {
        std::vector<Symbol> out;
        auto add = [&](const Symbol& s) {
            if (s != kBlankToken && std::find(out.begin(), out.end(), s) == out.end())
                out.push_back(s);
        };
        for (const auto& t : transitions) {
            add(t.read);
            add(t.write);
        }
        return out;
    }

    bool is_final(const StateName& s) const {
        return std::find(finals.begin(), finals.end(), s) != finals.end();
    }
};

// ---------------------------------------------------------------------------
// Predicate mechanisms

/// Acceptance defined directly by a named entry in the host acceptor registry.
struct PredicateMechanism {
    std::string name;
    std::vector<Symbol> alphabet;
    std::string acceptor;
    std::vector<std::string> acceptor_args;
};

using AcceptorFn = std::function<bool(const Word&)>;
using AcceptorFactory = std::function<AcceptorFn(const std::vector<std::string>&)>;

/// Append-only registry of named acceptors. Registration is single-threaded;
/// reads afterwards are safe concurrently.
class AcceptorRegistry {
public:
    void register_acceptor(const std::string& name, AcceptorFactory factory) {
        if (factories_.count(name))
            throw Error("DuplicateAcceptorName", "acceptor '" + name + "' already registered");
        factories_.emplace(name, std::move(factory));
    }

    void register_acceptor(const std::string& name, AcceptorFn fn) {
        register_acceptor(name, [fn](const std::vector<std::string>&) { return fn; });
    }

    AcceptorFn resolve(const std::string& name, const std::vector<std::string>& args) const {
        auto it = factories_.find(name);
        if (it == factories_.end())
            throw Error("UnresolvedAcceptor", "unknown acceptor '" + name + "'");
        return it->second(args);
    }

    bool has(const std::string& name) const { return factories_.count(name) != 0; }

    /// Registry pre-seeded with the built-ins:
    ///   count_mod(sym, k, r) -- occurrences of sym in the word are r mod k
    ///   max_length(n)        -- word length at most n
    static AcceptorRegistry with_builtins() {
        AcceptorRegistry r;
        r.register_acceptor("count_mod", [](const std::vector<std::string>& args) -> AcceptorFn {
            if (args.size() != 3)
                throw Error("UnresolvedAcceptor", "count_mod expects 3 arguments");
            Symbol sym = args[0];
            long k = std::stol(args[1]);
            long rem = std::stol(args[2]);
            return [sym, k, rem](const Word& w) {
                return static_cast<long>(occurs(sym, w)) % k == rem;
            };
        });
        r.register_acceptor("max_length", [](const std::vector<std::string>& args) -> AcceptorFn {
            if (args.size() != 1)
                throw Error("UnresolvedAcceptor", "max_length expects 1 argument");
            std::size_t n = std::stoul(args[0]);
            return [n](const Word& w) { return w.size() <= n; };
        });
        return r;
    }

private:
    std::map<std::string, AcceptorFactory> factories_;
};

/// Shared default registry holding only the built-ins.
inline AcceptorRegistry& builtin_acceptors() {
    static AcceptorRegistry registry = AcceptorRegistry::with_builtins();
    return registry;
}

// ---------------------------------------------------------------------------
// Recognition results, traces, diagnostics, test reports

/// Three-valued result of a semi-algorithm. Unknown only arises for PDA and
/// TM searches that exhaust their budget.
enum class Outcome { accept, reject, unknown };

/// Count of dequeued configurations a search may spend.
struct SearchBudget {
    std::size_t max_configurations = 100000;
};

struct Trace {
    std::string mechanism_name;
    Word word;
    Outcome outcome = Outcome::unknown;
    std::vector<std::string> steps;  // rendered configuration lines
};

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity;
    std::string entity;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct TestResult {
    Word word;
    Outcome outcome;
};

/// Partition of a language's unit tests by pass/fail. A positive passes iff
/// accepted, a negative passes iff rejected; Unknown always fails.
struct TestReport {
    std::vector<TestResult> passed_positives;
    std::vector<TestResult> failed_positives;
    std::vector<TestResult> passed_negatives;
    std::vector<TestResult> failed_negatives;

    bool all_passed() const { return failed_positives.empty() && failed_negatives.empty(); }
};

// ---------------------------------------------------------------------------
// Entity sums

using Mechanism = std::variant<PredicateMechanism, Regex, FiniteAutomaton,
                               ContextFreeGrammar, PushdownAutomaton, TuringMachine>;

using Entity = std::variant<Alphabet, Order, Language, PredicateMechanism, Regex,
                            FiniteAutomaton, ContextFreeGrammar, PushdownAutomaton,
                            TuringMachine>;

inline std::string mechanism_name(const Mechanism& m) {
    return std::visit([](const auto& x) { return x.name; }, m);
}

inline std::string entity_name(const Entity& e) {
    return std::visit([](const auto& x) { return x.name; }, e);
}

inline const char* entity_kind(const Entity& e) {
    struct Visitor {
        const char* operator()(const Alphabet&) { return "alphabet"; }
        const char* operator()(const Order&) { return "order"; }
        const char* operator()(const Language&) { return "language"; }
        const char* operator()(const PredicateMechanism&) { return "predicate"; }
        const char* operator()(const Regex&) { return "re"; }
        const char* operator()(const FiniteAutomaton&) { return "fa"; }
        const char* operator()(const ContextFreeGrammar&) { return "cfg"; }
        const char* operator()(const PushdownAutomaton&) { return "pda"; }
        const char* operator()(const TuringMachine&) { return "tm"; }
    };
    return std::visit(Visitor{}, e);
}

/// The mechanism entities as the Mechanism sum; empty for non-mechanisms.
inline std::optional<Mechanism> as_mechanism(const Entity& e) {
    if (auto* p = std::get_if<PredicateMechanism>(&e)) return Mechanism{*p};
    if (auto* p = std::get_if<Regex>(&e)) return Mechanism{*p};
    if (auto* p = std::get_if<FiniteAutomaton>(&e)) return Mechanism{*p};
    if (auto* p = std::get_if<ContextFreeGrammar>(&e)) return Mechanism{*p};
    if (auto* p = std::get_if<PushdownAutomaton>(&e)) return Mechanism{*p};
    if (auto* p = std::get_if<TuringMachine>(&e)) return Mechanism{*p};
    return std::nullopt;
}

}  // namespace lflat

#endif  // LFLAT_MECHANISMS_HPP
