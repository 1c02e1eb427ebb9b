// Symbols, words, alphabets, orders, word expressions and word patterns,
// plus the ordering and enumeration utilities built on top of them.

#ifndef LFLAT_CORE_HPP
#define LFLAT_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lflat {

/// A symbol is an atomic token: letters, digits, underscore.
/// Multi-character symbols are allowed (q0, S1, ...).
using Symbol = std::string;

/// A word is a finite, possibly empty, sequence of symbols.
/// Words never contain the `lambda` marker.
using Word = std::vector<Symbol>;

/// Reserved token for the empty word / epsilon in DSL and transition syntax.
inline constexpr const char* kEpsilonToken = "lambda";

/// Reserved Turing machine blank tape symbol.
inline constexpr const char* kBlankToken = "B";

/// Error with a stable machine-readable code (e.g. "DuplicateSymbol").
struct Error : std::runtime_error {
    std::string code;
    Error(std::string error_code, const std::string& message)
        : std::runtime_error(message), code(std::move(error_code)) {}
};

// ---------------------------------------------------------------------------
// Alphabets

struct AlphabetExpression;
using AlphaExprPtr = std::shared_ptr<const AlphabetExpression>;

/// Expression producing an alphabet's symbol list: a literal list,
/// a reference to a named alphabet, or a union (`+`) of two expressions.
struct AlphabetExpression {
    enum class Kind { literal, reference, union_ };

    Kind kind;
    std::vector<Symbol> symbols;  // literal
    std::string ref;              // reference
    AlphaExprPtr left, right;     // union_

    static AlphaExprPtr literal(std::vector<Symbol> syms) {
        auto e = std::make_shared<AlphabetExpression>();
        e->kind = Kind::literal;
        e->symbols = std::move(syms);
        return e;
    }
    static AlphaExprPtr reference(std::string name) {
        auto e = std::make_shared<AlphabetExpression>();
        e->kind = Kind::reference;
        e->ref = std::move(name);
        return e;
    }
    static AlphaExprPtr join(AlphaExprPtr l, AlphaExprPtr r) {
        auto e = std::make_shared<AlphabetExpression>();
        e->kind = Kind::union_;
        e->left = std::move(l);
        e->right = std::move(r);
        return e;
    }
};

/// Named alphabet: its defining expression and the evaluated symbol list.
/// The evaluated list is ordered, duplicate-free and non-empty; its order
/// defines the alphabet's default symbol order.
struct Alphabet {
    std::string name;
    AlphaExprPtr expression;
    std::vector<Symbol> symbols;
};

namespace detail {

inline void evaluate_alphabet_into(const AlphabetExpression& expr,
                                   const std::map<std::string, AlphaExprPtr>& definitions,
                                   std::set<std::string>& visiting,
                                   std::set<Symbol>& seen,
                                   std::vector<Symbol>& out) {
    switch (expr.kind) {
        case AlphabetExpression::Kind::literal:
            for (const Symbol& s : expr.symbols) {
                if (!seen.insert(s).second)
                    throw Error("DuplicateSymbol",
                                "symbol '" + s + "' contributed more than once");
                out.push_back(s);
            }
            break;
        case AlphabetExpression::Kind::reference: {
            if (visiting.count(expr.ref))
                throw Error("CyclicAlphabetReference",
                            "alphabet '" + expr.ref + "' refers to itself");
            auto it = definitions.find(expr.ref);
            if (it == definitions.end())
                throw Error("UnknownAlphabetReference",
                            "unknown alphabet '" + expr.ref + "'");
            visiting.insert(expr.ref);
            evaluate_alphabet_into(*it->second, definitions, visiting, seen, out);
            visiting.erase(expr.ref);
            break;
        }
        case AlphabetExpression::Kind::union_:
            evaluate_alphabet_into(*expr.left, definitions, visiting, seen, out);
            evaluate_alphabet_into(*expr.right, definitions, visiting, seen, out);
            break;
    }
}

}  // namespace detail

/// Evaluates an alphabet expression against named expression definitions.
/// Union preserves left-to-right first-occurrence order; a symbol contributed
/// twice is an error, not a silent dedup.
inline std::vector<Symbol> evaluate_alphabet(
    const AlphabetExpression& expr,
    const std::map<std::string, AlphaExprPtr>& definitions) {
    std::set<std::string> visiting;
    std::set<Symbol> seen;
    std::vector<Symbol> out;
    detail::evaluate_alphabet_into(expr, definitions, visiting, seen, out);
    return out;
}

/// Evaluates against already-evaluated alphabets.
inline std::vector<Symbol> evaluate_alphabet(
    const AlphabetExpression& expr,
    const std::map<std::string, Alphabet>& registry) {
    std::map<std::string, AlphaExprPtr> definitions;
    for (const auto& [name, alphabet] : registry)
        definitions.emplace(name, AlphabetExpression::literal(alphabet.symbols));
    return evaluate_alphabet(expr, definitions);
}

// ---------------------------------------------------------------------------
// Orders

/// A total order on an alphabet's symbols, given as a permutation of them.
struct Order {
    std::string name;
    std::string alphabet;  // name of the alphabet the order is over
    std::vector<Symbol> sequence;

    bool contains(const Symbol& s) const {
        return std::find(sequence.begin(), sequence.end(), s) != sequence.end();
    }

    std::size_t index_of(const Symbol& s) const {
        auto it = std::find(sequence.begin(), sequence.end(), s);
        if (it == sequence.end())
            throw Error("ForeignSymbol", "symbol '" + s + "' not in order '" + name + "'");
        return static_cast<std::size_t>(it - sequence.begin());
    }
};

/// Default order of an alphabet: the ordering of its evaluated symbol list.
inline Order default_order(const Alphabet& a) {
    return Order{a.name + ".default", a.name, a.symbols};
}

// ---------------------------------------------------------------------------
// Word expressions

struct WordExpression;
using WordExprPtr = std::shared_ptr<const WordExpression>;

/// Word expression: literal word, concatenation (`*`), power (`^ n`, n >= 0)
/// or reverse (`^ (-1)`).
struct WordExpression {
    enum class Kind { literal, concat, power, reverse };

    Kind kind;
    Word word;                 // literal
    WordExprPtr left, right;   // concat; left also used by power/reverse
    int exponent = 0;          // power

    static WordExprPtr literal(Word w) {
        auto e = std::make_shared<WordExpression>();
        e->kind = Kind::literal;
        e->word = std::move(w);
        return e;
    }
    static WordExprPtr concat(WordExprPtr l, WordExprPtr r) {
        auto e = std::make_shared<WordExpression>();
        e->kind = Kind::concat;
        e->left = std::move(l);
        e->right = std::move(r);
        return e;
    }
    // n >= 0 is repetition; n == -1 is reverse; anything else is an error.
    static WordExprPtr power(WordExprPtr base, int n) {
        if (n < -1)
            throw Error("NegativePower", "exponent " + std::to_string(n) + " not allowed");
        auto e = std::make_shared<WordExpression>();
        e->kind = n == -1 ? Kind::reverse : Kind::power;
        e->left = std::move(base);
        e->exponent = n;
        return e;
    }
};

inline Word compute_word(const WordExpression& expr) {
    switch (expr.kind) {
        case WordExpression::Kind::literal:
            return expr.word;
        case WordExpression::Kind::concat: {
            Word w = compute_word(*expr.left);
            Word r = compute_word(*expr.right);
            w.insert(w.end(), r.begin(), r.end());
            return w;
        }
        case WordExpression::Kind::power: {
            if (expr.exponent < 0)
                throw Error("NegativePower",
                            "exponent " + std::to_string(expr.exponent) + " not allowed");
            Word base = compute_word(*expr.left);
            Word w;
            for (int i = 0; i < expr.exponent; ++i)
                w.insert(w.end(), base.begin(), base.end());
            return w;
        }
        case WordExpression::Kind::reverse: {
            Word w = compute_word(*expr.left);
            std::reverse(w.begin(), w.end());
            return w;
        }
    }
    return {};
}

inline Word compute_word(const WordExprPtr& expr) { return compute_word(*expr); }

// ---------------------------------------------------------------------------
// Word utilities

/// Number of positions of w holding s.
inline std::size_t occurs(const Symbol& s, const Word& w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

inline bool word_over_symbols(const Word& w, const std::vector<Symbol>& symbols) {
    return std::all_of(w.begin(), w.end(), [&](const Symbol& s) {
        return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
    });
}

inline bool word_over_alphabet(const Word& w, const Alphabet& a) {
    return word_over_symbols(w, a.symbols);
}

enum class CompareMode { lex, shortlex };

/// Total order on words: lex is dictionary order with prefix < extension;
/// shortlex compares by length first, ties broken lexicographically.
inline std::strong_ordering compare_words(const Word& w1, const Word& w2,
                                          const Order& o, CompareMode mode) {
    if (mode == CompareMode::shortlex && w1.size() != w2.size())
        return w1.size() <=> w2.size();
    std::size_t n = std::min(w1.size(), w2.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = o.index_of(w1[i]) <=> o.index_of(w2[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return w1.size() <=> w2.size();
}

/// Shortlex successor of w under o: odometer increment; a word of all
/// o-maximal symbols rolls over to the all-minimal word one symbol longer.
inline Word next_word(const Word& w, const Order& o) {
    const Symbol& least = o.sequence.front();
    Word result = w;
    for (std::size_t i = w.size(); i-- > 0;) {
        std::size_t idx = o.index_of(result[i]);
        if (idx + 1 < o.sequence.size()) {
            result[i] = o.sequence[idx + 1];
            return result;
        }
        result[i] = least;
    }
    result.insert(result.begin(), least);
    return result;
}

/// Unbounded shortlex stream of all words over an alphabet.
/// Callers bound it by count or length.
class WordEnumerator {
public:
    WordEnumerator(const Alphabet& a, const Order& o) : order_(o) {
        std::multiset<Symbol> want(a.symbols.begin(), a.symbols.end());
        std::multiset<Symbol> have(o.sequence.begin(), o.sequence.end());
        if (want != have)
            throw Error("OrderMismatch",
                        "order '" + o.name + "' is not over alphabet '" + a.name + "'");
    }
    explicit WordEnumerator(const Order& o) : order_(o) {}

    const Word& next() {
        if (!started_)
            started_ = true;  // the empty word is shortlex-least
        else
            current_ = next_word(current_, order_);
        return current_;
    }

private:
    Order order_;
    Word current_;
    bool started_ = false;
};

enum class FactorKind { prefix, suffix, subword };

/// Word factors. Prefixes and suffixes come by increasing length, each once,
/// including [] and w itself. Subwords are contiguous factors enumerated per
/// end position; positional duplicates (notably []) are preserved.
inline std::vector<Word> factors(const Word& w, FactorKind kind) {
    std::vector<Word> out;
    switch (kind) {
        case FactorKind::prefix:
            for (std::size_t len = 0; len <= w.size(); ++len)
                out.emplace_back(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
            break;
        case FactorKind::suffix:
            for (std::size_t len = 0; len <= w.size(); ++len)
                out.emplace_back(w.end() - static_cast<std::ptrdiff_t>(len), w.end());
            break;
        case FactorKind::subword:
            for (std::size_t end = 0; end <= w.size(); ++end)
                for (std::size_t start = 0; start <= end; ++start)
                    out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start),
                                     w.begin() + static_cast<std::ptrdiff_t>(end));
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Word patterns

/// Fixed slot sequence (concrete symbols or single-symbol wildcards) with an
/// optional any-tail, denoting a finite or infinite set of words.
struct WordPattern {
    std::vector<std::optional<Symbol>> slots;  // nullopt = any single symbol
    bool any_tail = false;

    friend bool operator==(const WordPattern&, const WordPattern&) = default;
};

inline bool pattern_matches(const WordPattern& p, const Word& w) {
    if (p.any_tail ? w.size() < p.slots.size() : w.size() != p.slots.size())
        return false;
    for (std::size_t i = 0; i < p.slots.size(); ++i)
        if (p.slots[i] && *p.slots[i] != w[i]) return false;
    return true;
}

/// Pairwise-disjoint patterns whose union is { w : w <lex bound }:
/// every proper prefix of bound, plus prefix(bound,i)+s with any-tail for
/// each position i and symbol s below bound[i].
inline std::vector<WordPattern> lexically_ordered_patterns(const Word& bound, const Order& o) {
    std::vector<WordPattern> out;
    for (std::size_t len = 0; len < bound.size(); ++len) {
        WordPattern p;
        for (std::size_t i = 0; i < len; ++i) p.slots.emplace_back(bound[i]);
        out.push_back(std::move(p));
    }
    for (std::size_t i = bound.size(); i-- > 0;) {
        std::size_t limit = o.index_of(bound[i]);
        for (std::size_t k = 0; k < limit; ++k) {
            WordPattern p;
            for (std::size_t j = 0; j < i; ++j) p.slots.emplace_back(bound[j]);
            p.slots.emplace_back(o.sequence[k]);
            p.any_tail = true;
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Pairwise-disjoint patterns whose union is { w : w <shortlex bound }:
/// all-wildcard patterns of each shorter length, plus same-length patterns
/// branching below bound at each position.
inline std::vector<WordPattern> mixed_ordered_patterns(const Word& bound, const Order& o) {
    std::vector<WordPattern> out;
    for (std::size_t len = 0; len < bound.size(); ++len) {
        WordPattern p;
        p.slots.assign(len, std::nullopt);
        out.push_back(std::move(p));
    }
    for (std::size_t i = bound.size(); i-- > 0;) {
        std::size_t limit = o.index_of(bound[i]);
        for (std::size_t k = 0; k < limit; ++k) {
            WordPattern p;
            for (std::size_t j = 0; j < i; ++j) p.slots.emplace_back(bound[j]);
            p.slots.emplace_back(o.sequence[k]);
            for (std::size_t j = i + 1; j < bound.size(); ++j) p.slots.emplace_back(std::nullopt);
            out.push_back(std::move(p));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering helpers shared across modules

/// Compact word literal: [a,b,b,a]; empty word is [].
inline std::string word_text(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i];
    }
    return s + "]";
}

/// Spaced word literal used in trace blocks: [a, b, b, a].
inline std::string word_text_spaced(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += w[i];
    }
    return s + "]";
}

inline std::string pattern_text(const WordPattern& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
        if (i) s += ",";
        s += p.slots[i] ? *p.slots[i] : std::string("_");
    }
    if (p.any_tail) s += "|_";
    return s + "]";
}

}  // namespace lflat

#endif  // LFLAT_CORE_HPP
