// Textual definition-file format (.lf) for all entities, the regex expression
// parser, word literals, and round-trip rendering.
//
// File grammar (whitespace-insensitive, `#` line comments, list items
// separated by whitespace or commas):
//
//   alphabet <name> = <alpha-expr>         alpha-expr := [s ...] | name | a + a
//   order <name> on <alphabet> = [s ...]
//   language <name> { alphabet = [s ...] positive = [s ...] negative = [s ...] }
//   re <name> = <regex>
//   fa <name> { initial = q transitions = [q/s/q ...] finals = [q ...] }
//   cfg <name> { start = N rules = [N -> body | body ...] }
//   pda <name> { initial = q stack = z transitions = [q/z/s/q/[z ...] ...] finals = [q ...] }
//   tm <name> { initial = q transitions = [q/s/s/M/q ...] finals = [q ...] }
//   predicate <name> { alphabet = [s ...] acceptor = <name>(args...) }
//
// `lambda` is the reserved epsilon/empty-word token; `B` is the TM blank.
// Uppercase-initial tokens are CFG nonterminals.

#ifndef LFLAT_DSL_HPP
#define LFLAT_DSL_HPP

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lflat/show.hpp"

namespace lflat {

struct ParseError {
    std::string message;
    int line = 1;
    int column = 1;
    std::string snippet;  // offending line text
};

/// Thrown by the single-expression entry points (parse_word, parse_regex).
struct DslError : Error {
    ParseError detail;
    explicit DslError(ParseError e)
        : Error("ParseError", e.message + " at " + std::to_string(e.line) + ":" +
                                  std::to_string(e.column)),
          detail(std::move(e)) {}
};

struct Definition {
    Entity entity;
    int line = 1;
    int column = 1;

    std::string name() const { return entity_name(entity); }
    const char* kind() const { return entity_kind(entity); }
};

struct ParseResult {
    std::vector<Definition> definitions;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

// ---------------------------------------------------------------------------
// Tokenizer

namespace detail {

struct Token {
    enum class Kind { ident, punct, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int column = 1;
};

class Tokenizer {
public:
    Tokenizer(std::string_view text, std::vector<ParseError>& errors) {
        int line = 1, column = 1;
        std::size_t i = 0;
        auto advance = [&](std::size_t n) {
            for (std::size_t k = 0; k < n; ++k, ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                } else {
                    ++column;
                }
            }
        };
        while (i < text.size()) {
            char c = text[i];
            if (c == '#') {
                while (i < text.size() && text[i] != '\n') advance(1);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = i;
                int tl = line, tc = column;
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    advance(1);
                tokens_.push_back({Token::Kind::ident,
                                   std::string(text.substr(start, i - start)), tl, tc});
                continue;
            }
            if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
                tokens_.push_back({Token::Kind::punct, "->", line, column});
                advance(2);
                continue;
            }
            if (std::string("[]{}()=+*^/,|-").find(c) != std::string::npos) {
                tokens_.push_back({Token::Kind::punct, std::string(1, c), line, column});
                advance(1);
                continue;
            }
            errors.push_back({std::string("unexpected character '") + c + "'", line, column,
                              line_of(text, i)});
            advance(1);
        }
        tokens_.push_back({Token::Kind::end, "", line, column});
        source_ = text;
    }

    static std::string line_of(std::string_view text, std::size_t pos) {
        std::size_t begin = text.rfind('\n', pos);
        begin = begin == std::string_view::npos ? 0 : begin + 1;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        return std::string(text.substr(begin, end - begin));
    }

    std::vector<Token> tokens_;
    std::string_view source_;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    Parser(std::string_view text) : tokenizer_(text, result_.errors) {}

    ParseResult run() {
        while (!at_end()) {
            std::size_t before = pos_;
            parse_definition();
            if (pos_ == before) skip_to_next_definition(true);
        }
        for (const auto& def : result_.definitions) {
            std::size_t count = 0;
            for (const auto& other : result_.definitions)
                if (other.name() == def.name()) ++count;
            if (count > 1) {
                error_at(token_at(def), "duplicate name '" + def.name() + "'");
                break;
            }
        }
        return std::move(result_);
    }

    // single-expression entry points
    RegexPtr parse_regex_only() {
        RegexPtr r = parse_regex_expression();
        expect_end();
        return r;
    }

    Word parse_word_only() {
        Word w = parse_word_literal();
        expect_end();
        return w;
    }

private:
    ParseResult result_;
    Tokenizer tokenizer_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokenizer_.tokens_.size() ? tokenizer_.tokens_[i]
                                             : tokenizer_.tokens_.back();
    }
    const Token& advance() { return tokenizer_.tokens_[pos_++]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    bool check(const char* text) const {
        return peek().kind != Token::Kind::end && peek().text == text;
    }
    bool match(const char* text) {
        if (!check(text)) return false;
        ++pos_;
        return true;
    }

    Token token_at(const Definition& def) const {
        Token t;
        t.line = def.line;
        t.column = def.column;
        return t;
    }

    void error_at(const Token& t, const std::string& message) {
        result_.errors.push_back(
            {message, t.line, t.column, Tokenizer::line_of(tokenizer_.source_, 0)});
    }

    [[noreturn]] void fail(const std::string& message) {
        const Token& t = peek();
        throw DslError({message, t.line, t.column,
                        t.kind == Token::Kind::end ? "" : t.text});
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

    std::string expect_ident(const char* what) {
        if (peek().kind != Token::Kind::ident) fail(std::string("expected ") + what);
        return advance().text;
    }

    void expect_punct(const char* text) {
        if (!match(text)) fail(std::string("expected '") + text + "'");
    }

    static bool is_keyword(const std::string& t) {
        return t == "alphabet" || t == "order" || t == "language" || t == "re" ||
               t == "fa" || t == "cfg" || t == "pda" || t == "tm" || t == "predicate";
    }

    void skip_to_next_definition(bool skip_current) {
        if (skip_current && !at_end()) ++pos_;
        while (!at_end() && !(peek().kind == Token::Kind::ident && is_keyword(peek().text)))
            ++pos_;
    }

    void parse_definition() {
        const Token& head = peek();
        if (head.kind != Token::Kind::ident || !is_keyword(head.text)) {
            error_at(head, "expected a definition keyword, found '" + head.text + "'");
            skip_to_next_definition(true);
            return;
        }
        try {
            std::string kind = advance().text;
            std::string name = expect_ident("a name");
            Definition def;
            def.line = head.line;
            def.column = head.column;
            if (kind == "alphabet")
                def.entity = parse_alphabet(name);
            else if (kind == "order")
                def.entity = parse_order(name);
            else if (kind == "language")
                def.entity = parse_language(name);
            else if (kind == "re")
                def.entity = parse_re(name);
            else if (kind == "fa")
                def.entity = parse_fa(name);
            else if (kind == "cfg")
                def.entity = parse_cfg(name);
            else if (kind == "pda")
                def.entity = parse_pda(name);
            else
                def.entity = kind == "tm" ? Entity(parse_tm(name))
                                          : Entity(parse_predicate(name));
            result_.definitions.push_back(std::move(def));
        } catch (const DslError& e) {
            result_.errors.push_back(e.detail);
            skip_to_next_definition(false);
        }
    }

    // ---- shared pieces

    std::vector<Symbol> parse_symbol_list() {
        expect_punct("[");
        std::vector<Symbol> out;
        while (!check("]")) {
            out.push_back(expect_ident("a symbol"));
            match(",");
        }
        expect_punct("]");
        return out;
    }

    Word parse_word_literal() {
        std::vector<Symbol> syms = parse_symbol_list();
        for (const auto& s : syms)
            if (s == kEpsilonToken) fail("'lambda' cannot appear inside a word");
        return syms;
    }

    // ---- alphabet

    AlphaExprPtr parse_alpha_expr() {
        AlphaExprPtr left = parse_alpha_term();
        while (match("+")) left = AlphabetExpression::join(left, parse_alpha_term());
        return left;
    }

    AlphaExprPtr parse_alpha_term() {
        if (check("[")) return AlphabetExpression::literal(parse_symbol_list());
        if (peek().kind == Token::Kind::ident)
            return AlphabetExpression::reference(advance().text);
        fail("expected a symbol list or alphabet name");
    }

    Alphabet parse_alphabet(std::string name) {
        expect_punct("=");
        Alphabet a;
        a.name = std::move(name);
        a.expression = parse_alpha_expr();
        return a;  // symbols evaluated at link time
    }

    Order parse_order(std::string name) {
        Order o;
        o.name = std::move(name);
        if (expect_ident("'on'") != "on") fail("expected 'on'");
        o.alphabet = expect_ident("an alphabet name");
        expect_punct("=");
        o.sequence = parse_symbol_list();
        return o;
    }

    Language parse_language(std::string name) {
        Language l;
        l.name = std::move(name);
        expect_punct("{");
        while (!match("}")) {
            std::string key = expect_ident("a language field");
            expect_punct("=");
            if (key == "alphabet")
                l.alphabet = parse_symbol_list();
            else if (key == "positive")
                l.positives.push_back(parse_word_literal());
            else if (key == "negative")
                l.negatives.push_back(parse_word_literal());
            else
                fail("unknown language field '" + key + "'");
        }
        return l;
    }

    // ---- regex

    Regex parse_re(std::string name) {
        expect_punct("=");
        Regex r;
        r.name = std::move(name);
        r.expression = parse_regex_expression();
        return r;
    }

    RegexPtr parse_regex_expression() {  // alternation, left-assoc
        RegexPtr left = parse_regex_concat();
        while (match("+")) left = RegexNode::alt(left, parse_regex_concat());
        return left;
    }

    RegexPtr parse_regex_concat() {  // concatenation, left-assoc
        RegexPtr left = parse_regex_postfix();
        while (match("*")) left = RegexNode::seq(left, parse_regex_postfix());
        return left;
    }

    RegexPtr parse_regex_postfix() {
        RegexPtr e = parse_regex_atom();
        while (match("^")) {
            if (match("*"))
                e = RegexNode::star(e);
            else if (match("+"))
                e = RegexNode::plus(e);
            else
                fail("expected '*' or '+' after '^'");
        }
        return e;
    }

    RegexPtr parse_regex_atom() {
        if (match("(")) {
            RegexPtr e = parse_regex_expression();
            expect_punct(")");
            return e;
        }
        if (peek().kind == Token::Kind::ident) {
            std::string t = advance().text;
            return t == kEpsilonToken ? RegexNode::empty_word() : RegexNode::symbol(t);
        }
        fail("expected a symbol, 'lambda' or '('");
    }

    // ---- finite automaton

    FiniteAutomaton parse_fa(std::string name) {
        FiniteAutomaton fa;
        fa.name = std::move(name);
        expect_punct("{");
        while (!match("}")) {
            std::string key = expect_ident("an fa field");
            expect_punct("=");
            if (key == "initial") {
                fa.initial = expect_ident("a state");
            } else if (key == "finals") {
                fa.finals = parse_symbol_list();
            } else if (key == "transitions") {
                expect_punct("[");
                while (!check("]")) {
                    FaTransition t;
                    t.from = expect_ident("a state");
                    expect_punct("/");
                    t.symbol = expect_ident("a symbol");
                    expect_punct("/");
                    t.to = expect_ident("a state");
                    match(",");
                    fa.transitions.push_back(std::move(t));
                }
                expect_punct("]");
            } else {
                fail("unknown fa field '" + key + "'");
            }
        }
        return fa;
    }

    // ---- context-free grammar

    ContextFreeGrammar parse_cfg(std::string name) {
        ContextFreeGrammar g;
        g.name = std::move(name);
        expect_punct("{");
        while (!match("}")) {
            std::string key = expect_ident("a cfg field");
            expect_punct("=");
            if (key == "start") {
                g.start = expect_ident("a nonterminal");
            } else if (key == "rules") {
                expect_punct("[");
                while (!check("]")) {
                    std::string head = expect_ident("a rule head");
                    if (!is_nonterminal(head))
                        fail("rule head '" + head + "' must start with an uppercase letter");
                    expect_punct("->");
                    for (;;) {
                        g.rules.push_back({head, parse_cfg_body()});
                        if (!match("|")) break;
                    }
                    match(",");
                }
                expect_punct("]");
            } else {
                fail("unknown cfg field '" + key + "'");
            }
        }
        return g;
    }

    std::vector<std::string> parse_cfg_body() {
        std::vector<std::string> body;
        // a body ends at '|', ',', ']' or at an ident followed by '->'
        while (peek().kind == Token::Kind::ident &&
               !(peek(1).kind == Token::Kind::punct && peek(1).text == "->"))
            body.push_back(advance().text);
        if (body.size() == 1 && body[0] == kEpsilonToken) return {};
        for (const auto& s : body)
            if (s == kEpsilonToken) fail("'lambda' must be the entire rule body");
        if (body.empty()) fail("expected a rule body");
        return body;
    }

    // ---- pushdown automaton

    PushdownAutomaton parse_pda(std::string name) {
        PushdownAutomaton pda;
        pda.name = std::move(name);
        expect_punct("{");
        while (!match("}")) {
            std::string key = expect_ident("a pda field");
            expect_punct("=");
            if (key == "initial") {
                pda.initial = expect_ident("a state");
            } else if (key == "stack") {
                pda.initial_stack_symbol = expect_ident("a stack symbol");
            } else if (key == "finals") {
                pda.finals = parse_symbol_list();
            } else if (key == "transitions") {
                expect_punct("[");
                while (!check("]")) {
                    PdaTransition t;
                    t.from = expect_ident("a state");
                    expect_punct("/");
                    t.pop = expect_ident("a stack symbol");
                    expect_punct("/");
                    t.input = expect_ident("an input symbol");
                    expect_punct("/");
                    t.to = expect_ident("a state");
                    expect_punct("/");
                    t.push = parse_symbol_list();
                    match(",");
                    pda.transitions.push_back(std::move(t));
                }
                expect_punct("]");
            } else {
                fail("unknown pda field '" + key + "'");
            }
        }
        return pda;
    }

    // ---- Turing machine

    TuringMachine parse_tm(std::string name) {
        TuringMachine tm;
        tm.name = std::move(name);
        expect_punct("{");
        while (!match("}")) {
            std::string key = expect_ident("a tm field");
            expect_punct("=");
            if (key == "initial") {
                tm.initial = expect_ident("a state");
            } else if (key == "finals") {
                tm.finals = parse_symbol_list();
            } else if (key == "transitions") {
                expect_punct("[");
                while (!check("]")) {
                    TmTransition t;
                    t.state = expect_ident("a state");
                    expect_punct("/");
                    t.read = expect_ident("a symbol");
                    expect_punct("/");
                    t.write = expect_ident("a symbol");
                    expect_punct("/");
                    std::string move = expect_ident("'L' or 'R'");
                    if (move != "L" && move != "R") fail("tape move must be L or R");
                    t.move = move == "L" ? TapeMove::left : TapeMove::right;
                    expect_punct("/");
                    t.to = expect_ident("a state");
                    match(",");
                    tm.transitions.push_back(std::move(t));
                }
                expect_punct("]");
            } else {
                fail("unknown tm field '" + key + "'");
            }
        }
        return tm;
    }

    // ---- predicate

    PredicateMechanism parse_predicate(std::string name) {
        PredicateMechanism p;
        p.name = std::move(name);
        expect_punct("{");
        while (!match("}")) {
            std::string key = expect_ident("a predicate field");
            expect_punct("=");
            if (key == "alphabet") {
                p.alphabet = parse_symbol_list();
            } else if (key == "acceptor") {
                p.acceptor = expect_ident("an acceptor name");
                if (match("(")) {
                    while (!check(")")) {
                        p.acceptor_args.push_back(expect_ident("an acceptor argument"));
                        match(",");
                    }
                    expect_punct(")");
                }
            } else {
                fail("unknown predicate field '" + key + "'");
            }
        }
        return p;
    }
};

}  // namespace detail

/// Parses the definitions of one file. Errors are collected, not fail-fast.
inline ParseResult parse_file(std::string_view text) {
    return detail::Parser(text).run();
}

inline RegexPtr parse_regex(std::string_view text) {
    std::vector<ParseError> errors;
    detail::Parser parser(text);
    return parser.parse_regex_only();
}

inline Word parse_word(std::string_view text) {
    detail::Parser parser(text);
    return parser.parse_word_only();
}

/// Link step over an ordered definition set: evaluates alphabet expressions
/// (cycle- and duplicate-checked) and resolves order -> alphabet references.
inline std::vector<ParseError> link_definitions(std::vector<Definition>& definitions) {
    std::vector<ParseError> errors;
    std::map<std::string, AlphaExprPtr> alpha_exprs;
    for (const auto& def : definitions)
        if (const auto* a = std::get_if<Alphabet>(&def.entity))
            alpha_exprs.emplace(a->name, a->expression);

    std::map<std::string, Alphabet> evaluated;
    for (auto& def : definitions) {
        if (auto* a = std::get_if<Alphabet>(&def.entity)) {
            try {
                a->symbols = evaluate_alphabet(*a->expression, alpha_exprs);
                evaluated.emplace(a->name, *a);
            } catch (const Error& e) {
                errors.push_back({std::string(e.what()) + " (in alphabet " + a->name + ")",
                                  def.line, def.column, ""});
            }
        } else if (const auto* o = std::get_if<Order>(&def.entity)) {
            if (!alpha_exprs.count(o->alphabet))
                errors.push_back({"order " + o->name + " refers to undefined alphabet " +
                                      o->alphabet,
                                  def.line, def.column, ""});
        }
    }
    return errors;
}

// ---------------------------------------------------------------------------
// Rendering back to canonical DSL text

namespace detail {

inline std::string block_list(const std::vector<std::string>& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ", ";
        s += items[i];
    }
    return s + "]";
}

inline std::string alpha_expr_text(const AlphabetExpression& e) {
    switch (e.kind) {
        case AlphabetExpression::Kind::literal:
            return list_text(e.symbols);
        case AlphabetExpression::Kind::reference:
            return e.ref;
        case AlphabetExpression::Kind::union_:
            return alpha_expr_text(*e.left) + " + " + alpha_expr_text(*e.right);
    }
    return "";
}

}  // namespace detail

inline std::string render(const Entity& entity) {
    struct Visitor {
        std::string operator()(const Alphabet& a) {
            return "alphabet " + a.name + " = " + detail::alpha_expr_text(*a.expression) + "\n";
        }
        std::string operator()(const Order& o) {
            return "order " + o.name + " on " + o.alphabet + " = " + list_text(o.sequence) +
                   "\n";
        }
        std::string operator()(const Language& l) {
            std::string s = "language " + l.name + " {\n";
            s += "  alphabet = " + list_text(l.alphabet) + "\n";
            for (const auto& w : l.positives) s += "  positive = " + word_text(w) + "\n";
            for (const auto& w : l.negatives) s += "  negative = " + word_text(w) + "\n";
            return s + "}\n";
        }
        std::string operator()(const Regex& r) {
            return "re " + r.name + " = " + regex_text(r.expression) + "\n";
        }
        std::string operator()(const FiniteAutomaton& fa) {
            std::string s = "fa " + fa.name + " {\n";
            s += "  initial = " + fa.initial + "\n";
            std::vector<std::string> parts;
            for (const auto& t : fa.transitions) parts.push_back(fa_transition_term(t));
            s += "  transitions = " + detail::block_list(parts) + "\n";
            s += "  finals = " + list_text(fa.finals) + "\n";
            return s + "}\n";
        }
        std::string operator()(const ContextFreeGrammar& g) {
            std::string s = "cfg " + g.name + " {\n";
            s += "  start = " + g.start + "\n";
            std::vector<std::string> parts;
            for (const auto& r : g.rules) {
                std::string rule = r.head + " ->";
                if (r.body.empty()) {
                    rule += std::string(" ") + kEpsilonToken;
                } else {
                    for (const auto& sym : r.body) rule += " " + sym;
                }
                parts.push_back(std::move(rule));
            }
            s += "  rules = " + detail::block_list(parts) + "\n";
            return s + "}\n";
        }
        std::string operator()(const PushdownAutomaton& pda) {
            std::string s = "pda " + pda.name + " {\n";
            s += "  initial = " + pda.initial + "\n";
            s += "  stack = " + pda.initial_stack_symbol + "\n";
            std::vector<std::string> parts;
            for (const auto& t : pda.transitions) parts.push_back(pda_transition_term(t));
            s += "  transitions = " + detail::block_list(parts) + "\n";
            s += "  finals = " + list_text(pda.finals) + "\n";
            return s + "}\n";
        }
        std::string operator()(const TuringMachine& tm) {
            std::string s = "tm " + tm.name + " {\n";
            s += "  initial = " + tm.initial + "\n";
            std::vector<std::string> parts;
            for (const auto& t : tm.transitions) parts.push_back(tm_transition_term(t));
            s += "  transitions = " + detail::block_list(parts) + "\n";
            s += "  finals = " + list_text(tm.finals) + "\n";
            return s + "}\n";
        }
        std::string operator()(const PredicateMechanism& p) {
            std::string s = "predicate " + p.name + " {\n";
            s += "  alphabet = " + list_text(p.alphabet) + "\n";
            s += "  acceptor = " + p.acceptor;
            if (!p.acceptor_args.empty()) {
                s += "(";
                for (std::size_t i = 0; i < p.acceptor_args.size(); ++i) {
                    if (i) s += ", ";
                    s += p.acceptor_args[i];
                }
                s += ")";
            }
            return s + "\n}\n";
        }
    };
    return std::visit(Visitor{}, entity);
}

inline std::string render(const Definition& def) { return render(def.entity); }

// structural equality used by round-trip tests
inline bool entity_equal(const Entity& a, const Entity& b) {
    if (a.index() != b.index()) return false;
    struct Visitor {
        const Entity& other;
        bool operator()(const Alphabet& x) {
            const auto& y = std::get<Alphabet>(other);
            return x.name == y.name &&
                   detail::alpha_expr_text(*x.expression) ==
                       detail::alpha_expr_text(*y.expression);
        }
        bool operator()(const Order& x) {
            const auto& y = std::get<Order>(other);
            return x.name == y.name && x.alphabet == y.alphabet && x.sequence == y.sequence;
        }
        bool operator()(const Language& x) {
            const auto& y = std::get<Language>(other);
            return x.name == y.name && x.alphabet == y.alphabet &&
                   x.positives == y.positives && x.negatives == y.negatives;
        }
        bool operator()(const Regex& x) {
            const auto& y = std::get<Regex>(other);
            return x.name == y.name && regex_equal(x.expression, y.expression);
        }
        bool operator()(const FiniteAutomaton& x) {
            const auto& y = std::get<FiniteAutomaton>(other);
            return x.name == y.name && x.initial == y.initial &&
                   x.transitions == y.transitions && x.finals == y.finals;
        }
        bool operator()(const ContextFreeGrammar& x) {
            const auto& y = std::get<ContextFreeGrammar>(other);
            return x.name == y.name && x.start == y.start && x.rules == y.rules;
        }
        bool operator()(const PushdownAutomaton& x) {
            const auto& y = std::get<PushdownAutomaton>(other);
            return x.name == y.name && x.initial == y.initial &&
                   x.initial_stack_symbol == y.initial_stack_symbol &&
                   x.transitions == y.transitions && x.finals == y.finals;
        }
        bool operator()(const TuringMachine& x) {
            const auto& y = std::get<TuringMachine>(other);
            return x.name == y.name && x.initial == y.initial &&
                   x.transitions == y.transitions && x.finals == y.finals;
        }
        bool operator()(const PredicateMechanism& x) {
            const auto& y = std::get<PredicateMechanism>(other);
            return x.name == y.name && x.alphabet == y.alphabet &&
                   x.acceptor == y.acceptor && x.acceptor_args == y.acceptor_args;
        }
    };
    return std::visit(Visitor{b}, a);
}

}  // namespace lflat

#endif  // LFLAT_DSL_HPP
