#include <catch_amalgamated.hpp>

#include "lflat/dsl.hpp"

#include "fixtures.hpp"

using namespace lflat;
using fixtures::w;

TEST_CASE("the bundled definition file parses completely") {
    ParseResult r = parse_file(fixtures::read_file(fixtures::even_path()));
    REQUIRE(r.ok());
    REQUIRE(r.definitions.size() == 10);
    std::vector<std::string> names;
    for (const auto& d : r.definitions) names.push_back(d.name());
    CHECK(names == std::vector<std::string>{"evenL", "evenP", "evenRE", "evenFA", "evenCFG",
                                            "evenPDA", "evenTM", "bits", "decimal", "up"});
    CHECK(link_definitions(r.definitions).empty());
}

TEST_CASE("linking evaluates alphabet expressions") {
    ParseResult r = parse_file("alphabet bits = [0, 1]\n"
                               "alphabet decimal = bits + [2,3,4,5,6,7,8,9]\n");
    REQUIRE(r.ok());
    REQUIRE(link_definitions(r.definitions).empty());
    const auto& decimal = std::get<Alphabet>(r.definitions[1].entity);
    CHECK(decimal.symbols ==
          std::vector<Symbol>{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"});
}

TEST_CASE("link errors are reported with the defining position") {
    SECTION("unknown alphabet reference") {
        ParseResult r = parse_file("alphabet x = nope + [1]\n");
        REQUIRE(r.ok());
        auto errors = link_definitions(r.definitions);
        REQUIRE(errors.size() == 1);
        CHECK(errors[0].message.find("nope") != std::string::npos);
    }
    SECTION("order over an undefined alphabet") {
        ParseResult r = parse_file("order o on ghosts = [a]\n");
        REQUIRE(r.ok());
        auto errors = link_definitions(r.definitions);
        REQUIRE(errors.size() == 1);
        CHECK(errors[0].message.find("ghosts") != std::string::npos);
    }
    SECTION("cyclic alphabets") {
        ParseResult r = parse_file("alphabet x = y + [1]\nalphabet y = x + [2]\n");
        REQUIRE(r.ok());
        CHECK_FALSE(link_definitions(r.definitions).empty());
    }
}

TEST_CASE("regular expressions parse with the documented precedence") {
    CHECK(regex_text(parse_regex("(a + b * a^* * b)^*")) == "(a + b * a^* * b)^*");
    // alternation binds loosest, concatenation tighter, postfix tightest
    CHECK(regex_text(parse_regex("a + b * c")) == "a + b * c");
    CHECK(regex_text(parse_regex("(a + b) * c")) == "(a + b) * c");
    // ^+ is sugar, expanded at parse time
    CHECK(regex_text(parse_regex("a * b^+")) == "a * (b * b^*)");
    CHECK(regex_equal(parse_regex("a^+"),
                      RegexNode::seq(RegexNode::symbol("a"),
                                     RegexNode::star(RegexNode::symbol("a")))));
    CHECK(regex_equal(parse_regex("lambda"), RegexNode::empty_word()));
    CHECK_THROWS_AS(parse_regex("a +"), DslError);
    CHECK_THROWS_AS(parse_regex("(a"), DslError);
    CHECK_THROWS_AS(parse_regex("a) b"), DslError);
}

TEST_CASE("word literals parse and reject the epsilon token") {
    CHECK(parse_word("[]").empty());
    CHECK(parse_word("[a,b,b,a]") == w({"a", "b", "b", "a"}));
    CHECK(parse_word("[a, b]") == w({"a", "b"}));
    CHECK_THROWS_AS(parse_word("[lambda]"), DslError);
    CHECK_THROWS_AS(parse_word("a,b"), DslError);
}

TEST_CASE("parse errors carry positions and do not stop later definitions") {
    ParseResult r = parse_file("fa broken {\n  initial = \n}\n\nalphabet ok = [x]\n");
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].line >= 2);
    REQUIRE(r.definitions.size() == 1);
    CHECK(r.definitions[0].name() == "ok");
}

TEST_CASE("duplicate names within a file are an error") {
    ParseResult r = parse_file("alphabet x = [a]\nalphabet x = [b]\n");
    CHECK_FALSE(r.ok());
}

TEST_CASE("comments and flexible separators are accepted") {
    ParseResult r = parse_file("# a comment\nfa m { initial = s\n"
                               "  transitions = [s/a/s s/b/s]  # no commas needed\n"
                               "  finals = [s] }\n");
    REQUIRE(r.ok());
    const auto& fa = std::get<FiniteAutomaton>(r.definitions[0].entity);
    CHECK(fa.transitions.size() == 2);
}

TEST_CASE("grammar rules support alternatives and lambda bodies") {
    ParseResult r = parse_file("cfg g { start = S rules = [S -> a S | lambda, A -> b] }");
    REQUIRE(r.ok());
    const auto& g = std::get<ContextFreeGrammar>(r.definitions[0].entity);
    REQUIRE(g.rules.size() == 3);
    CHECK(g.rules[0] == CfgRule{"S", {"a", "S"}});
    CHECK(g.rules[1] == CfgRule{"S", {}});
    CHECK(g.rules[2] == CfgRule{"A", {"b"}});

    SECTION("lowercase rule heads are rejected") {
        CHECK_FALSE(parse_file("cfg g { start = S rules = [s -> a] }").ok());
    }
    SECTION("lambda mixed into a body is rejected") {
        CHECK_FALSE(parse_file("cfg g { start = S rules = [S -> a lambda] }").ok());
    }
}

TEST_CASE("turing machine moves must be L or R") {
    CHECK(parse_file("tm t { initial = q transitions = [q/a/a/R/q] finals = [q] }").ok());
    CHECK_FALSE(parse_file("tm t { initial = q transitions = [q/a/a/X/q] finals = [q] }").ok());
}

TEST_CASE("render then parse is the identity on every bundled entity") {
    for (const auto& def : fixtures::even_definitions()) {
        std::string text = render(def);
        INFO(def.name() << " rendered as:\n" << text);
        ParseResult r = parse_file(text);
        REQUIRE(r.ok());
        REQUIRE(r.definitions.size() == 1);
        CHECK(entity_equal(r.definitions[0].entity, def.entity));
    }
}

TEST_CASE("predicates parse acceptor arguments") {
    ParseResult r =
        parse_file("predicate p { alphabet = [a, b] acceptor = count_mod(b, 2, 0) }");
    REQUIRE(r.ok());
    const auto& p = std::get<PredicateMechanism>(r.definitions[0].entity);
    CHECK(p.acceptor == "count_mod");
    CHECK(p.acceptor_args == std::vector<std::string>{"b", "2", "0"});
}
