#include <catch_amalgamated.hpp>

#include <random>

#include "lflat/recognize.hpp"
#include "lflat/show.hpp"
#include "lflat/transform.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lflat;
using fixtures::even;
using fixtures::w;

TEST_CASE("the documented regex converts to the documented minimal automaton") {
    const auto& re = even<Regex>("evenRE");
    FiniteAutomaton fa = rename_canonical(minimize(determinize(regex_to_fa(re))));
    CHECK(fa_term(fa) == "fa(s1, [s1/a/s1,s1/b/s2,s2/a/s2,s2/b/s1], [s1])");
    CHECK(show(fa) ==
          "FINITE AUTOMATON:\n"
          "  fa(s1, [s1/a/s1,s1/b/s2,s2/a/s2,s2/b/s1], [s1])\n"
          "  Initial state: s1\n"
          "  Transitions:\n"
          "\ts1 - a -> s1\n"
          "\ts1 - b -> s2\n"
          "\ts2 - a -> s2\n"
          "\ts2 - b -> s1\n"
          "  Final states: [s1]\n"
          "  Deterministic: yes\n");
}

TEST_CASE("Thompson construction produces an equivalent epsilon-NFA") {
    const auto& re = even<Regex>("evenRE");
    FiniteAutomaton nfa = regex_to_fa(re);
    CHECK_FALSE(is_deterministic(nfa));  // epsilon moves present
    for (const auto& word : oracle::all_words({"a", "b"}, 5)) {
        bool expected = occurs("b", word) % 2 == 0;
        INFO(word_text(word));
        CHECK(oracle::nfa_accepts(nfa, word) == expected);
    }
    // no transitions into the initial state or out of the single final state
    REQUIRE(nfa.finals.size() == 1);
    for (const auto& t : nfa.transitions) {
        CHECK(t.to != nfa.initial);
        CHECK(t.from != nfa.finals.front());
    }
}

TEST_CASE("determinize yields an equivalent deterministic automaton") {
    FiniteAutomaton nfa{"n",
                        "p",
                        {{"p", "lambda", "q"}, {"p", "a", "p"}, {"q", "a", "q"}, {"q", "b", "p"}},
                        {"q"}};
    FiniteAutomaton dfa = determinize(nfa);
    CHECK(is_deterministic(dfa));
    for (const auto& word : oracle::all_words({"a", "b"}, 5)) {
        INFO(word_text(word));
        CHECK((accepts(dfa, word) == Outcome::accept) == oracle::nfa_accepts(nfa, word));
    }
}

TEST_CASE("minimize rejects nondeterministic input") {
    FiniteAutomaton nfa{"n", "p", {{"p", "a", "p"}, {"p", "a", "q"}}, {"q"}};
    CHECK_THROWS_AS(minimize(nfa), Error);
}

TEST_CASE("minimize merges equivalent states and drops dead ones") {
    // b2 and b3 are equivalent; d is a dead (non-accepting sink) state
    FiniteAutomaton dfa{"m",
                        "s",
                        {{"s", "a", "b2"},
                         {"s", "b", "b3"},
                         {"b2", "a", "f"},
                         {"b3", "a", "f"},
                         {"f", "b", "d"},
                         {"d", "b", "d"}},
                        {"f"}};
    FiniteAutomaton min = minimize(dfa);
    CHECK(min.states().size() == 3);
    CHECK_FALSE(oracle::dfa_has_equivalent_pair(min));
    for (const auto& word : oracle::all_words({"a", "b"}, 4))
        CHECK(accepts(min, word) == accepts(dfa, word));
}

TEST_CASE("minimizing an empty-language automaton leaves a lone initial state") {
    FiniteAutomaton dfa{"m", "s", {{"s", "a", "t"}, {"t", "a", "s"}}, {}};
    FiniteAutomaton min = minimize(dfa);
    CHECK(min.states() == std::vector<std::string>{min.initial});
    CHECK(min.transitions.empty());
    CHECK(min.finals.empty());
}

TEST_CASE("rename yields s1, s2, ... in breadth-first discovery order") {
    FiniteAutomaton dfa{"m",
                        "start",
                        {{"start", "a", "other"}, {"other", "b", "start"}},
                        {"other"}};
    FiniteAutomaton renamed = rename_canonical(dfa);
    CHECK(renamed.initial == "s1");
    CHECK(renamed.states() == std::vector<std::string>{"s1", "s2"});
    CHECK(renamed.transitions ==
          std::vector<FaTransition>{{"s1", "a", "s2"}, {"s2", "b", "s1"}});
    CHECK(renamed.finals == std::vector<std::string>{"s2"});
}

TEST_CASE("determinize and minimize preserve the language of random NFAs") {
    std::mt19937 rng(20260826);
    std::vector<Word> words = oracle::all_words({"a", "b"}, 6);
    for (int round = 0; round < 200; ++round) {
        FiniteAutomaton nfa = oracle::random_nfa(rng);
        FiniteAutomaton dfa = determinize(nfa);
        FiniteAutomaton min = rename_canonical(minimize(dfa));
        REQUIRE(is_deterministic(dfa));
        CHECK_FALSE(oracle::dfa_has_equivalent_pair(min));
        for (const auto& word : words) {
            bool expected = oracle::nfa_accepts(nfa, word);
            INFO("round " << round << " word " << word_text(word));
            REQUIRE((accepts(dfa, word) == Outcome::accept) == expected);
            REQUIRE((accepts(min, word) == Outcome::accept) == expected);
        }
    }
}

TEST_CASE("lambda removal produces a quasi-lambda-free equivalent grammar") {
    const auto& g = even<ContextFreeGrammar>("evenCFG");
    ContextFreeGrammar q = cfg_remove_lambda(g);
    for (const auto& r : q.rules) {
        if (r.body.empty()) CHECK(r.head == q.start);
        for (const auto& s : r.body) CHECK(s != q.start);  // start not on any RHS
    }
    for (const auto& word : oracle::all_words({"a", "b"}, 4))
        CHECK((accepts(q, word) == Outcome::accept) == oracle::cyk_accepts(g, word));
}

TEST_CASE("chain removal eliminates unit rules") {
    ContextFreeGrammar g{"g", "S", {{"S", {"A"}}, {"A", {"a"}}, {"A", {"A", "b"}}}};
    ContextFreeGrammar c = cfg_remove_chains(g);
    for (const auto& r : c.rules)
        CHECK_FALSE((r.body.size() == 1 && is_nonterminal(r.body[0])));
    for (const auto& word : oracle::all_words({"a", "b"}, 4))
        CHECK((accepts(c, word) == Outcome::accept) == oracle::cyk_accepts(g, word));
}

TEST_CASE("normalization is a no-op on an already normal grammar") {
    ContextFreeGrammar g{"g", "S", {{"S", {"a", "S"}}, {"S", {"b"}}}};
    ContextFreeGrammar n = cfg_normalize(g);
    CHECK(n.start == g.start);
    CHECK(n.rules == g.rules);
}

TEST_CASE("normalization preserves membership on random grammars") {
    std::mt19937 rng(826);
    for (int round = 0; round < 100; ++round) {
        ContextFreeGrammar g = oracle::random_cfg(rng);
        ContextFreeGrammar n = cfg_normalize(g);
        for (const auto& word : oracle::all_words({"a", "b"}, 5)) {
            INFO("round " << round << " word " << word_text(word));
            REQUIRE((accepts(n, word) == Outcome::accept) == oracle::cyk_accepts(g, word));
        }
    }
}
