#include <catch_amalgamated.hpp>

#include "lflat/core.hpp"

#include "fixtures.hpp"

using namespace lflat;
using fixtures::w;

namespace {

Order up() { return Order{"up", "bits", {"0", "1"}}; }

}  // namespace

TEST_CASE("alphabet expressions evaluate left-to-right without duplicates") {
    std::map<std::string, AlphaExprPtr> env;
    env["bits"] = AlphabetExpression::literal({"0", "1"});

    SECTION("literal") {
        CHECK(evaluate_alphabet(*AlphabetExpression::literal({"0", "1"}), env) ==
              std::vector<Symbol>{"0", "1"});
    }
    SECTION("union keeps first-occurrence order") {
        auto e = AlphabetExpression::join(
            AlphabetExpression::reference("bits"),
            AlphabetExpression::literal({"2", "3", "4", "5", "6", "7", "8", "9"}));
        CHECK(evaluate_alphabet(*e, env) ==
              std::vector<Symbol>{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"});
    }
    SECTION("duplicate symbol is an error") {
        auto e = AlphabetExpression::join(AlphabetExpression::reference("bits"),
                                          AlphabetExpression::literal({"1"}));
        CHECK_THROWS_AS(evaluate_alphabet(*e, env), Error);
    }
    SECTION("unknown reference is an error") {
        CHECK_THROWS_AS(evaluate_alphabet(*AlphabetExpression::reference("nope"), env), Error);
    }
    SECTION("reference cycle is an error") {
        env["x"] = AlphabetExpression::join(AlphabetExpression::literal({"a"}),
                                            AlphabetExpression::reference("y"));
        env["y"] = AlphabetExpression::reference("x");
        CHECK_THROWS_AS(evaluate_alphabet(*env["x"], env), Error);
    }
}

TEST_CASE("word expressions compute concatenation, powers and reversal") {
    auto lit01 = WordExpression::literal({"0", "1"});
    auto lit110 = WordExpression::literal({"1", "1", "0"});

    CHECK(compute_word(WordExpression::concat(WordExpression::power(lit01, 2),
                                              WordExpression::power(lit110, -1))) ==
          w({"0", "1", "0", "1", "0", "1", "1"}));
    CHECK(compute_word(WordExpression::power(lit01, 0)).empty());
    CHECK(compute_word(WordExpression::power(lit110, -1)) == w({"0", "1", "1"}));
    CHECK_THROWS_AS(WordExpression::power(lit01, -2), Error);
}

TEST_CASE("word membership and occurrence counting") {
    CHECK(occurs("b", w({"a", "b", "b", "a"})) == 2);
    CHECK(occurs("c", w({"a", "b"})) == 0);
    CHECK(word_over_symbols(w({"a", "b"}), {"a", "b"}));
    CHECK_FALSE(word_over_symbols(w({"a", "c"}), {"a", "b"}));
    CHECK(word_over_symbols({}, {}));
}

TEST_CASE("word comparison in lex and shortlex modes") {
    Order o = up();
    CHECK(compare_words(w({"0"}), w({"1"}), o, CompareMode::lex) == std::strong_ordering::less);
    CHECK(compare_words(w({"0", "1"}), w({"0"}), o, CompareMode::lex) ==
          std::strong_ordering::greater);  // prefix < extension
    CHECK(compare_words(w({"1"}), w({"0", "0"}), o, CompareMode::lex) ==
          std::strong_ordering::greater);
    CHECK(compare_words(w({"1"}), w({"0", "0"}), o, CompareMode::shortlex) ==
          std::strong_ordering::less);  // shorter wins in shortlex
    CHECK(compare_words(w({"1"}), w({"1"}), o, CompareMode::shortlex) ==
          std::strong_ordering::equal);
    CHECK_THROWS_AS(compare_words(w({"x"}), w({"0"}), o, CompareMode::lex), Error);
}

TEST_CASE("next_word is the shortlex odometer") {
    Order o = up();
    CHECK(next_word({}, o) == w({"0"}));
    CHECK(next_word(w({"0"}), o) == w({"1"}));
    CHECK(next_word(w({"1"}), o) == w({"0", "0"}));
    CHECK(next_word(w({"1", "1", "1"}), o) == w({"0", "0", "0", "0"}));
    CHECK(next_word(w({"0", "1", "1"}), o) == w({"1", "0", "0"}));
}

TEST_CASE("word enumeration is the shortlex stream") {
    Alphabet bits{"bits", AlphabetExpression::literal({"0", "1"}), {"0", "1"}};
    WordEnumerator e(bits, up());
    CHECK(e.next() == Word{});
    CHECK(e.next() == w({"0"}));
    CHECK(e.next() == w({"1"}));
    CHECK(e.next() == w({"0", "0"}));
    CHECK(e.next() == w({"0", "1"}));

    SECTION("order over a different alphabet is rejected") {
        Order other{"o", "ab", {"a", "b"}};
        CHECK_THROWS_AS(WordEnumerator(bits, other), Error);
    }
}

TEST_CASE("factors enumerate prefixes, suffixes and subwords") {
    Word word = w({"1", "2", "3"});
    CHECK(factors(word, FactorKind::prefix) ==
          std::vector<Word>{{}, w({"1"}), w({"1", "2"}), w({"1", "2", "3"})});
    CHECK(factors(word, FactorKind::suffix) ==
          std::vector<Word>{{}, w({"3"}), w({"2", "3"}), w({"1", "2", "3"})});
    // subwords come per end position, so [] repeats at each end point
    std::vector<Word> subs = factors(w({"1", "2"}), FactorKind::subword);
    CHECK(subs == std::vector<Word>{{}, w({"1"}), {}, w({"1", "2"}), w({"2"}), {}});
}

TEST_CASE("subword stream of [1,2,3,4,5] starts as expected") {
    std::vector<Word> subs = factors(w({"1", "2", "3", "4", "5"}), FactorKind::subword);
    REQUIRE(subs.size() >= 4);
    CHECK(subs[0] == Word{});
    CHECK(subs[1] == w({"1"}));
    CHECK(subs[2] == Word{});
    CHECK(subs[3] == w({"1", "2"}));
}

TEST_CASE("lexically ordered patterns cover exactly the words below the bound") {
    Order o = up();
    Word bound = w({"1", "1", "1"});
    std::vector<WordPattern> ps = lexically_ordered_patterns(bound, o);

    std::vector<std::string> rendered;
    for (const auto& p : ps) rendered.push_back(pattern_text(p));
    CHECK(rendered == std::vector<std::string>{"[]", "[1]", "[1,1]", "[1,1,0|_]", "[1,0|_]",
                                               "[0|_]"});

    // soundness/completeness/disjointness on all words of length <= 5
    Order order = o;
    for (const auto& word : [] {
             std::vector<Word> all{{}};
             for (std::size_t i = 0; i < all.size() && all.back().size() < 5; ++i)
                 for (const char* s : {"0", "1"}) {
                     Word x = all[i];
                     x.emplace_back(s);
                     all.push_back(std::move(x));
                 }
             return all;
         }()) {
        int matches = 0;
        for (const auto& p : ps) matches += pattern_matches(p, word) ? 1 : 0;
        bool below = compare_words(word, bound, order, CompareMode::lex) ==
                     std::strong_ordering::less;
        INFO(word_text(word));
        CHECK(matches == (below ? 1 : 0));
    }
}

TEST_CASE("mixed ordered patterns cover exactly the words shortlex-below the bound") {
    Order o = up();
    Word bound = w({"1", "1", "1"});
    std::vector<WordPattern> ps = mixed_ordered_patterns(bound, o);

    std::vector<std::string> rendered;
    for (const auto& p : ps) rendered.push_back(pattern_text(p));
    CHECK(rendered == std::vector<std::string>{"[]", "[_]", "[_,_]", "[1,1,0]", "[1,0,_]",
                                               "[0,_,_]"});

    WordEnumerator e(o);
    for (int i = 0; i < 32; ++i) {
        Word word = e.next();
        int matches = 0;
        for (const auto& p : ps) matches += pattern_matches(p, word) ? 1 : 0;
        bool below = compare_words(word, bound, o, CompareMode::shortlex) ==
                     std::strong_ordering::less;
        INFO(word_text(word));
        CHECK(matches == (below ? 1 : 0));
    }
}

TEST_CASE("word rendering") {
    CHECK(word_text({}) == "[]");
    CHECK(word_text(w({"a", "b"})) == "[a,b]");
    CHECK(word_text_spaced(w({"a", "b", "b", "a"})) == "[a, b, b, a]");
    WordPattern p{{std::optional<Symbol>{"1"}, std::nullopt}, true};
    CHECK(pattern_text(p) == "[1,_|_]");
}
