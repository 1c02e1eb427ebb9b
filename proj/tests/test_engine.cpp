#include <catch_amalgamated.hpp>

#include "lflat/recognize.hpp"
#include "lflat/show.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lflat;
using fixtures::even;
using fixtures::w;

namespace {

// Single-rule machine that moves right forever; q1 is final but unreachable.
TuringMachine looping_tm() {
    return TuringMachine{"loop", "q0", {{"q0", "B", "B", TapeMove::right, "q0"}}, {"q1"}};
}

}  // namespace

TEST_CASE("finite automaton search accepts and rejects definitively") {
    const auto& fa = even<FiniteAutomaton>("evenFA");
    CHECK(accepts(fa, {}) == Outcome::accept);
    CHECK(accepts(fa, w({"b", "b"})) == Outcome::accept);
    CHECK(accepts(fa, w({"b"})) == Outcome::reject);
    CHECK(accepts(fa, w({"c"})) == Outcome::reject);  // symbol outside the automaton
}

TEST_CASE("pushdown automaton search follows stack discipline") {
    const auto& pda = even<PushdownAutomaton>("evenPDA");
    CHECK(accepts(pda, w({"b", "b", "a", "a"})) == Outcome::accept);
    CHECK(accepts(pda, w({"b"})) == Outcome::reject);

    // a^n b^n via stack counting: push x per a, pop per b
    PushdownAutomaton anbn{"anbn",
                           "p",
                           "z",
                           {{"p", "z", "a", "p", {"x", "z"}},
                            {"p", "x", "a", "p", {"x", "x"}},
                            {"p", "x", "b", "q", {}},
                            {"q", "x", "b", "q", {}},
                            {"q", "z", "lambda", "r", {"z"}},
                            {"p", "z", "lambda", "r", {"z"}}},
                           {"r"}};
    CHECK(accepts(anbn, {}) == Outcome::accept);
    CHECK(accepts(anbn, w({"a", "b"})) == Outcome::accept);
    CHECK(accepts(anbn, w({"a", "a", "b", "b"})) == Outcome::accept);
    CHECK(accepts(anbn, w({"a", "b", "b"})) == Outcome::reject);
    CHECK(accepts(anbn, w({"b", "a"})) == Outcome::reject);
}

TEST_CASE("Turing machine acceptance ignores remaining input tracking") {
    const auto& tm = even<TuringMachine>("evenTM");
    CHECK(accepts(tm, w({"a", "b", "b", "a"})) == Outcome::accept);
    CHECK(accepts(tm, w({"b"})) == Outcome::reject);
    CHECK(accepts(tm, {}) == Outcome::accept);
}

TEST_CASE("a looping machine yields Unknown under any finite budget") {
    TuringMachine tm = looping_tm();
    CHECK(accepts(tm, {}, SearchBudget{10}) == Outcome::unknown);
    CHECK(accepts(tm, {}, SearchBudget{1000}) == Outcome::unknown);
    // on input x the only path dead-ends at the unreadable symbol: a verdict
    CHECK(accepts(tm, w({"x"}), SearchBudget{50}) == Outcome::reject);
}

TEST_CASE("outcomes are stable once a verdict is reached under budget growth") {
    const auto& tm = even<TuringMachine>("evenTM");
    for (const auto& word : oracle::all_words({"a", "b"}, 3)) {
        Outcome verdict = Outcome::unknown;
        for (std::size_t budget : {1u, 2u, 5u, 10u, 50u, 1000u, 100000u}) {
            Outcome o = accepts(tm, word, SearchBudget{budget});
            if (verdict != Outcome::unknown && o != Outcome::unknown) {
                INFO(word_text(word) << " budget " << budget);
                CHECK(o == verdict);
            }
            if (o != Outcome::unknown) verdict = o;
        }
        CHECK(verdict != Outcome::unknown);  // enough budget settles this machine
    }
}

TEST_CASE("tracing the paper's Turing machine reproduces the documented block") {
    const auto& tm = even<TuringMachine>("evenTM");
    Trace t = trace(tm, w({"a", "b", "b", "a"}));
    CHECK(format_trace(Mechanism(tm), t) ==
          "TRACING TURING MACHINE:\n"
          "  Name: evenTM\n"
          "  Traced word: [a, b, b, a]\n"
          "  At least one execution path stops at an\n"
          "  acceptance state.\n"
          "  Word accepted.\n"
          "  Traced steps:\n"
          "    >B a b b a B\tq0\n"
          "     B>a b b a B\tq1\n"
          "     B a>b b a B\tq1\n"
          "     B a b>b a B\tq2\n"
          "     B a b b>a B\tq1\n"
          "     B a b b a>B\tq1\n"
          "     B a b b a B>B\tq3\n");
}

TEST_CASE("rejected traces show the longest explored path") {
    const auto& fa = even<FiniteAutomaton>("evenFA");
    Trace t = trace(fa, w({"b"}));
    CHECK(t.outcome == Outcome::reject);
    CHECK_FALSE(t.steps.empty());
    std::string block = format_trace(Mechanism(fa), t);
    CHECK(block.find("Word rejected.") != std::string::npos);
    CHECK(block.find("No execution path stops at an") != std::string::npos);
}

TEST_CASE("unknown traces state that the budget ran out") {
    TuringMachine tm = looping_tm();
    Trace t = trace(tm, {}, SearchBudget{5});
    CHECK(t.outcome == Outcome::unknown);
    std::string block = format_trace(Mechanism(tm), t);
    CHECK(block.find("Word neither accepted nor rejected.") != std::string::npos);
}

TEST_CASE("finite automaton traces list state and remaining input") {
    const auto& fa = even<FiniteAutomaton>("evenFA");
    Trace t = trace(fa, w({"b", "b"}));
    REQUIRE(t.outcome == Outcome::accept);
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0] == "1\t[b, b]");
    CHECK(t.steps[1] == "2\t[b]");
    CHECK(t.steps[2] == "1\t[]");
}

TEST_CASE("pushdown traces additionally show the stack, top first") {
    const auto& pda = even<PushdownAutomaton>("evenPDA");
    Trace t = trace(pda, w({"b", "b"}));
    REQUIRE(t.outcome == Outcome::accept);
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0] == "p\t[b, b]\t[z]");
    CHECK(t.steps[1] == "q\t[b]\t[z]");
    CHECK(t.steps[2] == "p\t[]\t[z]");
}

TEST_CASE("generation lists exactly the accepted words, shortest first") {
    const auto& fa = even<FiniteAutomaton>("evenFA");
    GenerationResult r = generate(Mechanism(fa), 3);
    std::set<Word> expected;
    for (const auto& word : oracle::all_words({"a", "b"}, 3))
        if (occurs("b", word) % 2 == 0) expected.insert(word);
    CHECK(std::set<Word>(r.words.begin(), r.words.end()) == expected);
    CHECK(r.words.size() == expected.size());
    for (std::size_t i = 1; i < r.words.size(); ++i)
        CHECK(r.words[i - 1].size() <= r.words[i].size());  // length-monotone
}

TEST_CASE("regex generation starts with the documented prefix") {
    GenerationResult r = generate(Mechanism(even<Regex>("evenRE")), 2);
    CHECK(r.words == std::vector<Word>{{}, w({"a"}), w({"a", "a"}), w({"b", "b"})});
}

TEST_CASE("every mechanism's generated words are accepted back") {
    for (const auto& def : fixtures::even_definitions()) {
        auto m = as_mechanism(def.entity);
        if (!m) continue;
        GenerationResult r = generate(*m, 3);
        for (const auto& word : r.words) {
            INFO(def.name() << " " << word_text(word));
            CHECK(accepts(*m, word) == Outcome::accept);
        }
    }
}

TEST_CASE("generation over an empty-language automaton yields nothing") {
    FiniteAutomaton dead{"dead", "s", {{"s", "a", "s"}}, {}};
    CHECK(generate(Mechanism(dead), 4).words.empty());
}
