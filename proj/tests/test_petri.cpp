#include <set>

#include "ctslab/oracle.hpp"
#include "ctslab/petri.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace ctslab;
using namespace ctslab::testing;

namespace {

PetriNet loop_exit_net() {
    // One place, a self-loop labeled a and an emptying exit labeled b.
    return parse_pn(R"(pn loop-exit
places p
transition t1 label a in p:1 out p:1
transition t2 label b in p:1 out
marking p:1
final
)");
}

}  // namespace

TEST_CASE("firing semantics") {
    PetriNet net;
    net.name = "two-places";
    net.places = {"p1", "p2"};
    net.transitions.push_back({"t", "a", {{"p1", 1}}, {{"p2", 1}}});
    net.initial = {1, 0};

    CHECK(fire(net, {1, 0}, "t") == Marking{0, 1});
    CHECK_THROWS_AS(fire(net, {0, 1}, "t"), NotEnabled);
    CHECK_THROWS_AS(fire(net, {1, 0}, "nope"), UnknownTransition);

    net.transitions.push_back({"t2", "b", {{"p1", 1}, {"p2", 1}}, {{"p1", 1}, {"p2", 2}}});
    CHECK(fire(net, {1, 1}, "t2") == Marking{1, 2});
}

TEST_CASE("structural encoding of an all-emitting 0-sequential system") {
    CtsSystem sys = sys_balanced_plus_b();
    PetriNet net = cts_to_pn(sys);

    CHECK(net.places == std::vector<std::string>{"S1", "Z2"});
    CHECK(net.transitions.size() == sys.rewrites.size());
    CHECK(net.initial == Marking{1, 1});
    REQUIRE(net.finals.has_value());
    CHECK(net.finals->size() == 1);
    CHECK(net.finals->front() == Marking{0, 0});

    SUBCASE("membership transfers") {
        CHECK(pn_member(net, w("abb"), PnSemantics::FinalMarkings));
        CHECK_FALSE(pn_member(net, w("ab"), PnSemantics::FinalMarkings));
        CHECK(pn_member(net, w(""), PnSemantics::AnyMarking));  // empty firing sequence
        CHECK(pn_member(net, w("ab"), PnSemantics::AnyMarking));
    }
    SUBCASE("languages agree up to length 7") {
        for (const auto& word : words_up_to({"a", "b"}, 7)) {
            OracleVerdict o = oracle_member(sys, word);
            REQUIRE(o.status != Verdict::Inconclusive);
            CHECK((o.status == Verdict::Accepted) ==
                  pn_member(net, word, PnSemantics::FinalMarkings));
        }
    }
}

TEST_CASE("systems with non-emitting rewrites have no net encoding") {
    CHECK_THROWS_AS(cts_to_pn(sys_anbn_strict()), TranslationError);  // wrong family too
    try {
        CtsSystem zs = sys_anbn_strict();
        zs.g2.kind = G2Kind::ZeroSequential;  // now the family fits, the chain rule trips
        cts_to_pn(zs);
        FAIL("expected TranslationError");
    } catch (const TranslationError& e) {
        CHECK(e.kind == TranslationError::Kind::NonEmittingRule);
    }
}

TEST_CASE("net to system translation") {
    SUBCASE("loop and exit") {
        PetriNet net = loop_exit_net();
        CtsSystem sys = pn_to_cts(net);
        CHECK(sys.g2.kind == G2Kind::ZeroSequential);
        CHECK(sys.rewrites.size() == 4);  // two per transition

        // The language is a^n b: loop any number of times, then exit.
        std::set<std::string> words;
        for (const auto& word : enumerate_language(sys, 6).words)
            words.insert(wstr(word));
        CHECK(words == std::set<std::string>{"b", "ab", "aab", "aaab", "aaaab", "aaaaab"});

        for (const auto& word : words_up_to({"a", "b"}, 6)) {
            CHECK(pn_member(net, word, PnSemantics::FinalMarkings) ==
                  (oracle_member(sys, word).status == Verdict::Accepted));
        }
    }
    SUBCASE("two-token start is rejected") {
        try {
            pn_to_cts(cts_to_pn(sys_balanced_plus_b()));
            FAIL("expected TranslationError");
        } catch (const TranslationError& e) {
            CHECK(e.kind == TranslationError::Kind::MultiTokenStart);
        }
    }
    SUBCASE("two-input transitions are rejected") {
        PetriNet net = loop_exit_net();
        net.places.push_back("q");
        net.initial.push_back(0);
        net.finals->front().push_back(0);
        net.transitions.push_back({"t3", "a", {{"p", 1}, {"q", 1}}, {}});
        try {
            pn_to_cts(net);
            FAIL("expected TranslationError");
        } catch (const TranslationError& e) {
            CHECK(e.kind == TranslationError::Kind::MultiInputTransition);
        }
    }
    SUBCASE("silent transitions are rejected") {
        PetriNet net = loop_exit_net();
        net.transitions.push_back({"t4", "", {{"p", 1}}, {}});
        try {
            pn_to_cts(net);
            FAIL("expected TranslationError");
        } catch (const TranslationError& e) {
            CHECK(e.kind == TranslationError::Kind::LambdaTransition);
        }
    }
}

TEST_CASE("semantics preconditions") {
    PetriNet net = loop_exit_net();
    PetriNet no_finals = net;
    no_finals.finals.reset();
    CHECK_THROWS_AS(pn_member(no_finals, w("b"), PnSemantics::FinalMarkings),
                    SemanticsMismatch);

    PetriNet silent = net;
    silent.transitions.push_back({"t5", "", {{"p", 1}}, {{"p", 1}}});
    CHECK_THROWS_AS(pn_member(silent, w("b"), PnSemantics::AnyMarking), SemanticsMismatch);
    CHECK(pn_member(silent, w("ab"), PnSemantics::FinalMarkings));

    CHECK_THROWS_AS(pn_member(net, w("q"), PnSemantics::FinalMarkings),
                    PnWordAlphabetError);
}

TEST_CASE("silent closure under final-marking semantics") {
    // A silent pump between two places: acceptance needs the pumped tokens
    // to be drained by labeled steps.
    PetriNet net = parse_pn(R"(pn silent-pump
places p q
transition grow label ~ in p:1 out p:1 q:1
transition stop label s in p:1 out
transition drain label d in q:1 out
marking p:1
final
)");
    CHECK(pn_member(net, w("ds"), PnSemantics::FinalMarkings));
    CHECK(pn_member(net, w("dsd"), PnSemantics::FinalMarkings));
    CHECK(pn_member(net, w("ddsdd"), PnSemantics::FinalMarkings));
    CHECK_FALSE(pn_member(net, w("dd"), PnSemantics::FinalMarkings));  // p never emptied
    CHECK(pn_member(net, w("s"), PnSemantics::FinalMarkings));
}

TEST_CASE("net text format round-trips") {
    PetriNet net = cts_to_pn(sys_balanced_plus_b());
    std::string text = render_pn(net);
    PetriNet back = parse_pn(text);
    CHECK(render_pn(back) == text);
    CHECK(back.places == net.places);
    CHECK(back.initial == net.initial);
    REQUIRE(back.finals.has_value());
    CHECK(*back.finals == *net.finals);

    CHECK_THROWS_AS(parse_pn("places p\nmarking p:1\n"), PnParseError);
    CHECK_THROWS_AS(parse_pn("pn x\nplaces p\ntransition t label a in xx:1 out\nmarking\n"),
                    PnParseError);
}

TEST_CASE("translation fidelity across the eligible corpus") {
    auto corpus = make_corpus(10, 41);
    std::size_t translated = 0;
    for (const auto& entry : corpus) {
        if (entry.family != Family::RL_0S) continue;
        const CtsSystem& sys = entry.system;
        PetriNet net;
        try {
            net = cts_to_pn(sys);
        } catch (const TranslationError&) {
            continue;  // silent finishers make the system ineligible
        }
        ++translated;
        for (const auto& word : words_up_to(sys.g1.terminals, 5)) {
            OracleVerdict o = oracle_member(sys, word);
            REQUIRE(o.status != Verdict::Inconclusive);
            CHECK((o.status == Verdict::Accepted) ==
                  pn_member(net, word, PnSemantics::FinalMarkings));
        }
    }
    CHECK(translated >= 4);
}
