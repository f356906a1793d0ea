#include <algorithm>
#include <map>
#include <random>

#include "ctslab/counter.hpp"
#include "ctslab/one_state.hpp"
#include "ctslab/oracle.hpp"
#include "ctslab/shape.hpp"
#include "doctest.h"
#include "support/checks.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace ctslab;
using namespace ctslab::testing;

namespace {

// Builds a one-state bottom-marker system from terse rule specs:
//   "a:zero" "a:push0" "a:push" "a:keep" "a:pop" "a:fin" (emitting)
//   ":recharge" ":spush" ":spop" ":fin" (silent)
CtsSystem one_state(const std::string& name, const std::vector<std::string>& specs) {
    CtsSystem sys;
    sys.name = name;
    sys.g2.kind = G2Kind::RightBoundary;
    sys.g1.nonterminals = {"S1"};
    sys.g1.axiom = "S1";
    sys.g2.nonterminals = {"S2", "Z2"};
    sys.g2.axiom = "S2";

    auto g2prod = [&](const std::string& role) -> G2Production {
        if (role == "zero") return {"S2", {"S2"}};
        if (role == "push0" || role == "recharge") return {"S2", {"S2", "Z2"}};
        if (role == "push" || role == "spush") return {"Z2", {"Z2", "Z2"}};
        if (role == "keep") return {"Z2", {"Z2"}};
        if (role == "pop" || role == "spop") return {"Z2", {}};
        return {"S2", {}};  // fin
    };

    int n = 0;
    for (const auto& spec : specs) {
        auto colon = spec.find(':');
        std::string terminal = spec.substr(0, colon);
        std::string role = spec.substr(colon + 1);
        if (!terminal.empty() && !sys.g1.is_terminal(terminal))
            sys.g1.terminals.push_back(terminal);

        RlProduction g1;
        g1.lhs = "S1";
        g1.emit = terminal;
        g1.next = (role == "fin") ? "" : "S1";

        G2Production p2 = g2prod(role);
        std::size_t idx;
        auto it = std::find(sys.g2.productions.begin(), sys.g2.productions.end(), p2);
        if (it == sys.g2.productions.end()) {
            sys.g2.productions.push_back(p2);
            idx = sys.g2.productions.size() - 1;
        } else {
            idx = static_cast<std::size_t>(it - sys.g2.productions.begin());
        }
        if (std::find(sys.g1.productions.begin(), sys.g1.productions.end(), g1) ==
            sys.g1.productions.end())
            sys.g1.productions.push_back(g1);
        sys.rewrites.push_back({"r" + std::to_string(++n), g1, idx});
    }
    REQUIRE(validate_system(sys).ok());
    return sys;
}

void check_fast_against_oracle(const CtsSystem& sys, std::size_t max_len,
                               bool expect_direct = false) {
    for (const auto& word : words_up_to(sys.g1.terminals, max_len)) {
        OracleVerdict o = oracle_member(sys, word);
        if (o.status == Verdict::Inconclusive) continue;
        FastResult f = fast_member(sys, word);
        CHECK_MESSAGE(f.accepted == (o.status == Verdict::Accepted),
                      sys.name, " word=", wstr(word),
                      " case=", case_id_name(f.case_id));
        if (!f.delegated) {
            CHECK(f.accepted == counter_member(sys, word));
        } else {
            CHECK_FALSE(expect_direct);
        }
    }
}

}  // namespace

TEST_CASE("rule classification of the bundled systems") {
    SUBCASE("prefix-balanced counter net") {
        RuleProfile p = classify_rules(sys_prefix_balanced());
        CHECK(p.per_rewrite.at("r1") == RuleType{RuleKind::EmitPush, "a"});
        CHECK(p.per_rewrite.at("r2") == RuleType{RuleKind::EmitPop, "b"});
        CHECK(p.per_rewrite.at("r3") == RuleType{RuleKind::FinishPopLast, ""});
    }
    SUBCASE("marked variant") {
        RuleProfile p = classify_rules(sys_prefix_balanced_marked());
        CHECK(p.per_rewrite.at("r1") == RuleType{RuleKind::EmitPushAtZero, "a"});
        CHECK(p.per_rewrite.at("r2") == RuleType{RuleKind::EmitPush, "a"});
        CHECK(p.per_rewrite.at("r3") == RuleType{RuleKind::EmitPop, "b"});
        CHECK(p.per_rewrite.at("r4") == RuleType{RuleKind::FinishSilent, ""});
        CHECK(p.producers.at("a") ==
              std::set<RuleKind>{RuleKind::EmitPushAtZero, RuleKind::EmitPush});
    }
    SUBCASE("flat system") {
        RuleProfile p = classify_rules(sys_flat_finisher());
        CHECK(p.producers.at("a") == std::set<RuleKind>{RuleKind::EmitAtZero});
        CHECK(p.producers.at("b") == std::set<RuleKind>{RuleKind::FinishEmit});
    }
    SUBCASE("no-op chains have no classification") {
        CtsSystem sys = one_state("noop", {"a:push", "b:pop", ":fin"});
        G2Production noop{"S2", {"S2"}};
        sys.g2.productions.push_back(noop);
        RlProduction chain{"S1", "", "S1"};
        sys.g1.productions.push_back(chain);
        sys.rewrites.push_back({"rx", chain, sys.g2.productions.size() - 1});
        CHECK_THROWS_AS(classify_rules(sys), UnclassifiableRewrite);
        // fast membership falls back to the exact recognizer
        FastResult f = fast_member(sys, w("ab"));
        CHECK(f.delegated);
    }
    SUBCASE("multi-state systems are the wrong family") {
        CHECK_THROWS_AS(classify_rules(sys_anbn()), WrongFamily);
    }
}

TEST_CASE("terminal partition by push/pop producers") {
    CtsSystem sys = one_state("ihl", {":recharge", "a:push", "b:pop", "c:push",
                                      "c:pop", ":fin"});
    TerminalPartition part = terminal_partition(classify_rules(sys));
    CHECK(part.push_only == std::set<std::string>{"a"});
    CHECK(part.pop_only == std::set<std::string>{"b"});
    CHECK(part.mixed == std::set<std::string>{"c"});
}

TEST_CASE("case detection") {
    RuleProfile seg = classify_rules(sys_segmented_ab());
    CHECK(detect_case(seg, w("aabbb")) == CaseId::Segmented);
    CHECK(detect_case(seg, w("")) == CaseId::FreePushPop);  // vacuously overlapping

    RuleProfile flat = classify_rules(sys_flat_finisher());
    CHECK(detect_case(flat, w("aab")) == CaseId::FlatWithFinisher);

    RuleProfile marked = classify_rules(sys_prefix_balanced_marked());
    CHECK(detect_case(marked, w("ab")) == CaseId::MarkedPushOverlap);

    CtsSystem both = one_state("both35", {":recharge", "a:push", "a:pop", ":fin"});
    CHECK(detect_case(classify_rules(both), w("aaa")) == CaseId::FreePushPop);

    CtsSystem mixed = one_state("mixed35", {":recharge", "a:push", "a:pop", "c:push",
                                            "b:pop", ":fin"});
    CHECK(detect_case(classify_rules(mixed), w("ac")) == CaseId::SegmentedMixed);
    CHECK(detect_case(classify_rules(mixed), w("cb")) == CaseId::Segmented);

    CHECK(detect_case(seg, w("aabbb")) ==
          detect_case(classify_rules(sys_segmented_ab()), w("aabbb")));
}

TEST_CASE("case detection ignores rewrite declaration order") {
    CtsSystem sys = sys_prefix_balanced_marked();
    CtsSystem reversed = sys;
    std::reverse(reversed.rewrites.begin(), reversed.rewrites.end());
    for (const auto& word : words_up_to({"a", "b"}, 5)) {
        CHECK(detect_case(classify_rules(sys), word) ==
              detect_case(classify_rules(reversed), word));
        CHECK(fast_member(sys, word).accepted == fast_member(reversed, word).accepted);
    }
}

TEST_CASE("segment profiles") {
    RuleProfile p = classify_rules(sys_segmented_ab());

    SUBCASE("aabbb") {
        SegmentProfile sp = segment_profile(p, w("aabbb"));
        REQUIRE(sp.betas.size() == 1);
        REQUIRE(sp.alphas.size() == 2);
        CHECK(sp.alphas[0].empty());
        CHECK(sp.betas[0] == w("aa"));
        CHECK(sp.alphas[1] == w("bbb"));
        CHECK(sp.eta3 == std::vector<long long>{2});
        CHECK(sp.eta5 == std::vector<long long>{0, 3});
    }
    SUBCASE("single pop symbol") {
        SegmentProfile sp = segment_profile(p, w("b"));
        CHECK(sp.betas.empty());
        REQUIRE(sp.alphas.size() == 1);
        CHECK(sp.eta5 == std::vector<long long>{1});
    }
    SUBCASE("empty word") {
        SegmentProfile sp = segment_profile(p, {});
        CHECK(sp.betas.empty());
        REQUIRE(sp.alphas.size() == 1);
        CHECK(sp.alphas[0].empty());
    }
    SUBCASE("unproducible terminal") {
        CtsSystem sys = sys_segmented_ab();
        sys.g1.terminals.push_back("q");
        CHECK_THROWS_AS(segment_profile(classify_rules(sys), w("aq")),
                        UnproducibleTerminal);
    }
}

TEST_CASE("segment balance procedure") {
    auto run = [](std::vector<long long> eta3, std::vector<long long> eta5) {
        SegmentProfile sp;
        sp.eta3 = std::move(eta3);
        sp.eta5 = std::move(eta5);
        sp.betas.resize(sp.eta3.size());
        sp.alphas.resize(sp.eta5.size());
        return segment_balance_check(sp);
    };
    CHECK(run({2}, {0, 3}) == 0);  // aabbb: zero test in the final pop run
    CHECK(run({2}, {0, 1}) == 1);  // aab: one surplus symbol
    CHECK(run({}, {0}) == 0);      // empty word
    // One leftover counter symbol even though the raw subtraction hits zero:
    // the final run never performs a zero test.
    CHECK(run({1}, {0, 1}) == 1);  // ab
    CHECK(run({2}, {0, 2}) == 1);  // aabb
    CHECK(run({1}, {0, 2}) == 0);  // abb
    CHECK(run({2, 1}, {0, 2, 2}) == 0);  // aabbabb

    // The procedure agrees with the deterministic counter replay.
    CtsSystem sys = sys_segmented_ab();
    RuleProfile p = classify_rules(sys);
    std::map<std::string, int> delta{{"a", 1}, {"b", -1}};
    for (const auto& word : words_up_to({"a", "b"}, 10)) {
        bool procedure = !word.empty() && word.back() == "b" &&
                         segment_balance_check(segment_profile(p, word)) == 0;
        if (word.empty()) procedure = true;
        CHECK_MESSAGE(procedure == segmented_reference(delta, word), wstr(word));
    }
}

TEST_CASE("segment verdict is stable under within-run permutations") {
    CtsSystem sys = one_state("seg4", {":recharge", "a:push", "c:push", "b:pop",
                                       "d:pop", ":fin"});
    RuleProfile p = classify_rules(sys);
    auto verdict = [&](const Word& word) {
        return fast_member(sys, word).accepted;
    };
    // "ac" and "ca" permute within one push run; "bd"/"db" within a pop run.
    CHECK(detect_case(p, w("acbd")) == CaseId::Segmented);
    CHECK(verdict(w("acbd")) == verdict(w("cabd")));
    CHECK(verdict(w("acbd")) == verdict(w("acdb")));
    CHECK(verdict(w("acbdb")) == verdict(w("cadbb")));
}

TEST_CASE("fast membership matches the oracle on every decision case") {
    SUBCASE("flat with finisher") {
        CtsSystem sys = sys_flat_finisher();
        FastResult f = fast_member(sys, w("aab"));
        CHECK(f.accepted);
        CHECK_FALSE(f.delegated);
        CHECK_FALSE(fast_member(sys, w("aba")).accepted);
        check_fast_against_oracle(sys, 7, true);
    }
    SUBCASE("flat silent finish") {
        check_fast_against_oracle(one_state("flat10", {"a:zero", ":fin"}), 7, true);
        check_fast_against_oracle(
            one_state("flat-both", {"a:zero", "b:fin", ":fin"}), 7, true);
        check_fast_against_oracle(one_state("flat-only", {"a:zero", "b:zero"}), 5, true);
    }
    SUBCASE("free push/pop") {
        check_fast_against_oracle(
            one_state("free", {":recharge", "a:push", "a:pop", "b:push", "b:pop", ":fin"}),
            7, true);
    }
    SUBCASE("one sided") {
        check_fast_against_oracle(one_state("pop-only", {":recharge", "a:pop", ":fin"}),
                                  7, true);
        check_fast_against_oracle(
            one_state("pop-spush", {":recharge", "a:pop", ":spush", ":fin"}), 7, true);
        check_fast_against_oracle(one_state("push-only", {":recharge", "a:push", ":fin"}),
                                  7, true);
        check_fast_against_oracle(one_state("push0-push", {"a:push0", "b:push", ":fin"}),
                                  7, true);
    }
    SUBCASE("strict alternation") {
        check_fast_against_oracle(one_state("alt-x", {"a:push0", "b:pop", ":fin"}), 8,
                                  true);
        check_fast_against_oracle(one_state("alt-o", {"a:push0", "a:pop", ":fin"}), 8,
                                  true);
        check_fast_against_oracle(
            one_state("alt-m",
                      {"a:push0", "a:pop", "c:push0", "b:pop", ":fin"}),
            6, true);
    }
    SUBCASE("push with drain") {
        check_fast_against_oracle(
            one_state("drain", {":recharge", "a:push", ":spop", ":fin"}), 7, true);
    }
    SUBCASE("free push/pop with terminal finisher") {
        check_fast_against_oracle(
            one_state("free-fin",
                      {":recharge", "a:push", "a:pop", "b:fin", ":spop"}),
            7);
    }
    SUBCASE("neutral free push/pop") {
        check_fast_against_oracle(
            one_state("neutral-free",
                      {":recharge", "a:push", "a:pop", "c:keep", ":fin"}),
            6, true);
    }
    SUBCASE("segmented with neutral symbols") {
        CtsSystem sys =
            one_state("seg-neutral", {":recharge", "a:push", "c:keep", "b:pop", ":fin"});
        CHECK(detect_case(classify_rules(sys), w("abcb")) == CaseId::SegmentedNeutral);
        CHECK(fast_member(sys, w("abcb")).accepted);
        CHECK_FALSE(fast_member(sys, w("abbc")).accepted);  // trailing neutral strands one symbol
        check_fast_against_oracle(sys, 6, true);
    }
    SUBCASE("segmented") {
        CtsSystem sys = sys_segmented_ab();
        FastResult f = fast_member(sys, w("aabbb"));
        CHECK(f.accepted);
        CHECK_FALSE(f.delegated);
        CHECK_FALSE(fast_member(sys, w("aab")).accepted);
        CHECK_FALSE(fast_member(sys, w("ab")).accepted);
        CHECK_FALSE(fast_member(sys, w("aabb")).accepted);
        CHECK(fast_member(sys, w("abb")).accepted);
        check_fast_against_oracle(sys, 8);
    }
    SUBCASE("segmented mixed producers delegate") {
        CtsSystem sys = one_state("seg-mixed", {":recharge", "a:push", "a:pop",
                                                "c:push", "b:pop", ":fin"});
        CHECK(fast_member(sys, w("ac")).delegated);
        check_fast_against_oracle(sys, 5);
    }
    SUBCASE("marked pushes delegate") {
        CtsSystem sys = sys_prefix_balanced_marked();
        FastResult f = fast_member(sys, w("ab"));
        CHECK(f.delegated);
        CHECK(f.accepted);
        CHECK(f.case_id == CaseId::MarkedPushOverlap);
        check_fast_against_oracle(sys, 7);

        CtsSystem strict = one_state("marked-x", {"c:push0", "a:push", "b:pop", ":fin"});
        CHECK(fast_member(strict, w("cab")).case_id == CaseId::MarkedPushExclusive);
        check_fast_against_oracle(strict, 5);
    }
    SUBCASE("zero-test-free systems delegate") {
        CtsSystem sys = sys_prefix_balanced();
        FastResult f = fast_member(sys, w("ab"));
        CHECK(f.delegated);
        CHECK(f.accepted);
        check_fast_against_oracle(sys, 8);
    }
}

TEST_CASE("fast membership agrees across the one-state corpus") {
    auto corpus = make_corpus(12, 37);
    for (const auto& entry : corpus) {
        if (!is_one_state_family(entry.family)) continue;
        const CtsSystem& sys = entry.system;
        for (const auto& word : words_up_to(sys.g1.terminals, 6)) {
            OracleVerdict o = oracle_member(sys, word);
            if (o.status == Verdict::Inconclusive) continue;
            FastResult f = fast_member(sys, word);
            CHECK_MESSAGE(f.accepted == (o.status == Verdict::Accepted),
                          sys.name, " word=", wstr(word));
        }
    }
}
