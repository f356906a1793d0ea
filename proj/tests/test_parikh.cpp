#include <algorithm>

#include "ctslab/oracle.hpp"
#include "ctslab/parikh.hpp"
#include "ctslab/parse.hpp"
#include "ctslab/shape.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace ctslab;
using namespace ctslab::testing;

namespace {

bool has_config(const std::vector<ParikhConfig>& layer, const std::string& state,
                std::vector<long long> counts) {
    return std::any_of(layer.begin(), layer.end(), [&](const ParikhConfig& c) {
        return c.state == state && c.counts == counts;
    });
}

CtsSystem prefix_balanced_as_0s() {
    CtsSystem sys = sys_prefix_balanced();
    sys.g2.kind = G2Kind::ZeroSequential;
    sys.name = "prefix-balanced-0s";
    return sys;
}

}  // namespace

TEST_CASE("membership on the balanced-then-c system") {
    CtsSystem sys = sys_balanced_then_c();
    CHECK(recognize_rt_0s(sys, w("aabbc")));
    CHECK_FALSE(recognize_rt_0s(sys, w("bac")));
    CHECK(recognize_rt_0s(sys, w("c")));
    CHECK(recognize_rt_0s(sys, w("abc")));
    CHECK_FALSE(recognize_rt_0s(sys, w("ab")));
    CHECK_FALSE(recognize_rt_0s(sys, w("")));
    CHECK_FALSE(recognize_rt_0s(sys, w("abcc")));
}

TEST_CASE("layer contents are the reachable configurations per position") {
    CtsSystem sys = sys_balanced_then_c();

    SUBCASE("ab") {
        ParikhLayers layers = parikh_layers(sys, w("ab"));
        REQUIRE(layers.layers.size() == 3);
        CHECK(layers.layers[0].size() == 1);
        CHECK(has_config(layers.layers[0], "S1", {1, 0}));
        CHECK(layers.layers[1].size() == 1);
        CHECK(has_config(layers.layers[1], "S1", {1, 1}));
        CHECK(layers.layers[2].size() == 1);
        CHECK(has_config(layers.layers[2], "S1", {1, 0}));
    }
    SUBCASE("single c reaches the finished zero configuration") {
        ParikhLayers layers = parikh_layers(sys, w("c"));
        REQUIRE(layers.layers.size() == 2);
        CHECK(has_config(layers.layers[1], "", {0, 0}));
    }
    SUBCASE("empty word closes through a silent finisher when one exists") {
        CtsSystem zs = prefix_balanced_as_0s();
        ParikhLayers layers = parikh_layers(zs, {});
        REQUIRE(layers.layers.size() == 1);
        CHECK(has_config(layers.layers[0], "", {0}));
        CHECK(recognize_rt_0s(zs, {}));
    }
}

TEST_CASE("single-symbol second alphabet makes 0S and RB coincide") {
    // Redeclared as 0-sequential, the prefix-balanced net keeps its language.
    CtsSystem zs = prefix_balanced_as_0s();
    CHECK(classify_shape(zs).family == Family::RL_0S);
    CHECK(recognize_rt_0s(zs, w("ab")));
    for (const auto& word : words_up_to({"a", "b"}, 7)) {
        CHECK(recognize_rt_0s(zs, word) ==
              (oracle_member(sys_prefix_balanced(), word).status == Verdict::Accepted));
    }
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(recognize_rt_0s(sys_anbn(), w("ab")), NotZeroSequential);

    CtsSystem chained = sys_balanced_then_c();
    RlProduction chain{"S1", "", "S1"};
    chained.g1.productions.push_back(chain);
    chained.rewrites.push_back({"rc", chain, 0});
    CHECK_THROWS_AS(recognize_rt_0s(chained, w("c")), NotRealTime);

    CHECK_THROWS_AS(recognize_rt_0s(sys_balanced_then_c(), w("xyz")), WordAlphabetError);
}

TEST_CASE("recognizer agrees with the oracle across the real-time corpus") {
    auto corpus = make_corpus(12, 5);
    for (const auto& entry : corpus) {
        if (entry.family != Family::RL_0S) continue;
        const CtsSystem& sys = entry.system;
        for (const auto& word : words_up_to(sys.g1.terminals, 6)) {
            OracleVerdict o = oracle_member(sys, word);
            REQUIRE(o.status != Verdict::Inconclusive);
            CHECK_MESSAGE(recognize_rt_0s(sys, word) == (o.status == Verdict::Accepted),
                          sys.name, " word=", wstr(word));
        }
    }
}

TEST_CASE("stored counts stay within the additive growth bound") {
    // Each of the <= n+1 steps adds at most the largest positive net-effect
    // entry, on top of the single axiom occurrence.
    auto corpus = make_corpus(6, 17);
    for (const auto& entry : corpus) {
        if (entry.family != Family::RL_0S) continue;
        const CtsSystem& sys = entry.system;
        long long g_max = 0;
        for (const auto& p : sys.g2.productions) {
            for (int d : net_effect(p, sys.g2).delta) g_max = std::max<long long>(g_max, d);
        }
        for (const auto& word : words_up_to(sys.g1.terminals, 6)) {
            ParikhLayers layers = parikh_layers(sys, word);
            CHECK(layers.max_count <=
                  g_max * (static_cast<long long>(word.size()) + 1) + 1);
        }
    }
}
