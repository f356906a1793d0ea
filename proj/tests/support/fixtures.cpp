#include "support/fixtures.hpp"

#include "ctslab/parse.hpp"

namespace ctslab::testing {

Word w(const std::string& chars) {
    Word word;
    for (char c : chars) word.push_back(std::string(1, c));
    return word;
}

std::string wstr(const Word& word) {
    std::string s;
    for (const auto& t : word) s += t;
    return s.empty() ? "~" : s;
}

CtsSystem sys_anbn_strict() {
    return parse_system(R"(system anbn-strict
type rl-rb
g1.terminals a b
g1.nonterminals S1 X
g2.nonterminals Z2
g2.axiom Z2
rewrite r1 : S1 -> a S1 ; Z2 -> Z2 Z2
rewrite r2 : S1 -> X ; Z2 -> ~
rewrite r3 : X -> b X ; Z2 -> ~
rewrite r4 : X -> b ; Z2 -> ~
)");
}

CtsSystem sys_anbn() {
    return parse_system(R"(system anbn
type rl-rb
g1.terminals a b
g1.nonterminals S1 X
g2.nonterminals S2 Z2
g2.axiom S2
rewrite r1 : S1 -> S1 ; S2 -> S2 Z2
rewrite r2 : S1 -> a S1 ; Z2 -> Z2 Z2
rewrite r3 : S1 -> X ; Z2 -> ~
rewrite r4 : X -> b X ; Z2 -> ~
rewrite r5 : X -> ~ ; S2 -> ~
)");
}

CtsSystem sys_prefix_balanced() {
    return parse_system(R"(system prefix-balanced
type rl-rb
g1.terminals a b
g1.nonterminals S1
g2.nonterminals Z2
g2.axiom Z2
rewrite r1 : S1 -> a S1 ; Z2 -> Z2 Z2
rewrite r2 : S1 -> b S1 ; Z2 -> ~
rewrite r3 : S1 -> ~ ; Z2 -> ~
)");
}

CtsSystem sys_prefix_balanced_marked() {
    return parse_system(R"(system prefix-balanced-marked
type rl-rb
g1.terminals a b
g1.nonterminals S1
g2.nonterminals S2 Z2
g2.axiom S2
rewrite r1 : S1 -> a S1 ; S2 -> S2 Z2
rewrite r2 : S1 -> a S1 ; Z2 -> Z2 Z2
rewrite r3 : S1 -> b S1 ; Z2 -> ~
rewrite r4 : S1 -> ~ ; S2 -> ~
)");
}

CtsSystem sys_balanced_then_c() {
    return parse_system(R"(system balanced-then-c
type rl-0s
g1.terminals a b c
g1.nonterminals S1
g2.nonterminals B1 B2
g2.axiom B1
rewrite r1 : S1 -> a S1 ; B1 -> B1 B2
rewrite r2 : S1 -> b S1 ; B2 -> ~
rewrite r3 : S1 -> c ; B1 -> ~
)");
}

CtsSystem sys_balanced_plus_b() {
    return parse_system(R"(system balanced-plus-b
type rl-0s
g1.terminals a b
g1.nonterminals S1
g2.nonterminals Z2
g2.axiom Z2
rewrite r1 : S1 -> a S1 ; Z2 -> Z2 Z2
rewrite r2 : S1 -> b S1 ; Z2 -> ~
rewrite r3 : S1 -> b ; Z2 -> ~
)");
}

CtsSystem sys_segmented_ab() {
    return parse_system(R"(system segmented-ab
type rl-rb
g1.terminals a b
g1.nonterminals S1
g2.nonterminals S2 Z2
g2.axiom S2
rewrite r1 : S1 -> S1 ; S2 -> S2 Z2
rewrite r2 : S1 -> a S1 ; Z2 -> Z2 Z2
rewrite r3 : S1 -> b S1 ; Z2 -> ~
rewrite r4 : S1 -> ~ ; S2 -> ~
)");
}

CtsSystem sys_flat_finisher() {
    return parse_system(R"(system flat-finisher
type rl-rb
g1.terminals a b
g1.nonterminals S1
g2.nonterminals S2 Z2
g2.axiom S2
rewrite r1 : S1 -> a S1 ; S2 -> S2
rewrite r2 : S1 -> b ; S2 -> ~
)");
}

}  // namespace ctslab::testing
