#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctslab {

/// A word over a grammar's terminal alphabet, one token per symbol.
using Word = std::vector<std::string>;

/// Right-linear production X -> e N. Empty `emit` stands for the empty
/// string, empty `next` for "no successor nonterminal". The four legal
/// shapes are X->aY, X->a, X->Y (chain) and X->~.
struct RlProduction {
    std::string lhs;
    std::string emit;
    std::string next;

    bool is_chain() const { return emit.empty() && !next.empty(); }
    bool is_final() const { return next.empty(); }

    friend bool operator==(const RlProduction&, const RlProduction&) = default;
    friend auto operator<=>(const RlProduction&, const RlProduction&) = default;
};

/// Production of the second component: lhs -> rhs, rhs a (possibly empty)
/// sequence of second-component nonterminals.
struct G2Production {
    std::string lhs;
    std::vector<std::string> rhs;

    friend bool operator==(const G2Production&, const G2Production&) = default;
    friend auto operator<=>(const G2Production&, const G2Production&) = default;
};

struct RlGrammar {
    std::vector<std::string> terminals;
    std::vector<std::string> nonterminals;  // ordered, first is the default axiom
    std::string axiom;
    std::vector<RlProduction> productions;

    bool is_terminal(const std::string& s) const;
    bool is_nonterminal(const std::string& s) const;
};

/// How the second component selects the occurrence it rewrites.
enum class G2Kind {
    ZeroSequential,  // any occurrence
    RightBoundary,   // rightmost symbol only
};

struct SecondGrammar {
    G2Kind kind = G2Kind::ZeroSequential;
    std::vector<std::string> nonterminals;  // the whole alphabet of the component
    std::string axiom;
    std::vector<G2Production> productions;

    bool is_nonterminal(const std::string& s) const;
    /// Index into `nonterminals`, or -1.
    int nonterminal_index(const std::string& s) const;
};

/// A coordinated rewrite: one production per component, applied in lockstep.
/// The first-component production is stored inline, the second one by index
/// into SecondGrammar::productions.
struct Rewrite {
    std::string id;
    RlProduction g1;
    std::size_t g2 = 0;
};

struct CtsSystem {
    std::string name;
    RlGrammar g1;
    SecondGrammar g2;
    std::vector<Rewrite> rewrites;

    const Rewrite* find_rewrite(const std::string& id) const;
};

/// Signed occurrence change a second-component production causes per
/// nonterminal, indexed like SecondGrammar::nonterminals.
struct NetEffect {
    std::vector<int> delta;

    friend bool operator==(const NetEffect&, const NetEffect&) = default;
};

struct UnknownRewrite : std::runtime_error {
    explicit UnknownRewrite(const std::string& id)
        : std::runtime_error("unknown rewrite: " + id) {}
};

NetEffect net_effect(const G2Production& prod, const SecondGrammar& g2);
NetEffect net_effect(const CtsSystem& sys, const std::string& rewrite_id);

/// Parikh vector of a symbol sequence over the second-component alphabet.
std::vector<long long> parikh(const std::vector<std::string>& form,
                              const SecondGrammar& g2);

int index_of(const std::vector<std::string>& items, const std::string& s);

}  // namespace ctslab
