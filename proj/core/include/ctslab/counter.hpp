#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctslab/parikh.hpp"  // WordAlphabetError
#include "ctslab/system.hpp"

namespace ctslab {

enum class CounterOp : std::uint8_t { Plus, Minus, Zero, None };

struct DiagramNode {
    enum class Tag : std::uint8_t { Pair, Final };
    enum class Mode : std::uint8_t { Bottom, Counter };  // rightmost symbol role

    Tag tag = Tag::Pair;
    std::string state;            // first-component nonterminal (Pair only)
    Mode mode = Mode::Bottom;

    friend bool operator==(const DiagramNode&, const DiagramNode&) = default;
};

struct DiagramEdge {
    int from = 0;  // indices into StateDiagram::nodes
    int to = 0;
    std::string read;  // terminal, empty = no input consumed
    CounterOp op = CounterOp::Zero;
    std::string rewrite_id;
};

/// Directed graph over (first-component nonterminal, rightmost-role) pairs
/// plus one final node; node count is always 2*l1 + 1.
struct StateDiagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
    int initial = 0;
    int final_node = 0;

    int node_index(const std::string& state, DiagramNode::Mode mode) const;
};

struct WrongFamily : std::runtime_error {
    explicit WrongFamily(const std::string& what_) : std::runtime_error(what_) {}
};

StateDiagram build_state_diagram(const CtsSystem& sys);

std::string diagram_to_dot(const StateDiagram& d, const std::string& name);
std::string diagram_to_json(const StateDiagram& d, const std::string& name);

struct CounterRunStats {
    long long max_counter = 0;  // largest stored counter value
    bool cap_hit = false;       // a configuration was discarded by the cap
};

/// Membership for the counter families by layered search over
/// (diagram node, counter) configurations, or over (nonterminal, counter)
/// directly for the zero-test-free shapes. The counter is capped at
/// (n+1)*(2*l1+1)+1 by default so non-reading pump loops terminate.
bool counter_member(const CtsSystem& sys, const Word& word,
                    std::optional<long long> cap = std::nullopt,
                    CounterRunStats* stats = nullptr);

long long default_counter_cap(std::size_t word_len, std::size_t g1_nt_count);

}  // namespace ctslab
