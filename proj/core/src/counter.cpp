#include "ctslab/counter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctslab/shape.hpp"
#include "json.hpp"

namespace ctslab {

namespace {

std::string node_label(const DiagramNode& n, const std::string& bottom,
                       const std::string& counter) {
    if (n.tag == DiagramNode::Tag::Final) return "F";
    return "(" + n.state + "," +
           (n.mode == DiagramNode::Mode::Bottom ? bottom : counter) + ")";
}

std::string op_suffix(CounterOp op) {
    switch (op) {
        case CounterOp::Plus: return "/+";
        case CounterOp::Minus: return "/-";
        case CounterOp::Zero: return "/0";
        case CounterOp::None: return "";
    }
    return "";
}

}  // namespace

int StateDiagram::node_index(const std::string& state, DiagramNode::Mode mode) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const DiagramNode& n = nodes[i];
        if (n.tag == DiagramNode::Tag::Pair && n.state == state && n.mode == mode)
            return static_cast<int>(i);
    }
    return -1;
}

StateDiagram build_state_diagram(const CtsSystem& sys) {
    SystemShape shape = classify_shape(sys);
    if (shape.family != Family::RL_RBc && shape.family != Family::RL1_RBc)
        throw WrongFamily("state diagram needs a counter system with a bottom marker, got " +
                          family_name(shape.family));

    const std::string& s2 = shape.bottom_symbol;
    const std::string& z2 = shape.counter_symbol;

    StateDiagram d;
    for (const auto& nt : sys.g1.nonterminals) {
        d.nodes.push_back({DiagramNode::Tag::Pair, nt, DiagramNode::Mode::Bottom});
        d.nodes.push_back({DiagramNode::Tag::Pair, nt, DiagramNode::Mode::Counter});
    }
    d.nodes.push_back({DiagramNode::Tag::Final, "", DiagramNode::Mode::Bottom});
    d.final_node = static_cast<int>(d.nodes.size()) - 1;
    d.initial = d.node_index(sys.g1.axiom, DiagramNode::Mode::Bottom);

    auto add = [&](int from, int to, const std::string& read, CounterOp op,
                   const std::string& id) {
        d.edges.push_back({from, to, read, op, id});
    };

    for (const auto& rw : sys.rewrites) {
        const G2Production& p2 = sys.g2.productions[rw.g2];
        const std::string& x = rw.g1.emit;  // may be empty
        if (!rw.g1.next.empty()) {
            // X -> xY paired with the four counter production groups.
            int from_b = d.node_index(rw.g1.lhs, DiagramNode::Mode::Bottom);
            int from_c = d.node_index(rw.g1.lhs, DiagramNode::Mode::Counter);
            int to_b = d.node_index(rw.g1.next, DiagramNode::Mode::Bottom);
            int to_c = d.node_index(rw.g1.next, DiagramNode::Mode::Counter);
            if (p2.lhs == s2 && p2.rhs.size() == 1 && p2.rhs[0] == s2) {
                add(from_b, to_b, x, CounterOp::Zero, rw.id);
            } else if (p2.lhs == z2 && p2.rhs.size() == 1 && p2.rhs[0] == z2) {
                add(from_c, to_c, x, CounterOp::Zero, rw.id);
            } else if (p2.lhs == s2 && p2.rhs.size() == 2) {
                add(from_b, to_c, x, CounterOp::Plus, rw.id);
            } else if (p2.lhs == z2 && p2.rhs.size() == 2) {
                add(from_c, to_c, x, CounterOp::Plus, rw.id);
            } else if (p2.lhs == z2 && p2.rhs.empty()) {
                // Deleting a counter symbol may or may not expose the bottom
                // marker; both targets are kept and the counter value decides.
                add(from_c, to_c, x, CounterOp::Minus, rw.id);
                add(from_c, to_b, x, CounterOp::Minus, rw.id);
            }
            // s2 -> ~ with a continuing first component leaves the second
            // component empty while a nonterminal remains: never on a
            // successful derivation, so no edge.
        } else {
            // X -> x finishing the first component: only the bottom-marker
            // deletion can finish the second one at the same step.
            if (p2.lhs == s2 && p2.rhs.empty()) {
                int from_b = d.node_index(rw.g1.lhs, DiagramNode::Mode::Bottom);
                add(from_b, d.final_node, x, CounterOp::None, rw.id);
            }
        }
    }
    return d;
}

std::string diagram_to_dot(const StateDiagram& d, const std::string& name) {
    // Roles are rendered with the conventional marker names; node identity
    // comes from the first-component nonterminal and the mode.
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const DiagramNode& n = d.nodes[i];
        std::string label = node_label(n, "S2", "Z2");
        bool doubled = static_cast<int>(i) == d.initial || n.tag == DiagramNode::Tag::Final;
        out << "  \"" << label << "\" [shape=" << (doubled ? "doublecircle" : "circle")
            << "];\n";
    }
    for (const auto& e : d.edges) {
        std::string read = e.read.empty() ? "~" : e.read;
        out << "  \"" << node_label(d.nodes[static_cast<std::size_t>(e.from)], "S2", "Z2")
            << "\" -> \""
            << node_label(d.nodes[static_cast<std::size_t>(e.to)], "S2", "Z2")
            << "\" [label=\"" << read << op_suffix(e.op) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string diagram_to_json(const StateDiagram& d, const std::string& name) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const DiagramNode& n = d.nodes[i];
        nlohmann::ordered_json nj;
        nj["id"] = i;
        nj["label"] = node_label(n, "S2", "Z2");
        nj["final"] = n.tag == DiagramNode::Tag::Final;
        nj["initial"] = static_cast<int>(i) == d.initial;
        j["nodes"].push_back(std::move(nj));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : d.edges) {
        nlohmann::ordered_json ej;
        ej["from"] = e.from;
        ej["to"] = e.to;
        ej["read"] = e.read.empty() ? "~" : e.read;
        ej["op"] = op_suffix(e.op).empty() ? "final" : op_suffix(e.op).substr(1);
        ej["rewrite"] = e.rewrite_id;
        j["edges"].push_back(std::move(ej));
    }
    return j.dump(2);
}

long long default_counter_cap(std::size_t word_len, std::size_t g1_nt_count) {
    return static_cast<long long>(word_len + 1) *
               static_cast<long long>(2 * g1_nt_count + 1) +
           1;
}

namespace {

using Config = std::pair<int, long long>;  // (node or state index, counter)

struct Search {
    long long cap;
    CounterRunStats* stats;
    bool cap_hit = false;
    long long max_counter = 0;

    bool admit(long long nz) {
        if (nz > cap) {
            cap_hit = true;
            return false;
        }
        max_counter = std::max(max_counter, nz);
        return true;
    }

    void finish() {
        if (stats) {
            stats->max_counter = max_counter;
            stats->cap_hit = cap_hit;
        }
    }
};

// Walk of the state diagram. A configuration is stored only when its counter
// is coherent with the node's mode: bottom-marker nodes require 0, counter
// nodes require at least 1. Both rules are needed for fidelity; either side
// of the minus-edge guess is pruned when the counter disproves it.
bool member_with_diagram(const StateDiagram& d, const std::vector<std::string>& word,
                         Search& search) {
    auto admissible = [&](int node, long long nz) {
        const DiagramNode& n = d.nodes[static_cast<std::size_t>(node)];
        if (n.tag == DiagramNode::Tag::Final) return nz == 0;
        if (n.mode == DiagramNode::Mode::Bottom) return nz == 0;
        return nz >= 1;
    };

    auto step = [&](const Config& cfg, const DiagramEdge& e,
                    std::set<Config>& out) {
        long long nz = cfg.second;
        switch (e.op) {
            case CounterOp::Plus: nz += 1; break;
            case CounterOp::Minus:
                if (nz == 0) return;
                nz -= 1;
                break;
            case CounterOp::Zero:
            case CounterOp::None: break;
        }
        if (!admissible(e.to, nz)) return;
        if (!search.admit(nz)) return;
        out.insert({e.to, nz});
    };

    std::set<Config> layer{{d.initial, 0}};
    const std::size_t n = word.size();
    for (std::size_t pos = 0; pos <= n; ++pos) {
        // Close under non-reading edges.
        std::vector<Config> work(layer.begin(), layer.end());
        while (!work.empty()) {
            Config cfg = work.back();
            work.pop_back();
            for (const auto& e : d.edges) {
                if (e.from != cfg.first || !e.read.empty()) continue;
                std::set<Config> added;
                step(cfg, e, added);
                for (const auto& c : added) {
                    if (layer.insert(c).second) work.push_back(c);
                }
            }
        }
        if (pos == n) break;
        std::set<Config> next;
        for (const auto& cfg : layer) {
            for (const auto& e : d.edges) {
                if (e.from != cfg.first || e.read != word[pos]) continue;
                step(cfg, e, next);
            }
        }
        layer = std::move(next);
    }

    return std::any_of(layer.begin(), layer.end(), [&](const Config& c) {
        return d.nodes[static_cast<std::size_t>(c.first)].tag == DiagramNode::Tag::Final;
    });
}

// Direct simulation for the zero-test-free shapes: the configuration is the
// first-component nonterminal (-1 once finished) plus the total count of
// second-component symbols. Every production rewrites the counting symbol,
// so the count must be positive for any step.
bool member_counter_net(const CtsSystem& sys, const std::vector<std::string>& word,
                        Search& search) {
    struct Move {
        int lhs;
        int emit;  // terminal index or -1
        int next;  // nonterminal index or -1
        int delta;
    };
    std::vector<Move> moves;
    for (const auto& rw : sys.rewrites) {
        const G2Production& p2 = sys.g2.productions[rw.g2];
        Move m;
        m.lhs = index_of(sys.g1.nonterminals, rw.g1.lhs);
        m.emit = rw.g1.emit.empty() ? -1 : index_of(sys.g1.terminals, rw.g1.emit);
        m.next = rw.g1.next.empty() ? -1 : index_of(sys.g1.nonterminals, rw.g1.next);
        m.delta = static_cast<int>(p2.rhs.size()) - 1;
        moves.push_back(m);
    }

    std::vector<int> word_idx(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        word_idx[i] = index_of(sys.g1.terminals, word[i]);

    auto step = [&](const Config& cfg, const Move& m, std::set<Config>& out) {
        if (cfg.first < 0 || m.lhs != cfg.first) return;
        if (cfg.second < 1) return;
        long long nz = cfg.second + m.delta;
        if (m.next < 0 && nz != 0) return;  // finished with symbols left: dead
        if (!search.admit(nz)) return;
        out.insert({m.next, nz});
    };

    std::set<Config> layer{{index_of(sys.g1.nonterminals, sys.g1.axiom), 1}};
    search.admit(1);
    const std::size_t n = word.size();
    for (std::size_t pos = 0; pos <= n; ++pos) {
        std::vector<Config> work(layer.begin(), layer.end());
        while (!work.empty()) {
            Config cfg = work.back();
            work.pop_back();
            for (const auto& m : moves) {
                if (m.emit >= 0) continue;
                std::set<Config> added;
                step(cfg, m, added);
                for (const auto& c : added) {
                    if (layer.insert(c).second) work.push_back(c);
                }
            }
        }
        if (pos == n) break;
        std::set<Config> next;
        for (const auto& cfg : layer) {
            for (const auto& m : moves) {
                if (m.emit != word_idx[pos]) continue;
                step(cfg, m, next);
            }
        }
        layer = std::move(next);
    }

    return layer.count({-1, 0}) > 0;
}

}  // namespace

bool counter_member(const CtsSystem& sys, const Word& word,
                    std::optional<long long> cap, CounterRunStats* stats) {
    SystemShape shape = classify_shape(sys);
    if (!is_counter_family(shape.family))
        throw WrongFamily("counter recognizer needs a counter family, got " +
                          family_name(shape.family));
    for (const auto& sym : word) {
        if (!sys.g1.is_terminal(sym)) throw WordAlphabetError(sym);
    }

    Search search;
    search.cap = cap.value_or(default_counter_cap(word.size(), sys.g1.nonterminals.size()));
    search.stats = stats;

    bool accepted;
    if (shape.family == Family::RL_RBc || shape.family == Family::RL1_RBc) {
        StateDiagram d = build_state_diagram(sys);
        accepted = member_with_diagram(d, word, search);
    } else {
        accepted = member_counter_net(sys, word, search);
    }
    search.finish();
    return accepted;
}

}  // namespace ctslab
