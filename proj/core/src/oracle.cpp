#include "ctslab/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace ctslab {

OracleLimits default_limits(std::size_t word_len) {
    OracleLimits lim;
    lim.max_form2 = 4 * (word_len + 2);
    lim.max_steps = 64 * (word_len + 2);
    lim.max_frontier = 1'000'000;
    return lim;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return "accepted";
        case Verdict::Rejected: return "rejected";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Search configuration: emitted-prefix length, first-component nonterminal
// (-1 = none) and the second-component form. For 0-sequential systems the
// form is an occurrence-count vector, for right-boundary systems the symbol
// sequence; both as small int vectors keyed by nonterminal index.
struct Key {
    int len;
    int active;
    std::vector<int> form2;

    friend auto operator<=>(const Key&, const Key&) = default;
};

struct CompiledRewrite {
    int lhs;       // g1 nonterminal index
    int emit;      // terminal index, -1 = none
    int next;      // g1 nonterminal index, -1 = none
    int g2_lhs;    // g2 nonterminal index
    std::vector<int> g2_rhs;  // g2 nonterminal indices
    std::vector<int> delta;   // net effect (0S only)
    const std::string* id;
};

struct Node {
    Key key;
    int parent;   // index into nodes, -1 for the root
    int via;      // rewrite index used to reach this node
    std::size_t depth;
};

std::size_t form2_size(const Key& k, bool zero_sequential) {
    if (!zero_sequential) return k.form2.size();
    long long sum = std::accumulate(k.form2.begin(), k.form2.end(), 0LL);
    return static_cast<std::size_t>(sum);
}

}  // namespace

OracleVerdict oracle_member(const CtsSystem& sys, const Word& word,
                            const OracleLimits& lim_in) {
    OracleLimits lim = lim_in;
    OracleLimits defaults = default_limits(word.size());
    if (lim.max_form2 == 0) lim.max_form2 = defaults.max_form2;
    if (lim.max_steps == 0) lim.max_steps = defaults.max_steps;
    if (lim.max_frontier == 0) lim.max_frontier = defaults.max_frontier;

    const bool zs = sys.g2.kind == G2Kind::ZeroSequential;
    const int n = static_cast<int>(word.size());
    const std::size_t l2 = sys.g2.nonterminals.size();

    std::vector<int> word_idx(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        word_idx[i] = index_of(sys.g1.terminals, word[i]);  // -1 never matches

    std::vector<CompiledRewrite> rws;
    rws.reserve(sys.rewrites.size());
    for (const auto& rw : sys.rewrites) {
        if (rw.g2 >= sys.g2.productions.size()) continue;
        const G2Production& p2 = sys.g2.productions[rw.g2];
        CompiledRewrite c;
        c.lhs = index_of(sys.g1.nonterminals, rw.g1.lhs);
        c.emit = rw.g1.emit.empty() ? -1 : index_of(sys.g1.terminals, rw.g1.emit);
        c.next = rw.g1.next.empty() ? -1 : index_of(sys.g1.nonterminals, rw.g1.next);
        c.g2_lhs = sys.g2.nonterminal_index(p2.lhs);
        for (const auto& s : p2.rhs) c.g2_rhs.push_back(sys.g2.nonterminal_index(s));
        c.delta = net_effect(p2, sys.g2).delta;
        c.id = &rw.id;
        rws.push_back(std::move(c));
    }

    Key root;
    root.len = 0;
    root.active = index_of(sys.g1.nonterminals, sys.g1.axiom);
    if (zs) {
        root.form2.assign(l2, 0);
        int ax = sys.g2.nonterminal_index(sys.g2.axiom);
        if (ax >= 0) root.form2[static_cast<std::size_t>(ax)] = 1;
    } else {
        root.form2 = {sys.g2.nonterminal_index(sys.g2.axiom)};
    }

    std::vector<Node> nodes;
    std::map<Key, int> seen;
    std::vector<std::size_t> layer_count(static_cast<std::size_t>(n) + 1, 0);
    LimitKind limit_hit = LimitKind::None;

    auto note_limit = [&](LimitKind k) {
        if (limit_hit == LimitKind::None) limit_hit = k;
    };

    std::deque<int> queue;
    nodes.push_back({root, -1, -1, 0});
    seen.emplace(root, 0);
    layer_count[0] = 1;
    queue.push_back(0);

    int accept_node = -1;
    auto is_accept = [&](const Key& k) {
        if (k.len != n || k.active != -1) return false;
        return form2_size(k, zs) == 0;
    };
    if (is_accept(root)) accept_node = 0;

    while (!queue.empty() && accept_node < 0) {
        int cur = queue.front();
        queue.pop_front();
        Node node = nodes[static_cast<std::size_t>(cur)];
        if (node.key.active < 0) continue;  // first component finished, no steps left
        if (node.depth >= lim.max_steps) {
            note_limit(LimitKind::Steps);
            continue;
        }

        for (std::size_t ri = 0; ri < rws.size(); ++ri) {
            const CompiledRewrite& c = rws[ri];
            if (c.lhs != node.key.active) continue;

            int new_len = node.key.len;
            if (c.emit >= 0) {
                if (new_len >= n || word_idx[static_cast<std::size_t>(new_len)] != c.emit)
                    continue;
                ++new_len;
            }

            Key succ;
            succ.len = new_len;
            succ.active = c.next;
            if (zs) {
                if (c.g2_lhs < 0 ||
                    node.key.form2[static_cast<std::size_t>(c.g2_lhs)] <= 0)
                    continue;
                succ.form2 = node.key.form2;
                for (std::size_t j = 0; j < succ.form2.size(); ++j)
                    succ.form2[j] += c.delta[j];
            } else {
                if (node.key.form2.empty() || node.key.form2.back() != c.g2_lhs) continue;
                succ.form2 = node.key.form2;
                succ.form2.pop_back();
                succ.form2.insert(succ.form2.end(), c.g2_rhs.begin(), c.g2_rhs.end());
            }

            if (form2_size(succ, zs) > lim.max_form2) {
                note_limit(LimitKind::Form2Size);
                continue;
            }
            if (seen.count(succ)) continue;
            if (layer_count[static_cast<std::size_t>(succ.len)] >= lim.max_frontier) {
                note_limit(LimitKind::Frontier);
                continue;
            }

            int id = static_cast<int>(nodes.size());
            nodes.push_back({succ, cur, static_cast<int>(ri), node.depth + 1});
            seen.emplace(std::move(succ), id);
            layer_count[static_cast<std::size_t>(new_len)] += 1;
            if (is_accept(nodes.back().key)) {
                accept_node = id;
                break;
            }
            queue.push_back(id);
        }
    }

    OracleVerdict verdict;
    if (accept_node >= 0) {
        verdict.status = Verdict::Accepted;
        std::vector<std::string> path;
        for (int cur = accept_node; cur >= 0 && nodes[static_cast<std::size_t>(cur)].via >= 0;
             cur = nodes[static_cast<std::size_t>(cur)].parent) {
            path.push_back(*rws[static_cast<std::size_t>(
                                    nodes[static_cast<std::size_t>(cur)].via)]
                                .id);
        }
        std::reverse(path.begin(), path.end());
        verdict.witness = std::move(path);
    } else if (limit_hit != LimitKind::None) {
        verdict.status = Verdict::Inconclusive;
        verdict.limit_hit = limit_hit;
    } else {
        verdict.status = Verdict::Rejected;
    }
    return verdict;
}

Enumeration enumerate_language(const CtsSystem& sys, std::size_t max_len,
                               const OracleLimits& lim) {
    Enumeration result;
    std::vector<Word> frontier{{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& w : frontier) {
            OracleVerdict v = oracle_member(sys, w, lim);
            if (v.status == Verdict::Accepted) result.words.push_back(w);
            if (v.status == Verdict::Inconclusive) result.complete = false;
        }
        if (len == max_len) break;
        std::vector<Word> next;
        next.reserve(frontier.size() * std::max<std::size_t>(1, sys.g1.terminals.size()));
        for (const auto& w : frontier) {
            for (const auto& t : sys.g1.terminals) {
                Word ext = w;
                ext.push_back(t);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return result;
}

Snapshot replay_witness(const CtsSystem& sys, const std::vector<std::string>& witness) {
    Snapshot snap = initial_snapshot(sys);
    for (const auto& id : witness) snap = derive_step(sys, snap, id);
    return snap;
}

}  // namespace ctslab
