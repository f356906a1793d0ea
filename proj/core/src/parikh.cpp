#include "ctslab/parikh.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ctslab/shape.hpp"

namespace ctslab {

namespace {

using RawConfig = std::pair<int, std::vector<long long>>;  // (state index or -1, counts)

struct CompiledRewrite {
    int lhs;
    int emit;  // -1 = none
    int next;  // -1 = none
    int g2_lhs;
    std::vector<int> delta;
};

std::vector<CompiledRewrite> compile(const CtsSystem& sys) {
    std::vector<CompiledRewrite> out;
    for (const auto& rw : sys.rewrites) {
        const G2Production& p2 = sys.g2.productions[rw.g2];
        CompiledRewrite c;
        c.lhs = index_of(sys.g1.nonterminals, rw.g1.lhs);
        c.emit = rw.g1.emit.empty() ? -1 : index_of(sys.g1.terminals, rw.g1.emit);
        c.next = rw.g1.next.empty() ? -1 : index_of(sys.g1.nonterminals, rw.g1.next);
        c.g2_lhs = sys.g2.nonterminal_index(p2.lhs);
        c.delta = net_effect(p2, sys.g2).delta;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

ParikhLayers parikh_layers(const CtsSystem& sys, const Word& word) {
    SystemShape shape = classify_shape(sys);
    if (shape.family != Family::RL_0S) throw NotZeroSequential();
    if (!shape.real_time) throw NotRealTime();

    std::vector<int> word_idx(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        int idx = index_of(sys.g1.terminals, word[i]);
        if (idx < 0) throw WordAlphabetError(word[i]);
        word_idx[i] = idx;
    }

    const std::size_t n = word.size();
    const std::size_t l2 = sys.g2.nonterminals.size();
    auto rws = compile(sys);

    ParikhLayers out;
    out.layers.resize(n + 1);

    std::set<RawConfig> layer;
    {
        std::vector<long long> init(l2, 0);
        int ax = sys.g2.nonterminal_index(sys.g2.axiom);
        init[static_cast<std::size_t>(ax)] = 1;
        layer.insert({index_of(sys.g1.nonterminals, sys.g1.axiom), std::move(init)});
    }

    auto apply = [&](const RawConfig& cfg, const CompiledRewrite& c) {
        RawConfig succ;
        succ.first = c.next;
        succ.second = cfg.second;
        for (std::size_t j = 0; j < l2; ++j) succ.second[j] += c.delta[j];
        return succ;
    };

    auto emit_layer = [&](const std::set<RawConfig>& configs, std::size_t pos) {
        for (const auto& cfg : configs) {
            ParikhConfig pc;
            pc.state = cfg.first < 0 ? "" : sys.g1.nonterminals[static_cast<std::size_t>(cfg.first)];
            pc.counts = cfg.second;
            for (long long c : cfg.second) out.max_count = std::max(out.max_count, c);
            out.layers[pos].push_back(std::move(pc));
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        std::set<RawConfig> next;
        for (const auto& cfg : layer) {
            if (cfg.first < 0) continue;
            for (const auto& c : rws) {
                if (c.lhs != cfg.first || c.emit != word_idx[i]) continue;
                if (cfg.second[static_cast<std::size_t>(c.g2_lhs)] <= 0) continue;
                next.insert(apply(cfg, c));
            }
        }
        emit_layer(layer, i);
        layer = std::move(next);
    }

    // One trailing non-emitting finisher may close the derivation.
    {
        std::set<RawConfig> closed = layer;
        for (const auto& cfg : layer) {
            if (cfg.first < 0) continue;
            for (const auto& c : rws) {
                if (c.lhs != cfg.first || c.emit != -1 || c.next != -1) continue;
                if (cfg.second[static_cast<std::size_t>(c.g2_lhs)] <= 0) continue;
                closed.insert(apply(cfg, c));
            }
        }
        emit_layer(closed, n);
    }

    // Desk-scale analogue of the logarithmic-space bound.
    long long g_max = 0;
    for (const auto& p : sys.g2.productions) {
        for (int d : net_effect(p, sys.g2).delta) g_max = std::max<long long>(g_max, d);
    }
    assert(out.max_count <= g_max * (static_cast<long long>(n) + 1) + 1);

    return out;
}

bool recognize_rt_0s(const CtsSystem& sys, const Word& word) {
    ParikhLayers layers = parikh_layers(sys, word);
    const auto& last = layers.layers.back();
    return std::any_of(last.begin(), last.end(), [](const ParikhConfig& c) {
        return c.state.empty() &&
               std::all_of(c.counts.begin(), c.counts.end(), [](long long v) { return v == 0; });
    });
}

}  // namespace ctslab
