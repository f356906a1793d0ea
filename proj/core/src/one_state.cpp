#include "ctslab/one_state.hpp"

#include <algorithm>

#include "ctslab/counter.hpp"
#include "ctslab/shape.hpp"

namespace ctslab {

std::string rule_kind_name(RuleKind k) {
    switch (k) {
        case RuleKind::EmitAtZero: return "emit-at-zero";
        case RuleKind::EmitPushAtZero: return "emit-push-at-zero";
        case RuleKind::EmitPush: return "emit-push";
        case RuleKind::EmitKeep: return "emit-keep";
        case RuleKind::EmitPop: return "emit-pop";
        case RuleKind::FinishEmit: return "finish-emit";
        case RuleKind::RechargeAtZero: return "recharge-at-zero";
        case RuleKind::SilentPush: return "silent-push";
        case RuleKind::SilentPop: return "silent-pop";
        case RuleKind::FinishSilent: return "finish-silent";
        case RuleKind::FinishPopLast: return "finish-pop-last";
    }
    return "?";
}

std::string case_id_name(CaseId c) {
    switch (c) {
        case CaseId::FlatWithFinisher: return "flat-with-finisher";
        case CaseId::FlatSilentFinish: return "flat-silent-finish";
        case CaseId::FreePushPop: return "free-push-pop";
        case CaseId::OneSided: return "one-sided";
        case CaseId::AlternationOverlap: return "alternation-overlap";
        case CaseId::AlternationExclusive: return "alternation-exclusive";
        case CaseId::AlternationMixed: return "alternation-mixed";
        case CaseId::PushWithDrain: return "push-with-drain";
        case CaseId::FreePushPopFinisher: return "free-push-pop-finisher";
        case CaseId::NeutralFreePushPop: return "neutral-free-push-pop";
        case CaseId::SegmentedNeutral: return "segmented-neutral";
        case CaseId::Segmented: return "segmented";
        case CaseId::SegmentedMixed: return "segmented-mixed";
        case CaseId::MarkedPushOverlap: return "marked-push-overlap";
        case CaseId::MarkedPushExclusive: return "marked-push-exclusive";
        case CaseId::Fallback: return "fallback";
    }
    return "?";
}

bool RuleProfile::produces(const std::string& terminal, RuleKind k) const {
    auto it = producers.find(terminal);
    return it != producers.end() && it->second.count(k) > 0;
}

namespace {

bool matches(const G2Production& p, const std::string& lhs,
             std::initializer_list<const char*> rhs_roles,
             const std::string& s, const std::string& z) {
    auto resolve = [&](const char* role) -> const std::string& {
        return role[0] == 's' ? s : z;
    };
    if (p.lhs != lhs) return false;
    if (p.rhs.size() != rhs_roles.size()) return false;
    std::size_t i = 0;
    for (const char* role : rhs_roles) {
        if (p.rhs[i++] != resolve(role)) return false;
    }
    return true;
}

}  // namespace

RuleProfile classify_rules(const CtsSystem& sys) {
    SystemShape shape = classify_shape(sys);
    if (!is_one_state_family(shape.family))
        throw WrongFamily("rule classification needs a one-state counter system, got " +
                          family_name(shape.family));

    const std::string& s = shape.bottom_symbol;   // empty for the zero-test-free shapes
    const std::string& z = shape.counter_symbol;
    const bool with_bottom = !s.empty();

    RuleProfile profile;
    for (const auto& rw : sys.rewrites) {
        const G2Production& p = sys.g2.productions[rw.g2];
        const std::string& x = rw.g1.emit;
        const bool cont = !rw.g1.next.empty();
        const bool emits = !x.empty();

        RuleType type{RuleKind::FinishSilent, x};
        bool ok = true;
        if (with_bottom) {
            if (cont && emits) {
                if (matches(p, s, {"s"}, s, z)) type.kind = RuleKind::EmitAtZero;
                else if (matches(p, s, {"s", "z"}, s, z)) type.kind = RuleKind::EmitPushAtZero;
                else if (matches(p, z, {"z", "z"}, s, z)) type.kind = RuleKind::EmitPush;
                else if (matches(p, z, {"z"}, s, z)) type.kind = RuleKind::EmitKeep;
                else if (matches(p, z, {}, s, z)) type.kind = RuleKind::EmitPop;
                else ok = false;
            } else if (!cont && emits) {
                if (matches(p, s, {}, s, z)) type.kind = RuleKind::FinishEmit;
                else ok = false;
            } else if (cont && !emits) {
                if (matches(p, s, {"s", "z"}, s, z)) type.kind = RuleKind::RechargeAtZero;
                else if (matches(p, z, {"z", "z"}, s, z)) type.kind = RuleKind::SilentPush;
                else if (matches(p, z, {}, s, z)) type.kind = RuleKind::SilentPop;
                else ok = false;  // pure no-op loops carry no classification
            } else {
                if (matches(p, s, {}, s, z)) type.kind = RuleKind::FinishSilent;
                else ok = false;  // deleting a counter symbol cannot finish here
            }
        } else {
            if (cont && emits) {
                if (matches(p, z, {"z", "z"}, s, z)) type.kind = RuleKind::EmitPush;
                else if (matches(p, z, {"z"}, s, z)) type.kind = RuleKind::EmitKeep;
                else if (matches(p, z, {}, s, z)) type.kind = RuleKind::EmitPop;
                else ok = false;
            } else if (cont && !emits) {
                if (matches(p, z, {"z", "z"}, s, z)) type.kind = RuleKind::SilentPush;
                else if (matches(p, z, {}, s, z)) type.kind = RuleKind::SilentPop;
                else ok = false;
            } else {
                // Finishing keeps the word only if the very last counter
                // symbol is deleted at the same step.
                if (matches(p, z, {}, s, z)) type.kind = RuleKind::FinishPopLast;
                else ok = false;
            }
        }
        if (!ok) throw UnclassifiableRewrite(rw.id);

        profile.per_rewrite[rw.id] = type;
        profile.kinds.insert(type.kind);
        if (emits) profile.producers[x].insert(type.kind);
    }
    return profile;
}

TerminalPartition terminal_partition(const RuleProfile& profile) {
    TerminalPartition part;
    for (const auto& [t, kinds] : profile.producers) {
        bool push = kinds.count(RuleKind::EmitPush) > 0;
        bool pop = kinds.count(RuleKind::EmitPop) > 0;
        if (push && pop) part.mixed.insert(t);
        else if (push) part.push_only.insert(t);
        else if (pop) part.pop_only.insert(t);
    }
    return part;
}

namespace {

using KindSet = std::set<RuleKind>;

bool producible(const RuleProfile& p, const std::string& t,
                std::initializer_list<RuleKind> kinds) {
    for (RuleKind k : kinds) {
        if (p.produces(t, k)) return true;
    }
    return false;
}

enum class Overlap { AllBoth, AllExclusive, Mixed, SomeNone };

Overlap producer_overlap(const RuleProfile& p, const Word& w, RuleKind a, RuleKind b) {
    bool any_both = false, any_single = false;
    for (const auto& t : w) {
        bool pa = p.produces(t, a), pb = p.produces(t, b);
        if (!pa && !pb) return Overlap::SomeNone;
        if (pa && pb) any_both = true;
        else any_single = true;
    }
    if (any_both && any_single) return Overlap::Mixed;
    if (any_single) return Overlap::AllExclusive;
    return Overlap::AllBoth;
}

}  // namespace

CaseId detect_case(const RuleProfile& profile, const Word& word) {
    const KindSet& K = profile.kinds;
    const bool flat = std::all_of(K.begin(), K.end(), [](RuleKind k) {
        return k == RuleKind::EmitAtZero || k == RuleKind::FinishEmit ||
               k == RuleKind::FinishSilent;
    });
    if (flat) {
        bool fe = profile.has(RuleKind::FinishEmit);
        bool fs = profile.has(RuleKind::FinishSilent);
        if (fe && fs) {
            if (!word.empty() && profile.produces(word.back(), RuleKind::FinishEmit))
                return CaseId::FlatWithFinisher;
            return CaseId::FlatSilentFinish;
        }
        if (fs) return CaseId::FlatSilentFinish;
        return CaseId::FlatWithFinisher;
    }

    if (K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPush, RuleKind::EmitPop,
                     RuleKind::FinishSilent}) {
        switch (producer_overlap(profile, word, RuleKind::EmitPush, RuleKind::EmitPop)) {
            case Overlap::AllBoth: return CaseId::FreePushPop;
            case Overlap::AllExclusive: return CaseId::Segmented;
            case Overlap::Mixed: return CaseId::SegmentedMixed;
            case Overlap::SomeNone: return CaseId::Fallback;
        }
    }

    if (K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPop, RuleKind::FinishSilent} ||
        K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPop, RuleKind::SilentPush,
                     RuleKind::FinishSilent} ||
        K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPush, RuleKind::FinishSilent} ||
        K == KindSet{RuleKind::EmitPushAtZero, RuleKind::EmitPush, RuleKind::FinishSilent}) {
        return CaseId::OneSided;
    }

    if (K == KindSet{RuleKind::EmitPushAtZero, RuleKind::EmitPop, RuleKind::FinishSilent}) {
        switch (producer_overlap(profile, word, RuleKind::EmitPushAtZero, RuleKind::EmitPop)) {
            case Overlap::AllBoth: return CaseId::AlternationOverlap;
            case Overlap::AllExclusive: return CaseId::AlternationExclusive;
            case Overlap::Mixed: return CaseId::AlternationMixed;
            case Overlap::SomeNone: return CaseId::Fallback;
        }
    }

    if (K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPush, RuleKind::SilentPop,
                     RuleKind::FinishSilent}) {
        return CaseId::PushWithDrain;
    }

    if (K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPush, RuleKind::EmitPop,
                     RuleKind::FinishEmit, RuleKind::SilentPop}) {
        bool all_both = std::all_of(word.begin(), word.end(), [&](const std::string& t) {
            return profile.produces(t, RuleKind::EmitPush) &&
                   profile.produces(t, RuleKind::EmitPop);
        });
        return all_both ? CaseId::FreePushPopFinisher : CaseId::Fallback;
    }

    if (K == KindSet{RuleKind::RechargeAtZero, RuleKind::EmitPush, RuleKind::EmitKeep,
                     RuleKind::EmitPop, RuleKind::FinishSilent}) {
        bool neutral_free = true, exclusive = true;
        for (const auto& t : word) {
            bool push = profile.produces(t, RuleKind::EmitPush);
            bool keep = profile.produces(t, RuleKind::EmitKeep);
            bool pop = profile.produces(t, RuleKind::EmitPop);
            int count = int(push) + int(keep) + int(pop);
            if (count == 0) return CaseId::Fallback;
            if (!((push && pop) || (keep && !push && !pop))) neutral_free = false;
            if (count != 1) exclusive = false;
        }
        if (neutral_free) return CaseId::NeutralFreePushPop;
        if (exclusive) return CaseId::SegmentedNeutral;
        return CaseId::Fallback;
    }

    if (K == KindSet{RuleKind::EmitPushAtZero, RuleKind::EmitPush, RuleKind::EmitPop,
                     RuleKind::FinishSilent}) {
        bool overlap = true;
        for (const auto& [t, kinds] : profile.producers) {
            if (kinds.count(RuleKind::EmitPushAtZero) &&
                !kinds.count(RuleKind::EmitPush) && !kinds.count(RuleKind::EmitPop)) {
                overlap = false;
            }
        }
        return overlap ? CaseId::MarkedPushOverlap : CaseId::MarkedPushExclusive;
    }

    return CaseId::Fallback;
}

SegmentProfile segment_profile(const RuleProfile& profile, const Word& word) {
    SegmentProfile sp;
    sp.alphas.emplace_back();
    bool in_beta = false;

    enum class SymKind { Alpha, Beta, Neutral };
    auto kind_of = [&](const std::string& t) {
        bool push = profile.produces(t, RuleKind::EmitPush);
        bool pop = profile.produces(t, RuleKind::EmitPop);
        bool keep = profile.produces(t, RuleKind::EmitKeep);
        if (!push && !pop && !keep) throw UnproducibleTerminal(t);
        if (push && pop) return SymKind::Neutral;
        if (push) return SymKind::Beta;
        if (pop) return SymKind::Alpha;
        return SymKind::Neutral;
    };

    for (const auto& t : word) {
        SymKind k = kind_of(t);
        if (k == SymKind::Beta && !in_beta) {
            sp.betas.emplace_back();
            in_beta = true;
        } else if (k == SymKind::Alpha && in_beta) {
            sp.alphas.emplace_back();
            in_beta = false;
        }
        if (in_beta) sp.betas.back().push_back(t);
        else sp.alphas.back().push_back(t);
    }
    if (in_beta) sp.alphas.emplace_back();  // trailing empty pop-run

    for (const auto& seg : sp.alphas) {
        long long n = std::count_if(seg.begin(), seg.end(), [&](const std::string& t) {
            return kind_of(t) == SymKind::Alpha;
        });
        sp.eta5.push_back(n);
    }
    for (const auto& seg : sp.betas) {
        long long n = std::count_if(seg.begin(), seg.end(), [&](const std::string& t) {
            return kind_of(t) == SymKind::Beta;
        });
        sp.eta3.push_back(n);
    }
    return sp;
}

long long segment_balance_check(const SegmentProfile& sp) {
    const std::size_t k = sp.betas.size();
    if (k == 0) return 0;

    // Walks push-run / pop-run pairs keeping S = counter - 1 (the standing
    // recharge). A pop-run long enough to empty the counter resets S through
    // a zero test; the virtual trailing push-run count is 0.
    long long S = sp.eta3[0];
    bool zero_tested_last = true;
    for (std::size_t i = 1; i <= k; ++i) {
        long long pops = sp.eta5[i];
        long long pushes = i < k ? sp.eta3[i] : 0;
        if (S + 1 <= pops) {
            S = pushes;
            zero_tested_last = true;
        } else {
            S = S - pops + pushes;
            zero_tested_last = false;
        }
    }
    if (!zero_tested_last && S == 0) return 1;  // counter holds one leftover symbol
    return S;
}

namespace {

bool all_producible(const RuleProfile& p, const Word& w,
                    std::initializer_list<RuleKind> kinds) {
    return std::all_of(w.begin(), w.end(),
                       [&](const std::string& t) { return producible(p, t, kinds); });
}

bool alternation_verdict(const RuleProfile& p, const Word& w) {
    // Every emission toggles the counter between 0 and 1, so odd positions
    // must be pushable from the bottom and even positions poppable, and the
    // word must have even length to end on the bottom marker.
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        RuleKind need = i % 2 == 0 ? RuleKind::EmitPushAtZero : RuleKind::EmitPop;
        if (!p.produces(w[i], need)) return false;
    }
    return true;
}

}  // namespace

FastResult fast_member(const CtsSystem& sys, const Word& word) {
    SystemShape shape = classify_shape(sys);
    if (!is_one_state_family(shape.family))
        throw WrongFamily("fast membership needs a one-state counter system, got " +
                          family_name(shape.family));

    FastResult result;
    RuleProfile profile;
    try {
        profile = classify_rules(sys);
    } catch (const UnclassifiableRewrite&) {
        result.delegated = true;
        result.case_id = CaseId::Fallback;
        result.accepted = counter_member(sys, word);
        return result;
    }

    result.case_id = detect_case(profile, word);
    switch (result.case_id) {
        case CaseId::FlatWithFinisher: {
            bool ok = !word.empty() && profile.produces(word.back(), RuleKind::FinishEmit);
            for (std::size_t i = 0; ok && i + 1 < word.size(); ++i)
                ok = profile.produces(word[i], RuleKind::EmitAtZero);
            result.accepted = ok;
            break;
        }
        case CaseId::FlatSilentFinish:
            result.accepted = all_producible(profile, word, {RuleKind::EmitAtZero});
            break;
        case CaseId::FreePushPop:
            result.accepted = true;  // detect_case established both producers per symbol
            break;
        case CaseId::OneSided:
            if (profile.has(RuleKind::EmitPop))
                result.accepted = all_producible(profile, word, {RuleKind::EmitPop});
            else
                result.accepted = word.empty();  // pushes can never be undone
            break;
        case CaseId::AlternationOverlap:
        case CaseId::AlternationExclusive:
        case CaseId::AlternationMixed:
            result.accepted = alternation_verdict(profile, word);
            break;
        case CaseId::PushWithDrain:
            result.accepted = all_producible(profile, word, {RuleKind::EmitPush});
            break;
        case CaseId::FreePushPopFinisher:
            result.accepted = !word.empty() &&
                              profile.produces(word.back(), RuleKind::FinishEmit);
            break;
        case CaseId::NeutralFreePushPop:
            // Neutral symbols ride on one counter symbol, but the final one
            // must be popped away, so a nonempty word has to end on a
            // poppable symbol.
            result.accepted =
                word.empty() || profile.produces(word.back(), RuleKind::EmitPop);
            break;
        case CaseId::SegmentedNeutral:
        case CaseId::Segmented: {
            if (word.empty()) {
                result.accepted = true;
                break;
            }
            if (!profile.produces(word.back(), RuleKind::EmitPop)) {
                result.accepted = false;
                break;
            }
            result.accepted = segment_balance_check(segment_profile(profile, word)) == 0;
            break;
        }
        case CaseId::SegmentedMixed:
        case CaseId::MarkedPushOverlap:
        case CaseId::MarkedPushExclusive:
        case CaseId::Fallback:
            result.delegated = true;
            result.accepted = counter_member(sys, word);
            break;
    }
    return result;
}

}  // namespace ctslab
