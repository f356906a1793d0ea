#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctslab/system.hpp"

namespace ctslab {

/// Rule shapes available to a one-state counter system, named by what they
/// do to the input and the counter. "AtZero" rules rewrite the bottom marker
/// and therefore apply only with an empty counter.
enum class RuleKind {
    EmitAtZero,      // emit x, counter stays empty
    EmitPushAtZero,  // emit x, push the first counter symbol
    EmitPush,        // emit x, counter +1
    EmitKeep,        // emit x, counter unchanged (needs a counter symbol)
    EmitPop,         // emit x, counter -1
    FinishEmit,      // emit x, delete the bottom marker, stop
    RechargeAtZero,  // silent push from the empty counter
    SilentPush,      // silent counter +1
    SilentPop,       // silent counter -1
    FinishSilent,    // delete the bottom marker, stop, no emission
    FinishPopLast,   // zero-test-free finisher: delete the last counter symbol
};

std::string rule_kind_name(RuleKind k);

struct RuleType {
    RuleKind kind;
    std::string terminal;  // empty for silent rules

    friend bool operator==(const RuleType&, const RuleType&) = default;
};

struct RuleProfile {
    std::map<std::string, RuleType> per_rewrite;           // rewrite id -> type
    std::map<std::string, std::set<RuleKind>> producers;   // terminal -> kinds
    std::set<RuleKind> kinds;

    bool has(RuleKind k) const { return kinds.count(k) > 0; }
    bool produces(const std::string& terminal, RuleKind k) const;
};

/// Word-level decision classes. The last three are decided by delegation to
/// the exact counter recognizer.
enum class CaseId {
    FlatWithFinisher,       // zero-level emitters closed by a terminal finisher
    FlatSilentFinish,       // zero-level emitters closed silently
    FreePushPop,            // every symbol both pushable and poppable
    OneSided,               // push-only or pop-only degenerate shapes
    AlternationOverlap,     // strict push/pop alternation, overlapping producers
    AlternationExclusive,   //   "  , exclusive producers
    AlternationMixed,       //   "  , mixed producers
    PushWithDrain,          // pushes with a silent drain rule
    FreePushPopFinisher,    // FreePushPop closed by a terminal finisher
    NeutralFreePushPop,     // FreePushPop with counter-neutral extra symbols
    SegmentedNeutral,       // exclusive producers with neutral symbols
    Segmented,              // exclusive push/pop producers
    SegmentedMixed,         // mixed producers (delegated)
    MarkedPushOverlap,      // zero-marking pushes, overlapping producers (delegated)
    MarkedPushExclusive,    // zero-marking pushes, exclusive producers (delegated)
    Fallback,               // no decision procedure applies (delegated)
};

std::string case_id_name(CaseId c);

/// Terminals producible only by pushing rules, only by popping rules, or by
/// both.
struct TerminalPartition {
    std::set<std::string> push_only;
    std::set<std::string> pop_only;
    std::set<std::string> mixed;
};

/// Alternating decomposition of a word into pop-runs (alpha) and push-runs
/// (beta); counter-neutral symbols extend the current run. There is always
/// one more alpha than beta, and the leading alpha may be empty. eta5[i]
/// counts the pop-producible symbols of alphas[i], eta3[i] the
/// push-producible symbols of betas[i].
struct SegmentProfile {
    std::vector<std::vector<std::string>> alphas;
    std::vector<std::vector<std::string>> betas;
    std::vector<long long> eta5;
    std::vector<long long> eta3;
};

struct UnclassifiableRewrite : std::runtime_error {
    std::string rewrite_id;
    explicit UnclassifiableRewrite(const std::string& id)
        : std::runtime_error("rewrite outside the one-state rule shapes: " + id),
          rewrite_id(id) {}
};

struct UnproducibleTerminal : std::runtime_error {
    explicit UnproducibleTerminal(const std::string& t)
        : std::runtime_error("terminal not producible by push/keep/pop rules: " + t) {}
};

/// Maps every rewrite of a one-state counter system onto its RuleKind.
RuleProfile classify_rules(const CtsSystem& sys);

CaseId detect_case(const RuleProfile& profile, const Word& word);

TerminalPartition terminal_partition(const RuleProfile& profile);

SegmentProfile segment_profile(const RuleProfile& profile, const Word& word);

/// Sequential balance check over a segment profile. Returns 0 exactly when
/// the counter can be emptied at the end of the word; any positive return is
/// the surplus that remains.
long long segment_balance_check(const SegmentProfile& sp);

struct FastResult {
    bool accepted = false;
    bool delegated = false;
    CaseId case_id = CaseId::Fallback;
};

/// Case-dispatched membership; exact-by-construction cases answer directly,
/// everything else delegates to counter_member.
FastResult fast_member(const CtsSystem& sys, const Word& word);

}  // namespace ctslab
