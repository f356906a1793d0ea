#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctslab/derive.hpp"
#include "ctslab/system.hpp"

namespace ctslab {

/// Termination control for the exhaustive search. Zero fields are replaced by
/// the word-length defaults of `default_limits`.
struct OracleLimits {
    std::size_t max_form2 = 0;    // cap on |form2| per snapshot
    std::size_t max_steps = 0;    // cap on derivation length
    std::size_t max_frontier = 1'000'000;  // cap on distinct snapshots per layer
};

OracleLimits default_limits(std::size_t word_len);

enum class Verdict { Accepted, Rejected, Inconclusive };

enum class LimitKind { None, Form2Size, Steps, Frontier };

std::string verdict_name(Verdict v);

struct OracleVerdict {
    Verdict status = Verdict::Rejected;
    LimitKind limit_hit = LimitKind::None;
    /// Rewrite ids of one successful derivation; present iff Accepted.
    std::vector<std::string> witness;
};

/// Exhaustive membership by breadth-first search over snapshots, layered on
/// the emitted-prefix length and deduplicated per layer. Limits never cause a
/// wrong verdict: a search cut short reports Inconclusive.
OracleVerdict oracle_member(const CtsSystem& sys, const Word& word,
                            const OracleLimits& lim = {});

struct Enumeration {
    std::vector<Word> words;  // length-lexicographic, terminal declaration order
    bool complete = true;     // false if any membership query was inconclusive
};

Enumeration enumerate_language(const CtsSystem& sys, std::size_t max_len,
                               const OracleLimits& lim = {});

/// Replays a witness from the start snapshot; returns the final snapshot.
Snapshot replay_witness(const CtsSystem& sys, const std::vector<std::string>& witness);

}  // namespace ctslab
