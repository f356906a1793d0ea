#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ctslab/shape.hpp"
#include "ctslab/system.hpp"

namespace ctslab::testing {

struct CorpusEntry {
    CtsSystem system;
    Family family;
};

/// Deterministic corpus of small valid systems, at least `per_family` per
/// family in {RL_0S real-time, RL_RBc, RL0_RBc, RL1_RBc, RL01_RBc}, with at
/// most 4 first-component nonterminals, 3 second-component nonterminals, 8
/// rewrites and 2 terminals.
std::vector<CorpusEntry> make_corpus(std::size_t per_family, std::uint64_t seed = 20240811);

/// All words over `terminals` with length <= max_len, shortest first.
std::vector<Word> words_up_to(const std::vector<std::string>& terminals,
                              std::size_t max_len);

}  // namespace ctslab::testing
