#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ctslab/system.hpp"

namespace ctslab {

/// Recognizer configuration: the first-component nonterminal still active
/// (empty = finished) and the Parikh vector of the second-component form.
struct ParikhConfig {
    std::string state;
    std::vector<long long> counts;

    friend bool operator==(const ParikhConfig&, const ParikhConfig&) = default;
};

/// One configuration set per input position; layer i holds every
/// deduplicated configuration reachable after reading i symbols. The final
/// layer also contains the configurations reached by one trailing
/// non-emitting finisher.
struct ParikhLayers {
    std::vector<std::vector<ParikhConfig>> layers;
    /// Largest count stored anywhere; stays within
    /// g_max*(n+1)+1 where g_max is the largest positive net-effect entry.
    long long max_count = 0;
};

struct NotRealTime : std::runtime_error {
    NotRealTime() : std::runtime_error("system has chain rules; recognizer needs real-time") {}
};

struct NotZeroSequential : std::runtime_error {
    NotZeroSequential() : std::runtime_error("recognizer needs a 0-sequential second component") {}
};

struct WordAlphabetError : std::runtime_error {
    explicit WordAlphabetError(const std::string& sym)
        : std::runtime_error("word symbol outside the terminal alphabet: " + sym) {}
};

/// Deterministic layered realization of the on-line Parikh-vector
/// simulation: per input symbol, every rewrite whose first component emits it
/// and whose second-component lhs has a positive count fires; acceptance
/// needs the finished state with the zero vector in the final layer.
ParikhLayers parikh_layers(const CtsSystem& sys, const Word& word);

bool recognize_rt_0s(const CtsSystem& sys, const Word& word);

}  // namespace ctslab
