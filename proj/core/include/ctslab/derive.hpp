#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ctslab/system.hpp"

namespace ctslab {

/// One derivation configuration. The first-component sentential form is split
/// into the emitted terminal prefix and the single trailing nonterminal
/// (empty `active` = no nonterminal left). `form2` is kept as a symbol
/// sequence; for 0-sequential systems it is canonically sorted, since the
/// rewriting position is immaterial there and a multiset view collapses the
/// search space.
struct Snapshot {
    Word emitted;
    std::string active;
    std::vector<std::string> form2;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct StepError : std::runtime_error {
    enum class Kind {
        G1Blocked,
        G1Mismatch,
        G2Empty,
        G2SymbolAbsent,
        G2RightmostMismatch,
    };
    Kind kind;
    StepError(Kind k, const std::string& what_) : std::runtime_error(what_), kind(k) {}
};

/// (axiom, axiom) start configuration.
Snapshot initial_snapshot(const CtsSystem& sys);

/// Sorts a 0-sequential form into its canonical multiset order; identity for
/// right-boundary systems.
void canonicalize_form2(const CtsSystem& sys, std::vector<std::string>& form2);

/// Applies one rewrite to both components. For right-boundary systems the
/// rewritten occurrence is the rightmost symbol; for 0-sequential systems any
/// occurrence (the multiset representation makes the choice irrelevant).
Snapshot derive_step(const CtsSystem& sys, const Snapshot& snap,
                     const std::string& rewrite_id);

/// True iff the snapshot is accepting: no nonterminal in either component.
bool is_accepting(const Snapshot& snap);

}  // namespace ctslab
