#pragma once

#include <stdexcept>
#include <string>

#include "ctslab/system.hpp"
#include "ctslab/validate.hpp"

namespace ctslab {

/// Structural family of a two-component system. The `_RBc` families are the
/// counter shapes: the right-boundary component is restricted to a bottom
/// marker plus a counting symbol (or the counting symbol alone for the
/// zero-test-free `RL0` variants); `1` means the first component has a single
/// nonterminal.
enum class Family {
    RL_0S,
    RL_RB,
    RL_RBc,
    RL0_RBc,
    RL1_RBc,
    RL01_RBc,
    Other,
};

std::string family_name(Family f);

struct SystemShape {
    Family family = Family::Other;
    bool real_time = false;
    std::size_t g1_nt_count = 0;
    std::size_t g2_nt_count = 0;
    // Which second-component symbols play the bottom-marker / counter roles.
    // Empty when the family is not a counter shape.
    std::string bottom_symbol;
    std::string counter_symbol;
};

struct InvalidSystem : std::runtime_error {
    ValidationReport report;
    explicit InvalidSystem(ValidationReport rep)
        : std::runtime_error("system fails validation"), report(std::move(rep)) {}
};

/// Classifies family and the real-time flag. Real-time means no rewrite uses
/// a chain production in the first component. Throws InvalidSystem when
/// validate_system reports violations.
SystemShape classify_shape(const CtsSystem& sys);

bool is_counter_family(Family f);
bool is_one_state_family(Family f);

}  // namespace ctslab
