#pragma once

#include <string>
#include <vector>

#include "ctslab/system.hpp"

namespace ctslab {

enum class ViolationCode {
    BadSymbolName,
    DuplicateSymbol,
    TerminalNonterminalOverlap,
    AxiomNotDeclared,
    BadRlShape,
    BadG2Shape,
    EmptyRewrites,
    DuplicateRewriteId,
    UndeclaredG1Production,
    BadG2Index,
};

struct Violation {
    ViolationCode code;
    std::string detail;
};

/// Violations are data, not faults: an empty report means the system is valid.
struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

std::string violation_code_name(ViolationCode code);

ValidationReport validate_system(const CtsSystem& sys);

}  // namespace ctslab
