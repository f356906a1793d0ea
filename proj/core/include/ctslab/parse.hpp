#pragma once

#include <stdexcept>
#include <string>

#include "ctslab/system.hpp"

namespace ctslab {

struct CtsParseError : std::runtime_error {
    int line;
    CtsParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct SyntaxError : CtsParseError {
    using CtsParseError::CtsParseError;
};

struct UnknownSymbol : CtsParseError {
    std::string symbol;
    UnknownSymbol(int line_, const std::string& sym)
        : CtsParseError(line_, "unknown symbol: " + sym), symbol(sym) {}
};

struct DuplicateRewriteId : CtsParseError {
    DuplicateRewriteId(int line_, const std::string& id)
        : CtsParseError(line_, "duplicate rewrite id: " + id) {}
};

struct MissingSection : CtsParseError {
    std::string section;
    explicit MissingSection(const std::string& sec)
        : CtsParseError(0, "missing section: " + sec), section(sec) {}
};

/// Parses the line-based `.cts` format. `#` starts a comment, tokens are
/// whitespace separated, `~` stands for the empty string.
CtsSystem parse_system(const std::string& text);

/// Canonical rendering; parse_system(render_system(s)) reproduces s.
std::string render_system(const CtsSystem& sys);

}  // namespace ctslab
