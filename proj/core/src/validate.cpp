#include "ctslab/validate.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ctslab {

namespace {

bool good_name(const std::string& s) {
    if (s.empty() || s == "~") return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_';
    });
}

void check_names(const std::vector<std::string>& syms, const std::string& where,
                 ValidationReport& rep) {
    std::set<std::string> seen;
    for (const auto& s : syms) {
        if (!good_name(s))
            rep.violations.push_back({ViolationCode::BadSymbolName, where + ": " + s});
        if (!seen.insert(s).second)
            rep.violations.push_back({ViolationCode::DuplicateSymbol, where + ": " + s});
    }
}

std::string show_rl(const RlProduction& p) {
    std::string rhs;
    if (p.emit.empty() && p.next.empty()) {
        rhs = "~";
    } else {
        rhs = p.emit;
        if (!p.next.empty()) rhs += (rhs.empty() ? "" : " ") + p.next;
    }
    return p.lhs + " -> " + rhs;
}

}  // namespace

std::string violation_code_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::BadSymbolName: return "BadSymbolName";
        case ViolationCode::DuplicateSymbol: return "DuplicateSymbol";
        case ViolationCode::TerminalNonterminalOverlap: return "TerminalNonterminalOverlap";
        case ViolationCode::AxiomNotDeclared: return "AxiomNotDeclared";
        case ViolationCode::BadRlShape: return "BadRlShape";
        case ViolationCode::BadG2Shape: return "BadG2Shape";
        case ViolationCode::EmptyRewrites: return "EmptyRewrites";
        case ViolationCode::DuplicateRewriteId: return "DuplicateRewriteId";
        case ViolationCode::UndeclaredG1Production: return "UndeclaredG1Production";
        case ViolationCode::BadG2Index: return "BadG2Index";
    }
    return "Unknown";
}

ValidationReport validate_system(const CtsSystem& sys) {
    ValidationReport rep;

    check_names(sys.g1.terminals, "g1 terminal", rep);
    check_names(sys.g1.nonterminals, "g1 nonterminal", rep);
    check_names(sys.g2.nonterminals, "g2 nonterminal", rep);

    for (const auto& t : sys.g1.terminals) {
        if (sys.g1.is_nonterminal(t))
            rep.violations.push_back(
                {ViolationCode::TerminalNonterminalOverlap, t});
    }

    if (!sys.g1.is_nonterminal(sys.g1.axiom))
        rep.violations.push_back({ViolationCode::AxiomNotDeclared, "g1: " + sys.g1.axiom});
    if (!sys.g2.is_nonterminal(sys.g2.axiom))
        rep.violations.push_back({ViolationCode::AxiomNotDeclared, "g2: " + sys.g2.axiom});

    for (const auto& p : sys.g1.productions) {
        bool ok = sys.g1.is_nonterminal(p.lhs) &&
                  (p.emit.empty() || sys.g1.is_terminal(p.emit)) &&
                  (p.next.empty() || sys.g1.is_nonterminal(p.next));
        if (!ok)
            rep.violations.push_back({ViolationCode::BadRlShape, show_rl(p)});
    }

    for (const auto& p : sys.g2.productions) {
        bool ok = sys.g2.is_nonterminal(p.lhs);
        for (const auto& s : p.rhs) ok = ok && sys.g2.is_nonterminal(s);
        if (!ok)
            rep.violations.push_back({ViolationCode::BadG2Shape, p.lhs});
    }

    if (sys.rewrites.empty())
        rep.violations.push_back({ViolationCode::EmptyRewrites, ""});

    std::set<std::string> ids;
    for (const auto& rw : sys.rewrites) {
        if (!ids.insert(rw.id).second)
            rep.violations.push_back({ViolationCode::DuplicateRewriteId, rw.id});
        if (std::find(sys.g1.productions.begin(), sys.g1.productions.end(), rw.g1) ==
            sys.g1.productions.end())
            rep.violations.push_back(
                {ViolationCode::UndeclaredG1Production, rw.id + ": " + show_rl(rw.g1)});
        if (rw.g2 >= sys.g2.productions.size())
            rep.violations.push_back({ViolationCode::BadG2Index, rw.id});
    }

    return rep;
}

}  // namespace ctslab
