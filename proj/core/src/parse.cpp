#include "ctslab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ctslab {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

bool valid_symbol_name(const std::string& s) {
    if (s.empty() || s == "~") return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_';
    });
}

std::vector<std::string> tail(const Line& line) {
    return {line.tokens.begin() + 1, line.tokens.end()};
}

void check_symbols(const Line& line, const std::vector<std::string>& syms) {
    for (const auto& s : syms) {
        if (!valid_symbol_name(s))
            throw SyntaxError(line.number, "bad symbol name: " + s);
    }
}

// rewrite <id> : <LHS> -> <rhs|~> ; <LHS> -> <rhs|~>
struct RawRewrite {
    std::string id;
    std::vector<std::string> g1;  // lhs followed by rhs tokens
    std::vector<std::string> g2;
};

RawRewrite split_rewrite(const Line& line) {
    RawRewrite rw;
    const auto& t = line.tokens;
    if (t.size() < 8) throw SyntaxError(line.number, "truncated rewrite");
    rw.id = t[1];
    if (t[2] != ":") throw SyntaxError(line.number, "expected ':' after rewrite id");
    std::size_t i = 3;
    auto half = [&](std::vector<std::string>& out, const std::string& stop) {
        if (i >= t.size()) throw SyntaxError(line.number, "truncated rewrite");
        out.push_back(t[i++]);  // lhs
        if (i >= t.size() || t[i] != "->")
            throw SyntaxError(line.number, "expected '->' in rewrite");
        ++i;
        while (i < t.size() && t[i] != stop) out.push_back(t[i++]);
    };
    half(rw.g1, ";");
    if (i >= t.size() || t[i] != ";")
        throw SyntaxError(line.number, "expected ';' between components");
    ++i;
    half(rw.g2, "");
    return rw;
}

}  // namespace

CtsSystem parse_system(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw MissingSection("system");

    CtsSystem sys;
    if (lines[0].tokens[0] != "system" || lines[0].tokens.size() != 2)
        throw SyntaxError(lines[0].number, "expected 'system <name>' on the first line");
    sys.name = lines[0].tokens[1];

    bool have_type = false, have_g1_nts = false, have_g2_nts = false;
    bool have_terminals = false;
    std::string g1_axiom, g2_axiom;

    std::size_t li = 1;
    for (; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& head = line.tokens[0];
        if (head == "rewrite") break;
        if (head == "type") {
            if (have_type) throw SyntaxError(line.number, "duplicate 'type'");
            if (line.tokens.size() != 2)
                throw SyntaxError(line.number, "expected 'type rl-0s' or 'type rl-rb'");
            if (line.tokens[1] == "rl-0s")
                sys.g2.kind = G2Kind::ZeroSequential;
            else if (line.tokens[1] == "rl-rb")
                sys.g2.kind = G2Kind::RightBoundary;
            else
                throw SyntaxError(line.number, "unknown system type: " + line.tokens[1]);
            have_type = true;
        } else if (head == "g1.terminals") {
            if (have_terminals) throw SyntaxError(line.number, "duplicate 'g1.terminals'");
            sys.g1.terminals = tail(line);
            check_symbols(line, sys.g1.terminals);
            have_terminals = true;
        } else if (head == "g1.nonterminals") {
            if (have_g1_nts) throw SyntaxError(line.number, "duplicate 'g1.nonterminals'");
            sys.g1.nonterminals = tail(line);
            check_symbols(line, sys.g1.nonterminals);
            if (sys.g1.nonterminals.empty())
                throw SyntaxError(line.number, "g1.nonterminals must not be empty");
            have_g1_nts = true;
        } else if (head == "g1.axiom") {
            if (line.tokens.size() != 2) throw SyntaxError(line.number, "expected one axiom symbol");
            g1_axiom = line.tokens[1];
        } else if (head == "g2.nonterminals") {
            if (have_g2_nts) throw SyntaxError(line.number, "duplicate 'g2.nonterminals'");
            sys.g2.nonterminals = tail(line);
            check_symbols(line, sys.g2.nonterminals);
            if (sys.g2.nonterminals.empty())
                throw SyntaxError(line.number, "g2.nonterminals must not be empty");
            have_g2_nts = true;
        } else if (head == "g2.axiom") {
            if (line.tokens.size() != 2) throw SyntaxError(line.number, "expected one axiom symbol");
            g2_axiom = line.tokens[1];
        } else {
            throw SyntaxError(line.number, "unknown directive: " + head);
        }
    }

    if (!have_type) throw MissingSection("type");
    if (!have_g1_nts) throw MissingSection("g1.nonterminals");
    if (!have_g2_nts) throw MissingSection("g2.nonterminals");

    sys.g1.axiom = g1_axiom.empty() ? sys.g1.nonterminals.front() : g1_axiom;
    if (!sys.g1.is_nonterminal(sys.g1.axiom))
        throw UnknownSymbol(0, sys.g1.axiom);
    sys.g2.axiom = g2_axiom.empty() ? sys.g2.nonterminals.front() : g2_axiom;
    if (!sys.g2.is_nonterminal(sys.g2.axiom))
        throw UnknownSymbol(0, sys.g2.axiom);

    for (; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] != "rewrite")
            throw SyntaxError(line.number, "expected a rewrite line, got: " + line.tokens[0]);
        RawRewrite raw = split_rewrite(line);

        Rewrite rw;
        rw.id = raw.id;
        if (sys.find_rewrite(rw.id)) throw DuplicateRewriteId(line.number, rw.id);

        // First component: X -> a Y | a | Y | ~
        const std::string& lhs1 = raw.g1[0];
        if (!sys.g1.is_nonterminal(lhs1)) {
            if (sys.g1.is_terminal(lhs1))
                throw SyntaxError(line.number, "first-component lhs must be a nonterminal: " + lhs1);
            throw UnknownSymbol(line.number, lhs1);
        }
        rw.g1.lhs = lhs1;
        std::vector<std::string> rhs1(raw.g1.begin() + 1, raw.g1.end());
        if (rhs1.size() == 1 && rhs1[0] == "~") {
            // X -> ~
        } else if (rhs1.size() == 1) {
            if (sys.g1.is_terminal(rhs1[0]))
                rw.g1.emit = rhs1[0];
            else if (sys.g1.is_nonterminal(rhs1[0]))
                rw.g1.next = rhs1[0];
            else
                throw UnknownSymbol(line.number, rhs1[0]);
        } else if (rhs1.size() == 2) {
            if (!sys.g1.is_terminal(rhs1[0])) {
                if (sys.g1.is_nonterminal(rhs1[0]))
                    throw SyntaxError(line.number,
                                      "first rhs symbol must be a terminal: " + rhs1[0]);
                throw UnknownSymbol(line.number, rhs1[0]);
            }
            if (!sys.g1.is_nonterminal(rhs1[1])) {
                if (sys.g1.is_terminal(rhs1[1]))
                    throw SyntaxError(line.number,
                                      "second rhs symbol must be a nonterminal: " + rhs1[1]);
                throw UnknownSymbol(line.number, rhs1[1]);
            }
            rw.g1.emit = rhs1[0];
            rw.g1.next = rhs1[1];
        } else {
            throw SyntaxError(line.number, "first-component rhs has too many symbols");
        }

        // Second component: B -> B1 ... Bk | ~
        G2Production p2;
        const std::string& lhs2 = raw.g2[0];
        if (!sys.g2.is_nonterminal(lhs2)) throw UnknownSymbol(line.number, lhs2);
        p2.lhs = lhs2;
        std::vector<std::string> rhs2(raw.g2.begin() + 1, raw.g2.end());
        if (!(rhs2.size() == 1 && rhs2[0] == "~")) {
            for (const auto& s : rhs2) {
                if (!sys.g2.is_nonterminal(s)) throw UnknownSymbol(line.number, s);
                p2.rhs.push_back(s);
            }
        }

        auto existing1 = std::find(sys.g1.productions.begin(), sys.g1.productions.end(), rw.g1);
        if (existing1 == sys.g1.productions.end()) sys.g1.productions.push_back(rw.g1);

        auto existing2 = std::find(sys.g2.productions.begin(), sys.g2.productions.end(), p2);
        if (existing2 == sys.g2.productions.end()) {
            sys.g2.productions.push_back(p2);
            rw.g2 = sys.g2.productions.size() - 1;
        } else {
            rw.g2 = static_cast<std::size_t>(existing2 - sys.g2.productions.begin());
        }
        sys.rewrites.push_back(std::move(rw));
    }

    if (sys.rewrites.empty()) throw MissingSection("rewrites");
    return sys;
}

std::string render_system(const CtsSystem& sys) {
    std::ostringstream out;
    out << "system " << sys.name << "\n";
    out << "type " << (sys.g2.kind == G2Kind::ZeroSequential ? "rl-0s" : "rl-rb") << "\n";
    out << "g1.terminals";
    for (const auto& t : sys.g1.terminals) out << " " << t;
    out << "\n";
    out << "g1.nonterminals";
    for (const auto& n : sys.g1.nonterminals) out << " " << n;
    out << "\n";
    out << "g1.axiom " << sys.g1.axiom << "\n";
    out << "g2.nonterminals";
    for (const auto& n : sys.g2.nonterminals) out << " " << n;
    out << "\n";
    out << "g2.axiom " << sys.g2.axiom << "\n";
    for (const auto& rw : sys.rewrites) {
        out << "rewrite " << rw.id << " : " << rw.g1.lhs << " ->";
        if (rw.g1.emit.empty() && rw.g1.next.empty()) {
            out << " ~";
        } else {
            if (!rw.g1.emit.empty()) out << " " << rw.g1.emit;
            if (!rw.g1.next.empty()) out << " " << rw.g1.next;
        }
        const G2Production& p2 = sys.g2.productions.at(rw.g2);
        out << " ; " << p2.lhs << " ->";
        if (p2.rhs.empty()) {
            out << " ~";
        } else {
            for (const auto& s : p2.rhs) out << " " << s;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ctslab
