#include "ctslab/shape.hpp"

#include <algorithm>

namespace ctslab {

namespace {

// The production forms a counter component may use, expressed over the
// bottom-marker role `s` and counter role `z`:
//   s->s, s->sz, z->z, z->zz, z->~, s->~
bool counter_form(const G2Production& p, const std::string& s, const std::string& z) {
    const auto& r = p.rhs;
    if (p.lhs == s) {
        if (r.empty()) return true;                              // s -> ~
        if (r.size() == 1 && r[0] == s) return true;             // s -> s
        if (r.size() == 2 && r[0] == s && r[1] == z) return true;  // s -> s z
        return false;
    }
    if (p.lhs == z) {
        if (r.empty()) return true;                              // z -> ~
        if (r.size() == 1 && r[0] == z) return true;             // z -> z
        if (r.size() == 2 && r[0] == z && r[1] == z) return true;  // z -> z z
        return false;
    }
    return false;
}

// Zero-test-free counter forms over the single symbol z: z->z, z->zz, z->~
bool counter_net_form(const G2Production& p, const std::string& z) {
    if (p.lhs != z) return false;
    const auto& r = p.rhs;
    if (r.empty()) return true;
    if (r.size() == 1 && r[0] == z) return true;
    if (r.size() == 2 && r[0] == z && r[1] == z) return true;
    return false;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::RL_0S: return "rl-0s";
        case Family::RL_RB: return "rl-rb";
        case Family::RL_RBc: return "rl-rbc";
        case Family::RL0_RBc: return "rl0-rbc";
        case Family::RL1_RBc: return "rl1-rbc";
        case Family::RL01_RBc: return "rl01-rbc";
        case Family::Other: return "other";
    }
    return "other";
}

bool is_counter_family(Family f) {
    return f == Family::RL_RBc || f == Family::RL0_RBc || f == Family::RL1_RBc ||
           f == Family::RL01_RBc;
}

bool is_one_state_family(Family f) {
    return f == Family::RL1_RBc || f == Family::RL01_RBc;
}

SystemShape classify_shape(const CtsSystem& sys) {
    ValidationReport rep = validate_system(sys);
    if (!rep.ok()) throw InvalidSystem(std::move(rep));

    SystemShape shape;
    shape.g1_nt_count = sys.g1.nonterminals.size();
    shape.g2_nt_count = sys.g2.nonterminals.size();
    shape.real_time = std::none_of(sys.rewrites.begin(), sys.rewrites.end(),
                                   [](const Rewrite& r) { return r.g1.is_chain(); });

    const bool one_state = shape.g1_nt_count == 1;

    if (sys.g2.kind == G2Kind::ZeroSequential) {
        shape.family = Family::RL_0S;
        return shape;
    }

    if (shape.g2_nt_count == 1) {
        const std::string& z = sys.g2.nonterminals[0];
        bool fits = std::all_of(sys.g2.productions.begin(), sys.g2.productions.end(),
                                [&](const G2Production& p) { return counter_net_form(p, z); });
        if (fits) {
            shape.family = one_state ? Family::RL01_RBc : Family::RL0_RBc;
            shape.counter_symbol = z;
            return shape;
        }
    }

    if (shape.g2_nt_count == 2) {
        // Try both role assignments; the axiom must carry the bottom-marker
        // role, since derivations start on it.
        for (int pick = 0; pick < 2; ++pick) {
            const std::string& s = sys.g2.nonterminals[static_cast<std::size_t>(pick)];
            const std::string& z = sys.g2.nonterminals[static_cast<std::size_t>(1 - pick)];
            if (sys.g2.axiom != s) continue;
            bool fits = std::all_of(sys.g2.productions.begin(), sys.g2.productions.end(),
                                    [&](const G2Production& p) { return counter_form(p, s, z); });
            if (fits) {
                shape.family = one_state ? Family::RL1_RBc : Family::RL_RBc;
                shape.bottom_symbol = s;
                shape.counter_symbol = z;
                return shape;
            }
        }
    }

    shape.family = Family::RL_RB;
    return shape;
}

}  // namespace ctslab
