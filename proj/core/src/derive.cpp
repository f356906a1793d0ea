#include "ctslab/derive.hpp"

#include <algorithm>

namespace ctslab {

Snapshot initial_snapshot(const CtsSystem& sys) {
    Snapshot snap;
    snap.active = sys.g1.axiom;
    snap.form2 = {sys.g2.axiom};
    return snap;
}

void canonicalize_form2(const CtsSystem& sys, std::vector<std::string>& form2) {
    if (sys.g2.kind != G2Kind::ZeroSequential) return;
    std::sort(form2.begin(), form2.end(), [&](const std::string& a, const std::string& b) {
        return sys.g2.nonterminal_index(a) < sys.g2.nonterminal_index(b);
    });
}

Snapshot derive_step(const CtsSystem& sys, const Snapshot& snap,
                     const std::string& rewrite_id) {
    const Rewrite* rw = sys.find_rewrite(rewrite_id);
    if (!rw || rw->g2 >= sys.g2.productions.size()) throw UnknownRewrite(rewrite_id);
    const G2Production& p2 = sys.g2.productions[rw->g2];

    if (snap.active.empty())
        throw StepError(StepError::Kind::G1Blocked,
                        "no first-component nonterminal to rewrite");
    if (snap.active != rw->g1.lhs)
        throw StepError(StepError::Kind::G1Mismatch,
                        "active nonterminal " + snap.active + " does not match " + rw->g1.lhs);
    if (snap.form2.empty())
        throw StepError(StepError::Kind::G2Empty, "second-component form is empty");

    Snapshot next = snap;

    if (sys.g2.kind == G2Kind::ZeroSequential) {
        auto it = std::find(next.form2.begin(), next.form2.end(), p2.lhs);
        if (it == next.form2.end())
            throw StepError(StepError::Kind::G2SymbolAbsent,
                            p2.lhs + " does not occur in the second-component form");
        next.form2.erase(it);
        next.form2.insert(next.form2.end(), p2.rhs.begin(), p2.rhs.end());
        canonicalize_form2(sys, next.form2);
    } else {
        if (next.form2.back() != p2.lhs)
            throw StepError(StepError::Kind::G2RightmostMismatch,
                            "rightmost symbol is " + next.form2.back() + ", not " + p2.lhs);
        next.form2.pop_back();
        next.form2.insert(next.form2.end(), p2.rhs.begin(), p2.rhs.end());
    }

    if (!rw->g1.emit.empty()) next.emitted.push_back(rw->g1.emit);
    next.active = rw->g1.next;
    return next;
}

bool is_accepting(const Snapshot& snap) {
    return snap.active.empty() && snap.form2.empty();
}

}  // namespace ctslab
