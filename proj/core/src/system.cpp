#include "ctslab/system.hpp"

#include <algorithm>

namespace ctslab {

int index_of(const std::vector<std::string>& items, const std::string& s) {
    auto it = std::find(items.begin(), items.end(), s);
    return it == items.end() ? -1 : static_cast<int>(it - items.begin());
}

bool RlGrammar::is_terminal(const std::string& s) const {
    return index_of(terminals, s) >= 0;
}

bool RlGrammar::is_nonterminal(const std::string& s) const {
    return index_of(nonterminals, s) >= 0;
}

bool SecondGrammar::is_nonterminal(const std::string& s) const {
    return index_of(nonterminals, s) >= 0;
}

int SecondGrammar::nonterminal_index(const std::string& s) const {
    return index_of(nonterminals, s);
}

const Rewrite* CtsSystem::find_rewrite(const std::string& id) const {
    for (const auto& r : rewrites) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

NetEffect net_effect(const G2Production& prod, const SecondGrammar& g2) {
    NetEffect eff;
    eff.delta.assign(g2.nonterminals.size(), 0);
    for (const auto& sym : prod.rhs) {
        int i = g2.nonterminal_index(sym);
        if (i >= 0) eff.delta[static_cast<std::size_t>(i)] += 1;
    }
    int lhs = g2.nonterminal_index(prod.lhs);
    if (lhs >= 0) eff.delta[static_cast<std::size_t>(lhs)] -= 1;
    return eff;
}

NetEffect net_effect(const CtsSystem& sys, const std::string& rewrite_id) {
    const Rewrite* r = sys.find_rewrite(rewrite_id);
    if (!r) throw UnknownRewrite(rewrite_id);
    if (r->g2 >= sys.g2.productions.size()) throw UnknownRewrite(rewrite_id);
    return net_effect(sys.g2.productions[r->g2], sys.g2);
}

std::vector<long long> parikh(const std::vector<std::string>& form,
                              const SecondGrammar& g2) {
    std::vector<long long> counts(g2.nonterminals.size(), 0);
    for (const auto& sym : form) {
        int i = g2.nonterminal_index(sym);
        if (i >= 0) counts[static_cast<std::size_t>(i)] += 1;
    }
    return counts;
}

}  // namespace ctslab
