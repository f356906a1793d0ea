#include "ctslab/petri.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ctslab/shape.hpp"

namespace ctslab {

int PetriNet::place_index(const std::string& p) const {
    return index_of(places, p);
}

const Transition* PetriNet::find_transition(const std::string& id) const {
    for (const auto& t : transitions) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

bool PetriNet::lambda_free() const {
    return std::all_of(transitions.begin(), transitions.end(),
                       [](const Transition& t) { return !t.label.empty(); });
}

namespace {

bool apply_transition(const PetriNet& net, const Transition& t, const Marking& m,
                      Marking& out) {
    out = m;
    for (const auto& [place, k] : t.inputs) {
        int i = net.place_index(place);
        if (i < 0 || out[static_cast<std::size_t>(i)] < k) return false;
        out[static_cast<std::size_t>(i)] -= k;
    }
    for (const auto& [place, k] : t.outputs) {
        int i = net.place_index(place);
        if (i >= 0) out[static_cast<std::size_t>(i)] += k;
    }
    return true;
}

long long marking_sum(const Marking& m) {
    return std::accumulate(m.begin(), m.end(), 0LL);
}

}  // namespace

Marking fire(const PetriNet& net, const Marking& marking, const std::string& transition_id) {
    const Transition* t = net.find_transition(transition_id);
    if (!t) throw UnknownTransition(transition_id);
    Marking out;
    if (!apply_transition(net, *t, marking, out)) throw NotEnabled(transition_id);
    return out;
}

bool pn_member(const PetriNet& net, const Word& word, PnSemantics semantics) {
    if (semantics == PnSemantics::FinalMarkings && !net.finals.has_value())
        throw SemanticsMismatch("final-marking membership needs declared final markings");
    if (semantics == PnSemantics::AnyMarking && !net.lambda_free())
        throw SemanticsMismatch("any-marking membership is defined for silent-free nets only");

    std::set<std::string> labels;
    for (const auto& t : net.transitions)
        if (!t.label.empty()) labels.insert(t.label);
    for (const auto& sym : word) {
        if (!labels.count(sym)) throw PnWordAlphabetError(sym);
    }

    long long max_out = 1;
    for (const auto& t : net.transitions) {
        long long s = 0;
        for (const auto& [p, k] : t.outputs) s += k;
        max_out = std::max(max_out, s);
    }
    const long long sum_cap =
        4 * (marking_sum(net.initial) + static_cast<long long>(word.size() + 2) * max_out);

    std::set<Marking> layer{net.initial};
    auto close_silent = [&](std::set<Marking>& markings) {
        if (net.lambda_free()) return;
        std::vector<Marking> work(markings.begin(), markings.end());
        while (!work.empty()) {
            Marking m = work.back();
            work.pop_back();
            for (const auto& t : net.transitions) {
                if (!t.label.empty()) continue;
                Marking succ;
                if (!apply_transition(net, t, m, succ)) continue;
                if (marking_sum(succ) > sum_cap) continue;
                if (markings.insert(succ).second) work.push_back(succ);
            }
        }
    };

    for (std::size_t pos = 0; pos <= word.size(); ++pos) {
        close_silent(layer);
        if (pos == word.size()) break;
        std::set<Marking> next;
        for (const auto& m : layer) {
            for (const auto& t : net.transitions) {
                if (t.label != word[pos]) continue;
                Marking succ;
                if (apply_transition(net, t, m, succ)) next.insert(std::move(succ));
            }
        }
        layer = std::move(next);
    }

    if (semantics == PnSemantics::AnyMarking) return !layer.empty();
    for (const auto& fin : *net.finals) {
        if (layer.count(fin)) return true;
    }
    return false;
}

PetriNet cts_to_pn(const CtsSystem& sys) {
    SystemShape shape = classify_shape(sys);
    if (shape.family != Family::RL_0S)
        throw TranslationError(TranslationError::Kind::WrongFamily,
                               "net encoding needs a 0-sequential system");
    for (const auto& rw : sys.rewrites) {
        if (rw.g1.emit.empty())
            throw TranslationError(TranslationError::Kind::NonEmittingRule,
                                   "rewrite " + rw.id + " emits no terminal");
    }
    for (const auto& nt : sys.g1.nonterminals) {
        if (sys.g2.is_nonterminal(nt))
            throw TranslationError(TranslationError::Kind::PlaceNameClash,
                                   "symbol used by both components: " + nt);
    }

    PetriNet net;
    net.name = sys.name;
    net.places = sys.g1.nonterminals;
    net.places.insert(net.places.end(), sys.g2.nonterminals.begin(),
                      sys.g2.nonterminals.end());
    net.initial.assign(net.places.size(), 0);
    net.initial[static_cast<std::size_t>(net.place_index(sys.g1.axiom))] = 1;
    net.initial[static_cast<std::size_t>(net.place_index(sys.g2.axiom))] += 1;
    net.finals = std::vector<Marking>{Marking(net.places.size(), 0)};

    for (const auto& rw : sys.rewrites) {
        const G2Production& p2 = sys.g2.productions[rw.g2];
        Transition t;
        t.id = rw.id;
        t.label = rw.g1.emit;
        t.inputs[rw.g1.lhs] += 1;
        t.inputs[p2.lhs] += 1;
        if (!rw.g1.next.empty()) t.outputs[rw.g1.next] += 1;
        for (const auto& s : p2.rhs) t.outputs[s] += 1;
        net.transitions.push_back(std::move(t));
    }
    return net;
}

CtsSystem pn_to_cts(const PetriNet& net) {
    if (!net.lambda_free())
        throw TranslationError(TranslationError::Kind::LambdaTransition,
                               "net has silent transitions");
    if (marking_sum(net.initial) != 1)
        throw TranslationError(TranslationError::Kind::MultiTokenStart,
                               "initial marking must hold exactly one token");
    for (const auto& t : net.transitions) {
        if (t.inputs.size() != 1 || t.inputs.begin()->second != 1)
            throw TranslationError(TranslationError::Kind::MultiInputTransition,
                                   "transition " + t.id + " must consume one token from one place");
    }
    if (!net.finals.has_value() || net.finals->size() != 1 ||
        marking_sum(net.finals->front()) != 0)
        throw TranslationError(TranslationError::Kind::BadFinalMarkings,
                               "final markings must be exactly the zero marking");

    CtsSystem sys;
    sys.name = net.name;
    sys.g2.kind = G2Kind::ZeroSequential;
    sys.g2.nonterminals = net.places;
    for (std::size_t i = 0; i < net.places.size(); ++i) {
        if (net.initial[i] == 1) sys.g2.axiom = net.places[i];
    }

    std::string start = "S1";
    while (index_of(net.places, start) >= 0) start += "_";
    sys.g1.nonterminals = {start};
    sys.g1.axiom = start;

    std::set<std::string> labels;
    for (const auto& t : net.transitions) labels.insert(t.label);
    sys.g1.terminals.assign(labels.begin(), labels.end());

    for (const auto& t : net.transitions) {
        G2Production p2;
        p2.lhs = t.inputs.begin()->first;
        for (const auto& [place, k] : t.outputs) {
            for (long long i = 0; i < k; ++i) p2.rhs.push_back(place);
        }
        auto existing = std::find(sys.g2.productions.begin(), sys.g2.productions.end(), p2);
        std::size_t index;
        if (existing == sys.g2.productions.end()) {
            sys.g2.productions.push_back(p2);
            index = sys.g2.productions.size() - 1;
        } else {
            index = static_cast<std::size_t>(existing - sys.g2.productions.begin());
        }

        Rewrite go{t.id + "_go", {start, t.label, start}, index};
        Rewrite end{t.id + "_end", {start, t.label, ""}, index};
        for (const auto& rw : {go, end}) {
            if (std::find(sys.g1.productions.begin(), sys.g1.productions.end(), rw.g1) ==
                sys.g1.productions.end())
                sys.g1.productions.push_back(rw.g1);
            sys.rewrites.push_back(rw);
        }
    }
    return sys;
}

namespace {

std::pair<std::string, long long> parse_entry(int line, const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
        throw PnParseError(line, "expected place:count, got " + tok);
    std::string place = tok.substr(0, colon);
    long long count = 0;
    try {
        count = std::stoll(tok.substr(colon + 1));
    } catch (const std::exception&) {
        throw PnParseError(line, "bad count in " + tok);
    }
    if (count < 0) throw PnParseError(line, "negative count in " + tok);
    return {place, count};
}

}  // namespace

PetriNet parse_pn(const std::string& text) {
    PetriNet net;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    bool have_name = false, have_places = false, have_marking = false;

    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (!have_name) {
            if (tok[0] != "pn" || tok.size() != 2)
                throw PnParseError(number, "expected 'pn <name>' first");
            net.name = tok[1];
            have_name = true;
        } else if (tok[0] == "places") {
            net.places.assign(tok.begin() + 1, tok.end());
            net.initial.assign(net.places.size(), 0);
            have_places = true;
        } else if (tok[0] == "transition") {
            if (!have_places) throw PnParseError(number, "'places' must come before transitions");
            if (tok.size() < 5 || tok[2] != "label")
                throw PnParseError(number, "expected 'transition <id> label <sym|~> in ... out ...'");
            Transition tr;
            tr.id = tok[1];
            tr.label = tok[3] == "~" ? "" : tok[3];
            std::size_t i = 4;
            if (i >= tok.size() || tok[i] != "in")
                throw PnParseError(number, "expected 'in' section");
            ++i;
            for (; i < tok.size() && tok[i] != "out"; ++i) {
                auto [place, count] = parse_entry(number, tok[i]);
                if (net.place_index(place) < 0) throw PnParseError(number, "unknown place " + place);
                if (count > 0) tr.inputs[place] += count;
            }
            if (i >= tok.size() || tok[i] != "out")
                throw PnParseError(number, "expected 'out' section");
            ++i;
            for (; i < tok.size(); ++i) {
                auto [place, count] = parse_entry(number, tok[i]);
                if (net.place_index(place) < 0) throw PnParseError(number, "unknown place " + place);
                if (count > 0) tr.outputs[place] += count;
            }
            net.transitions.push_back(std::move(tr));
        } else if (tok[0] == "marking") {
            if (!have_places) throw PnParseError(number, "'places' must come before 'marking'");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto [place, count] = parse_entry(number, tok[i]);
                int pi = net.place_index(place);
                if (pi < 0) throw PnParseError(number, "unknown place " + place);
                net.initial[static_cast<std::size_t>(pi)] = count;
            }
            have_marking = true;
        } else if (tok[0] == "final") {
            if (!have_places) throw PnParseError(number, "'places' must come before 'final'");
            Marking fin(net.places.size(), 0);
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto [place, count] = parse_entry(number, tok[i]);
                int pi = net.place_index(place);
                if (pi < 0) throw PnParseError(number, "unknown place " + place);
                fin[static_cast<std::size_t>(pi)] = count;
            }
            if (!net.finals) net.finals = std::vector<Marking>{};
            net.finals->push_back(std::move(fin));
        } else {
            throw PnParseError(number, "unknown directive: " + tok[0]);
        }
    }
    if (!have_name) throw PnParseError(0, "missing 'pn <name>'");
    if (!have_places) throw PnParseError(0, "missing 'places'");
    if (!have_marking) throw PnParseError(0, "missing 'marking'");
    return net;
}

std::string render_pn(const PetriNet& net) {
    std::ostringstream out;
    out << "pn " << net.name << "\n";
    out << "places";
    for (const auto& p : net.places) out << " " << p;
    out << "\n";
    for (const auto& t : net.transitions) {
        out << "transition " << t.id << " label " << (t.label.empty() ? "~" : t.label)
            << " in";
        for (const auto& [place, k] : t.inputs) out << " " << place << ":" << k;
        out << " out";
        for (const auto& [place, k] : t.outputs) out << " " << place << ":" << k;
        out << "\n";
    }
    out << "marking";
    for (std::size_t i = 0; i < net.places.size(); ++i) {
        if (net.initial[i] > 0) out << " " << net.places[i] << ":" << net.initial[i];
    }
    out << "\n";
    if (net.finals) {
        for (const auto& fin : *net.finals) {
            out << "final";
            for (std::size_t i = 0; i < net.places.size(); ++i) {
                if (fin[i] > 0) out << " " << net.places[i] << ":" << fin[i];
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace ctslab
