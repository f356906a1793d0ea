#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctslab/system.hpp"

namespace ctslab {

using Marking = std::vector<long long>;  // indexed like PetriNet::places

struct Transition {
    std::string id;
    std::string label;  // empty = silent
    std::map<std::string, long long> inputs;   // place -> multiplicity >= 1
    std::map<std::string, long long> outputs;  // place -> multiplicity >= 1
};

/// Labeled marked Petri net, optionally with a finite final-marking set.
/// Absent finals mean any-marking acceptance is intended.
struct PetriNet {
    std::string name;
    std::vector<std::string> places;
    std::vector<Transition> transitions;
    Marking initial;
    std::optional<std::vector<Marking>> finals;

    int place_index(const std::string& p) const;
    const Transition* find_transition(const std::string& id) const;
    bool lambda_free() const;
};

enum class PnSemantics { AnyMarking, FinalMarkings };

struct NotEnabled : std::runtime_error {
    explicit NotEnabled(const std::string& id)
        : std::runtime_error("transition not enabled: " + id) {}
};

struct UnknownTransition : std::runtime_error {
    explicit UnknownTransition(const std::string& id)
        : std::runtime_error("unknown transition: " + id) {}
};

struct SemanticsMismatch : std::runtime_error {
    explicit SemanticsMismatch(const std::string& what_) : std::runtime_error(what_) {}
};

struct PnWordAlphabetError : std::runtime_error {
    explicit PnWordAlphabetError(const std::string& sym)
        : std::runtime_error("word symbol is no transition label: " + sym) {}
};

struct TranslationError : std::runtime_error {
    enum class Kind {
        NonEmittingRule,
        WrongFamily,
        MultiInputTransition,
        MultiTokenStart,
        LambdaTransition,
        BadFinalMarkings,
        PlaceNameClash,
    };
    Kind kind;
    TranslationError(Kind k, const std::string& what_) : std::runtime_error(what_), kind(k) {}
};

Marking fire(const PetriNet& net, const Marking& marking, const std::string& transition_id);

/// Membership by layered marking-set search. Exact for silent-free nets; a
/// net with silent transitions is accepted only under final-marking
/// semantics, where silent steps are closed per layer with a visited set and
/// a generous marking-sum cap.
bool pn_member(const PetriNet& net, const Word& word, PnSemantics semantics);

/// Structural encoding of a 0-sequential system whose rewrites all emit:
/// places are the nonterminals of both components, each rewrite becomes one
/// labeled transition, and acceptance is the empty marking.
PetriNet cts_to_pn(const CtsSystem& sys);

/// Inverse structural encoding for nets whose transitions consume exactly one
/// token from one place, with a one-token start and the zero final marking.
CtsSystem pn_to_cts(const PetriNet& net);

struct PnParseError : std::runtime_error {
    int line;
    PnParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

PetriNet parse_pn(const std::string& text);
std::string render_pn(const PetriNet& net);

}  // namespace ctslab
