#pragma once

#include "hdmin/core.hpp"

#include <utility>
#include <vector>

namespace hdmin {

// Deterministic automaton over colour-set letters recognising the
// generalised coBuchi (kind GenCoBuchi) or generalised Buchi condition on k colours.
struct ConditionAutomaton {
    int k = 0;
    Acceptance kind = Acceptance::GenCoBuchi;

    // Target state and emitted colour set when reading letter x in state i.
    std::pair<int, ColourSet> step(int i, ColourSet x) const;
    // Full materialisation, 2^k letters named by their colour sets.
    Automaton automaton() const;
};

ConditionAutomaton buildConditionAutomaton(int k, Acceptance kind);
std::string colourSetLetter(ColourSet x);

// Feeds the colours produced by a into b. Only reachable pairs are built.
Automaton cascade(const ConditionAutomaton& b, const Automaton& a);
Automaton degeneralise(const Automaton& a);

// Breakpoint construction for nondeterministic coBuchi (k = 1) automata.
Automaton breakpointDeterminise(const Automaton& a);
// Deterministic coBuchi automaton for the language of a (any coBuchi-type input).
Automaton determiniseCoBuchi(const Automaton& a);
// Per-state deterministic references, for residual partitions of nondeterministic automata.
std::vector<Automaton> stateReferences(const Automaton& a);
ResidualPartition languagePartition(const Automaton& a);

Automaton removeColour(const Automaton& a, int i);
bool removableColour(const Automaton& a, int i);
Automaton recolourGreedy(const Automaton& a);

}  // namespace hdmin
