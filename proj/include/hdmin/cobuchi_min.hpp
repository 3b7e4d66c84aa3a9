#pragma once

#include "hdmin/core.hpp"

#include <vector>

namespace hdmin {

struct SafeComponent {
    std::vector<int> states;
    std::vector<Transition> transitions;  // safe transitions inside the component
};

struct SafeDecomposition {
    std::vector<int> componentOf;  // -1 for safe-isolated states
    std::vector<SafeComponent> components;
    std::vector<int> sccOf;        // SCC id in the safe subgraph, isolated states included
};

SafeDecomposition safeComponents(const Automaton& a);

bool isSafeDeterministic(const Automaton& a);
// Safe(q) included in Safe(p). Works for nondeterministic safe structure too.
bool safeIncluded(const Automaton& a, int q, int p);

enum class SafeRelation { Equal, StrictSubset, StrictSuperset, Incomparable };
std::string safeRelationName(SafeRelation r);
// Relation of Safe(q) to Safe(p).
SafeRelation compareSafeLanguages(const Automaton& a, int q, int p);

// Safe transitions crossing safe components become coloured.
Automaton normalForm(const Automaton& a);
Automaton toNiceForm(const Automaton& a);

struct CanonicityReport {
    bool reachableOnly = false;
    bool semanticallyDeterministic = false;
    bool normalForm = false;
    bool safeDeterministic = false;
    bool safeMinimal = false;
    bool safeCentralised = false;

    bool all() const
    {
        return reachableOnly && semanticallyDeterministic && normalForm && safeDeterministic && safeMinimal &&
               safeCentralised;
    }
};

CanonicityReport checkCanonicity(const Automaton& a);
std::string describe(const CanonicityReport& r);

struct CoBuchiMinimisation {
    Automaton automaton;        // canonical minimal HD coBuchi automaton
    Automaton reference;        // deterministic coBuchi automaton it was built from
    std::vector<int> shadow;    // reference state -> output state of the same residual with larger safe language
};

CoBuchiMinimisation minimiseHDcoBuchiDetailed(const Automaton& a);
Automaton minimiseHDcoBuchi(const Automaton& a);

}  // namespace hdmin
