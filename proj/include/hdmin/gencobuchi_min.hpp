#pragma once

#include "hdmin/cobuchi_min.hpp"
#include "hdmin/core.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace hdmin {

struct SizeProfile {
    int classCount = 0;
    std::vector<int> classOf;      // Amin state -> class, class 0 holds the initial state
    std::vector<int> size;         // n_j
    std::vector<bool> transient;   // no state of the class lies on a cycle
    int nMax = 1;

    int total() const;
};

SizeProfile sizeProfile(const Automaton& amin);

struct MorphismPacking {
    SafeDecomposition components;
    std::vector<int> offset;                // first target state of each class
    std::vector<std::vector<int>> phi;      // phi[i][q], -1 outside component i
};

struct GenCoBuchiBuild {
    Automaton automaton;
    SizeProfile profile;
    MorphismPacking packing;
};

GenCoBuchiBuild buildGeneralDetailed(const Automaton& amin);
Automaton buildGeneral(const Automaton& amin);
Automaton buildPrefixIndependent(const Automaton& amin);
// coBuchi-type input to minimal HD generalised coBuchi automaton.
Automaton minimiseHDgenCoBuchi(const Automaton& a);

// Structural check of the packing: injective, class-respecting, safe transitions mapped to transitions.
bool checkPacking(const GenCoBuchiBuild& build, const Automaton& amin, std::string* why = nullptr);

// Finite-memory resolver for a built automaton. It follows the image of one safe
// component at a time and moves to the next one whenever it cannot continue.
class RoundRobinResolver {
public:
    struct Memory {
        int index = 0;     // component currently followed
        int tracked = -1;  // Amin state in that component, -1 if none
        int ref = 0;       // state of the deterministic reference, -1 once the word left the language
        auto operator<=>(const Memory&) const = default;
    };

    RoundRobinResolver(const GenCoBuchiBuild& build, const CoBuchiMinimisation& min);

    int initialState() const;
    Memory initialMemory() const;
    // Next automaton state (or -1 if none) and memory.
    std::pair<int, Memory> step(int state, const Memory& mem, int letter) const;

    // Runs the resolver on stem.cycle^omega until the configuration repeats at a cycle
    // boundary and reports whether the periodic part of the run is accepting.
    bool accepts(const Lasso& w) const;

private:
    GenCoBuchiBuild build_;
    CoBuchiMinimisation min_;
    int k_;
};

}  // namespace hdmin
