#pragma once

#include "hdmin/core.hpp"

#include <optional>
#include <vector>

namespace hdmin {

// Edge-labelled finite graph used for emptiness and cycle questions.
struct LabelledGraph {
    struct Arc {
        int src;
        int dst;
        int letter;
        ColourSet colours;
    };
    int nodes = 0;
    std::vector<Arc> arcs;
};

// Infinite path condition: every colour of infAll recurs, and for each mask
// in finSome at least one colour of that mask is eventually absent.
struct PathCondition {
    ColourSet infAll = 0;
    std::vector<ColourSet> finSome;
};

PathCondition conditionFor(Acceptance acc, int k, int offset = 0);
PathCondition conjunction(const PathCondition& a, const PathCondition& b);

struct ArcLasso {
    std::vector<int> stem;   // arc indices
    std::vector<int> cycle;  // arc indices, non-empty
};

// Searches for an infinite path from start satisfying cond. Only arcs with
// allowed[i] (if given) may be used.
std::optional<ArcLasso> findAcceptingPath(const LabelledGraph& g, int start, const PathCondition& cond,
                                          const std::vector<bool>* allowed = nullptr);

Lasso lettersOf(const LabelledGraph& g, const ArcLasso& path);

LabelledGraph graphOf(const Automaton& a);

}  // namespace hdmin
