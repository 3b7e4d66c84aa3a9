#include "hdmin/graph_search.hpp"

#include <deque>
#include <functional>
#include <set>

namespace hdmin {

PathCondition conditionFor(Acceptance acc, int k, int offset)
{
    PathCondition c;
    ColourSet mask = allColours(k) << offset;
    if (k == 0)
        mask = 0;
    if (acc == Acceptance::GenBuchi)
        c.infAll = mask;
    else
        c.finSome.push_back(mask);
    return c;
}

PathCondition conjunction(const PathCondition& a, const PathCondition& b)
{
    PathCondition c = a;
    c.infAll |= b.infAll;
    c.finSome.insert(c.finSome.end(), b.finSome.begin(), b.finSome.end());
    return c;
}

namespace {

std::vector<int> bfsPath(const LabelledGraph& g, const std::vector<std::vector<int>>& outArcs, int from, int to,
                         const std::function<bool(int)>& usable)
{
    if (from == to)
        return {};
    std::vector<int> parent(g.nodes, -1);
    std::vector<bool> seen(g.nodes, false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : outArcs[v]) {
            if (!usable(e))
                continue;
            int w = g.arcs[e].dst;
            if (seen[w])
                continue;
            seen[w] = true;
            parent[w] = e;
            if (w == to) {
                std::vector<int> path;
                for (int x = to; x != from; x = g.arcs[parent[x]].src)
                    path.push_back(parent[x]);
                return {path.rbegin(), path.rend()};
            }
            queue.push_back(w);
        }
    }
    throw std::logic_error("bfsPath: target unreachable");
}

void collectRemovals(const std::vector<ColourSet>& masks, std::size_t i, ColourSet acc, ColourSet forbidden,
                     std::set<ColourSet>& out)
{
    if (i == masks.size()) {
        out.insert(acc);
        return;
    }
    if (masks[i] & acc) {
        collectRemovals(masks, i + 1, acc, forbidden, out);
        return;
    }
    for (int c = 0; c < kMaxColours; ++c)
        if (hasColour(masks[i], c) && !hasColour(forbidden, c))
            collectRemovals(masks, i + 1, acc | colourBit(c), forbidden, out);
}

}  // namespace

std::optional<ArcLasso> findAcceptingPath(const LabelledGraph& g, int start, const PathCondition& cond,
                                          const std::vector<bool>* allowed)
{
    for (ColourSet m : cond.finSome)
        if (m == 0)
            return std::nullopt;
    auto isAllowed = [&](int e) { return allowed == nullptr || (*allowed)[e]; };

    std::vector<std::vector<int>> outArcs(g.nodes);
    for (int e = 0; e < static_cast<int>(g.arcs.size()); ++e)
        if (isAllowed(e))
            outArcs[g.arcs[e].src].push_back(e);

    std::vector<bool> reach(g.nodes, false);
    {
        std::vector<int> stack{start};
        reach[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : outArcs[v]) {
                int w = g.arcs[e].dst;
                if (!reach[w]) {
                    reach[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }

    std::set<ColourSet> removals;
    collectRemovals(cond.finSome, 0, 0, cond.infAll, removals);

    for (ColourSet removed : removals) {
        auto cycleArc = [&](int e) {
            const auto& arc = g.arcs[e];
            return isAllowed(e) && reach[arc.src] && (arc.colours & removed) == 0;
        };
        std::vector<std::vector<int>> adj(g.nodes);
        for (int e = 0; e < static_cast<int>(g.arcs.size()); ++e)
            if (cycleArc(e))
                adj[g.arcs[e].src].push_back(g.arcs[e].dst);
        int count = 0;
        std::vector<int> comp = sccIds(adj, &count);
        std::vector<ColourSet> covered(count, 0);
        std::vector<int> someArc(count, -1);
        for (int e = 0; e < static_cast<int>(g.arcs.size()); ++e) {
            if (!cycleArc(e))
                continue;
            const auto& arc = g.arcs[e];
            if (comp[arc.src] != comp[arc.dst])
                continue;
            covered[comp[arc.src]] |= arc.colours;
            if (someArc[comp[arc.src]] < 0)
                someArc[comp[arc.src]] = e;
        }
        for (int c = 0; c < count; ++c) {
            if (someArc[c] < 0 || (covered[c] & cond.infAll) != cond.infAll)
                continue;
            auto inside = [&](int e) { return cycleArc(e) && comp[g.arcs[e].src] == c && comp[g.arcs[e].dst] == c; };
            ArcLasso result;
            int s = g.arcs[someArc[c]].src;
            result.stem = bfsPath(g, outArcs, start, s, [&](int) { return true; });
            int cur = s;
            ColourSet got = 0;
            auto append = [&](int e) {
                auto p = bfsPath(g, outArcs, cur, g.arcs[e].src, inside);
                result.cycle.insert(result.cycle.end(), p.begin(), p.end());
                for (int x : p)
                    got |= g.arcs[x].colours;
                result.cycle.push_back(e);
                got |= g.arcs[e].colours;
                cur = g.arcs[e].dst;
            };
            for (int col = 0; col < kMaxColours; ++col) {
                if (!hasColour(cond.infAll, col) || hasColour(got, col))
                    continue;
                for (int e = 0; e < static_cast<int>(g.arcs.size()); ++e)
                    if (inside(e) && hasColour(g.arcs[e].colours, col)) {
                        append(e);
                        break;
                    }
            }
            if (result.cycle.empty())
                append(someArc[c]);
            auto back = bfsPath(g, outArcs, cur, s, inside);
            result.cycle.insert(result.cycle.end(), back.begin(), back.end());
            return result;
        }
    }
    return std::nullopt;
}

Lasso lettersOf(const LabelledGraph& g, const ArcLasso& path)
{
    Lasso w;
    for (int e : path.stem)
        w.stem.push_back(g.arcs[e].letter);
    for (int e : path.cycle)
        w.cycle.push_back(g.arcs[e].letter);
    return w;
}

LabelledGraph graphOf(const Automaton& a)
{
    LabelledGraph g;
    g.nodes = a.stateCount();
    for (int q = 0; q < a.stateCount(); ++q)
        for (const Edge& e : a.edges(q))
            g.arcs.push_back({q, e.dst, e.letter, e.colours});
    return g;
}

}  // namespace hdmin
