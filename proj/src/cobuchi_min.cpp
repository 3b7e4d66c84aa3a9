#include "hdmin/cobuchi_min.hpp"
#include "hdmin/games.hpp"
#include "hdmin/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace hdmin {

namespace {

void requireCoBuchi(const Automaton& a, const char* op)
{
    if (a.acceptance() != Acceptance::GenCoBuchi || a.colours() != 1)
        throw ContractError(std::string(op) + " expects a coBuchi automaton with exactly one colour");
}

bool isSafe(const Edge& e) { return e.colours == 0; }

// States with an infinite safe path.
std::vector<bool> liveStates(const Automaton& a, const SafeDecomposition& sd)
{
    int n = a.stateCount();
    std::vector<std::vector<int>> pred(n);
    for (int q = 0; q < n; ++q)
        for (const Edge& e : a.edges(q))
            if (isSafe(e))
                pred[e.dst].push_back(q);
    std::vector<bool> live(n, false);
    std::vector<int> stack;
    for (int q = 0; q < n; ++q)
        if (sd.componentOf[q] >= 0) {
            live[q] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int p : pred[q])
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
    }
    return live;
}

bool safeIncludedWith(const Automaton& a, const std::vector<bool>& live, int q, int p)
{
    if (!live[q])
        return true;
    if (!live[p])
        return false;
    // Safety languages are closed, so inclusion reduces to inclusion of live safe prefixes.
    using Node = std::pair<int, std::vector<int>>;
    std::set<Node> seen;
    std::deque<Node> queue;
    Node start{q, {p}};
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        auto [x, ys] = queue.front();
        queue.pop_front();
        for (const Edge& e : a.edges(x)) {
            if (!isSafe(e) || !live[e.dst])
                continue;
            std::vector<int> next;
            for (int y : ys)
                for (const Edge& f : a.edges(y))
                    if (f.letter == e.letter && isSafe(f) && live[f.dst])
                        next.push_back(f.dst);
            if (next.empty())
                return false;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            Node node{e.dst, std::move(next)};
            if (seen.insert(node).second)
                queue.push_back(std::move(node));
        }
    }
    return true;
}

std::vector<std::vector<bool>> safeInclusionTable(const Automaton& a)
{
    SafeDecomposition sd = safeComponents(a);
    auto live = liveStates(a, sd);
    int n = a.stateCount();
    std::vector<std::vector<bool>> incl(n, std::vector<bool>(n, false));
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            incl[q][p] = q == p || safeIncludedWith(a, live, q, p);
    return incl;
}

// Renumbers reachable states in breadth-first order from the initial state.
Automaton bfsOrder(const Automaton& a, std::vector<int>* newIndex = nullptr)
{
    std::vector<int> order;
    std::vector<int> idx(a.stateCount(), -1);
    idx[a.initial()] = 0;
    order.push_back(a.initial());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const Edge& e : a.edges(order[i]))
            if (idx[e.dst] < 0) {
                idx[e.dst] = static_cast<int>(order.size());
                order.push_back(e.dst);
            }
    Automaton r(a.alphabet(), a.colours(), a.acceptance());
    r.setName(a.name());
    for (int q : order)
        r.addState(a.stateName(q));
    for (int q : order)
        for (const Edge& e : a.edges(q))
            r.addTransition(idx[q], e.letter, idx[e.dst], e.colours);
    r.setInitial(0);
    if (newIndex)
        *newIndex = idx;
    return r;
}

ResidualPartition partitionOf(const Automaton& a)
{
    return a.isDeterministic() ? residualPartition(a) : languagePartition(a);
}

}  // namespace

SafeDecomposition safeComponents(const Automaton& a)
{
    requireCoBuchi(a, "safeComponents");
    int n = a.stateCount();
    std::vector<std::vector<int>> adj(n);
    for (int q = 0; q < n; ++q)
        for (const Edge& e : a.edges(q))
            if (isSafe(e))
                adj[q].push_back(e.dst);
    SafeDecomposition sd;
    int count = 0;
    sd.sccOf = sccIds(adj, &count);
    std::vector<int> size(count, 0);
    std::vector<bool> loop(count, false);
    for (int q = 0; q < n; ++q) {
        ++size[sd.sccOf[q]];
        for (int d : adj[q])
            if (d == q)
                loop[sd.sccOf[q]] = true;
    }
    std::vector<int> compOfScc(count, -1);
    sd.componentOf.assign(n, -1);
    for (int q = 0; q < n; ++q) {
        int s = sd.sccOf[q];
        if (size[s] < 2 && !loop[s])
            continue;
        if (compOfScc[s] < 0) {
            compOfScc[s] = static_cast<int>(sd.components.size());
            sd.components.emplace_back();
        }
        sd.componentOf[q] = compOfScc[s];
        sd.components[compOfScc[s]].states.push_back(q);
    }
    for (int q = 0; q < n; ++q)
        for (const Edge& e : a.edges(q))
            if (isSafe(e) && sd.componentOf[q] >= 0 && sd.componentOf[q] == sd.componentOf[e.dst])
                sd.components[sd.componentOf[q]].transitions.push_back({q, e.letter, e.dst, 0});
    return sd;
}

bool isSafeDeterministic(const Automaton& a)
{
    for (int q = 0; q < a.stateCount(); ++q) {
        std::set<int> letters;
        for (const Edge& e : a.edges(q))
            if (isSafe(e) && !letters.insert(e.letter).second)
                return false;
    }
    return true;
}

bool safeIncluded(const Automaton& a, int q, int p)
{
    SafeDecomposition sd = safeComponents(a);
    return safeIncludedWith(a, liveStates(a, sd), q, p);
}

std::string safeRelationName(SafeRelation r)
{
    switch (r) {
    case SafeRelation::Equal: return "equal";
    case SafeRelation::StrictSubset: return "strict-subset";
    case SafeRelation::StrictSuperset: return "strict-superset";
    default: return "incomparable";
    }
}

SafeRelation compareSafeLanguages(const Automaton& a, int q, int p)
{
    requireCoBuchi(a, "compareSafeLanguages");
    if (!isSafeDeterministic(a))
        throw ContractError("compareSafeLanguages needs a safe-deterministic automaton");
    SafeDecomposition sd = safeComponents(a);
    auto live = liveStates(a, sd);
    bool qp = safeIncludedWith(a, live, q, p);
    bool pq = safeIncludedWith(a, live, p, q);
    if (qp && pq)
        return SafeRelation::Equal;
    if (qp)
        return SafeRelation::StrictSubset;
    if (pq)
        return SafeRelation::StrictSuperset;
    return SafeRelation::Incomparable;
}

Automaton normalForm(const Automaton& a)
{
    SafeDecomposition sd = safeComponents(a);
    Automaton r = a;
    for (const Transition& t : a.transitions())
        if (t.colours == 0 && sd.sccOf[t.src] != sd.sccOf[t.dst])
            r.setColours(t.src, t.letter, t.dst, colourBit(0));
    return r;
}

Automaton toNiceForm(const Automaton& input)
{
    requireCoBuchi(input, "toNiceForm");
    if (input.stateCount() == 0)
        return input;
    Automaton a = trim(input);

    if (!a.isDeterministic()) {
        auto refs = stateReferences(a);
        ResidualPartition part = residualPartition(a, refs);
        Automaton r = a;
        for (int q = 0; q < a.stateCount(); ++q)
            for (int l = 0; l < a.letterCount(); ++l) {
                std::set<int> classes;
                for (int d : a.successors(q, l))
                    classes.insert(part.classOf[d]);
                if (classes.size() < 2)
                    continue;
                // keep only successors whose language contains every other successor's
                int best = -1;
                for (int c : classes) {
                    bool top = true;
                    for (int c2 : classes)
                        if (c2 != c && !includedInDeterministic(refs[part.representative[c2]],
                                                                refs[part.representative[c]]))
                            top = false;
                    if (top) {
                        best = c;
                        break;
                    }
                }
                if (best < 0)
                    continue;
                for (int d : a.successors(q, l))
                    if (part.classOf[d] != best)
                        r.removeTransition(q, l, d);
            }
        a = trim(r);
    }

    a = normalForm(a);
    if (!isSafeDeterministic(a)) {
        auto incl = safeInclusionTable(a);
        Automaton r = a;
        for (int q = 0; q < a.stateCount(); ++q)
            for (int l = 0; l < a.letterCount(); ++l) {
                std::vector<int> safe;
                for (const Edge& e : a.edges(q))
                    if (e.letter == l && isSafe(e))
                        safe.push_back(e.dst);
                if (safe.size() < 2)
                    continue;
                int keep = safe.front();
                for (int d : safe) {
                    bool top = true;
                    for (int d2 : safe)
                        if (!incl[d2][d])
                            top = false;
                    if (top) {
                        keep = d;
                        break;
                    }
                }
                for (int d : safe)
                    if (d != keep)
                        r.setColours(q, l, d, colourBit(0));
            }
        a = trim(normalForm(r));
    }
    return a;
}

CanonicityReport checkCanonicity(const Automaton& a)
{
    requireCoBuchi(a, "checkCanonicity");
    CanonicityReport r;
    int n = a.stateCount();
    auto reach = reachableStates(a);
    r.reachableOnly = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    ResidualPartition part = partitionOf(a);
    r.semanticallyDeterministic = checkSemanticDeterminism(a, part);
    SafeDecomposition sd = safeComponents(a);
    r.normalForm = true;
    for (const Transition& t : a.transitions())
        if (t.colours == 0 && sd.sccOf[t.src] != sd.sccOf[t.dst])
            r.normalForm = false;
    r.safeDeterministic = isSafeDeterministic(a);
    auto live = liveStates(a, sd);
    r.safeMinimal = true;
    r.safeCentralised = true;
    for (int q = 0; q < n; ++q)
        for (int p = q + 1; p < n; ++p) {
            if (part.classOf[q] != part.classOf[p])
                continue;
            bool qp = safeIncludedWith(a, live, q, p);
            bool pq = safeIncludedWith(a, live, p, q);
            if (qp && pq)
                r.safeMinimal = false;
            if ((qp || pq) && sd.sccOf[q] != sd.sccOf[p])
                r.safeCentralised = false;
        }
    return r;
}

std::string describe(const CanonicityReport& r)
{
    auto flag = [](const char* name, bool v) { return std::string(name) + "=" + (v ? "yes" : "no"); };
    return flag("reachable", r.reachableOnly) + " " + flag("semantically-deterministic", r.semanticallyDeterministic) +
           " " + flag("normal-form", r.normalForm) + " " + flag("safe-deterministic", r.safeDeterministic) + " " +
           flag("safe-minimal", r.safeMinimal) + " " + flag("safe-centralised", r.safeCentralised);
}

CoBuchiMinimisation minimiseHDcoBuchiDetailed(const Automaton& input)
{
    if (input.acceptance() != Acceptance::GenCoBuchi)
        throw ContractError("minimiseHDcoBuchi expects a coBuchi-type automaton");
    if (input.stateCount() == 0)
        throw ContractError("minimiseHDcoBuchi: automaton without states");
    Automaton x = input.colours() == 1 ? input : degeneralise(input);
    Automaton d = trim(determiniseCoBuchi(x));

    auto nonEmpty = nonEmptyStates(d);
    if (!nonEmpty[d.initial()]) {
        Automaton e(d.alphabet(), 1, Acceptance::GenCoBuchi);
        e.setName(input.name());
        e.addState(d.stateName(d.initial()));
        return {e, e, {0}};
    }
    d = normalForm(trim(restrictStates(d, nonEmpty)));
    d.setName(input.name());
    int n = d.stateCount();
    ResidualPartition part = residualPartition(d);
    auto incl = safeInclusionTable(d);

    // merge states with the same residual and the same safe language
    std::vector<int> rep(n);
    for (int q = 0; q < n; ++q) {
        rep[q] = q;
        for (int p = 0; p < q; ++p)
            if (part.classOf[p] == part.classOf[q] && incl[p][q] && incl[q][p]) {
                rep[q] = rep[p];
                break;
            }
    }
    Automaton quotient(d.alphabet(), 1, Acceptance::GenCoBuchi);
    std::vector<int> qidx(n, -1), qorig;
    for (int q = 0; q < n; ++q)
        if (rep[q] == q) {
            qidx[q] = quotient.addState(d.stateName(q));
            qorig.push_back(q);
        }
    for (int q : qorig)
        for (const Edge& e : d.edges(q))
            quotient.addTransition(qidx[q], e.letter, qidx[rep[e.dst]], e.colours);
    quotient.setInitial(qidx[rep[d.initial()]]);
    int m = quotient.stateCount();
    std::vector<int> qclass(m);
    for (int i = 0; i < m; ++i)
        qclass[i] = part.classOf[qorig[i]];

    // drop components whose safe languages are dominated elsewhere in their class
    SafeDecomposition sd = safeComponents(quotient);
    std::vector<std::vector<bool>> qincl(m, std::vector<bool>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            qincl[i][j] = incl[qorig[i]][qorig[j]];
    std::vector<bool> kept(m, true);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && qclass[i] == qclass[j] && sd.sccOf[i] != sd.sccOf[j] && qincl[i][j])
                kept[i] = false;

    Automaton out(d.alphabet(), 1, Acceptance::GenCoBuchi);
    out.setName(input.name());
    std::vector<int> oidx(m, -1);
    for (int i = 0; i < m; ++i)
        if (kept[i])
            oidx[i] = out.addState(quotient.stateName(i));
    for (int i = 0; i < m; ++i) {
        if (!kept[i])
            continue;
        for (const Edge& e : quotient.edges(i)) {
            if (isSafe(e)) {
                if (!kept[e.dst])
                    throw std::logic_error("minimiseHDcoBuchi: safe edge leaves a kept component");
                out.addTransition(oidx[i], e.letter, oidx[e.dst], 0);
                continue;
            }
            for (int j = 0; j < m; ++j)
                if (kept[j] && qclass[j] == qclass[e.dst])
                    out.addTransition(oidx[i], e.letter, oidx[j], colourBit(0));
        }
    }
    for (int i = 0; i < m; ++i)
        if (kept[i] && qclass[i] == part.initialClass) {
            out.setInitial(oidx[i]);
            break;
        }

    // shadow: every reference state points to a kept state of its class with a larger safe
    // language; all states of one dominated component point into the same kept component
    std::function<int(int)> targetOf = [&](int scc) {
        for (int r = 0; r < m; ++r)
            if (sd.sccOf[r] == scc && kept[r])
                return scc;
        for (int r = 0; r < m; ++r) {
            if (sd.sccOf[r] != scc)
                continue;
            for (int p = 0; p < m; ++p)
                if (sd.sccOf[p] != scc && qclass[p] == qclass[r] && qincl[r][p])
                    return targetOf(sd.sccOf[p]);
        }
        throw std::logic_error("minimiseHDcoBuchi: dominated component without dominator");
    };
    std::vector<int> shadowQ(n, -1);
    for (int q = 0; q < n; ++q) {
        int i = qidx[rep[q]];
        if (kept[i]) {
            shadowQ[q] = i;
            continue;
        }
        int target = sd.componentOf[i] < 0 ? -1 : targetOf(sd.sccOf[i]);
        for (int j = 0; j < m; ++j)
            if (kept[j] && qclass[j] == qclass[i] && qincl[i][j] && (target < 0 || sd.sccOf[j] == target)) {
                shadowQ[q] = j;
                break;
            }
        if (shadowQ[q] < 0)
            throw std::logic_error("minimiseHDcoBuchi: no dominating kept state");
    }

    std::vector<int> finalIdx;
    Automaton result = bfsOrder(out, &finalIdx);
    CoBuchiMinimisation res{result, d, std::vector<int>(n, -1)};
    for (int q = 0; q < n; ++q)
        res.shadow[q] = finalIdx[oidx[shadowQ[q]]];

    CanonicityReport rep2 = checkCanonicity(result);
    if (!rep2.all())
        throw std::logic_error("minimiseHDcoBuchi: output not canonical (" + describe(rep2) + ")");
    if (!isHistoryDeterministic(result))
        throw std::logic_error("minimiseHDcoBuchi: output not history-deterministic");
    if (!containsHD(result, d) || !containsHD(d, result))
        throw std::logic_error("minimiseHDcoBuchi: output language differs from the input");
    return res;
}

Automaton minimiseHDcoBuchi(const Automaton& a) { return minimiseHDcoBuchiDetailed(a).automaton; }

}  // namespace hdmin
