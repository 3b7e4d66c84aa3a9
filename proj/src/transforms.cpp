#include "hdmin/transforms.hpp"
#include "hdmin/graph_search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace hdmin {

std::pair<int, ColourSet> ConditionAutomaton::step(int i, ColourSet x) const
{
    if (!hasColour(x, i))
        return {i, 0};
    return {(i + 1) % k, colourBit(0)};
}

std::string colourSetLetter(ColourSet x) { return formatColours(x); }

Automaton ConditionAutomaton::automaton() const
{
    if (k > 16)
        throw ContractError("condition automaton too large to materialise (k > 16)");
    std::vector<std::string> letters;
    for (ColourSet x = 0; x < (ColourSet{1} << k); ++x)
        letters.push_back(colourSetLetter(x));
    Automaton a(Alphabet(letters), 1, kind);
    a.setName(kind == Acceptance::GenCoBuchi ? "D" : "B");
    for (int i = 0; i < k; ++i)
        a.addState("q" + std::to_string(i));
    for (int i = 0; i < k; ++i)
        for (ColourSet x = 0; x < (ColourSet{1} << k); ++x) {
            auto [j, c] = step(i, x);
            a.addTransition(i, static_cast<int>(x), j, c);
        }
    return a;
}

ConditionAutomaton buildConditionAutomaton(int k, Acceptance kind)
{
    if (k < 1)
        throw ContractError("condition automaton needs at least one colour");
    return ConditionAutomaton{k, kind};
}

Automaton cascade(const ConditionAutomaton& b, const Automaton& a)
{
    if (b.k != a.colours())
        throw ContractError("cascade: condition automaton letters do not match the automaton's colours");
    if (a.stateCount() == 0)
        throw ContractError("cascade: empty automaton");
    std::map<std::pair<int, int>, int> seen;
    std::deque<std::pair<int, int>> queue;
    auto visit = [&](int q, int i) {
        if (seen.emplace(std::pair{q, i}, 0).second)
            queue.push_back({q, i});
    };
    visit(a.initial(), 0);
    while (!queue.empty()) {
        auto [q, i] = queue.front();
        queue.pop_front();
        for (const Edge& e : a.edges(q))
            visit(e.dst, b.step(i, e.colours).first);
    }
    Automaton r(a.alphabet(), 1, b.kind);
    r.setName(a.name());
    for (auto& [key, idx] : seen) {
        const auto& [q, i] = key;
        idx = r.addState(b.k == 1 ? a.stateName(q) : a.stateName(q) + "." + std::to_string(i));
    }
    for (const auto& [key, idx] : seen) {
        const auto& [q, i] = key;
        for (const Edge& e : a.edges(q)) {
            auto [j, c] = b.step(i, e.colours);
            r.addTransition(idx, e.letter, seen.at({e.dst, j}), c);
        }
    }
    r.setInitial(seen.at({a.initial(), 0}));
    return r;
}

Automaton degeneralise(const Automaton& a)
{
    if (a.colours() == 0) {
        Automaton r(a.alphabet(), 1, a.acceptance());
        r.setName(a.name());
        for (int q = 0; q < a.stateCount(); ++q)
            r.addState(a.stateName(q));
        for (const Transition& t : a.transitions())
            r.addTransition(t.src, t.letter, t.dst, colourBit(0));
        r.setInitial(a.initial());
        return r;
    }
    return cascade(buildConditionAutomaton(a.colours(), a.acceptance()), a);
}

Automaton breakpointDeterminise(const Automaton& a)
{
    if (a.acceptance() != Acceptance::GenCoBuchi || a.colours() != 1)
        throw ContractError("breakpointDeterminise expects a coBuchi automaton with one colour; degeneralise first");
    int n = a.stateCount();
    if (n > 63)
        throw ContractError("breakpointDeterminise supports at most 63 states");
    using Mask = std::uint64_t;
    int letters = a.letterCount();
    std::vector<std::vector<Mask>> post(n, std::vector<Mask>(letters, 0)), safePost = post;
    for (const Transition& t : a.transitions()) {
        post[t.src][t.letter] |= Mask{1} << t.dst;
        if (t.colours == 0)
            safePost[t.src][t.letter] |= Mask{1} << t.dst;
    }
    auto image = [&](const std::vector<std::vector<Mask>>& rel, Mask s, int l) {
        Mask r = 0;
        for (int q = 0; q < n; ++q)
            if ((s >> q) & 1U)
                r |= rel[q][l];
        return r;
    };
    auto setName = [&](Mask s) {
        std::string out = "{";
        bool first = true;
        for (int q = 0; q < n; ++q)
            if ((s >> q) & 1U) {
                out += (first ? "" : ",") + a.stateName(q);
                first = false;
            }
        return out + "}";
    };

    std::map<std::pair<Mask, Mask>, int> index;
    std::vector<std::pair<Mask, Mask>> states;
    Automaton r(a.alphabet(), 1, Acceptance::GenCoBuchi);
    r.setName(a.name());
    auto intern = [&](Mask s, Mask o) {
        auto [it, fresh] = index.emplace(std::pair{s, o}, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back({s, o});
            r.addState(setName(s) + "|" + setName(o));
        }
        return it->second;
    };
    Mask init = Mask{1} << a.initial();
    intern(init, init);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [s, o] = states[i];
        for (int l = 0; l < letters; ++l) {
            Mask s2 = image(post, s, l);
            Mask o2 = image(safePost, o, l);
            ColourSet c = 0;
            if (o2 == 0) {
                c = colourBit(0);
                o2 = image(safePost, s, l);
            }
            int j = intern(s2, o2);
            r.addTransition(static_cast<int>(i), l, j, c);
        }
    }
    if (static_cast<double>(r.stateCount()) > std::pow(3.0, n))
        throw std::logic_error("breakpoint construction exceeded the 3^n bound");
    return r;
}

Automaton determiniseCoBuchi(const Automaton& a)
{
    if (a.isDeterministic())
        return a;
    if (a.acceptance() != Acceptance::GenCoBuchi)
        throw ContractError("determinisation of nondeterministic generalised Buchi automata is not supported");
    return breakpointDeterminise(degeneralise(a));
}

std::vector<Automaton> stateReferences(const Automaton& a)
{
    std::vector<Automaton> refs;
    for (int q = 0; q < a.stateCount(); ++q)
        refs.push_back(trim(determiniseCoBuchi(trim(withInitial(a, q)))));
    return refs;
}

ResidualPartition languagePartition(const Automaton& a)
{
    if (a.isDeterministic())
        return residualPartition(a);
    return residualPartition(a, stateReferences(a));
}

Automaton removeColour(const Automaton& a, int i)
{
    if (i < 0 || i >= a.colours())
        throw ContractError("removeColour: colour out of range");
    Automaton r(a.alphabet(), a.colours() - 1, a.acceptance());
    r.setName(a.name());
    for (int q = 0; q < a.stateCount(); ++q)
        r.addState(a.stateName(q));
    ColourSet low = allColours(i);
    for (const Transition& t : a.transitions()) {
        ColourSet c = (t.colours & low) | ((t.colours >> 1) & ~low);
        r.addTransition(t.src, t.letter, t.dst, c);
    }
    r.setInitial(a.initial());
    return r;
}

bool removableColour(const Automaton& a, int i)
{
    if (!a.isDeterministic() || a.acceptance() != Acceptance::GenBuchi)
        throw ContractError("removableColour expects a deterministic generalised Buchi automaton");
    if (i < 0 || i >= a.colours())
        throw ContractError("removableColour: colour out of range");
    // Removing i only adds runs whose recurring colours cover everything but i.
    PathCondition cond;
    cond.infAll = a.fullColours() & ~colourBit(i);
    cond.finSome.push_back(colourBit(i));
    return !findAcceptingPath(graphOf(a), a.initial(), cond).has_value();
}

Automaton recolourGreedy(const Automaton& a)
{
    Automaton cur = a;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < cur.colours(); ++i)
            if (removableColour(cur, i)) {
                cur = removeColour(cur, i);
                changed = true;
                break;
            }
    }
    return cur;
}

}  // namespace hdmin
