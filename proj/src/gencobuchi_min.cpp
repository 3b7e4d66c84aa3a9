#include "hdmin/gencobuchi_min.hpp"
#include "hdmin/games.hpp"
#include "hdmin/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hdmin {

int SizeProfile::total() const
{
    int t = 0;
    for (int s : size)
        t += s;
    return t;
}

SizeProfile sizeProfile(const Automaton& amin)
{
    if (amin.acceptance() != Acceptance::GenCoBuchi || amin.colours() != 1)
        throw ContractError("sizeProfile expects a coBuchi automaton with one colour");
    CanonicityReport rep = checkCanonicity(amin);
    if (!rep.all())
        throw ContractError("sizeProfile needs a canonical automaton (" + describe(rep) + ")");
    ResidualPartition part = amin.isDeterministic() ? residualPartition(amin) : languagePartition(amin);
    int n = amin.stateCount();

    SizeProfile prof;
    std::vector<int> renum(part.classCount, -1);
    renum[part.classOf[amin.initial()]] = prof.classCount++;
    for (int q = 0; q < n; ++q)
        if (renum[part.classOf[q]] < 0)
            renum[part.classOf[q]] = prof.classCount++;
    prof.classOf.resize(n);
    for (int q = 0; q < n; ++q)
        prof.classOf[q] = renum[part.classOf[q]];

    std::vector<std::vector<int>> adj(n);
    for (const Transition& t : amin.transitions())
        adj[t.src].push_back(t.dst);
    int sccCount = 0;
    auto scc = sccIds(adj, &sccCount);
    std::vector<int> sccSize(sccCount, 0);
    for (int q = 0; q < n; ++q)
        ++sccSize[scc[q]];
    prof.transient.assign(prof.classCount, true);
    for (const Transition& t : amin.transitions())
        if (t.src == t.dst || (scc[t.src] == scc[t.dst] && sccSize[scc[t.src]] > 1))
            prof.transient[prof.classOf[t.src]] = false;

    SafeDecomposition sd = safeComponents(amin);
    prof.size.assign(prof.classCount, 1);
    prof.nMax = 1;
    for (const auto& comp : sd.components) {
        std::vector<int> count(prof.classCount, 0);
        for (int q : comp.states)
            ++count[prof.classOf[q]];
        for (int j = 0; j < prof.classCount; ++j)
            if (!prof.transient[j])
                prof.size[j] = std::max(prof.size[j], count[j]);
        prof.nMax = std::max(prof.nMax, static_cast<int>(comp.states.size()));
    }
    return prof;
}

bool checkPacking(const GenCoBuchiBuild& build, const Automaton& amin, std::string* why)
{
    auto fail = [why](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    const auto& pk = build.packing;
    const auto& prof = build.profile;
    if (static_cast<int>(prof.classOf.size()) != amin.stateCount())
        return fail("profile does not match the automaton");
    if (pk.phi.size() != pk.components.components.size())
        return fail("one map per safe component is required");
    for (std::size_t i = 0; i < pk.phi.size(); ++i) {
        const auto& comp = pk.components.components[i];
        std::set<int> image;
        if (static_cast<int>(pk.phi[i].size()) != amin.stateCount())
            return fail("map " + std::to_string(i) + " has the wrong domain");
        for (int q : comp.states) {
            int p = pk.phi[i][q];
            int j = prof.classOf[q];
            if (p < pk.offset[j] || p >= pk.offset[j] + prof.size[j])
                return fail("map " + std::to_string(i) + " does not respect residual classes");
            if (!image.insert(p).second)
                return fail("map " + std::to_string(i) + " is not injective");
        }
        for (const Transition& t : comp.transitions) {
            auto c = build.automaton.colourOf(pk.phi[i][t.src], t.letter, pk.phi[i][t.dst]);
            if (!c)
                return fail("map " + std::to_string(i) + " sends a safe transition outside the automaton");
            if (hasColour(*c, static_cast<int>(i)))
                return fail("image of a safe transition of component " + std::to_string(i) + " carries its colour");
        }
    }
    return true;
}

GenCoBuchiBuild buildGeneralDetailed(const Automaton& amin)
{
    GenCoBuchiBuild b;
    b.profile = sizeProfile(amin);
    const SizeProfile& prof = b.profile;
    b.packing.components = safeComponents(amin);
    const auto& comps = b.packing.components.components;
    int k = static_cast<int>(comps.size());

    int total = 0;
    for (int j = 0; j < prof.classCount; ++j) {
        b.packing.offset.push_back(total);
        total += prof.size[j];
    }
    Automaton out(amin.alphabet(), k, Acceptance::GenCoBuchi);
    out.setName(amin.name());
    for (int j = 0; j < prof.classCount; ++j)
        for (int t = 0; t < prof.size[j]; ++t)
            out.addState(prof.classCount == 1 ? "p" + std::to_string(t + 1)
                                              : "p" + std::to_string(j + 1) + "_" + std::to_string(t + 1));

    std::map<std::tuple<int, int, int>, ColourSet> covered;
    for (int i = 0; i < k; ++i) {
        std::vector<int> used(prof.classCount, 0);
        std::vector<int> phi(amin.stateCount(), -1);
        std::vector<int> states = comps[i].states;
        std::sort(states.begin(), states.end());
        for (int q : states) {
            int j = prof.classOf[q];
            if (used[j] >= prof.size[j])
                throw std::logic_error("buildGeneral: class too small for a safe component");
            phi[q] = b.packing.offset[j] + used[j]++;
        }
        for (const Transition& t : comps[i].transitions)
            covered[{phi[t.src], t.letter, phi[t.dst]}] |= colourBit(i);
        b.packing.phi.push_back(std::move(phi));
    }

    std::set<std::tuple<int, int, int>> classMoves;
    for (const Transition& t : amin.transitions())
        classMoves.insert({prof.classOf[t.src], t.letter, prof.classOf[t.dst]});
    for (const auto& [j, a, j2] : classMoves)
        for (int p = b.packing.offset[j]; p < b.packing.offset[j] + prof.size[j]; ++p)
            for (int p2 = b.packing.offset[j2]; p2 < b.packing.offset[j2] + prof.size[j2]; ++p2) {
                auto it = covered.find({p, a, p2});
                ColourSet skip = it == covered.end() ? 0 : it->second;
                out.addTransition(p, a, p2, allColours(k) & ~skip);
            }
    out.setInitial(b.packing.offset[0]);
    b.automaton = std::move(out);

    std::string why;
    if (!checkPacking(b, amin, &why))
        throw std::logic_error("buildGeneral: " + why);
    return b;
}

Automaton buildGeneral(const Automaton& amin) { return buildGeneralDetailed(amin).automaton; }

Automaton buildPrefixIndependent(const Automaton& amin)
{
    GenCoBuchiBuild b = buildGeneralDetailed(amin);
    if (b.profile.classCount != 1)
        throw ContractError("buildPrefixIndependent: the language has " + std::to_string(b.profile.classCount) +
                            " residuals; use buildGeneral");
    return b.automaton;
}

Automaton minimiseHDgenCoBuchi(const Automaton& a)
{
    Automaton amin = minimiseHDcoBuchi(a);
    Automaton out = buildGeneral(amin);
    if (!isHistoryDeterministic(out))
        throw std::logic_error("minimiseHDgenCoBuchi: output not history-deterministic");
    if (!containsHD(out, amin) || !containsHD(amin, out))
        throw std::logic_error("minimiseHDgenCoBuchi: output language differs from the input");
    return out;
}

RoundRobinResolver::RoundRobinResolver(const GenCoBuchiBuild& build, const CoBuchiMinimisation& min)
    : build_(build), min_(min), k_(build.automaton.colours())
{
    if (static_cast<int>(build.profile.classOf.size()) != min.automaton.stateCount() ||
        static_cast<int>(min.shadow.size()) != min.reference.stateCount() ||
        static_cast<int>(build.packing.phi.size()) != k_)
        throw ContractError("roundRobinResolver: packing does not match the automaton");
}

int RoundRobinResolver::initialState() const { return build_.automaton.initial(); }

RoundRobinResolver::Memory RoundRobinResolver::initialMemory() const
{
    return {0, -1, min_.reference.initial()};
}

std::pair<int, RoundRobinResolver::Memory> RoundRobinResolver::step(int state, const Memory& mem, int letter) const
{
    const Automaton& out = build_.automaton;
    auto anyMove = [&](int ref) -> std::pair<int, Memory> {
        auto succ = out.successors(state, letter);
        return {succ.empty() ? -1 : succ.front(), Memory{mem.index, -1, ref}};
    };
    if (mem.ref < 0)
        return anyMove(-1);
    auto refSucc = min_.reference.successors(mem.ref, letter);
    if (refSucc.empty())
        return anyMove(-1);
    int ref = refSucc.front();

    const Automaton& amin = min_.automaton;
    const auto& comps = build_.packing.components;
    int target = -1;
    Memory next{mem.index, -1, ref};
    if (mem.tracked >= 0) {
        for (const Edge& e : amin.edges(mem.tracked))
            if (e.letter == letter && e.colours == 0 && comps.componentOf[e.dst] == mem.index) {
                target = build_.packing.phi[mem.index][e.dst];
                next.tracked = e.dst;
                break;
            }
    }
    if (target < 0) {
        int s = min_.shadow[ref];
        if (s < 0)
            return anyMove(ref);
        next.index = k_ == 0 ? 0 : (mem.index + 1) % k_;
        if (k_ > 0 && comps.componentOf[s] == next.index) {
            target = build_.packing.phi[next.index][s];
            next.tracked = s;
        } else {
            target = build_.packing.offset[build_.profile.classOf[s]];
        }
    }
    if (!out.colourOf(state, letter, target))
        throw ContractError("roundRobinResolver: chosen move is not a transition of the automaton");
    return {target, next};
}

bool RoundRobinResolver::accepts(const Lasso& w) const
{
    const Automaton& out = build_.automaton;
    int state = initialState();
    Memory mem = initialMemory();
    auto advance = [&](int letter, ColourSet* seen) {
        auto [to, m] = step(state, mem, letter);
        if (to < 0)
            return false;
        if (seen)
            *seen |= *out.colourOf(state, letter, to);
        state = to;
        mem = m;
        return true;
    };
    for (int l : w.stem)
        if (!advance(l, nullptr))
            return false;
    std::map<std::pair<int, Memory>, int> firstSeen;
    std::vector<ColourSet> colours;
    while (true) {
        auto key = std::pair{state, mem};
        auto it = firstSeen.find(key);
        if (it != firstSeen.end()) {
            ColourSet inf = 0;
            for (std::size_t i = it->second; i < colours.size(); ++i)
                inf |= colours[i];
            return out.acceptsColours(inf);
        }
        firstSeen.emplace(key, static_cast<int>(colours.size()));
        ColourSet seen = 0;
        for (int l : w.cycle)
            if (!advance(l, &seen))
                return false;
        colours.push_back(seen);
    }
}

}  // namespace hdmin
