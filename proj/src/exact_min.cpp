#include "hdmin/games.hpp"
#include "hdmin/graph_search.hpp"
#include "hdmin/hardness.hpp"
#include "hdmin/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

namespace hdmin {

namespace {

using Mask = std::uint64_t;

// ---- deterministic candidates ----------------------------------------------------

struct ConflictPair {
    Lasso accepted;
    Lasso rejected;
};

// Transitions (as q * letters + a) used infinitely often by the run of a partial
// deterministic structure on w. When the run reaches an unassigned transition, that
// transition is reported through blockedAt instead.
std::optional<Mask> recurringTransitions(const std::vector<int>& delta, int letters, const Lasso& w, int* blockedAt)
{
    int q = 0;
    for (int l : w.stem) {
        int t = q * letters + l;
        if (delta[t] < 0) {
            *blockedAt = t;
            return std::nullopt;
        }
        q = delta[t];
    }
    std::vector<int> firstAt(delta.size() / letters, -1);
    std::vector<Mask> used;
    while (firstAt[q] < 0) {
        firstAt[q] = static_cast<int>(used.size());
        Mask m = 0;
        for (int l : w.cycle) {
            int t = q * letters + l;
            if (delta[t] < 0) {
                *blockedAt = t;
                return std::nullopt;
            }
            m |= Mask{1} << t;
            q = delta[t];
        }
        used.push_back(m);
    }
    Mask inf = 0;
    for (std::size_t i = firstAt[q]; i < used.size(); ++i)
        inf |= used[i];
    return inf;
}

constexpr int kUnknown = -2;
constexpr int kSettled = -1;

// Conflict status of one pair: kSettled if both runs are determined and compatible,
// otherwise the transition blocking them; returns false on a conflict.
bool pairStatus(const std::vector<int>& delta, int letters, const ConflictPair& c, int* block)
{
    auto p = recurringTransitions(delta, letters, c.accepted, block);
    if (!p)
        return true;
    auto r = recurringTransitions(delta, letters, c.rejected, block);
    if (!r)
        return true;
    *block = kSettled;
    return (*p & ~*r) != 0;
}

struct Product {
    int letters = 0;
    int kRef = 0;
    std::vector<std::pair<int, int>> nodes;  // (structure state, reference state)
    struct Arc {
        int src, dst, letter, tid;
        ColourSet colours;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;
    std::vector<int> parentArc;  // BFS tree from the root
};

Product buildProduct(const std::vector<int>& delta, int letters, const Automaton& ref)
{
    Product p;
    p.letters = letters;
    p.kRef = ref.colours();
    std::map<std::pair<int, int>, int> index;
    auto intern = [&](int q, int r) {
        auto [it, fresh] = index.emplace(std::pair{q, r}, static_cast<int>(p.nodes.size()));
        if (fresh) {
            p.nodes.push_back({q, r});
            p.out.emplace_back();
            p.parentArc.push_back(-1);
        }
        return std::pair{it->second, fresh};
    };
    intern(0, ref.initial());
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        auto [q, r] = p.nodes[i];
        for (const Edge& e : ref.edges(r)) {
            int tid = q * letters + e.letter;
            auto [j, fresh] = intern(delta[tid], e.dst);
            p.out[i].push_back(static_cast<int>(p.arcs.size()));
            if (fresh)
                p.parentArc[j] = static_cast<int>(p.arcs.size());
            p.arcs.push_back({static_cast<int>(i), j, e.letter, tid, e.colours});
        }
    }
    return p;
}

// SCCs of the product restricted to allowed arcs; returns, per nontrivial SCC, its internal arcs.
std::vector<std::vector<int>> restrictedSccs(const Product& p, const std::function<bool(const Product::Arc&)>& allowed)
{
    int n = static_cast<int>(p.nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : p.arcs)
        if (allowed(a))
            adj[a.src].push_back(a.dst);
    int count = 0;
    auto scc = sccIds(adj, &count);
    std::vector<std::vector<int>> inner(count);
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        const auto& a = p.arcs[i];
        if (allowed(a) && scc[a.src] == scc[a.dst])
            inner[scc[a.src]].push_back(static_cast<int>(i));
    }
    std::vector<std::vector<int>> r;
    for (auto& v : inner)
        if (!v.empty())
            r.push_back(std::move(v));
    return r;
}

// Lasso whose periodic part walks through every arc of one SCC.
Lasso coveringLasso(const Product& p, const std::vector<int>& sccArcs)
{
    std::vector<bool> inScc(p.arcs.size(), false);
    for (int a : sccArcs)
        inScc[a] = true;
    auto pathTo = [&](int from, int to) {
        std::vector<int> via(p.nodes.size(), -2);
        std::deque<int> queue{from};
        via[from] = -1;
        while (!queue.empty() && via[to] == -2) {
            int v = queue.front();
            queue.pop_front();
            for (int a : p.out[v])
                if (inScc[a] && via[p.arcs[a].dst] == -2) {
                    via[p.arcs[a].dst] = a;
                    queue.push_back(p.arcs[a].dst);
                }
        }
        std::vector<int> arcs;
        for (int v = to; v != from; v = p.arcs[via[v]].src)
            arcs.push_back(via[v]);
        std::reverse(arcs.begin(), arcs.end());
        return arcs;
    };
    int start = p.arcs[sccArcs.front()].src;
    int cur = start;
    Lasso w;
    for (int a : sccArcs) {
        for (int b : pathTo(cur, p.arcs[a].src))
            w.cycle.push_back(p.arcs[b].letter);
        w.cycle.push_back(p.arcs[a].letter);
        cur = p.arcs[a].dst;
    }
    for (int b : pathTo(cur, start))
        w.cycle.push_back(p.arcs[b].letter);
    std::vector<int> stem;
    for (int v = start; p.parentArc[v] >= 0; v = p.arcs[p.parentArc[v]].src)
        stem.push_back(p.arcs[p.parentArc[v]].letter);
    std::reverse(stem.begin(), stem.end());
    w.stem = stem;
    return w;
}

struct ColourSearch {
    const Automaton& ref;  // complete deterministic generalised Buchi
    int letters;
    int maxColours;
    std::vector<ConflictPair>& library;
    ExactMinStats* stats;
    // mask bit of each transition id, -1 for transitions on no cycle; identity when unset
    const std::vector<int>* bitOf = nullptr;

    int bit(int tid) const { return bitOf ? (*bitOf)[tid] : tid; }

    // Colour of each transition id and the number of colours used, if the structure can be coloured.
    std::optional<std::pair<std::vector<ColourSet>, int>> run(const std::vector<int>& delta)
    {
        if (stats)
            ++stats->colourSearches;
        Product p = buildProduct(delta, letters, ref);
        int kRef = ref.colours();
        ColourSet refAll = allColours(kRef);
        std::vector<Mask> negatives;
        std::vector<std::vector<int>> negativeArcs;
        for (int c = 0; c < kRef; ++c)
            for (auto& arcs : restrictedSccs(p, [c](const Product::Arc& a) { return !hasColour(a.colours, c); })) {
                Mask m = 0;
                for (int a : arcs)
                    m |= Mask{1} << bit(p.arcs[a].tid);
                negatives.push_back(m);
                negativeArcs.push_back(std::move(arcs));
            }
        // keep maximal ones
        std::vector<int> keep;
        for (std::size_t i = 0; i < negatives.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < negatives.size() && !dominated; ++j)
                if (i != j && (negatives[i] & ~negatives[j]) == 0 && (negatives[i] != negatives[j] || j < i))
                    dominated = true;
            if (!dominated)
                keep.push_back(static_cast<int>(i));
        }
        std::sort(keep.begin(), keep.end(), [&](int a, int b) {
            int pa = colourCount(negatives[a]), pb = colourCount(negatives[b]);
            return pa != pb ? pa > pb : negatives[a] < negatives[b];
        });

        std::unordered_map<Mask, bool> validCache;
        std::vector<int> witness;
        auto valid = [&](Mask u) {
            auto it = validCache.find(u);
            if (it != validCache.end())
                return it->second;
            bool ok = true;
            for (auto& arcs : restrictedSccs(p, [this, u](const Product::Arc& a) {
                     int b = bit(a.tid);
                     return b >= 0 && ((u >> b) & 1U);
                 })) {
                ColourSet seen = 0;
                for (int a : arcs)
                    seen |= p.arcs[a].colours;
                if ((seen & refAll) == refAll) {
                    ok = false;
                    witness = arcs;
                    break;
                }
            }
            validCache.emplace(u, ok);
            return ok;
        };

        bool singlesOk = true;
        for (int i : keep)
            if (!valid(negatives[i])) {
                singlesOk = false;
                if (library.size() < 400)
                    library.push_back({coveringLasso(p, witness), coveringLasso(p, negativeArcs[i])});
            }
        if (!singlesOk)
            return std::nullopt;

        std::vector<Mask> groups;
        std::function<bool(std::size_t)> place = [&](std::size_t i) {
            if (i == keep.size())
                return true;
            Mask m = negatives[keep[i]];
            for (std::size_t g = 0; g < groups.size(); ++g) {
                Mask old = groups[g];
                if (!valid(old | m))
                    continue;
                groups[g] = old | m;
                if (place(i + 1))
                    return true;
                groups[g] = old;
            }
            if (static_cast<int>(groups.size()) < maxColours) {
                groups.push_back(m);
                if (place(i + 1))
                    return true;
                groups.pop_back();
            }
            return false;
        };
        if (!place(0))
            return std::nullopt;
        std::vector<ColourSet> colours(delta.size(), 0);
        for (std::size_t t = 0; t < delta.size(); ++t) {
            int b = bit(static_cast<int>(t));
            if (b < 0)
                continue;  // never recurs
            for (std::size_t g = 0; g < groups.size(); ++g)
                if (!((groups[g] >> b) & 1U))
                    colours[t] |= colourBit(static_cast<int>(g));
        }
        return std::pair{colours, static_cast<int>(groups.size())};
    }
};

// Pairs of short periodic words, one in the language and one outside.
std::vector<ConflictPair> seedLibrary(const Automaton& ref)
{
    std::vector<Lasso> in, out;
    int L = ref.letterCount();
    for (int a = 0; a < L; ++a)
        for (int b = -1; b < L; ++b) {
            Lasso w;
            w.cycle = b < 0 ? std::vector<int>{a} : std::vector<int>{a, b};
            (lassoAccepts(ref, w) ? in : out).push_back(w);
        }
    std::vector<ConflictPair> lib;
    for (const auto& x : in)
        for (const auto& y : out)
            lib.push_back({x, y});
    return lib;
}

Automaton structureAutomaton(const Alphabet& sigma, int n, const std::vector<int>& delta,
                             const std::vector<ColourSet>& colours, int k, Acceptance acc)
{
    Automaton a(sigma, k, acc);
    for (int q = 0; q < n; ++q)
        a.addState("s" + std::to_string(q));
    int letters = sigma.size();
    for (int q = 0; q < n; ++q)
        for (int l = 0; l < letters; ++l)
            a.addTransition(q, l, delta[q * letters + l], colours[q * letters + l]);
    a.setInitial(0);
    return a;
}

// Complete deterministic generalised Buchi automaton for the query language, or for its
// complement when flipped is set.
Automaton buchiReference(const Automaton& reference, bool* flipped)
{
    Automaton ref = reference;
    if (!ref.isDeterministic()) {
        if (ref.acceptance() == Acceptance::GenBuchi)
            throw ContractError("exactMinimise: det mode needs a deterministic reference or a coBuchi-type one");
        ref = determiniseCoBuchi(ref);
    }
    ref = trim(ref);
    *flipped = ref.acceptance() == Acceptance::GenCoBuchi;
    return *flipped ? dualise(ref) : complete(ref);
}

std::optional<Automaton> exactDet(const ExactMinQuery& q, ExactMinStats* stats)
{
    bool flipped = false;
    Automaton ref = buchiReference(q.reference, &flipped);
    int letters = ref.letterCount();
    if (q.maxStates * letters > 64)
        throw BudgetExceeded("exactMinimise: more than 64 candidate transitions");
    double estimate = 0;
    double fact = 1;
    for (int n = 1; n <= q.maxStates; ++n) {
        estimate += std::pow(static_cast<double>(n), static_cast<double>(n * letters)) / fact;
        fact *= n;
    }
    if (estimate > q.budget)
        throw BudgetExceeded("exactMinimise: about " + std::to_string(static_cast<long double>(estimate)) +
                             " candidate structures exceed the budget");

    std::vector<ConflictPair> library = seedLibrary(ref);
    ColourSearch search{ref, letters, q.maxColours, library, stats};
    for (int n = 1; n <= q.maxStates; ++n) {
        std::vector<int> delta(static_cast<std::size_t>(n * letters), -1);
        std::vector<int> block(library.size(), kUnknown);
        std::optional<Automaton> found;
        std::function<bool(int, int)> fill = [&](int idx, int maxUsed) {
            if (idx == n * letters) {
                if (maxUsed != n - 1)
                    return false;
                if (stats)
                    ++stats->structures;
                auto col = search.run(delta);
                if (!col)
                    return false;
                Automaton a = structureAutomaton(ref.alphabet(), n, delta, col->first, col->second,
                                                 Acceptance::GenBuchi);
                found = flipped ? dualise(a) : a;
                return true;
            }
            int state = idx / letters;
            if (idx % letters == 0 && state > maxUsed)
                return false;
            for (int t = 0; t <= std::min(maxUsed + 1, n - 1); ++t) {
                delta[idx] = t;
                // only pairs waiting on this transition (or new ones) can change status
                block.resize(library.size(), kUnknown);
                std::vector<std::pair<std::size_t, int>> undo;
                bool clash = false;
                for (std::size_t c = 0; c < library.size() && !clash; ++c) {
                    if (block[c] != idx && block[c] != kUnknown)
                        continue;
                    undo.push_back({c, block[c]});
                    clash = !pairStatus(delta, letters, library[c], &block[c]);
                }
                bool ok = !clash && fill(idx + 1, std::max(maxUsed, t));
                for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                    block[it->first] = it->second;
                if (ok)
                    return true;
            }
            delta[idx] = -1;
            return false;
        };
        if (fill(0, 0)) {
            Automaton a = *found;
            a.setName(q.reference.name());
            Automaton check = flipped ? dualise(ref) : ref;
            if (!equivalentDeterministic(a, check))
                throw std::logic_error("exactMinimise: candidate failed the final equivalence check");
            return a;
        }
    }
    return std::nullopt;
}

// ---- history-deterministic candidates ----------------------------------------------

std::optional<Automaton> exactHD(const ExactMinQuery& q, ExactMinStats* stats)
{
    if (q.reference.acceptance() != Acceptance::GenCoBuchi)
        throw ContractError("exactMinimise: hd mode supports coBuchi-type references only");
    int K = q.maxColours;
    Automaton d = trim(determiniseCoBuchi(q.reference));
    auto nonEmpty = nonEmptyStates(d);
    if (!nonEmpty[d.initial()]) {
        Automaton e(d.alphabet(), std::min(K, 1), Acceptance::GenCoBuchi);
        e.setName(q.reference.name());
        e.addState("s0");
        return e;
    }
    if (K < 1)
        return std::nullopt;
    if (K > 6)
        throw BudgetExceeded("exactMinimise: hd mode supports at most 6 colours");
    d = trim(restrictStates(d, nonEmpty));
    Automaton dual = dualise(d);
    ResidualPartition part = residualPartition(d);
    int letters = d.letterCount();

    // classes renumbered with the initial one first
    std::vector<int> renum(part.classCount, -1);
    int m = 0;
    renum[part.classOf[d.initial()]] = m++;
    for (int s = 0; s < d.stateCount(); ++s)
        if (renum[part.classOf[s]] < 0)
            renum[part.classOf[s]] = m++;
    std::vector<int> repState(m);
    for (int s = d.stateCount() - 1; s >= 0; --s)
        repState[renum[part.classOf[s]]] = s;
    std::vector<std::vector<int>> classSucc(m, std::vector<int>(letters, -1));
    for (int j = 0; j < m; ++j)
        for (const Edge& e : d.edges(repState[j]))
            classSucc[j][e.letter] = renum[part.classOf[e.dst]];
    if (m > q.maxStates)
        return std::nullopt;

    int options = 1 << K;
    // compositions of s into m positive parts, in lexicographic order
    std::vector<std::vector<int>> layouts;
    for (int s = m; s <= q.maxStates; ++s) {
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int j, int left) {
            if (j == m - 1) {
                if (left >= 1) {
                    cur.push_back(left);
                    layouts.push_back(cur);
                    cur.pop_back();
                }
                return;
            }
            for (int c = 1; c <= left - (m - 1 - j); ++c) {
                cur.push_back(c);
                rec(j + 1, left - c);
                cur.pop_back();
            }
        };
        rec(0, s);
    }
    double estimate = 0;
    for (const auto& layout : layouts) {
        double e = 1;
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < letters; ++a) {
                int t = classSucc[j][a];
                if (t < 0)
                    continue;
                double per = K == 1 ? layout[t] + 1 : std::pow(options, layout[t]);
                e *= std::pow(per, layout[j]);
            }
        estimate += e;
    }
    if (estimate > q.budget)
        throw BudgetExceeded("exactMinimise: about " + std::to_string(static_cast<long double>(estimate)) +
                             " candidates exceed the budget");

    for (const auto& layout : layouts) {
        int s = 0;
        std::vector<int> classOfState;
        std::vector<std::vector<int>> members(m);
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < layout[j]; ++c) {
                members[j].push_back(s++);
                classOfState.push_back(j);
            }
        struct Slot {
            int p, letter, target;
            int choices;
        };
        std::vector<Slot> slots;
        for (int p = 0; p < s; ++p)
            for (int a = 0; a < letters; ++a) {
                int t = classSucc[classOfState[p]][a];
                if (t < 0)
                    continue;
                int size = static_cast<int>(members[t].size());
                int choices = K == 1 ? size + 1 : static_cast<int>(std::pow(options, size));
                slots.push_back({p, a, t, choices});
            }
        // edges[p] lists (letter, dst, colours) of assigned slots
        std::vector<std::vector<Transition>> assigned(slots.size());
        auto expand = [&](std::size_t i, int choice) {
            std::vector<Transition> ts;
            const Slot& sl = slots[i];
            const auto& mem = members[sl.target];
            for (std::size_t x = 0; x < mem.size(); ++x) {
                ColourSet c;
                if (K == 1)
                    c = static_cast<int>(x) == choice - 1 ? 0 : colourBit(0);
                else
                    c = static_cast<ColourSet>((choice / static_cast<int>(std::pow(options, x))) % options);
                ts.push_back({sl.p, sl.letter, mem[x], c});
            }
            return ts;
        };
        // Safe_i(p) must lie in the residual of p's class for every colour i.
        auto safeOk = [&](std::size_t upto, ColourSet fresh) {
            for (int i = 0; i < K; ++i) {
                if (!hasColour(fresh, i))
                    continue;
                LabelledGraph g;
                int dn = dual.stateCount();
                g.nodes = s * dn + 1;
                int root = s * dn;
                for (int p = 0; p < s; ++p)
                    g.arcs.push_back({root, p * dn + repState[classOfState[p]], 0, 0});
                for (std::size_t x = 0; x <= upto; ++x)
                    for (const Transition& t : assigned[x]) {
                        if (hasColour(t.colours, i))
                            continue;
                        for (int r = 0; r < dn; ++r)
                            for (const Edge& e : dual.edges(r))
                                if (e.letter == t.letter)
                                    g.arcs.push_back({t.src * dn + r, t.dst * dn + e.dst, t.letter, e.colours});
                    }
                if (findAcceptingPath(g, root, conditionFor(dual.acceptance(), dual.colours())))
                    return false;
            }
            return true;
        };
        std::optional<Automaton> found;
        std::function<bool(std::size_t)> fill = [&](std::size_t i) {
            if (i == slots.size()) {
                Automaton cand(d.alphabet(), K, Acceptance::GenCoBuchi);
                for (int p = 0; p < s; ++p)
                    cand.addState("s" + std::to_string(p));
                for (const auto& ts : assigned)
                    for (const Transition& t : ts)
                        cand.addTransition(t.src, t.letter, t.dst, t.colours);
                cand.setInitial(0);
                auto reach = reachableStates(cand);
                if (!std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }))
                    return false;
                if (K == 1) {
                    std::vector<std::vector<int>> adj(s);
                    for (const Transition& t : cand.transitions())
                        if (t.colours == 0)
                            adj[t.src].push_back(t.dst);
                    auto scc = sccIds(adj);
                    for (const Transition& t : cand.transitions())
                        if (t.colours == 0 && scc[t.src] != scc[t.dst])
                            return false;
                }
                if (stats)
                    ++stats->gameChecks;
                if (!containsHD(d, cand))
                    return false;
                found = cand;
                return true;
            }
            for (int c = 0; c < slots[i].choices; ++c) {
                assigned[i] = expand(i, c);
                ColourSet fresh = 0;
                for (const Transition& t : assigned[i])
                    fresh |= allColours(K) & ~t.colours;
                if (stats)
                    ++stats->structures;
                if (fresh && !safeOk(i, fresh))
                    continue;
                if (fill(i + 1))
                    return true;
            }
            assigned[i].clear();
            return false;
        };
        if (fill(0)) {
            Automaton a = *found;
            a.setName(q.reference.name());
            if (!isHistoryDeterministic(a))
                throw std::logic_error("exactMinimise: candidate won the letter game but is not HD");
            return a;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Automaton> exactMinimise(const ExactMinQuery& q, ExactMinStats* stats)
{
    if (q.maxStates < 1)
        throw ContractError("exactMinimise: maxStates must be at least 1");
    if (q.maxColours < 0 || q.maxColours > kMaxColours)
        throw ContractError("exactMinimise: maxColours out of range");
    if (q.reference.stateCount() == 0)
        throw ContractError("exactMinimise: reference without states");
    return q.mode == ExactMode::Det ? exactDet(q, stats) : exactHD(q, stats);
}

std::optional<Automaton> recolourWith(const Automaton& a, int k)
{
    if (!a.isDeterministic())
        throw ContractError("recolourWith expects a deterministic automaton");
    bool flipped = a.acceptance() == Acceptance::GenCoBuchi;
    Automaton full = complete(a);
    Automaton ref = flipped ? dualise(full) : full;
    int n = full.stateCount();
    int letters = full.letterCount();
    // renumber so the initial state is 0
    std::vector<int> perm(n), inv(n);
    for (int q = 0; q < n; ++q)
        perm[q] = q;
    std::swap(perm[0], perm[full.initial()]);
    for (int q = 0; q < n; ++q)
        inv[perm[q]] = q;
    std::vector<int> delta(static_cast<std::size_t>(n * letters));
    for (int q = 0; q < n; ++q)
        for (int l = 0; l < letters; ++l)
            delta[inv[q] * letters + l] = inv[full.successors(q, l).front()];
    // only transitions inside an SCC can recur
    std::vector<std::vector<int>> adj(n);
    for (int t = 0; t < n * letters; ++t)
        adj[t / letters].push_back(delta[t]);
    std::vector<int> scc = sccIds(adj);
    std::vector<int> bitOf(delta.size(), -1);
    int bits = 0;
    for (int t = 0; t < n * letters; ++t)
        if (scc[t / letters] == scc[delta[t]])
            bitOf[t] = bits++;
    if (bits > 64)
        throw BudgetExceeded("recolourWith: more than 64 transitions on cycles");
    std::vector<ConflictPair> library;
    ColourSearch search{ref, letters, k, library, nullptr, &bitOf};
    auto col = search.run(delta);
    if (!col)
        return std::nullopt;
    Automaton r(a.alphabet(), col->second, a.acceptance());
    r.setName(a.name());
    for (int q = 0; q < a.stateCount(); ++q)
        r.addState(a.stateName(q));
    for (const Transition& t : a.transitions()) {
        ColourSet c = col->first[inv[t.src] * letters + t.letter];
        r.addTransition(t.src, t.letter, t.dst, c);
    }
    r.setInitial(a.initial());
    if (!equivalentDeterministic(r, a))
        return std::nullopt;
    return r;
}

}  // namespace hdmin
