#include "oracles.hpp"

#include "hdmin/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace oracle {

using namespace hdmin;

namespace {

// States reachable after reading word from the initial state.
std::set<int> afterWord(const Automaton& a, const std::vector<int>& word)
{
    std::set<int> cur{a.initial()};
    for (int l : word) {
        std::set<int> next;
        for (int q : cur)
            for (int s : a.successors(q, l))
                next.insert(s);
        cur = std::move(next);
    }
    return cur;
}

// One pass of the cycle from q: every (target, colours seen on the way).
std::set<std::pair<int, ColourSet>> cyclePass(const Automaton& a, int q, const std::vector<int>& cycle)
{
    std::set<std::pair<int, ColourSet>> cur{{q, 0}};
    for (int l : cycle) {
        std::set<std::pair<int, ColourSet>> next;
        for (auto [p, c] : cur)
            for (const Edge& e : a.edges(p))
                if (e.letter == l)
                    next.insert({e.dst, c | e.colours});
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

bool accepts(const Automaton& a, const Lasso& w)
{
    // states at cycle boundaries reachable after the stem and any number of passes
    std::set<int> boundary = afterWord(a, w.stem);
    std::deque<int> queue(boundary.begin(), boundary.end());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (auto [p, c] : cyclePass(a, q, w.cycle))
            if (boundary.insert(p).second)
                queue.push_back(p);
    }
    for (int q : boundary) {
        if (a.isGenBuchi()) {
            // closed walks from q tracking the union of colours
            std::set<std::pair<int, ColourSet>> seen;
            std::deque<std::pair<int, ColourSet>> todo{{q, 0}};
            bool first = true;
            while (!todo.empty()) {
                auto [p, c] = todo.front();
                todo.pop_front();
                if (!first && p == q && c == a.fullColours())
                    return true;
                first = false;
                for (auto [r, c2] : cyclePass(a, p, w.cycle)) {
                    std::pair<int, ColourSet> nx{r, c | c2};
                    if (seen.insert(nx).second)
                        todo.push_back(nx);
                }
            }
        } else {
            for (int i = 0; i < a.colours(); ++i) {
                // closed walk from q never seeing colour i
                std::set<int> seen;
                std::deque<int> todo{q};
                while (!todo.empty()) {
                    int p = todo.front();
                    todo.pop_front();
                    for (auto [r, c] : cyclePass(a, p, w.cycle)) {
                        if (hasColour(c, i))
                            continue;
                        if (r == q)
                            return true;
                        if (seen.insert(r).second)
                            todo.push_back(r);
                    }
                }
            }
        }
    }
    return false;
}

void forEachLasso(int letters, int maxStem, int maxCycle, const std::function<void(const Lasso&)>& f)
{
    int maxLen = std::max(maxStem, maxCycle);
    std::vector<std::vector<std::vector<int>>> ofLength(maxLen + 1);
    ofLength[0].push_back({});
    for (int len = 1; len <= maxLen; ++len)
        for (const auto& w : ofLength[len - 1])
            for (int l = 0; l < letters; ++l) {
                auto v = w;
                v.push_back(l);
                ofLength[len].push_back(std::move(v));
            }
    for (int s = 0; s <= maxStem; ++s)
        for (const auto& stem : ofLength[s])
            for (int c = 1; c <= maxCycle; ++c)
                for (const auto& cycle : ofLength[c])
                    f(Lasso{stem, cycle});
}

std::optional<Lasso> lassoDisagreement(const Automaton& a, const Automaton& b, int maxStem, int maxCycle)
{
    std::optional<Lasso> bad;
    forEachLasso(a.letterCount(), maxStem, maxCycle, [&](const Lasso& w) {
        if (!bad && accepts(a, w) != accepts(b, w))
            bad = w;
    });
    return bad;
}

std::optional<Lasso> boundedAcceptedLasso(const Automaton& a, int maxStem, int maxCycle)
{
    std::optional<Lasso> hit;
    forEachLasso(a.letterCount(), maxStem, maxCycle, [&](const Lasso& w) {
        if (!hit && accepts(a, w))
            hit = w;
    });
    return hit;
}

std::optional<bool> letterGameHD(const Automaton& input, int maxChoicePositions)
{
    if (input.acceptance() != Acceptance::GenCoBuchi)
        throw ContractError("letterGameHD expects a coBuchi-type automaton");
    // completion adds a rejecting sink and keeps the verdict
    Automaton a = complete(input.colours() == 1 ? input : degeneralise(input));
    Automaton d = complete(determiniseCoBuchi(input));
    int L = a.letterCount();
    // Adam positions (q, r); Eve positions (q, r, letter)
    std::map<std::pair<int, int>, int> adamIdx;
    std::vector<std::pair<int, int>> adam;
    auto intern = [&](int q, int r) {
        auto [it, fresh] = adamIdx.emplace(std::pair{q, r}, static_cast<int>(adam.size()));
        if (fresh)
            adam.push_back({q, r});
        return it->second;
    };
    intern(a.initial(), d.initial());
    struct EveMove {
        int to;
        bool aDot;
    };
    struct EvePos {
        std::vector<EveMove> moves;
        bool dDot;
    };
    std::vector<std::vector<int>> adamSucc;
    std::vector<EvePos> eve;
    for (std::size_t i = 0; i < adam.size(); ++i) {
        auto [q, r] = adam[i];
        adamSucc.emplace_back();
        for (int l = 0; l < L; ++l) {
            const Edge& de = *std::find_if(d.edges(r).begin(), d.edges(r).end(),
                                           [l](const Edge& e) { return e.letter == l; });
            EvePos ep{{}, de.colours != 0};
            for (const Edge& e : a.edges(q))
                if (e.letter == l)
                    ep.moves.push_back({intern(e.dst, de.dst), e.colours != 0});
            adamSucc[i].push_back(static_cast<int>(eve.size()));
            eve.push_back(std::move(ep));
        }
    }
    std::vector<int> choosers;
    for (std::size_t e = 0; e < eve.size(); ++e)
        if (eve[e].moves.size() > 1)
            choosers.push_back(static_cast<int>(e));
    if (static_cast<int>(choosers.size()) > maxChoicePositions)
        return std::nullopt;

    int A = static_cast<int>(adam.size());
    std::vector<int> pick(eve.size(), 0);
    // Adam beats a positional choice iff some reachable closed walk has an a-dot and no d-dot
    auto adamWins = [&]() {
        std::vector<std::vector<std::tuple<int, bool, bool>>> g(A);
        for (int i = 0; i < A; ++i)
            for (int e : adamSucc[i]) {
                const EveMove& m = eve[e].moves[pick[e]];
                g[i].push_back({m.to, m.aDot, eve[e].dDot});
            }
        std::vector<bool> reach(A, false);
        std::deque<int> todo{0};
        reach[0] = true;
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop_front();
            for (auto [t, ad, dd] : g[v])
                if (!reach[t]) {
                    reach[t] = true;
                    todo.push_back(t);
                }
        }
        for (int s = 0; s < A; ++s) {
            if (!reach[s])
                continue;
            std::set<std::pair<int, bool>> seen;
            std::deque<std::pair<int, bool>> walk{{s, false}};
            while (!walk.empty()) {
                auto [v, ad] = walk.front();
                walk.pop_front();
                for (auto [t, a2, dd] : g[v]) {
                    if (dd)
                        continue;
                    bool nad = ad || a2;
                    if (t == s && nad)
                        return true;
                    if (seen.insert({t, nad}).second)
                        walk.push_back({t, nad});
                }
            }
        }
        return false;
    };
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == choosers.size())
            return !adamWins();
        for (std::size_t c = 0; c < eve[choosers[i]].moves.size(); ++c) {
            pick[choosers[i]] = static_cast<int>(c);
            if (search(i + 1))
                return true;
        }
        return false;
    };
    return search(0);
}

bool strategyPlaysWin(const GameArena& arena, const Strategy& s, int from)
{
    using Node = std::pair<int, int>;  // position, memory
    std::set<Node> reach{{from, s.initialMemory}};
    std::deque<Node> todo{{from, s.initialMemory}};
    auto nextOf = [&](Node n) {
        std::vector<std::pair<Node, int>> r;
        auto [v, mem] = n;
        std::vector<int> options;
        if (arena.owner(v) == Player::Eve)
            options.push_back(s.choice(v, mem));
        else
            options = arena.movesFrom(v);
        for (int m : options)
            r.push_back({{arena.move(m).to, s.update(mem, m)}, m});
        return r;
    };
    while (!todo.empty()) {
        Node n = todo.front();
        todo.pop_front();
        if (arena.owner(n.first) == Player::Eve) {
            int m = s.choice(n.first, n.second);
            if (m < 0 || m >= arena.moveCount() || arena.move(m).from != n.first)
                return false;
        }
        for (auto [nx, m] : nextOf(n))
            if (reach.insert(nx).second)
                todo.push_back(nx);
    }
    ColourSet allA = allColours(arena.assumptions);
    // a bad play has a closed walk seeing every assumption and missing some guarantee
    for (Node start : reach)
        for (int j = 0; j < std::max(arena.guarantees, 0); ++j) {
            std::set<std::pair<Node, ColourSet>> seen;
            std::deque<std::pair<Node, ColourSet>> q{{start, 0}};
            while (!q.empty()) {
                auto [n, prem] = q.front();
                q.pop_front();
                for (auto [nx, m] : nextOf(n)) {
                    if (hasColour(arena.move(m).conclusion, j))
                        continue;
                    ColourSet p2 = prem | arena.move(m).premise;
                    if (nx == start && p2 == allA)
                        return false;
                    if (seen.insert({nx, p2}).second)
                        q.push_back({nx, p2});
                }
            }
        }
    return true;
}

std::optional<Colouring> bruteColouring(const Graph& g, int k)
{
    int n = g.vertexCount();
    Colouring c(n, 0);
    if (n == 0)
        return c;
    if (k <= 0)
        return std::nullopt;
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v])
                ok = false;
        if (ok)
            return c;
        int i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            return std::nullopt;
    }
}

int bruteOneStateColours(const Automaton& a, int maxK)
{
    int L = a.letterCount();
    std::vector<bool> member(1u << L, false);
    for (unsigned t = 1; t < (1u << L); ++t) {
        Lasso w;
        for (int l = 0; l < L; ++l)
            if ((t >> l) & 1U)
                w.cycle.push_back(l);
        member[t] = accepts(a, w);
    }
    for (int k = 0; k <= maxK; ++k) {
        // every assignment letter -> subset of k colours
        unsigned subsets = 1u << k;
        std::vector<unsigned> assign(L, 0);
        while (true) {
            bool ok = true;
            for (unsigned t = 1; t < (1u << L) && ok; ++t) {
                unsigned seen = 0;
                for (int l = 0; l < L; ++l)
                    if ((t >> l) & 1U)
                        seen |= assign[l];
                ok = (seen == subsets - 1) == member[t];
            }
            if (ok)
                return k;
            int i = 0;
            while (i < L && ++assign[i] == subsets)
                assign[i++] = 0;
            if (i == L)
                break;
        }
    }
    return -1;
}

}  // namespace oracle
