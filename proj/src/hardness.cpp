#include "hdmin/hardness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hdmin {

Graph::Graph(int vertices)
{
    for (int v = 0; v < vertices; ++v)
        addVertex();
}

Graph::Graph(std::vector<std::string> names)
{
    for (auto& n : names)
        addVertex(std::move(n));
}

int Graph::addVertex(std::string name)
{
    int v = vertexCount();
    if (name.empty())
        name = "v" + std::to_string(v);
    if (vertexIndex(name) >= 0)
        throw ContractError("duplicate vertex name '" + name + "'");
    names_.push_back(std::move(name));
    return v;
}

void Graph::addEdge(int u, int v)
{
    if (u < 0 || v < 0 || u >= vertexCount() || v >= vertexCount())
        throw ContractError("edge endpoint out of range");
    if (u == v)
        throw ContractError("self-loop on vertex '" + name(u) + "'");
    edges_.insert({std::min(u, v), std::max(u, v)});
}

int Graph::vertexIndex(const std::string& n) const
{
    auto it = std::find(names_.begin(), names_.end(), n);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool Graph::hasEdge(int u, int v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }

std::vector<int> Graph::neighbours(int v) const
{
    std::vector<int> r;
    for (int u = 0; u < vertexCount(); ++u)
        if (u != v && hasEdge(u, v))
            r.push_back(u);
    return r;
}

int Graph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

bool isProperColouring(const Graph& g, const Colouring& c)
{
    if (static_cast<int>(c.size()) != g.vertexCount())
        return false;
    for (int x : c)
        if (x < 0)
            return false;
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

std::optional<Colouring> graphColouring(const Graph& g, int k)
{
    if (k < 1)
        throw ContractError("graphColouring: k must be at least 1");
    int n = g.vertexCount();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    Colouring c(n, -1);
    std::function<bool(int)> assign = [&](int i) {
        if (i == n)
            return true;
        int v = order[i];
        // colours beyond the largest used one are interchangeable
        int used = -1;
        for (int j = 0; j < i; ++j)
            used = std::max(used, c[order[j]]);
        for (int col = 0; col < k && col <= used + 1; ++col) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (c[u] == col)
                    ok = false;
            if (!ok)
                continue;
            c[v] = col;
            if (assign(i + 1))
                return true;
            c[v] = -1;
        }
        return false;
    };
    if (!assign(0))
        return std::nullopt;
    return c;
}

int chromaticNumber(const Graph& g)
{
    if (g.vertexCount() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (graphColouring(g, k))
            return k;
}

bool hasFourClique(const Graph& g)
{
    int n = g.vertexCount();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.hasEdge(a, b))
                for (int c = b + 1; c < n; ++c)
                    if (g.hasEdge(a, c) && g.hasEdge(b, c))
                        for (int d = c + 1; d < n; ++d)
                            if (g.hasEdge(a, d) && g.hasEdge(b, d) && g.hasEdge(c, d))
                                return true;
    return false;
}

bool isTriangleFull(const Graph& g)
{
    for (int v = 0; v < g.vertexCount(); ++v) {
        auto nb = g.neighbours(v);
        bool found = false;
        for (std::size_t i = 0; i < nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !found; ++j)
                found = g.hasEdge(nb[i], nb[j]);
        if (!found)
            return false;
    }
    return true;
}

bool isConnected(const Graph& g)
{
    int n = g.vertexCount();
    if (n == 0)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v))
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

Graph moserSpindle()
{
    Graph g(std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g"});
    // two rhombi sharing a, far tips d and g joined
    const int edges[][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};
    for (const auto& e : edges)
        g.addEdge(e[0], e[1]);
    return g;
}

Graph triangleFullTransform(const Graph& g)
{
    if (hasFourClique(g))
        return moserSpindle();
    Graph t;
    for (int v = 0; v < g.vertexCount(); ++v)
        for (int i = 0; i < 3; ++i)
            t.addVertex(g.name(v) + "_" + std::to_string(i));
    for (const auto& [u, v] : g.edges())
        t.addEdge(3 * u, 3 * v);
    for (int v = 0; v < g.vertexCount(); ++v) {
        t.addEdge(3 * v, 3 * v + 1);
        t.addEdge(3 * v, 3 * v + 2);
        t.addEdge(3 * v + 1, 3 * v + 2);
    }
    return t;
}

Colouring trivialColouring(const Graph& g)
{
    Colouring c(g.vertexCount());
    std::iota(c.begin(), c.end(), 0);
    return c;
}

Automaton colouringToAutomaton(const Graph& g, const Colouring& c)
{
    if (!isProperColouring(g, c))
        throw ContractError("colouringToAutomaton: the colouring is not proper");
    int n = g.vertexCount();
    if (n == 0)
        throw ContractError("colouringToAutomaton: empty graph");
    if (n > kMaxColours)
        throw ContractError("colouringToAutomaton: too many vertices");
    int k = *std::max_element(c.begin(), c.end()) + 1;
    std::vector<std::string> letters;
    for (int v = 0; v < n; ++v)
        letters.push_back(g.name(v));
    Automaton a(Alphabet(letters), n, Acceptance::GenBuchi);
    a.setName("LG");
    for (int q = 0; q < k; ++q)
        a.addState(std::to_string(q + 1));
    for (int v = 0; v < n; ++v) {
        ColourSet nb = 0;
        for (int u : g.neighbours(v))
            nb |= colourBit(u);
        ColourSet all = allColours(n);
        for (int q = 0; q < k; ++q) {
            // only the loop on c(v) reading v emits colour v
            ColourSet col = q == c[v] ? all & ~nb : all & ~nb & ~colourBit(v);
            a.addTransition(q, v, c[v], col);
        }
    }
    a.setInitial(0);
    return a;
}

namespace {

std::string edgeName(const Graph& g, int u, int v) { return g.name(u) + "-" + g.name(v); }

Automaton pseudoPathStructure(const Graph& g, int vInit, int k, const std::function<ColourSet(int)>& vertexColours,
                              const std::function<ColourSet(int, int)>& edgeColours)
{
    int n = g.vertexCount();
    if (vInit < 0 || vInit >= n)
        throw ContractError("pseudoPathAutomaton: initial vertex out of range");
    if (!isConnected(g))
        throw ContractError("pseudoPathAutomaton: the graph must be connected");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            throw ContractError("pseudoPathAutomaton: vertex '" + g.name(v) + "' has degree below 2");
    std::vector<std::string> letters;
    for (int v = 0; v < n; ++v)
        letters.push_back(g.name(v));
    std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    for (const auto& [u, v] : edges)
        letters.push_back(edgeName(g, u, v));
    Automaton a(Alphabet(letters), k, Acceptance::GenCoBuchi);
    a.setName("stab");
    std::string init = "init";
    while (std::find(letters.begin(), letters.end(), init) != letters.end())
        init += "'";
    int q0 = a.addState(init);
    for (int v = 0; v < n; ++v)
        a.addState(g.name(v));
    for (const auto& [u, v] : edges)
        a.addState(edgeName(g, u, v));
    auto vertexState = [&](int v) { return 1 + v; };
    a.addTransition(q0, vInit, vertexState(vInit), vertexColours(vInit));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int e = 1 + n + static_cast<int>(i);
        int letter = n + static_cast<int>(i);
        a.addTransition(vertexState(u), letter, e, edgeColours(u, v));
        a.addTransition(vertexState(v), letter, e, edgeColours(u, v));
        a.addTransition(e, u, vertexState(u), vertexColours(u));
        a.addTransition(e, v, vertexState(v), vertexColours(v));
    }
    a.setInitial(q0);
    return a;
}

}  // namespace

Automaton pseudoPathAutomaton(const Graph& g, int vInit)
{
    int n = g.vertexCount();
    if (n > kMaxColours)
        throw ContractError("pseudoPathAutomaton: too many vertices");
    ColourSet all = allColours(n);
    return pseudoPathStructure(
        g, vInit, n, [&](int v) { return all & ~colourBit(v); },
        [&](int u, int v) { return all & ~colourBit(u) & ~colourBit(v); });
}

Automaton pseudoPathRecolouring(const Graph& g, int vInit, const Colouring& c, int k)
{
    if (!isProperColouring(g, c))
        throw ContractError("pseudoPathRecolouring: the colouring is not proper");
    for (int x : c)
        if (x >= k)
            throw ContractError("pseudoPathRecolouring: colour out of range");
    ColourSet all = allColours(k);
    return pseudoPathStructure(
        g, vInit, k, [&](int v) { return all & ~colourBit(c[v]); },
        [&](int u, int v) { return all & ~colourBit(c[u]) & ~colourBit(c[v]); });
}

Automaton expFamily(int n)
{
    if (n < 1)
        throw ContractError("expFamily: n must be at least 1");
    std::vector<std::string> letters;
    for (int i = 1; i <= 2 * n; ++i)
        letters.push_back(std::to_string(i));
    Automaton a(Alphabet(letters), 2, Acceptance::GenBuchi);
    a.setName("exp" + std::to_string(n));
    int init = a.addState("init");
    for (int i = 1; i <= n; ++i)
        a.addState("q" + std::to_string(i));
    for (int l = 0; l < 2 * n; ++l)
        for (int j = 1; j <= n; ++j)
            a.addTransition(init, l, j, 0);
    for (int i = 1; i <= n; ++i)
        for (int l = 0; l < 2 * n; ++l) {
            ColourSet c = 0;
            if (l == 2 * i - 2)
                c = colourBit(0);
            else if (l == 2 * i - 1)
                c = colourBit(1);
            a.addTransition(i, l, i, c);
        }
    a.setInitial(init);
    return a;
}

namespace {

struct ClauseCover {
    bool feasible = false;
    std::vector<std::uint32_t> clauses;  // letter masks
};

ClauseCover minimalClauseCover(const Automaton& a)
{
    int s = a.letterCount();
    if (s > 16)
        throw ContractError("exactColourMinOneState supports at most 16 letters");
    std::uint32_t full = (1U << s) - 1;
    std::vector<bool> member(full + 1, false);
    for (std::uint32_t t = 1; t <= full; ++t) {
        Lasso w;
        for (int l = 0; l < s; ++l)
            if ((t >> l) & 1U)
                w.cycle.push_back(l);
        member[t] = lassoAccepts(a, w);
    }
    ClauseCover r;
    // monotone in the set of recurring letters, or no one-state automaton exists
    for (std::uint32_t t = 1; t <= full; ++t)
        if (member[t])
            for (int l = 0; l < s; ++l)
                if (!member[t | (1U << l)])
                    return r;
    r.feasible = true;
    std::vector<std::uint32_t> members, others;
    for (std::uint32_t t = 1; t <= full; ++t)
        (member[t] ? members : others).push_back(t);
    if (others.empty())
        return r;
    auto valid = [&](std::uint32_t c) {
        for (std::uint32_t t : members)
            if ((t & c) == 0)
                return false;
        return true;
    };
    std::vector<std::uint32_t> primes;
    for (std::uint32_t c = 0; c <= full; ++c) {
        if (!valid(c))
            continue;
        bool prime = true;
        for (int l = 0; l < s && prime; ++l)
            if (((c >> l) & 1U) && valid(c & ~(1U << l)))
                prime = false;
        if (prime)
            primes.push_back(c);
    }
    // exact set cover of the non-members, branching on the first uncovered one
    std::vector<std::uint32_t> best, cur;
    bool found = false;
    std::function<void(std::vector<bool>&)> search = [&](std::vector<bool>& covered) {
        if (found && cur.size() + 1 > best.size())
            return;
        std::size_t first = 0;
        while (first < others.size() && covered[first])
            ++first;
        if (first == others.size()) {
            if (!found || cur.size() < best.size()) {
                best = cur;
                found = true;
            }
            return;
        }
        if (found && cur.size() + 1 >= best.size())
            return;
        for (std::uint32_t c : primes) {
            if ((c & others[first]) != 0)
                continue;
            std::vector<bool> next = covered;
            for (std::size_t i = 0; i < others.size(); ++i)
                if ((c & others[i]) == 0)
                    next[i] = true;
            cur.push_back(c);
            search(next);
            cur.pop_back();
        }
    };
    std::vector<bool> covered(others.size(), false);
    search(covered);
    r.clauses = best;
    return r;
}

}  // namespace

ColourMinResult exactColourMinOneState(const Automaton& a)
{
    ClauseCover c = minimalClauseCover(a);
    return {c.feasible, static_cast<int>(c.clauses.size())};
}

std::optional<Automaton> oneStateAutomaton(const Automaton& a)
{
    ClauseCover c = minimalClauseCover(a);
    if (!c.feasible)
        return std::nullopt;
    int k = static_cast<int>(c.clauses.size());
    Automaton r(a.alphabet(), k, Acceptance::GenBuchi);
    r.setName(a.name());
    r.addState("q");
    for (int l = 0; l < a.letterCount(); ++l) {
        ColourSet col = 0;
        for (int j = 0; j < k; ++j)
            if ((c.clauses[j] >> l) & 1U)
                col |= colourBit(j);
        r.addTransition(0, l, 0, col);
    }
    r.setInitial(0);
    return r;
}

}  // namespace hdmin
