#include "hdmin/core.hpp"
#include "hdmin/games.hpp"
#include "hdmin/hardness.hpp"

#include "oracles.hpp"
#include "random_gen.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hdmin;

namespace {

Graph named(std::vector<std::string> names, std::vector<std::pair<int, int>> edges)
{
    Graph g(std::move(names));
    for (auto [u, v] : edges)
        g.addEdge(u, v);
    return g;
}

Graph k3() { return named({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }
Graph k4() { return named({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph p3() { return named({"a", "b", "c"}, {{0, 1}, {1, 2}}); }
Graph c4() { return named({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph diamond() { return named({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Membership in L_G read off the definition: for every v, vv recurs or a letter
// other than v and its neighbours recurs.
bool inLG(const Graph& g, const Lasso& w)
{
    std::set<int> inf(w.cycle.begin(), w.cycle.end());
    for (int v = 0; v < g.vertexCount(); ++v) {
        bool doubled = false;
        for (std::size_t i = 0; i < w.cycle.size(); ++i)
            if (w.cycle[i] == v && w.cycle[(i + 1) % w.cycle.size()] == v)
                doubled = true;
        bool far = false;
        for (int u : inf)
            if (u != v && !g.hasEdge(u, v))
                far = true;
        if (!doubled && !far)
            return false;
    }
    return true;
}

// Every complete deterministic genBuchi automaton with n states and k colours, checked
// against the reference one by one.
bool bruteDetFeasible(const Automaton& ref, int n, int k)
{
    int L = ref.letterCount();
    int slots = n * L;
    std::vector<int> dst(slots, 0);
    while (true) {
        std::vector<ColourSet> col(slots, 0);
        while (true) {
            Automaton c(ref.alphabet(), k, Acceptance::GenBuchi);
            for (int q = 0; q < n; ++q)
                c.addState();
            for (int s = 0; s < slots; ++s)
                c.addTransition(s / L, s % L, dst[s], col[s]);
            if (equivalentDeterministic(c, ref))
                return true;
            int i = 0;
            while (i < slots && ++col[i] == (ColourSet{1} << k))
                col[i++] = 0;
            if (i == slots)
                break;
        }
        int i = 0;
        while (i < slots && ++dst[i] == n)
            dst[i++] = 0;
        if (i == slots)
            return false;
    }
}

}  // namespace

TEST_CASE("graph colouring")
{
    CHECK(graphColouring(k3(), 3).has_value());
    CHECK_FALSE(graphColouring(k3(), 2).has_value());
    CHECK(chromaticNumber(k4()) == 4);
    CHECK(chromaticNumber(c4()) == 2);
    CHECK_THROWS_AS(graphColouring(k3(), 0), ContractError);

    gen::Rng rng(71);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = gen::randomGraph(rng, n, 0.5);
        for (int k = 1; k <= 4; ++k) {
            auto c = graphColouring(g, k);
            CHECK(c.has_value() == oracle::bruteColouring(g, k).has_value());
            if (c) {
                CHECK(isProperColouring(g, *c));
                CHECK(*std::max_element(c->begin(), c->end()) < k);
            }
        }
    }
}

TEST_CASE("triangle-full transform")
{
    Graph t = triangleFullTransform(k3());
    CHECK(t.vertexCount() == 9);
    CHECK(isTriangleFull(t));
    CHECK_FALSE(hasFourClique(t));
    CHECK(graphColouring(t, 3).has_value());

    Graph p = triangleFullTransform(p3());
    CHECK(p.vertexCount() == 9);
    CHECK(isTriangleFull(p));
    CHECK_FALSE(hasFourClique(p));
    CHECK(graphColouring(p, 3).has_value());

    Graph m = triangleFullTransform(k4());
    CHECK(m.vertexCount() == moserSpindle().vertexCount());
    CHECK(m.edges() == moserSpindle().edges());
    CHECK_FALSE(graphColouring(m, 3).has_value());
    CHECK(isTriangleFull(m));
    CHECK_FALSE(hasFourClique(m));

    Graph ms = moserSpindle();
    CHECK(ms.vertexCount() == 7);
    CHECK(ms.edges().size() == 11);

    // 3-colourability is kept on random 4-clique-free graphs
    gen::Rng rng(73);
    for (int i = 0; i < 15; ++i) {
        Graph g = gen::randomGraph(rng, 2 + static_cast<int>(rng() % 4), 0.5);
        if (hasFourClique(g))
            continue;
        Graph h = triangleFullTransform(g);
        CHECK(h.vertexCount() == 3 * g.vertexCount());
        CHECK(isTriangleFull(h));
        CHECK_FALSE(hasFourClique(h));
        CHECK(graphColouring(h, 3).has_value() == graphColouring(g, 3).has_value());
    }
}

TEST_CASE("L_G automata")
{
    Graph g = k3();
    Automaton id = colouringToAutomaton(g, {0, 1, 2});
    CHECK(id.stateCount() == 3);
    CHECK(id.isDeterministic());
    CHECK(id.isComplete());
    CHECK(lassoAccepts(id, makeLasso(id.alphabet(), {}, {"a", "a", "b", "b", "c", "c"})));
    CHECK_FALSE(lassoAccepts(id, makeLasso(id.alphabet(), {}, {"a", "b", "c"})));
    CHECK(equivalent(id, colouringToAutomaton(g, trivialColouring(g)), EquivMode::Det));
    CHECK_THROWS_AS(colouringToAutomaton(g, {0, 0, 1}), ContractError);

    Graph p = p3();
    Automaton two = colouringToAutomaton(p, {0, 1, 0});
    CHECK(two.stateCount() == 2);
    oracle::forEachLasso(3, 2, 4, [&](const Lasso& w) { CHECK(lassoAccepts(two, w) == inLG(p, w)); });

    for (const Graph& h : {k3(), p3(), c4(), diamond()})
        oracle::forEachLasso(h.vertexCount(), 1, 4, [&](const Lasso& w) {
            CHECK(lassoAccepts(colouringToAutomaton(h, trivialColouring(h)), w) == inLG(h, w));
        });
}

TEST_CASE("proper colourings give equivalent automata")
{
    gen::Rng rng(79);
    for (int i = 0; i < 20; ++i) {
        Graph g = gen::randomGraph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        Automaton ref = colouringToAutomaton(g, trivialColouring(g));
        int chi = chromaticNumber(g);
        auto c = graphColouring(g, chi);
        REQUIRE(c.has_value());
        Automaton a = colouringToAutomaton(g, *c);
        CHECK(a.stateCount() == chi);
        CHECK(equivalent(a, ref, EquivMode::Det));
    }
}

TEST_CASE("pseudo-path gadget")
{
    Graph g = k3();
    Automaton a = pseudoPathAutomaton(g, 0);
    CHECK(a.stateCount() == 7);
    CHECK(a.isDeterministic());
    CHECK(a.acceptance() == Acceptance::GenCoBuchi);

    // stabilise at a: enter a, then step back and forth over the edge a-b
    Lasso stab = makeLasso(a.alphabet(), {"a"}, {"a-b", "a"});
    CHECK(lassoAccepts(a, stab));
    Lasso wander = makeLasso(a.alphabet(), {"a"}, {"a-b", "b", "b-c", "c", "a-c", "a"});
    CHECK_FALSE(lassoAccepts(a, wander));

    auto c = graphColouring(g, 3);
    REQUIRE(c.has_value());
    CHECK(equivalent(pseudoPathRecolouring(g, 0, *c, 3), a, EquivMode::Det));

    CHECK_THROWS_AS(pseudoPathAutomaton(p3(), 0), ContractError);
    Graph split = named({"a", "b", "c", "d", "e", "f"}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_AS(pseudoPathAutomaton(split, 0), ContractError);
}

TEST_CASE("pseudo-path recolouring needs the chromatic number")
{
    for (const Graph& g : {k3(), c4(), diamond()}) {
        Automaton a = pseudoPathAutomaton(g, 0);
        int chi = chromaticNumber(g);
        for (int k = 1; k <= 3; ++k) {
            auto c = graphColouring(g, k);
            if (!c)
                continue;
            CHECK(equivalent(pseudoPathRecolouring(g, 0, *c, k), a, EquivMode::Det));
        }
        CHECK(recolourWith(a, chi).has_value());
        CHECK_FALSE(recolourWith(a, chi - 1).has_value());
    }
}

TEST_CASE("exponential colour family")
{
    CHECK_THROWS_AS(expFamily(0), ContractError);
    for (int n = 1; n <= 3; ++n) {
        Automaton a = expFamily(n);
        CHECK(a.stateCount() == n + 1);
        CHECK(a.colours() == 2);
        CHECK(a.letterCount() == 2 * n);
        gen::Rng rng(83 + n);
        for (int i = 0; i < 200; ++i) {
            Lasso w;
            int len = 1 + static_cast<int>(rng() % 6);
            for (int j = 0; j < len; ++j)
                w.cycle.push_back(static_cast<int>(rng() % (2 * n)));
            w.stem.push_back(static_cast<int>(rng() % (2 * n)));
            std::set<int> inf(w.cycle.begin(), w.cycle.end());
            bool expected = false;
            for (int k = 0; k < n; ++k)
                if (inf.count(2 * k) && inf.count(2 * k + 1))
                    expected = true;
            CHECK(lassoAccepts(a, w) == expected);
        }
        ColourMinResult r = exactColourMinOneState(a);
        CHECK(r.feasible);
        CHECK(r.colours == (1 << n));
    }
    CHECK(oracle::bruteOneStateColours(expFamily(1), 3) == 2);
    CHECK(oracle::bruteOneStateColours(expFamily(2), 4) == 4);
}

TEST_CASE("one-state colour minimisation against brute force")
{
    gen::Rng rng(89);
    for (int i = 0; i < 20; ++i) {
        gen::AutomatonShape s;
        s.states = 1;
        s.letters = 2 + static_cast<int>(rng() % 2);
        s.colours = 1 + static_cast<int>(rng() % 3);
        s.acceptance = Acceptance::GenBuchi;
        s.colourProb = 0.5;
        Automaton a = gen::randomAutomaton(rng, s);
        ColourMinResult r = exactColourMinOneState(a);
        REQUIRE(r.feasible);
        CHECK(r.colours == oracle::bruteOneStateColours(a, 4));
        auto one = oneStateAutomaton(a);
        REQUIRE(one.has_value());
        CHECK(one->colours() == r.colours);
        CHECK(equivalent(*one, a, EquivMode::Det));
    }
    // same letter twice over: duplicate clauses collapse
    Automaton dup(Alphabet({"a", "b"}), 2, Acceptance::GenBuchi);
    dup.addState();
    dup.addTransition(0, 0, 0, allColours(2));
    dup.addTransition(0, 1, 0, 0);
    CHECK(exactColourMinOneState(dup).colours == 1);

    // not monotone in the recurring letters: a^w accepted, (ab)^w rejected
    Automaton cb(Alphabet({"a", "b"}), 1, Acceptance::GenCoBuchi);
    cb.addState();
    cb.addTransition(0, 0, 0, 0);
    cb.addTransition(0, 1, 0, 1);
    CHECK_FALSE(exactColourMinOneState(cb).feasible);
}

TEST_CASE("exact minimisation basics")
{
    Graph g = k3();
    Automaton ref = colouringToAutomaton(g, trivialColouring(g));
    CHECK(exactMinimise({ref, 3, 3, ExactMode::Det}).has_value());
    CHECK_FALSE(exactMinimise({ref, 2, 3, ExactMode::Det}).has_value());

    Automaton empty(Alphabet({"a", "b"}), 1, Acceptance::GenBuchi);
    empty.addState();
    empty.addTransition(0, 0, 0, 0);
    empty.addTransition(0, 1, 0, 0);
    auto e = exactMinimise({empty, 1, 1, ExactMode::Det});
    REQUIRE(e.has_value());
    CHECK(isEmpty(*e));

    CHECK_THROWS_AS(exactMinimise({ref, 0, 3, ExactMode::Det}), ContractError);
    CHECK_THROWS_AS(exactMinimise({ref, 3, 3, ExactMode::Det, 10.0}), BudgetExceeded);
}

TEST_CASE("exact minimisation against brute-force enumeration")
{
    gen::Rng rng(97);
    int yes = 0, no = 0;
    for (int i = 0; i < 12; ++i) {
        gen::AutomatonShape s;
        s.states = 2 + static_cast<int>(rng() % 2);
        s.letters = 2;
        s.colours = 1 + static_cast<int>(rng() % 2);
        s.acceptance = Acceptance::GenBuchi;
        s.deterministic = true;
        s.colourProb = 0.4;
        Automaton ref = gen::randomAutomaton(rng, s);
        for (int n = 1; n <= 2; ++n)
            for (int k = 1; k <= 2; ++k) {
                auto found = exactMinimise({ref, n, k, ExactMode::Det});
                CHECK(found.has_value() == bruteDetFeasible(ref, n, k));
                ++(found ? yes : no);
                if (found) {
                    CHECK(found->stateCount() <= n);
                    CHECK(found->colours() <= k);
                    CHECK(equivalent(*found, ref, EquivMode::Det));
                }
            }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}

TEST_CASE("exact minimisation is monotone")
{
    gen::Rng rng(101);
    for (int i = 0; i < 12; ++i) {
        gen::AutomatonShape s;
        s.states = 2;
        s.letters = 2;
        s.colours = 2;
        s.acceptance = i % 2 ? Acceptance::GenBuchi : Acceptance::GenCoBuchi;
        s.deterministic = true;
        s.colourProb = 0.4;
        Automaton ref = gen::randomAutomaton(rng, s);
        ExactMode mode = s.acceptance == Acceptance::GenCoBuchi && i % 4 == 0 ? ExactMode::HD : ExactMode::Det;
        int lim = mode == ExactMode::HD ? 2 : 3;  // larger hd searches leave the budget
        bool feas[4][4] = {};
        for (int n = 1; n <= lim; ++n)
            for (int k = 1; k <= lim; ++k)
                feas[n][k] = exactMinimise({ref, n, k, mode}).has_value();
        for (int n = 1; n <= lim; ++n)
            for (int k = 1; k <= lim; ++k) {
                if (feas[n][k] && n < lim)
                    CHECK(feas[n + 1][k]);
                if (feas[n][k] && k < lim)
                    CHECK(feas[n][k + 1]);
            }
        // the reference itself is a candidate
        CHECK(feas[2][2]);
    }
}
